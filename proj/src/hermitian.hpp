#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <vector>

namespace horncone {

using Matrix = Eigen::MatrixXcd;

/* Deterministic RNG: splitmix64 plus an explicit Box-Muller transform, so
   streams are reproducible across standard libraries. */
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}
  double uniform();   // [0, 1)
  double gaussian();  // standard normal
  std::uint64_t raw();

 private:
  std::uint64_t splitmix();
  std::uint64_t state_;
  bool have_spare_ = false;
  double spare_ = 0;
};

// Stable mixing of a seed with a label (for derived subproblem streams).
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t label);
std::uint64_t hash_bytes(const void* data, std::size_t len, std::uint64_t init = 0x9e3779b97f4a7c15ull);

bool is_hermitian(const Matrix& a, double tol);
double spectral_norm(const Matrix& a);  // largest |eigenvalue| of a Hermitian matrix

/* Eigenvalues in descending order with a matching unitary of column
   eigenvectors: a = u * diag(values) * u^H. */
std::pair<std::vector<double>, Matrix> eig_hermitian(const Matrix& a);

// Haar-ish random unitary (QR of a Gaussian matrix); real orthogonal if real_symmetric.
Matrix random_unitary(int n, Rng& rng, bool real_symmetric);

// u * diag(spectrum) * u^H for a random unitary u.
Matrix sample_with_spectrum(const std::vector<double>& spectrum, Rng& rng, bool real_symmetric);

// Nearest Hermitian matrix with the given spectrum: re-spectralize by keeping
// the eigenvectors of a and replacing the eigenvalues.
Matrix respectralize(const Matrix& a, const std::vector<double>& spectrum);

}  // namespace horncone
