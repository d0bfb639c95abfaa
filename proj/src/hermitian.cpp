#include "hermitian.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace horncone {

std::uint64_t Rng::splitmix() {
  // splitmix64 step; decouples the stream from seed quality.
  std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

std::uint64_t Rng::raw() { return splitmix(); }

double Rng::uniform() {
  return static_cast<double>(splitmix() >> 11) * 0x1.0p-53;
}

double Rng::gaussian() {
  if (have_spare_) {
    have_spare_ = false;
    return spare_;
  }
  double u1 = 0;
  while (u1 == 0) u1 = uniform();
  double u2 = uniform();
  double mag = std::sqrt(-2.0 * std::log(u1));
  spare_ = mag * std::sin(2.0 * std::numbers::pi * u2);
  have_spare_ = true;
  return mag * std::cos(2.0 * std::numbers::pi * u2);
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t label) {
  std::uint64_t z = seed ^ (label + 0x9e3779b97f4a7c15ull + (seed << 6) + (seed >> 2));
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  return z ^ (z >> 31);
}

std::uint64_t hash_bytes(const void* data, std::size_t len, std::uint64_t init) {
  // FNV-1a, 64-bit.
  const unsigned char* p = static_cast<const unsigned char*>(data);
  std::uint64_t h = init ^ 0xcbf29ce484222325ull;
  for (std::size_t i = 0; i < len; ++i) {
    h ^= p[i];
    h *= 0x100000001b3ull;
  }
  return h;
}

bool is_hermitian(const Matrix& a, double tol) {
  return a.rows() == a.cols() && (a - a.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

double spectral_norm(const Matrix& a) {
  if (a.rows() == 0) return 0;
  Eigen::SelfAdjointEigenSolver<Matrix> es(a, Eigen::EigenvaluesOnly);
  return es.eigenvalues().cwiseAbs().maxCoeff();
}

std::pair<std::vector<double>, Matrix> eig_hermitian(const Matrix& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("eig_hermitian: not square");
  Eigen::SelfAdjointEigenSolver<Matrix> es(a);
  if (es.info() != Eigen::Success) throw std::runtime_error("eig_hermitian: failed to converge");
  int n = static_cast<int>(a.rows());
  std::vector<double> vals(n);
  Matrix vecs(n, n);
  for (int i = 0; i < n; ++i) {  // Eigen returns ascending; flip to descending
    vals[i] = es.eigenvalues()(n - 1 - i);
    vecs.col(i) = es.eigenvectors().col(n - 1 - i);
  }
  return {std::move(vals), std::move(vecs)};
}

Matrix random_unitary(int n, Rng& rng, bool real_symmetric) {
  Matrix g(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      g(i, j) = real_symmetric
                    ? std::complex<double>(rng.gaussian(), 0)
                    : std::complex<double>(rng.gaussian(), rng.gaussian());
  Eigen::HouseholderQR<Matrix> qr(g);
  Matrix q = qr.householderQ();
  // Fix the phase ambiguity so the sample is a deterministic function of g.
  Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int j = 0; j < n; ++j) {
    std::complex<double> d = r(j, j);
    if (std::abs(d) > 0) q.col(j) *= d / std::abs(d);
  }
  return q;
}

Matrix sample_with_spectrum(const std::vector<double>& spectrum, Rng& rng, bool real_symmetric) {
  int n = static_cast<int>(spectrum.size());
  Matrix u = random_unitary(n, rng, real_symmetric);
  Eigen::VectorXd d(n);
  for (int i = 0; i < n; ++i) d(i) = spectrum[i];
  Matrix out = u * d.asDiagonal() * u.adjoint();
  return (out + out.adjoint()) / 2.0;
}

Matrix respectralize(const Matrix& a, const std::vector<double>& spectrum) {
  auto [vals, u] = eig_hermitian((a + a.adjoint()) / 2.0);
  Eigen::VectorXd d(a.rows());
  for (int i = 0; i < a.rows(); ++i) d(i) = spectrum[i];
  Matrix out = u * d.asDiagonal() * u.adjoint();
  return (out + out.adjoint()) / 2.0;
}

}  // namespace horncone
