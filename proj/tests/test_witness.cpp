#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "hermitian.hpp"
#include "witness.hpp"

using namespace horncone;

namespace {

Spectrum spec(const char* s) { return Spectrum::from_string(s); }

double spectrum_error(const Matrix& a, const Spectrum& target) {
  auto [vals, u] = eig_hermitian(a);
  double worst = 0;
  for (int i = 0; i < target.size(); ++i)
    worst = std::max(worst, std::abs(vals[i] - rat_to_double(target[i])));
  return worst;
}

double imag_norm(const Matrix& a) {
  double worst = 0;
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) worst = std::max(worst, std::abs(a(i, j).imag()));
  return worst;
}

}  // namespace

TEST_CASE("rng and matrix primitives") {
  Rng a(7), b(7);
  for (int i = 0; i < 20; ++i) CHECK(a.raw() == b.raw());
  Rng c(8);
  CHECK(a.raw() != c.raw());

  Rng r(1);
  Matrix u = random_unitary(4, r, false);
  CHECK((u * u.adjoint() - Matrix::Identity(4, 4)).cwiseAbs().maxCoeff() < 1e-12);

  std::vector<double> sp = {2.0, 0.5, -1.0};
  Matrix h = sample_with_spectrum(sp, r, false);
  CHECK(is_hermitian(h, 1e-12));
  auto [vals, vecs] = eig_hermitian(h);
  CHECK(std::abs(vals[0] - 2.0) < 1e-10);
  CHECK(std::abs(vals[2] + 1.0) < 1e-10);
  Matrix recon = vecs * Eigen::Vector3d(vals[0], vals[1], vals[2]).asDiagonal() * vecs.adjoint();
  CHECK((recon - h).cwiseAbs().maxCoeff() < 1e-10);

  std::vector<double> sp2 = {1.0, 1.0, -2.0};
  Matrix g = respectralize(h, sp2);
  CHECK(spectrum_error(g, spec("1,1,-2")) < 1e-10);
}

TEST_CASE("sum-zero witness via the exact diagonal search") {
  WitnessOptions opts;
  auto res = realize_sum_zero({spec("1,-1"), spec("1,-1")}, opts);
  REQUIRE(res.status == WitnessStatus::success);
  CHECK(res.spectral_residual == 0);  // exact diagonal solution
  REQUIRE(res.matrices.size() == 2);
  Matrix sum = res.matrices[0] + res.matrices[1];
  CHECK(sum.cwiseAbs().maxCoeff() == 0);
  CHECK(res.split_tree.at("method") == "diagonal");
}

TEST_CASE("sum-zero witness needing non-commuting matrices") {
  // Three spectra (1,-1): diagonal sums always have odd entries, so the
  // projection solver must do the work.
  WitnessOptions opts;
  std::vector<Spectrum> tri(3, spec("1,-1"));
  auto res = realize_sum_zero(tri, opts);
  REQUIRE(res.status == WitnessStatus::success);
  CHECK(res.spectral_residual <= opts.tol);
  Matrix sum = Matrix::Zero(2, 2);
  for (int s = 0; s < 3; ++s) {
    CHECK(is_hermitian(res.matrices[s], 1e-10));
    CHECK(spectrum_error(res.matrices[s], tri[s]) <= opts.tol);
    sum += res.matrices[s];
  }
  CHECK(sum.cwiseAbs().maxCoeff() <= opts.tol);
  CHECK(res.split_tree.at("method") == "projection");
}

TEST_CASE("sum-zero witness respects the real-symmetric switch") {
  WitnessOptions opts;
  opts.real_symmetric = true;
  std::vector<Spectrum> tri(3, spec("1,-1"));
  auto res = realize_sum_zero(tri, opts);
  REQUIRE(res.status == WitnessStatus::success);
  for (const auto& a : res.matrices) CHECK(imag_norm(a) == 0);
}

TEST_CASE("witness construction is deterministic") {
  WitnessOptions opts;
  std::vector<Spectrum> tri(3, spec("1,-1"));
  witness_cache_clear();
  auto first = realize_sum_zero(tri, opts);
  witness_cache_clear();
  auto second = realize_sum_zero(tri, opts);
  REQUIRE(first.status == WitnessStatus::success);
  REQUIRE(second.status == WitnessStatus::success);
  for (int s = 0; s < 3; ++s)
    CHECK((first.matrices[s] - second.matrices[s]).cwiseAbs().maxCoeff() == 0);
}

TEST_CASE("infeasible spectra are rejected before any search") {
  WitnessOptions opts;
  CHECK(realize_sum_zero({spec("1,0"), spec("0,-2")}, opts).status == WitnessStatus::infeasible);
  CHECK(realize_negative_sum({spec("1,0"), spec("1,0")}, opts).status ==
        WitnessStatus::infeasible);
  CHECK(realize_majorized({spec("1,0"), spec("1,0")}, spec("2,1"), opts).status ==
        WitnessStatus::infeasible);
}

TEST_CASE("negative-sum witness through the epsilon shift") {
  WitnessOptions opts;
  auto res = realize_negative_sum({spec("-1,-2"), spec("-1,-2")}, opts);
  REQUIRE(res.status == WitnessStatus::success);
  CHECK(res.spectral_residual <= opts.tol);
  CHECK(res.slack_min_eigenvalue == doctest::Approx(3.0));
  CHECK(res.split_tree.at("kind") == "epsilon_shift");
}

TEST_CASE("negative-sum witness through a proper split") {
  // Tight only at r = 1: the solver splits into two 1-dimensional problems and
  // reassembles block-diagonally.
  WitnessOptions opts;
  std::vector<Spectrum> ab = {spec("1,-1"), spec("-1,-1")};
  auto res = realize_negative_sum(ab, opts);
  REQUIRE(res.status == WitnessStatus::success);
  CHECK(res.spectral_residual <= opts.tol);
  CHECK(res.slack_min_eigenvalue >= -opts.tol);
  CHECK(res.split_tree.at("kind") == "split");
  for (int s = 0; s < 2; ++s) CHECK(spectrum_error(res.matrices[s], ab[s]) <= opts.tol);
  Matrix sum = res.matrices[0] + res.matrices[1];
  auto [vals, u] = eig_hermitian(sum);
  CHECK(vals.front() <= opts.tol);  // sum <= 0
}

TEST_CASE("majorization witness") {
  WitnessOptions opts;
  std::vector<Spectrum> ab = {spec("1,0"), spec("1,0")};
  auto res = realize_majorized(ab, spec("1,1"), opts);
  REQUIRE(res.status == WitnessStatus::success);
  CHECK(res.spectral_residual <= opts.tol);
  CHECK(res.slack_min_eigenvalue >= -opts.tol);
  REQUIRE(res.matrices.size() == 2);
  REQUIRE(res.C.rows() == 2);
  CHECK(spectrum_error(res.C, spec("1,1")) <= opts.tol);
  for (int s = 0; s < 2; ++s) CHECK(spectrum_error(res.matrices[s], ab[s]) <= opts.tol);
  Matrix gap = res.matrices[0] + res.matrices[1] - res.C;
  auto [vals, u] = eig_hermitian(gap);
  CHECK(vals.back() >= -opts.tol);  // sum - C >= 0

  // Strict slack: C = 0, sum has min eigenvalue 1.
  auto strict = realize_majorized(ab, spec("0,0"), opts);
  REQUIRE(strict.status == WitnessStatus::success);
  CHECK(strict.slack_min_eigenvalue >= -opts.tol);
}

TEST_CASE("majorization witness on scalars") {
  WitnessOptions opts;
  auto res = realize_majorized({spec("2"), spec("3")}, spec("4"), opts);
  REQUIRE(res.status == WitnessStatus::success);
  CHECK(res.matrices[0](0, 0).real() == doctest::Approx(2.0));
  CHECK(res.C(0, 0).real() == doctest::Approx(4.0));
  CHECK(res.slack_min_eigenvalue == doctest::Approx(1.0));
  CHECK(realize_majorized({spec("2"), spec("3")}, spec("6"), opts).status ==
        WitnessStatus::infeasible);
}
