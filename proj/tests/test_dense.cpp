#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "cornerdet/dense.hpp"
#include "cornerdet/errors.hpp"

using cornerdet::Cplx;
using cornerdet::DenseMatrix;
using cornerdet::LuDecomposition;

namespace {

DenseMatrix from_rows(const std::vector<std::vector<double>>& rows) {
  DenseMatrix m(int(rows.size()), int(rows[0].size()));
  for (size_t i = 0; i < rows.size(); ++i)
    for (size_t j = 0; j < rows[i].size(); ++j) m(int(i), int(j)) = rows[i][j];
  return m;
}

DenseMatrix random_well_conditioned(int n, unsigned seed) {
  std::mt19937 gen(seed);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  DenseMatrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = Cplx(dist(gen), dist(gen));
  for (int i = 0; i < n; ++i) m(i, i) += 5.0;
  return m;
}

// Banded matrix with symbol (1-1/t)^2 (1-t)^2: bands 6, -4, 1.
DenseMatrix banded_622(int n) {
  DenseMatrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      int d = std::abs(i - j);
      m(i, j) = d == 0 ? 6.0 : d == 1 ? -4.0 : d == 2 ? 1.0 : 0.0;
    }
  return m;
}

double max_abs_diff(const DenseMatrix& a, const DenseMatrix& b) {
  double worst = 0.0;
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      worst = std::max(worst, std::abs(a(i, j) - b(i, j)));
  return worst;
}

}  // namespace

TEST_CASE("identity") {
  auto id = DenseMatrix::identity(4);
  CHECK(determinant(id) == Cplx(1.0));
  CHECK(max_abs_diff(inverse(id), id) == 0.0);
}

TEST_CASE("shape validation") {
  CHECK_THROWS_AS(DenseMatrix(0, 3), cornerdet::ShapeError);
  CHECK_THROWS_AS(DenseMatrix(2, -1), cornerdet::ShapeError);
  DenseMatrix rect(2, 3);
  CHECK_THROWS_AS(determinant(rect), cornerdet::ShapeError);
}

TEST_CASE("known determinants") {
  CHECK(determinant(banded_622(6)).real() == doctest::Approx(336.0).epsilon(1e-12));
  auto a6 = banded_622(6);
  a6(0, 5) += 1.0;
  a6(5, 0) += 1.0;
  CHECK(determinant(a6).real() == doctest::Approx(343.0).epsilon(1e-12));
  // 2x2 with an off-diagonal-dominant layout that forces a row swap.
  auto m = from_rows({{0.0, 1.0}, {1.0, 0.0}});
  CHECK(determinant(m).real() == doctest::Approx(-1.0));
}

TEST_CASE("solve on a tridiagonal system") {
  auto m = from_rows({{2.0, -1.0}, {-1.0, 2.0}});
  auto x = solve(m, {Cplx(1.0), Cplx(0.0)});
  CHECK(x[0].real() == doctest::Approx(2.0 / 3.0).epsilon(1e-14));
  CHECK(x[1].real() == doctest::Approx(1.0 / 3.0).epsilon(1e-14));
  CHECK_THROWS_AS(solve(m, {Cplx(1.0)}), cornerdet::ShapeError);
}

TEST_CASE("inverse of a 2x2") {
  auto m = from_rows({{2.0, -1.0}, {-1.0, 2.0}});
  auto inv = inverse(m);
  CHECK(inv(0, 0).real() == doctest::Approx(2.0 / 3.0));
  CHECK(inv(0, 1).real() == doctest::Approx(1.0 / 3.0));
  CHECK(inv(1, 0).real() == doctest::Approx(1.0 / 3.0));
  CHECK(inv(1, 1).real() == doctest::Approx(2.0 / 3.0));
}

TEST_CASE("solve stays correct when pivoting reorders rows") {
  // Symmetric positive definite banded matrix whose LU path performs row
  // swaps; the inverse must come back symmetric and centrosymmetric, and
  // multiplying back must give the identity. Guards the right-hand-side
  // permutation order in solve().
  int n = 6;
  auto t = banded_622(n);
  auto inv = inverse(t);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      CHECK(std::abs(inv(i, j) - inv(j, i)) < 1e-12);
      CHECK(std::abs(inv(i, j) - inv(n - 1 - j, n - 1 - i)) < 1e-12);
    }
  auto prod = t * inv;
  CHECK(max_abs_diff(prod, DenseMatrix::identity(n)) < 1e-12);
}

TEST_CASE("determinant properties on random matrices") {
  for (unsigned seed : {1u, 2u, 3u}) {
    auto m = random_well_conditioned(20, seed);
    Cplx d = determinant(m);
    Cplx di = determinant(inverse(m));
    CHECK(std::abs(d * di - 1.0) < 1e-9);
    CHECK(std::abs(determinant(m.transpose()) - d) < 1e-9 * std::abs(d));
    CHECK(std::abs(determinant(m.flip_both()) - d) < 1e-9 * std::abs(d));
  }
}

TEST_CASE("inverse round trip on a random matrix") {
  auto m = random_well_conditioned(25, 9u);
  auto prod = m * inverse(m);
  CHECK(max_abs_diff(prod, DenseMatrix::identity(25)) < 1e-11);
}

TEST_CASE("singular matrices") {
  auto z = from_rows({{1.0, 2.0}, {0.0, 0.0}});
  LuDecomposition lu(z);
  CHECK(lu.singular());
  CHECK(lu.determinant() == Cplx(0.0));
  CHECK_THROWS_AS(lu.solve({Cplx(1.0), Cplx(1.0)}), cornerdet::SingularMatrixError);
  CHECK_THROWS_AS(inverse(z), cornerdet::SingularMatrixError);
}

TEST_CASE("determinant avoids overflow via log accumulation") {
  int n = 60;
  DenseMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1e6;
  Cplx d = determinant(m);  // 1e360 overflows a double product pivot by pivot
  CHECK(std::isinf(d.real()));
  for (int i = 0; i < n; ++i) m(i, i) = 1e-6;
  d = determinant(m);  // 1e-360 underflows to zero in naive form
  CHECK(d == Cplx(0.0));
  // The scaled story: det(c M) for moderate sizes stays accurate.
  auto a = random_well_conditioned(12, 5u);
  DenseMatrix b = a;
  for (int i = 0; i < 12; ++i)
    for (int j = 0; j < 12; ++j) b(i, j) *= 2.0;
  CHECK(std::abs(determinant(b) / determinant(a) - std::pow(2.0, 12)) <
        1e-9 * std::pow(2.0, 12));
}

TEST_CASE("transpose and flip_both") {
  auto m = from_rows({{1.0, 2.0, 3.0}, {4.0, 5.0, 6.0}});
  auto t = m.transpose();
  CHECK(t.rows() == 3);
  CHECK(t(0, 1) == Cplx(4.0));
  auto sq = from_rows({{1.0, 2.0}, {3.0, 4.0}});
  auto f = sq.flip_both();
  CHECK(f(0, 0) == Cplx(4.0));
  CHECK(f(0, 1) == Cplx(3.0));
  CHECK(f(1, 0) == Cplx(2.0));
  CHECK(f(1, 1) == Cplx(1.0));
}
