#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <vector>

#include "cornerdet/kernels.hpp"

using cornerdet::Cplx;
namespace k = cornerdet::kernels;

namespace {

std::vector<Cplx> random_values(size_t count, unsigned seed) {
  std::mt19937 gen(seed);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  std::vector<Cplx> v(count);
  for (auto& x : v) x = Cplx(dist(gen), dist(gen));
  return v;
}

}  // namespace

TEST_CASE("parallel switch is observable") {
  CHECK(k::parallel_enabled());
  k::set_parallel(false);
  CHECK(!k::parallel_enabled());
  k::set_parallel(true);
  CHECK(k::parallel_enabled());
}

TEST_CASE("lu_factor: parallel is bit-identical to serial") {
  for (int n : {5, 64, 150}) {
    auto base = random_values(size_t(n) * n, 1000 + n);
    auto a = base;
    auto b = base;
    std::vector<int> pa(n), pb(n);
    int sa_col = -2, sb_col = -2;
    int sa = k::lu_factor_serial(a.data(), n, pa.data(), &sa_col);
    int sb = k::lu_factor_parallel(b.data(), n, pb.data(), &sb_col);
    CHECK(sa == sb);
    CHECK(sa_col == sb_col);
    CHECK(pa == pb);
    CHECK(a == b);  // element-wise exact
  }
}

TEST_CASE("lu_factor dispatcher matches serial") {
  int n = 120;
  auto base = random_values(size_t(n) * n, 7);
  auto a = base;
  auto b = base;
  std::vector<int> pa(n), pb(n);
  int ca, cb;
  int sa = k::lu_factor_serial(a.data(), n, pa.data(), &ca);
  int sb = k::lu_factor(b.data(), n, pb.data(), &cb);
  CHECK(sa == sb);
  CHECK(pa == pb);
  CHECK(a == b);
}

TEST_CASE("lu_factor marks a structurally singular column") {
  int n = 3;
  // Second column identically zero.
  std::vector<Cplx> a = {Cplx(1), Cplx(0), Cplx(2), Cplx(4), Cplx(0),
                         Cplx(5), Cplx(7), Cplx(0), Cplx(9)};
  std::vector<int> piv(n);
  int col = -2;
  k::lu_factor_serial(a.data(), n, piv.data(), &col);
  CHECK(col == 1);
}

TEST_CASE("matmul: parallel is bit-identical to serial, shapes honored") {
  for (auto [n, kk, m] : {std::tuple{3, 4, 5}, {64, 64, 64}, {90, 30, 70}}) {
    auto a = random_values(size_t(n) * kk, 11);
    auto b = random_values(size_t(kk) * m, 13);
    std::vector<Cplx> cs(size_t(n) * m), cp(size_t(n) * m), cd(size_t(n) * m);
    k::matmul_serial(a.data(), b.data(), cs.data(), n, kk, m);
    k::matmul_parallel(a.data(), b.data(), cp.data(), n, kk, m);
    k::matmul(a.data(), b.data(), cd.data(), n, kk, m);
    CHECK(cs == cp);
    CHECK(cs == cd);
  }
}

TEST_CASE("matmul against a hand value") {
  // [[1,2],[3,4]] * [[5,6],[7,8]] = [[19,22],[43,50]]
  std::vector<Cplx> a = {Cplx(1), Cplx(2), Cplx(3), Cplx(4)};
  std::vector<Cplx> b = {Cplx(5), Cplx(6), Cplx(7), Cplx(8)};
  std::vector<Cplx> c(4);
  k::matmul(a.data(), b.data(), c.data(), 2, 2, 2);
  CHECK(c[0] == Cplx(19));
  CHECK(c[1] == Cplx(22));
  CHECK(c[2] == Cplx(43));
  CHECK(c[3] == Cplx(50));
}

TEST_CASE("convolve: parallel is bit-identical to serial") {
  for (int half : {4, 200, 400}) {
    auto u = random_values(size_t(2 * half + 1), 17);
    auto v = random_values(size_t(2 * half + 1), 19);
    auto ws = k::convolve_serial(u, v, half);
    auto wp = k::convolve_parallel(u, v, half);
    auto wd = k::convolve(u, v, half);
    CHECK(ws == wp);
    CHECK(ws == wd);
  }
}

TEST_CASE("convolve matches the polynomial product inside the window") {
  // u = 1 + t (indices 0,1), v = 1 - t + t^2; product 1 + t^3, so inside
  // the window |k| <= 2 only the constant term survives.
  int half = 2;
  std::vector<Cplx> u(5), v(5);
  u[half + 0] = 1;
  u[half + 1] = 1;
  v[half + 0] = 1;
  v[half + 1] = -1;
  v[half + 2] = 1;
  auto w = k::convolve(u, v, half);
  CHECK(w[half - 2] == Cplx(0));
  CHECK(w[half - 1] == Cplx(0));
  CHECK(w[half + 0] == Cplx(1));
  CHECK(w[half + 1] == Cplx(0));
  CHECK(w[half + 2] == Cplx(0));
}
