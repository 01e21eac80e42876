#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hlab/fpt.hpp"
#include "hlab/rng.hpp"

using namespace hlab;

namespace {

TruncatedSeries random_series(Xoshiro256StarStar& rng, RingCtx ctx) {
  std::vector<uint32_t> c(ctx.k);
  for (auto& x : c) x = static_cast<uint32_t>(rng.below(ctx.p));
  return TruncatedSeries(ctx, std::move(c));
}

// Independent oracle: schoolbook long multiplication without truncation,
// reduced and truncated only at the end.
TruncatedSeries long_mul_oracle(const TruncatedSeries& a, const TruncatedSeries& b) {
  const uint32_t k = a.k(), p = a.p();
  std::vector<uint64_t> full(2 * k, 0);
  for (uint32_t i = 0; i < k; ++i)
    for (uint32_t j = 0; j < k; ++j) full[i + j] += (uint64_t)a.coeff(i) * b.coeff(j);
  std::vector<uint32_t> c(k);
  for (uint32_t i = 0; i < k; ++i) c[i] = static_cast<uint32_t>(full[i] % p);
  return TruncatedSeries(a.ctx(), std::move(c));
}

// Independent oracle: recursive Laplace expansion along the first row.
TruncatedSeries det_oracle(const SeriesMatrix& m) {
  const size_t n = m.n();
  if (n == 1) return m.at(0, 0);
  TruncatedSeries acc(m.ctx());
  for (size_t j = 0; j < n; ++j) {
    SeriesMatrix minor(m.ctx(), n - 1);
    for (size_t r = 1; r < n; ++r) {
      size_t cc = 0;
      for (size_t c = 0; c < n; ++c) {
        if (c == j) continue;
        minor.set(r - 1, cc++, m.at(r, c));
      }
    }
    TruncatedSeries term = m.at(0, j) * det_oracle(minor);
    acc = (j % 2 == 0) ? acc + term : acc - term;
  }
  return acc;
}

}  // namespace

TEST_CASE("series addition examples") {
  RingCtx c24(2, 4);
  auto t = TruncatedSeries::t_power(c24, 1);
  CHECK((t + t).is_zero());

  RingCtx c34(3, 4);
  TruncatedSeries a(c34, {1, 1, 0, 0});
  TruncatedSeries b(c34, {0, 1, 1, 0});
  CHECK(a + b == TruncatedSeries(c34, {1, 2, 1, 0}));

  TruncatedSeries zero(c34);
  CHECK(a + zero == a);
}

TEST_CASE("series multiplication examples") {
  RingCtx c23(2, 3);
  auto t = TruncatedSeries::t_power(c23, 1);
  CHECK(t * t == TruncatedSeries::t_power(c23, 2));

  RingCtx c24(2, 4);
  TruncatedSeries u(c24, {1, 1, 0, 0});
  TruncatedSeries v(c24, {1, 1, 1, 1});
  CHECK(u * v == long_mul_oracle(u, v));
  CHECK((u * v).is_one());

  auto tk1 = TruncatedSeries::t_power(c24, 3);
  auto t1 = TruncatedSeries::t_power(c24, 1);
  CHECK((tk1 * t1).is_zero());
}

TEST_CASE("series inverse examples") {
  RingCtx c24(2, 4);
  auto one = TruncatedSeries::constant(c24, 1);
  CHECK(one.inverse() == one);

  TruncatedSeries a(c24, {1, 1, 0, 0});
  CHECK(a.inverse() == TruncatedSeries(c24, {1, 1, 1, 1}));
  CHECK((a * a.inverse()).is_one());

  CHECK_THROWS_AS(TruncatedSeries::t_power(c24, 1).inverse(), std::domain_error);
}

TEST_CASE("valuation examples") {
  RingCtx c26(2, 6);
  TruncatedSeries a(c26, {0, 0, 1, 1, 0, 0});
  CHECK(a.valuation() == 2u);
  CHECK(!TruncatedSeries(c26).valuation().has_value());
  auto t2 = TruncatedSeries::t_power(c26, 2);
  auto t3 = TruncatedSeries::t_power(c26, 3);
  CHECK((t2 * t3).valuation() == 5u);
}

TEST_CASE("ring axioms hold on random triples") {
  for (uint32_t p : {2u, 3u, 5u}) {
    for (uint32_t k : {4u, 8u}) {
      RingCtx ctx(p, k);
      Xoshiro256StarStar rng(1000 * p + k);
      for (int it = 0; it < 10000; ++it) {
        auto a = random_series(rng, ctx);
        auto b = random_series(rng, ctx);
        auto c = random_series(rng, ctx);
        REQUIRE((a + b) + c == a + (b + c));
        REQUIRE(a + b == b + a);
        REQUIRE((a * b) * c == a * (b * c));
        REQUIRE(a * b == b * a);
        REQUIRE(a * (b + c) == a * b + a * c);
        REQUIRE(a * b == long_mul_oracle(a, b));
      }
    }
  }
}

TEST_CASE("unit inverses and valuation laws on random samples") {
  for (uint32_t p : {2u, 3u, 5u}) {
    RingCtx ctx(p, 8);
    Xoshiro256StarStar rng(77 * p);
    int units = 0;
    for (int it = 0; it < 2000; ++it) {
      auto a = random_series(rng, ctx);
      auto b = random_series(rng, ctx);
      if (a.is_unit()) {
        ++units;
        REQUIRE((a * a.inverse()).is_one());
      }
      auto va = a.valuation(), vb = b.valuation();
      if (va && vb && *va + *vb < ctx.k) {
        REQUIRE((a * b).valuation() == *va + *vb);
      }
      auto vsum = (a + b).valuation();
      if (va && vb) {
        uint32_t m = std::min(*va, *vb);
        REQUIRE((!vsum.has_value() || *vsum >= m));
      }
    }
    CHECK(units > 100);
  }
}

TEST_CASE("matrix inverse examples") {
  RingCtx c33(3, 3);
  auto I = SeriesMatrix::identity(c33, 2);
  CHECK(I.inverse() == I);

  SeriesMatrix u(c33, 2);
  u = I;
  u.set(0, 1, TruncatedSeries::t_power(c33, 1));
  SeriesMatrix expect = I;
  expect.set(0, 1, -TruncatedSeries::t_power(c33, 1));
  CHECK(u.inverse() == expect);
  CHECK(u * u.inverse() == I);

  SeriesMatrix sing(c33, 2);
  sing.set(0, 0, TruncatedSeries::t_power(c33, 1));
  sing.set(1, 1, TruncatedSeries::constant(c33, 1));
  CHECK_THROWS_AS(sing.inverse(), std::domain_error);
}

TEST_CASE("matrix product and determinant against oracles") {
  RingCtx ctx(5, 4);
  Xoshiro256StarStar rng(42);
  for (int it = 0; it < 200; ++it) {
    size_t n = 1 + rng.below(4);
    SeriesMatrix a(ctx, n), b(ctx, n);
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j) {
        a.set(i, j, random_series(rng, ctx));
        b.set(i, j, random_series(rng, ctx));
      }
    REQUIRE(a.determinant() == det_oracle(a));
    // det is multiplicative
    REQUIRE((a * b).determinant() == a.determinant() * b.determinant());
    if (a.determinant().is_unit()) {
      REQUIRE(a * a.inverse() == SeriesMatrix::identity(ctx, n));
    }
  }
}

TEST_CASE("rref basics") {
  auto s = fp_rref(3, 2, {{1, 0}, {0, 1}});
  CHECK(s.dim() == 2);

  auto s1 = fp_rref(3, 2, {{1, 1}, {2, 2}});
  CHECK(s1.dim() == 1);

  auto s0 = fp_rref(3, 2, {});
  CHECK(s0.dim() == 0);
}

TEST_CASE("rref canonicality: generating sets of equal span agree") {
  for (uint32_t p : {2u, 3u, 5u}) {
    Xoshiro256StarStar rng(p);
    for (int it = 0; it < 300; ++it) {
      size_t ambient = 3 + rng.below(5);
      size_t ngen = 1 + rng.below(4);
      std::vector<std::vector<uint32_t>> gens;
      for (size_t g = 0; g < ngen; ++g) {
        std::vector<uint32_t> v(ambient);
        for (auto& x : v) x = static_cast<uint32_t>(rng.below(p));
        gens.push_back(v);
      }
      auto base = fp_rref(p, ambient, gens);
      // second generating set: random invertible combinations plus shuffles
      std::vector<std::vector<uint32_t>> gens2;
      for (size_t g = 0; g < 2 * ngen; ++g) {
        std::vector<uint32_t> v(ambient, 0);
        for (const auto& w : gens) {
          uint32_t c = static_cast<uint32_t>(rng.below(p));
          for (size_t j = 0; j < ambient; ++j) v[j] = addm(v[j], mulm(c, w[j], p), p);
        }
        gens2.push_back(v);
      }
      for (const auto& w : gens) gens2.push_back(w);  // keep the span equal
      auto again = fp_rref(p, ambient, gens2);
      REQUIRE(base == again);
    }
  }
}

TEST_CASE("kernel computation") {
  // x + y + z = 0 over F_3 has a 2-dimensional kernel
  auto ker = fp_kernel(3, {{1, 1, 1}}, 3);
  CHECK(ker.dim() == 2);
  CHECK(ker.contains({1, 2, 0}));
  CHECK(ker.contains({0, 1, 2}));
  CHECK(!ker.contains({1, 0, 0}));

  // kernel rows actually annihilate the matrix
  Xoshiro256StarStar rng(7);
  for (int it = 0; it < 100; ++it) {
    uint32_t p = (it % 2 == 0) ? 3 : 5;
    size_t rows = 1 + rng.below(4), cols = 2 + rng.below(5);
    std::vector<std::vector<uint32_t>> m(rows, std::vector<uint32_t>(cols));
    for (auto& r : m)
      for (auto& x : r) x = static_cast<uint32_t>(rng.below(p));
    auto ker2 = fp_kernel(p, m, cols);
    for (const auto& v : ker2.rows()) {
      for (const auto& r : m) {
        uint32_t acc = 0;
        for (size_t j = 0; j < cols; ++j) acc = addm(acc, mulm(r[j], v[j], p), p);
        REQUIRE(acc == 0);
      }
    }
    // rank-nullity
    auto rs = fp_rref(p, cols, m);
    REQUIRE(rs.dim() + ker2.dim() == cols);
  }
}

TEST_CASE("context mismatch is rejected") {
  RingCtx a(2, 4), b(3, 4), c(2, 5);
  TruncatedSeries x(a), y(b), z(c);
  CHECK_THROWS_AS(x + y, std::invalid_argument);
  CHECK_THROWS_AS(x * z, std::invalid_argument);
  CHECK_THROWS_AS(RingCtx(4, 2), std::invalid_argument);
  CHECK_THROWS_AS(RingCtx(2, 0), std::invalid_argument);
}
