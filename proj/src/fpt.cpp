#include "hlab/fpt.hpp"

#include <algorithm>

namespace hlab {

uint32_t invm(uint32_t a, uint32_t p) {
  if (a == 0) throw std::domain_error("invm: zero is not invertible");
  // extended Euclid on (a, p)
  int64_t r0 = a, r1 = p, s0 = 1, s1 = 0;
  while (r1 != 0) {
    int64_t q = r0 / r1;
    int64_t r2 = r0 - q * r1;
    int64_t s2 = s0 - q * s1;
    r0 = r1;
    r1 = r2;
    s0 = s1;
    s1 = s2;
  }
  int64_t inv = s0 % p;
  if (inv < 0) inv += p;
  return static_cast<uint32_t>(inv);
}

bool is_prime(uint32_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

RingCtx::RingCtx(uint32_t p_, uint32_t k_) : p(p_), k(k_) {
  if (!is_prime(p)) throw std::invalid_argument("RingCtx: p must be prime");
  if (k < 1) throw std::invalid_argument("RingCtx: k must be >= 1");
}

// --------------------------------------------------------------------------
// TruncatedSeries
// --------------------------------------------------------------------------

TruncatedSeries::TruncatedSeries(RingCtx ctx) : ctx_(ctx), c_(ctx.k, 0) {}

TruncatedSeries::TruncatedSeries(RingCtx ctx, std::vector<uint32_t> coeffs)
    : ctx_(ctx), c_(std::move(coeffs)) {
  c_.resize(ctx_.k, 0);
  for (auto& x : c_) x %= ctx_.p;
}

TruncatedSeries TruncatedSeries::constant(RingCtx ctx, uint32_t c) {
  TruncatedSeries r(ctx);
  r.c_[0] = c % ctx.p;
  return r;
}

TruncatedSeries TruncatedSeries::t_power(RingCtx ctx, uint32_t j, uint32_t c) {
  TruncatedSeries r(ctx);
  if (j < ctx.k) r.c_[j] = c % ctx.p;
  return r;
}

bool TruncatedSeries::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](uint32_t x) { return x == 0; });
}

bool TruncatedSeries::is_one() const {
  if (c_[0] != 1) return false;
  return std::all_of(c_.begin() + 1, c_.end(), [](uint32_t x) { return x == 0; });
}

std::optional<uint32_t> TruncatedSeries::valuation() const {
  for (uint32_t i = 0; i < ctx_.k; ++i)
    if (c_[i] != 0) return i;
  return std::nullopt;
}

bool valuation_at_least(const TruncatedSeries& a, uint32_t v) {
  auto val = a.valuation();
  return !val.has_value() || *val >= v;
}

TruncatedSeries TruncatedSeries::truncated(uint32_t new_k) const {
  RingCtx nctx(ctx_.p, new_k);
  std::vector<uint32_t> c(c_.begin(), c_.begin() + std::min<size_t>(new_k, c_.size()));
  return TruncatedSeries(nctx, std::move(c));
}

static void require_same_ctx(const TruncatedSeries& a, const TruncatedSeries& b) {
  if (!(a.ctx() == b.ctx()))
    throw std::invalid_argument("TruncatedSeries: ring context mismatch");
}

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
  require_same_ctx(a, b);
  TruncatedSeries r(a.ctx_);
  for (uint32_t i = 0; i < a.k(); ++i) r.c_[i] = addm(a.c_[i], b.c_[i], a.p());
  return r;
}

TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
  require_same_ctx(a, b);
  TruncatedSeries r(a.ctx_);
  for (uint32_t i = 0; i < a.k(); ++i) r.c_[i] = subm(a.c_[i], b.c_[i], a.p());
  return r;
}

TruncatedSeries TruncatedSeries::operator-() const {
  TruncatedSeries r(ctx_);
  for (uint32_t i = 0; i < ctx_.k; ++i) r.c_[i] = negm(c_[i], ctx_.p);
  return r;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  require_same_ctx(a, b);
  const uint32_t p = a.p(), k = a.k();
  TruncatedSeries r(a.ctx_);
  for (uint32_t i = 0; i < k; ++i) {
    if (a.c_[i] == 0) continue;
    for (uint32_t j = 0; i + j < k; ++j) {
      if (b.c_[j] == 0) continue;
      r.c_[i + j] = addm(r.c_[i + j], mulm(a.c_[i], b.c_[j], p), p);
    }
  }
  return r;
}

TruncatedSeries TruncatedSeries::scaled(uint32_t c) const {
  TruncatedSeries r(ctx_);
  c %= ctx_.p;
  for (uint32_t i = 0; i < ctx_.k; ++i) r.c_[i] = mulm(c_[i], c, ctx_.p);
  return r;
}

TruncatedSeries TruncatedSeries::inverse() const {
  if (!is_unit())
    throw std::domain_error("TruncatedSeries::inverse: not a unit (constant term is zero)");
  // Solve (sum a_i t^i)(sum b_j t^j) = 1 coefficient by coefficient.
  const uint32_t p = ctx_.p, k = ctx_.k;
  TruncatedSeries r(ctx_);
  uint32_t a0inv = invm(c_[0], p);
  r.c_[0] = a0inv;
  for (uint32_t m = 1; m < k; ++m) {
    uint32_t acc = 0;  // sum_{i=1..m} a_i b_{m-i}
    for (uint32_t i = 1; i <= m; ++i)
      acc = addm(acc, mulm(c_[i], r.c_[m - i], p), p);
    r.c_[m] = mulm(negm(acc, p), a0inv, p);
  }
  return r;
}

// --------------------------------------------------------------------------
// SeriesMatrix
// --------------------------------------------------------------------------

SeriesMatrix::SeriesMatrix(RingCtx ctx, size_t n)
    : ctx_(ctx), n_(n), e_(n * n, TruncatedSeries(ctx)) {
  if (n == 0) throw std::invalid_argument("SeriesMatrix: size must be positive");
}

SeriesMatrix SeriesMatrix::identity(RingCtx ctx, size_t n) {
  SeriesMatrix m(ctx, n);
  for (size_t i = 0; i < n; ++i) m.set(i, i, TruncatedSeries::constant(ctx, 1));
  return m;
}

void SeriesMatrix::set(size_t i, size_t j, TruncatedSeries v) {
  if (!(v.ctx() == ctx_))
    throw std::invalid_argument("SeriesMatrix::set: ring context mismatch");
  e_[i * n_ + j] = std::move(v);
}

SeriesMatrix SeriesMatrix::transpose() const {
  SeriesMatrix r(ctx_, n_);
  for (size_t i = 0; i < n_; ++i)
    for (size_t j = 0; j < n_; ++j) r.set(j, i, at(i, j));
  return r;
}

SeriesMatrix SeriesMatrix::truncated(uint32_t new_k) const {
  SeriesMatrix r(RingCtx(ctx_.p, new_k), n_);
  for (size_t i = 0; i < n_ * n_; ++i) r.e_[i] = e_[i].truncated(new_k);
  return r;
}

static void require_same_shape(const SeriesMatrix& a, const SeriesMatrix& b) {
  if (!(a.ctx() == b.ctx()) || a.n() != b.n())
    throw std::invalid_argument("SeriesMatrix: shape or context mismatch");
}

SeriesMatrix operator*(const SeriesMatrix& a, const SeriesMatrix& b) {
  require_same_shape(a, b);
  SeriesMatrix r(a.ctx_, a.n_);
  for (size_t i = 0; i < a.n_; ++i)
    for (size_t j = 0; j < a.n_; ++j) {
      TruncatedSeries acc(a.ctx_);
      for (size_t l = 0; l < a.n_; ++l) acc = acc + a.at(i, l) * b.at(l, j);
      r.e_[i * a.n_ + j] = std::move(acc);
    }
  return r;
}

SeriesMatrix operator+(const SeriesMatrix& a, const SeriesMatrix& b) {
  require_same_shape(a, b);
  SeriesMatrix r(a.ctx_, a.n_);
  for (size_t i = 0; i < a.n_ * a.n_; ++i) r.e_[i] = a.e_[i] + b.e_[i];
  return r;
}

SeriesMatrix operator-(const SeriesMatrix& a, const SeriesMatrix& b) {
  require_same_shape(a, b);
  SeriesMatrix r(a.ctx_, a.n_);
  for (size_t i = 0; i < a.n_ * a.n_; ++i) r.e_[i] = a.e_[i] - b.e_[i];
  return r;
}

SeriesMatrix SeriesMatrix::inverse() const {
  // Augmented Gauss-Jordan; over the local ring a unit pivot exists in every
  // column iff the reduction mod t is invertible over F_p.
  SeriesMatrix a(*this);
  SeriesMatrix inv = SeriesMatrix::identity(ctx_, n_);
  for (size_t col = 0; col < n_; ++col) {
    size_t piv = n_;
    for (size_t r = col; r < n_; ++r)
      if (a.at(r, col).is_unit()) {
        piv = r;
        break;
      }
    if (piv == n_)
      throw std::domain_error("SeriesMatrix::inverse: matrix is singular mod t");
    if (piv != col) {
      for (size_t j = 0; j < n_; ++j) {
        std::swap(a.e_[piv * n_ + j], a.e_[col * n_ + j]);
        std::swap(inv.e_[piv * n_ + j], inv.e_[col * n_ + j]);
      }
    }
    TruncatedSeries pinv = a.at(col, col).inverse();
    for (size_t j = 0; j < n_; ++j) {
      a.e_[col * n_ + j] = a.e_[col * n_ + j] * pinv;
      inv.e_[col * n_ + j] = inv.e_[col * n_ + j] * pinv;
    }
    for (size_t r = 0; r < n_; ++r) {
      if (r == col) continue;
      TruncatedSeries f = a.at(r, col);
      if (f.is_zero()) continue;
      for (size_t j = 0; j < n_; ++j) {
        a.e_[r * n_ + j] = a.e_[r * n_ + j] - f * a.e_[col * n_ + j];
        inv.e_[r * n_ + j] = inv.e_[r * n_ + j] - f * inv.e_[col * n_ + j];
      }
    }
  }
  return inv;
}

TruncatedSeries SeriesMatrix::determinant() const {
  if (n_ > 16)
    throw std::invalid_argument("SeriesMatrix::determinant: size > 16 unsupported");
  // D[S] = det of the submatrix on rows 0..|S|-1 and column set S,
  // expanding along the last row of each submatrix.
  const uint32_t full = (n_ >= 32) ? 0 : (1u << n_);
  std::vector<TruncatedSeries> D(full, TruncatedSeries(ctx_));
  D[0] = TruncatedSeries::constant(ctx_, 1);
  for (uint32_t mask = 1; mask < full; ++mask) {
    const int rows = __builtin_popcount(mask);
    const size_t row = static_cast<size_t>(rows - 1);
    TruncatedSeries acc(ctx_);
    int idx = 0;
    bool plus = ((rows - 1) % 2 == 0);  // sign (-1)^(row + idx), idx ascending
    for (uint32_t jbit = 0; jbit < n_; ++jbit) {
      if (!(mask & (1u << jbit))) continue;
      const TruncatedSeries& aij = at(row, jbit);
      if (!aij.is_zero()) {
        TruncatedSeries term = aij * D[mask ^ (1u << jbit)];
        bool sign_plus = ((row + static_cast<size_t>(idx)) % 2 == 0);
        acc = sign_plus ? acc + term : acc - term;
      }
      ++idx;
    }
    (void)plus;
    D[mask] = std::move(acc);
  }
  return D[full - 1];
}

uint32_t SeriesMatrix::congruence_level() const {
  uint32_t level = ctx_.k;
  for (size_t i = 0; i < n_; ++i)
    for (size_t j = 0; j < n_; ++j) {
      TruncatedSeries d = at(i, j);
      if (i == j) d = d - TruncatedSeries::constant(ctx_, 1);
      auto v = d.valuation();
      if (v.has_value()) level = std::min(level, *v);
    }
  return level;
}

// --------------------------------------------------------------------------
// FpSubspace
// --------------------------------------------------------------------------

FpSubspace::FpSubspace(uint32_t p, size_t ambient) : p_(p), ambient_(ambient) {
  if (!is_prime(p)) throw std::invalid_argument("FpSubspace: p must be prime");
}

FpSubspace FpSubspace::from_generators(uint32_t p, size_t ambient,
                                       const std::vector<std::vector<uint32_t>>& gens) {
  FpSubspace s(p, ambient);
  for (const auto& g : gens) s.insert(g);
  return s;
}

std::vector<uint32_t> FpSubspace::reduce(std::vector<uint32_t> v) const {
  if (v.size() != ambient_)
    throw std::invalid_argument("FpSubspace: vector length mismatch");
  for (auto& x : v) x %= p_;
  for (size_t r = 0; r < rows_.size(); ++r) {
    uint32_t c = v[pivots_[r]];
    if (c == 0) continue;
    for (size_t j = 0; j < ambient_; ++j)
      v[j] = subm(v[j], mulm(c, rows_[r][j], p_), p_);
  }
  return v;
}

bool FpSubspace::contains(const std::vector<uint32_t>& v) const {
  auto r = reduce(v);
  return std::all_of(r.begin(), r.end(), [](uint32_t x) { return x == 0; });
}

bool FpSubspace::contains(const FpSubspace& other) const {
  for (const auto& row : other.rows_)
    if (!contains(row)) return false;
  return true;
}

std::vector<uint32_t> FpSubspace::coordinates(const std::vector<uint32_t>& v) const {
  std::vector<uint32_t> w = v;
  for (auto& x : w) x %= p_;
  std::vector<uint32_t> coords(rows_.size(), 0);
  for (size_t r = 0; r < rows_.size(); ++r) {
    uint32_t c = w[pivots_[r]];
    coords[r] = c;
    if (c == 0) continue;
    for (size_t j = 0; j < ambient_; ++j)
      w[j] = subm(w[j], mulm(c, rows_[r][j], p_), p_);
  }
  if (!std::all_of(w.begin(), w.end(), [](uint32_t x) { return x == 0; }))
    throw std::domain_error("FpSubspace::coordinates: vector outside the span");
  return coords;
}

bool FpSubspace::insert(std::vector<uint32_t> v) {
  v = reduce(std::move(v));
  size_t pivot = ambient_;
  for (size_t j = 0; j < ambient_; ++j)
    if (v[j] != 0) {
      pivot = j;
      break;
    }
  if (pivot == ambient_) return false;
  uint32_t scale = invm(v[pivot], p_);
  for (auto& x : v) x = mulm(x, scale, p_);
  // eliminate the new pivot from existing rows, then insert in pivot order
  for (size_t r = 0; r < rows_.size(); ++r) {
    uint32_t c = rows_[r][pivot];
    if (c == 0) continue;
    for (size_t j = 0; j < ambient_; ++j)
      rows_[r][j] = subm(rows_[r][j], mulm(c, v[j], p_), p_);
  }
  auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), pivot);
  size_t idx = static_cast<size_t>(pos - pivots_.begin());
  pivots_.insert(pos, pivot);
  rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(idx), std::move(v));
  return true;
}

FpSubspace fp_rref(uint32_t p, size_t ambient,
                   const std::vector<std::vector<uint32_t>>& gens) {
  return FpSubspace::from_generators(p, ambient, gens);
}

FpSubspace fp_kernel(uint32_t p, const std::vector<std::vector<uint32_t>>& rows,
                     size_t ncols) {
  FpSubspace rowspace = FpSubspace::from_generators(p, ncols, rows);
  const auto& R = rowspace.rows();
  const auto& piv = rowspace.pivots();
  std::vector<bool> is_pivot(ncols, false);
  for (size_t c : piv) is_pivot[c] = true;
  std::vector<std::vector<uint32_t>> gens;
  for (size_t f = 0; f < ncols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<uint32_t> v(ncols, 0);
    v[f] = 1;
    for (size_t r = 0; r < R.size(); ++r) v[piv[r]] = negm(R[r][f], p);
    gens.push_back(std::move(v));
  }
  return FpSubspace::from_generators(p, ncols, gens);
}

}  // namespace hlab
