#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

namespace hlab {

// ---------------------------------------------------------------------------
// Arithmetic mod p (p < 2^31). Inputs are canonical residues in [0, p).
// ---------------------------------------------------------------------------

inline uint32_t addm(uint32_t a, uint32_t b, uint32_t p) {
  uint32_t s = a + b;
  return s >= p ? s - p : s;
}
inline uint32_t subm(uint32_t a, uint32_t b, uint32_t p) {
  return a >= b ? a - b : a + (p - b);
}
inline uint32_t negm(uint32_t a, uint32_t p) { return a == 0 ? 0 : p - a; }
inline uint32_t mulm(uint32_t a, uint32_t b, uint32_t p) {
  return static_cast<uint32_t>(static_cast<uint64_t>(a) * b % p);
}
uint32_t invm(uint32_t a, uint32_t p);  // throws on a == 0

bool is_prime(uint32_t n);

// Coefficient ring F_p[t]/(t^k). The truncation exponent k is a
// per-computation parameter, not global state.
struct RingCtx {
  uint32_t p;
  uint32_t k;
  RingCtx(uint32_t p_, uint32_t k_);
  friend bool operator==(const RingCtx&, const RingCtx&) = default;
};

// ---------------------------------------------------------------------------
// TruncatedSeries: an element of F_p[t]/(t^k). Immutable after construction;
// coeff(i) is the residue of the t^i coefficient.
// ---------------------------------------------------------------------------
class TruncatedSeries {
 public:
  explicit TruncatedSeries(RingCtx ctx);  // zero
  TruncatedSeries(RingCtx ctx, std::vector<uint32_t> coeffs);  // reduced mod p

  static TruncatedSeries constant(RingCtx ctx, uint32_t c);
  static TruncatedSeries t_power(RingCtx ctx, uint32_t j, uint32_t c = 1);

  const RingCtx& ctx() const { return ctx_; }
  uint32_t p() const { return ctx_.p; }
  uint32_t k() const { return ctx_.k; }
  uint32_t coeff(uint32_t i) const { return c_[i]; }
  const std::vector<uint32_t>& coeffs() const { return c_; }

  bool is_zero() const;
  bool is_one() const;
  bool is_unit() const { return c_[0] != 0; }

  // Least i with coeff(i) != 0; nullopt for the zero series (ordered above
  // every integer by convention).
  std::optional<uint32_t> valuation() const;

  // Image in F_p[t]/(t^k'): shrinks by dropping coefficients, extends by
  // zero-padding.
  TruncatedSeries truncated(uint32_t new_k) const;

  TruncatedSeries inverse() const;  // requires a unit
  TruncatedSeries scaled(uint32_t c) const;

  friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
  TruncatedSeries operator-() const;
  friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

 private:
  RingCtx ctx_;
  std::vector<uint32_t> c_;  // length exactly k, residues in [0, p)
};

// valuation(a) >= v, treating the zero series as infinitely deep
bool valuation_at_least(const TruncatedSeries& a, uint32_t v);

// ---------------------------------------------------------------------------
// SeriesMatrix: n x n matrix over the truncated ring, row-major.
// ---------------------------------------------------------------------------
class SeriesMatrix {
 public:
  SeriesMatrix(RingCtx ctx, size_t n);  // zero matrix
  static SeriesMatrix identity(RingCtx ctx, size_t n);

  const RingCtx& ctx() const { return ctx_; }
  size_t n() const { return n_; }

  const TruncatedSeries& at(size_t i, size_t j) const { return e_[i * n_ + j]; }
  void set(size_t i, size_t j, TruncatedSeries v);

  SeriesMatrix transpose() const;
  SeriesMatrix truncated(uint32_t new_k) const;

  // Gauss-Jordan over the local ring; pivots must be units. Throws
  // std::domain_error when the reduction mod t is singular.
  SeriesMatrix inverse() const;

  // Division-free determinant (Laplace over column subsets); n <= 16.
  TruncatedSeries determinant() const;

  // Largest l <= k with M == I mod t^l.
  uint32_t congruence_level() const;

  friend SeriesMatrix operator*(const SeriesMatrix& a, const SeriesMatrix& b);
  friend SeriesMatrix operator+(const SeriesMatrix& a, const SeriesMatrix& b);
  friend SeriesMatrix operator-(const SeriesMatrix& a, const SeriesMatrix& b);
  friend bool operator==(const SeriesMatrix&, const SeriesMatrix&) = default;

 private:
  RingCtx ctx_;
  size_t n_;
  std::vector<TruncatedSeries> e_;
};

// ---------------------------------------------------------------------------
// FpSubspace: subspace of F_p^ambient held as a canonical reduced
// row-echelon basis. Two generating sets of the same subspace produce
// identical bases.
// ---------------------------------------------------------------------------
class FpSubspace {
 public:
  FpSubspace(uint32_t p, size_t ambient);

  static FpSubspace from_generators(uint32_t p, size_t ambient,
                                    const std::vector<std::vector<uint32_t>>& gens);

  uint32_t p() const { return p_; }
  size_t ambient() const { return ambient_; }
  size_t dim() const { return rows_.size(); }
  const std::vector<std::vector<uint32_t>>& rows() const { return rows_; }
  const std::vector<size_t>& pivots() const { return pivots_; }

  // Residual of v after elimination against the basis.
  std::vector<uint32_t> reduce(std::vector<uint32_t> v) const;
  bool contains(const std::vector<uint32_t>& v) const;
  bool contains(const FpSubspace& other) const;

  // Expansion coefficients of v in the basis; throws if v is outside.
  std::vector<uint32_t> coordinates(const std::vector<uint32_t>& v) const;

  // Span-grow by one vector, keeping the basis canonical. Returns true if
  // the dimension increased.
  bool insert(std::vector<uint32_t> v);

  friend bool operator==(const FpSubspace&, const FpSubspace&) = default;

 private:
  uint32_t p_;
  size_t ambient_;
  std::vector<std::vector<uint32_t>> rows_;  // rref, pivot columns increasing
  std::vector<size_t> pivots_;
};

FpSubspace fp_rref(uint32_t p, size_t ambient,
                   const std::vector<std::vector<uint32_t>>& gens);

// Kernel {x : M x = 0} of the matrix given by rows (each of length ncols),
// as a canonical FpSubspace of F_p^ncols.
FpSubspace fp_kernel(uint32_t p, const std::vector<std::vector<uint32_t>>& rows,
                     size_t ncols);

}  // namespace hlab
