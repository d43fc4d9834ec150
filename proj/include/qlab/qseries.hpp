#ifndef QLAB_QSERIES_HPP
#define QLAB_QSERIES_HPP

#include <cstdint>
#include <limits>
#include <optional>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "qlab/errors.hpp"

namespace qlab {

/// Truncated formal power series in q with exact integer coefficients.
///
/// A QSeries represents  q^(offset) * sum_{i=0}^{trunc} c_i q^i,  where the
/// offset is a rational with denominator dividing 24 (stored in 24ths, so the
/// q^{1/24}-type eta prefactors are exact).  All plain series have offset 0.
/// When a modulus exponent K is set, every coefficient is kept as its
/// canonical residue in [0, 2^K); otherwise coefficients are exact integers.
///
/// Values are immutable in spirit: no operation mutates its inputs, and a
/// constructed series may be shared freely across threads.
class QSeries {
public:
  /// Zero series of the given truncation order (trunc+1 stored coefficients).
  explicit QSeries(std::size_t trunc = 0) : coeffs_(trunc + 1) {}

  QSeries(std::vector<mpz_class> coeffs, std::int64_t offset24 = 0,
          std::optional<unsigned> modulus_exp = std::nullopt)
      : coeffs_(std::move(coeffs)), offset24_(offset24), modulus_exp_(modulus_exp) {
    if (coeffs_.empty()) coeffs_.resize(1);
    if (modulus_exp_) {
      if (*modulus_exp_ < 1) fail(errc::bad_input, "modulus exponent must be >= 1");
      canonicalize();
    }
  }

  static QSeries constant(const mpz_class& c, std::size_t trunc) {
    QSeries s(trunc);
    s.coeffs_[0] = c;
    return s;
  }
  static QSeries one(std::size_t trunc) { return constant(1, trunc); }

  std::size_t trunc() const { return coeffs_.size() - 1; }
  const std::vector<mpz_class>& coeffs() const { return coeffs_; }
  const mpz_class& operator[](std::size_t i) const { return coeffs_[i]; }

  std::int64_t offset24() const { return offset24_; }
  bool offset_is_integral() const { return offset24_ % 24 == 0; }
  std::int64_t offset_int() const {
    if (!offset_is_integral()) fail(errc::offset_not_integral, "offset is not an integer");
    return offset24_ / 24;
  }
  /// Offset as a reduced fraction (num, den) with den | 24.
  std::pair<std::int64_t, std::int64_t> offset_frac() const;

  std::optional<unsigned> modulus_exp() const { return modulus_exp_; }

  bool is_zero() const {
    for (const auto& c : coeffs_)
      if (c != 0) return false;
    return true;
  }

  bool operator==(const QSeries& o) const {
    return offset24_ == o.offset24_ && modulus_exp_ == o.modulus_exp_ && coeffs_ == o.coeffs_;
  }

  // Internal mutator used by the series builders; callers treat QSeries as
  // immutable once published.
  std::vector<mpz_class>& mutable_coeffs() { return coeffs_; }
  void set_offset24(std::int64_t o) { offset24_ = o; }
  void set_modulus_exp(std::optional<unsigned> k) {
    modulus_exp_ = k;
    if (modulus_exp_) canonicalize();
  }

private:
  void canonicalize();

  std::vector<mpz_class> coeffs_; // never empty
  std::int64_t offset24_ = 0;
  std::optional<unsigned> modulus_exp_;
};

/// Exponentwise 2-adic valuations of a series; zero coefficients carry the
/// +infinity sentinel.
struct Valuation2Profile {
  static constexpr unsigned long infinity = std::numeric_limits<unsigned long>::max();
  // (exponent, pi2) with exponents strictly increasing.
  std::vector<std::pair<std::int64_t, unsigned long>> entries;
};

/// pi2 of a single integer: largest e with 2^e | n; infinity sentinel for 0.
unsigned long pi2(const mpz_class& n);

QSeries add(const QSeries& a, const QSeries& b);
QSeries sub(const QSeries& a, const QSeries& b);
QSeries neg(const QSeries& a);
QSeries mul(const QSeries& a, const QSeries& b);
QSeries mul_scalar(const QSeries& a, const mpz_class& c);

/// Multiplicative inverse to order n; requires offset 0 and constant term +-1.
QSeries invert(const QSeries& a, std::size_t n);

/// Non-negative integer power by repeated squaring; truncation preserved.
QSeries pow(const QSeries& a, unsigned long e);

/// q -> q^p substitution (the V_p operator); right inverse of u_p.
QSeries v_p(const QSeries& a, unsigned p);

/// Atkin U_p: picks every p-th coefficient; trunc becomes floor(trunc/p).
QSeries u_p(const QSeries& a, unsigned p);

/// q -> -q: coefficient at q^n multiplied by (-1)^n.
QSeries alternate_sign(const QSeries& a);

/// Coefficientwise reduction to canonical residues mod 2^K.  If the series
/// already carries a modulus K' < K, only K' bits are known and K' is kept.
QSeries reduce_mod2k(const QSeries& a, unsigned K);

/// Exact per-exponent 2-adic valuations; refuses series with a modulus set
/// (residues only lower-bound the valuation).
Valuation2Profile valuation2_profile(const QSeries& a);

/// Fold a non-negative integral offset into the coefficient array.
QSeries to_plain(const QSeries& a);

/// Drop coefficients above n (n <= trunc required).
QSeries truncate(const QSeries& a, std::size_t n);

/// First exponent (offset included, in 24ths) with a nonzero coefficient.
std::optional<std::int64_t> order24(const QSeries& a);

inline QSeries operator+(const QSeries& a, const QSeries& b) { return add(a, b); }
inline QSeries operator-(const QSeries& a, const QSeries& b) { return sub(a, b); }
inline QSeries operator*(const QSeries& a, const QSeries& b) { return mul(a, b); }
inline QSeries operator-(const QSeries& a) { return neg(a); }

} // namespace qlab

#endif
