#include "qlab/qseries.hpp"

#include <algorithm>
#include <numeric>

namespace qlab {

namespace {

void reduce2k(mpz_class& x, unsigned K) {
  mpz_fdiv_r_2exp(x.get_mpz_t(), x.get_mpz_t(), K);
}

// Stricter of two moduli: a present modulus beats "exact", smaller K beats
// larger (fewer known bits).
std::optional<unsigned> combine_moduli(std::optional<unsigned> a, std::optional<unsigned> b) {
  if (a && b) return std::min(*a, *b);
  return a ? a : b;
}

std::vector<std::size_t> nonzero_support(const QSeries& a, std::size_t upto) {
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i <= std::min(upto, a.trunc()); ++i)
    if (a[i] != 0) idx.push_back(i);
  return idx;
}

} // namespace

void QSeries::canonicalize() {
  for (auto& c : coeffs_) reduce2k(c, *modulus_exp_);
}

std::pair<std::int64_t, std::int64_t> QSeries::offset_frac() const {
  std::int64_t g = std::gcd(offset24_ < 0 ? -offset24_ : offset24_, std::int64_t{24});
  if (g == 0) return {0, 1};
  return {offset24_ / g, 24 / g};
}

unsigned long pi2(const mpz_class& n) {
  if (n == 0) return Valuation2Profile::infinity;
  return mpz_scan1(n.get_mpz_t(), 0);
}

QSeries add(const QSeries& a, const QSeries& b) {
  const bool az = a.is_zero(), bz = b.is_zero();
  std::int64_t off;
  if (a.offset24() == b.offset24())
    off = a.offset24();
  else if (az)
    off = b.offset24();
  else if (bz)
    off = a.offset24();
  else
    fail(errc::incompatible_offset, "series offsets differ and neither operand is zero");
  std::size_t n = std::min(a.trunc(), b.trunc());
  std::vector<mpz_class> c(n + 1);
  for (std::size_t i = 0; i <= n; ++i) c[i] = a[i] + b[i];
  return QSeries(std::move(c), off, combine_moduli(a.modulus_exp(), b.modulus_exp()));
}

QSeries neg(const QSeries& a) {
  std::vector<mpz_class> c(a.coeffs());
  for (auto& x : c) x = -x;
  return QSeries(std::move(c), a.offset24(), a.modulus_exp());
}

QSeries sub(const QSeries& a, const QSeries& b) { return add(a, neg(b)); }

QSeries mul(const QSeries& a, const QSeries& b) {
  const std::size_t n = std::min(a.trunc(), b.trunc());
  // Iterate over the sparser operand's support; dense series pay the full
  // Cauchy product, theta-type factors drop to O(n sqrt(n)).
  const auto sa = nonzero_support(a, n);
  const auto sb = nonzero_support(b, n);
  const QSeries& outer = sa.size() <= sb.size() ? a : b;
  const QSeries& inner = sa.size() <= sb.size() ? b : a;
  const auto& sup = sa.size() <= sb.size() ? sa : sb;

  std::vector<mpz_class> c(n + 1);
  for (std::size_t j : sup) {
    const mpz_class& oj = outer[j];
    for (std::size_t i = 0; i + j <= n && i <= inner.trunc(); ++i) {
      if (inner[i] != 0)
        mpz_addmul(c[i + j].get_mpz_t(), oj.get_mpz_t(), inner[i].get_mpz_t());
    }
  }
  return QSeries(std::move(c), a.offset24() + b.offset24(),
                 combine_moduli(a.modulus_exp(), b.modulus_exp()));
}

QSeries mul_scalar(const QSeries& a, const mpz_class& k) {
  std::vector<mpz_class> c(a.coeffs());
  for (auto& x : c) x *= k;
  return QSeries(std::move(c), a.offset24(), a.modulus_exp());
}

QSeries invert(const QSeries& a, std::size_t n) {
  if (a.offset24() != 0) fail(errc::offset_not_integral, "invert requires offset 0");
  const auto K = a.modulus_exp();
  mpz_class a0 = a[0];
  bool unit_plus = a0 == 1;
  bool unit_minus = K ? (a0 == (mpz_class(1) << *K) - 1) : (a0 == -1);
  if (!unit_plus && !unit_minus)
    fail(errc::non_unit_constant_term, "invert requires constant term +-1");

  // b_n = -a0 * sum_{k in supp(a), 1<=k<=n} a_k b_{n-k}; only nonzero a_k
  // contribute, so sparse inputs invert in O(n * |supp|).
  std::vector<std::size_t> sup;
  for (std::size_t k = 1; k <= std::min(n, a.trunc()); ++k)
    if (a[k] != 0) sup.push_back(k);

  std::vector<mpz_class> b(n + 1);
  b[0] = a0; // +-1 is its own inverse
  mpz_class acc;
  for (std::size_t i = 1; i <= n; ++i) {
    acc = 0;
    for (std::size_t k : sup) {
      if (k > i) break;
      mpz_addmul(acc.get_mpz_t(), a[k].get_mpz_t(), b[i - k].get_mpz_t());
    }
    b[i] = -(acc * a0);
    if (K) reduce2k(b[i], *K);
  }
  return QSeries(std::move(b), 0, K);
}

QSeries pow(const QSeries& a, unsigned long e) {
  QSeries result = QSeries::one(a.trunc());
  if (a.modulus_exp()) result.set_modulus_exp(a.modulus_exp());
  result.set_offset24(0);
  QSeries base = a;
  while (e > 0) {
    if (e & 1) result = mul(result, base);
    e >>= 1;
    if (e) base = mul(base, base);
  }
  return result;
}

QSeries v_p(const QSeries& a, unsigned p) {
  if (p < 2) fail(errc::bad_input, "v_p requires p >= 2");
  QSeries s = to_plain(a);
  std::vector<mpz_class> c(s.trunc() * p + 1);
  for (std::size_t i = 0; i <= s.trunc(); ++i) c[i * p] = s[i];
  return QSeries(std::move(c), 0, s.modulus_exp());
}

QSeries u_p(const QSeries& a, unsigned p) {
  if (p < 2) fail(errc::bad_input, "u_p requires p >= 2");
  QSeries s = to_plain(a);
  std::vector<mpz_class> c(s.trunc() / p + 1);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = s[i * p];
  return QSeries(std::move(c), 0, s.modulus_exp());
}

QSeries alternate_sign(const QSeries& a) {
  QSeries s = to_plain(a);
  std::vector<mpz_class> c(s.coeffs());
  for (std::size_t i = 1; i < c.size(); i += 2) c[i] = -c[i];
  return QSeries(std::move(c), 0, s.modulus_exp());
}

QSeries reduce_mod2k(const QSeries& a, unsigned K) {
  if (K < 1) fail(errc::bad_input, "modulus exponent must be >= 1");
  unsigned k = a.modulus_exp() ? std::min(*a.modulus_exp(), K) : K;
  std::vector<mpz_class> c(a.coeffs());
  QSeries s(std::move(c), a.offset24());
  s.set_modulus_exp(k);
  return s;
}

Valuation2Profile valuation2_profile(const QSeries& a) {
  if (a.modulus_exp())
    fail(errc::modulus_present, "valuations of residues mod 2^K are only lower bounds; "
                                "compute the series exactly first");
  Valuation2Profile prof;
  const std::int64_t base = a.offset_is_integral() ? a.offset_int() : 0;
  prof.entries.reserve(a.trunc() + 1);
  for (std::size_t i = 0; i <= a.trunc(); ++i)
    prof.entries.emplace_back(base + static_cast<std::int64_t>(i), pi2(a[i]));
  return prof;
}

QSeries to_plain(const QSeries& a) {
  const std::int64_t off = a.offset_int();
  if (off == 0) return a;
  if (off < 0) fail(errc::offset_not_integral, "negative offset has a Laurent tail");
  std::vector<mpz_class> c(a.trunc() + 1 + static_cast<std::size_t>(off));
  for (std::size_t i = 0; i <= a.trunc(); ++i) c[i + off] = a[i];
  return QSeries(std::move(c), 0, a.modulus_exp());
}

QSeries truncate(const QSeries& a, std::size_t n) {
  if (n > a.trunc()) fail(errc::bad_input, "truncate cannot extend a series");
  std::vector<mpz_class> c(a.coeffs().begin(), a.coeffs().begin() + n + 1);
  return QSeries(std::move(c), a.offset24(), a.modulus_exp());
}

std::optional<std::int64_t> order24(const QSeries& a) {
  for (std::size_t i = 0; i <= a.trunc(); ++i)
    if (a[i] != 0) return a.offset24() + 24 * static_cast<std::int64_t>(i);
  return std::nullopt;
}

} // namespace qlab
