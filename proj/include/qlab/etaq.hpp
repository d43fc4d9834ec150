#ifndef QLAB_ETAQ_HPP
#define QLAB_ETAQ_HPP

#include <cstdint>
#include <map>
#include <vector>

#include <gmpxx.h>

#include "qlab/qseries.hpp"

namespace qlab {

/// Finite product prod_{delta | N} eta(delta tau)^{m_delta}.
struct EtaQuotient {
  unsigned long level = 1;                 // N
  std::map<unsigned long, int> exponents;  // delta -> m_delta (absent = 0)
};

/// Validates that every key divides the level and some exponent is nonzero.
void validate(const EtaQuotient& e);

/// Cusp representative c/d of Gamma_0(N) with gcd(c,d)=1, d | N.
struct Cusp {
  std::int64_t num = 0;
  std::uint64_t den = 1;
  std::uint64_t width = 1; // N / gcd(d^2, N)
};

struct NewmanReport {
  bool sum_delta_m = false;      // sum delta*m_delta = 0 (mod 24)
  bool sum_level_over_delta_m = false; // sum (N/delta)*m_delta = 0 (mod 24)
  bool product_is_square = false;      // prod delta^{m_delta} a rational square
  bool weight_zero = false;            // sum m_delta = 0
  bool pass = false;
};

/// q-expansion of the quotient: offset sum(delta*m_delta)/24 plus the product
/// of Euler-factor powers to the requested truncation.  Exact integers.
QSeries eta_expansion(const EtaQuotient& e, std::size_t trunc);

/// Mantissa only: prod_{delta} E(q^delta)^{m_delta} with E(q) = prod (1-q^n).
QSeries eta_mantissa(const std::map<unsigned long, int>& exponents, std::size_t trunc);

NewmanReport newman_check(const EtaQuotient& e);

/// One representative per cusp class of Gamma_0(N): for each d | N the
/// numerators run over residues mod gcd(d, N/d) coprime to it.
std::vector<Cusp> cusp_set(unsigned long N);

/// Gamma_0(N)-equivalence of cusps a/c and a2/c2 (c = 0 encodes infinity).
bool cusps_equivalent(std::int64_t a, std::int64_t c, std::int64_t a2, std::int64_t c2,
                      unsigned long N);

/// Representative from cusp_set(N) equivalent to num/den (den = 0: infinity).
Cusp normalize_cusp(std::int64_t num, std::int64_t den, unsigned long N);

/// Ligozat's order of the quotient at the cusp class of r, exact rational.
mpq_class ligozat_order(const EtaQuotient& e, const Cusp& r);

/// Gordon-Hughes lower bound for Ord(f|U_ell, r, Gamma_0(N)), where f lives on
/// Gamma_0(ell*N) and r is a cusp of Gamma_0(N).  Requires ell | N.
mpq_class gordon_hughes_bound(const EtaQuotient& f, unsigned long ell, unsigned long N,
                              const Cusp& r);

std::vector<unsigned long> divisors(unsigned long n);

} // namespace qlab

#endif
