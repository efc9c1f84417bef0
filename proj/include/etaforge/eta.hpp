#pragma once

#include <optional>
#include <vector>

#include "etaforge/qseries.hpp"

namespace etaforge {

/// Expansion of eta(tau) = q^{1/24} prod_{n>=1} (1 - q^n) below `order`.
QSeries eta_expansion(const Rat& order);

/// Formal product prod_m eta(m*tau)^{r_m}.
struct EtaQuotient {
  // multiplier m -> exponent r_m; multipliers positive, exponents nonzero
  std::map<long, long> factors;

  EtaQuotient() = default;
  explicit EtaQuotient(std::map<long, long> f);

  Rat weight() const;             // (1/2) sum r_m
  Rat valuation() const;          // (1/24) sum m r_m
  long sum_m_r() const;      // sum m r_m
  Rat s_value() const;            // prod m^{r_m}

  EtaQuotient inverse() const;
  EtaQuotient pow(long e) const;
  friend EtaQuotient operator*(const EtaQuotient& a, const EtaQuotient& b);

  /// Substitution tau -> s*tau (every multiplier scaled by the positive
  /// integer s).
  EtaQuotient rescaled(long s) const;

  QSeries expansion(const Rat& order) const;

  /// Text format: whitespace-separated `m^r` tokens, sorted by m.
  std::string str() const;
  static EtaQuotient parse(const std::string& text);
};

/// Weight / level / character data per the standard eta-quotient criteria.
struct ModularMeta {
  Rat weight;
  bool integer_weight = false;
  bool multiplier_system_flag = false;  // set iff weight is half-integral
  long level = 1;
  bool divisibility_ok = false;   // every multiplier divides the level
  long sum_m_r = 0;          // must be 0 mod 24
  long sum_Nover_m_r = 0;    // must be 0 mod 24
  Rat s_value;
  // Kronecker-symbol discriminant of the character for integer weight;
  // empty for half-integral weight (multiplier system instead).
  std::optional<long> character_discriminant;
};

ModularMeta eta_quotient_metadata(const EtaQuotient& eq, long level);

struct CuspOrder {
  long numerator;    // a
  long denominator;  // c, with c | level
  Rat order;              // order of vanishing at the cusp a/c on X0(level)
};

/// One entry per Gamma_0(level) cusp class; entries for i-infinity
/// (c = level) and 0 (c = 1) always present.
std::vector<CuspOrder> cusp_orders(const EtaQuotient& eq, long level);

/// Fundamental discriminant of Q(sqrt(t)) for a nonzero rational t;
/// returns 1 for square t.
long fundamental_discriminant(const Rat& t);

/// Index [SL2(Z) : Gamma_0(N)].
long gamma0_index(long n);

long kronecker_symbol(long d, long n);

}  // namespace etaforge
