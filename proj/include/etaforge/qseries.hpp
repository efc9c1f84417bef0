#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <stdexcept>
#include <string>

namespace etaforge {

using Int = mpz_class;

/// mpq_class whose (num, den) constructor canonicalizes; raw mpq_class leaves
/// fractions like 48/2 unreduced, which breaks comparisons and grid checks.
struct Rat : mpq_class {
  Rat() = default;
  Rat(const mpq_class& v) : mpq_class(v) {}
  template <typename T, typename U>
  Rat(const __gmp_expr<T, U>& e) : mpq_class(e) {}
  Rat(int v) : mpq_class(v) {}
  Rat(long v) : mpq_class(v) {}
  Rat(const Int& v) : mpq_class(v) {}
  Rat(long num, long den)
      : mpq_class(den < 0 ? -num : num, static_cast<unsigned long>(den < 0 ? -den : den)) {
    canonicalize();
  }
  Rat(const Int& num, const Int& den) : mpq_class(num, den) { canonicalize(); }
};

/// Thrown when a lattice enumeration exceeds its vector-count budget.
struct BudgetExceeded : std::runtime_error {
  BudgetExceeded(std::size_t budget, std::size_t reached)
      : std::runtime_error("enumeration budget exceeded: budget " +
                           std::to_string(budget) + ", reached " +
                           std::to_string(reached)),
        budget(budget),
        reached(reached) {}
  std::size_t budget;
  std::size_t reached;
};

long lcm_ll(long a, long b);
long gcd_ll(long a, long b);

/// Floor / ceiling of an exact rational.
Int rat_floor(const Rat& r);
Int rat_ceil(const Rat& r);

/// Truncated Laurent series with exact integer coefficients.
///
/// Exponents lie on the grid (1/denom)*Z; a term with grid index g has
/// exponent g/denom.  Coefficients are valid strictly below `order`.
/// Values are immutable after construction; all operations return new
/// series.
class QSeries {
 public:
  QSeries(long denom, Rat order);

  static QSeries zero(long denom, Rat order) { return QSeries(denom, std::move(order)); }
  static QSeries one(Rat order);
  static QSeries monomial(const Int& coeff, const Rat& exponent, Rat order);

  long denom() const { return denom_; }
  const Rat& order() const { return order_; }
  const std::map<long, Int>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }

  /// Lowest exponent with a nonzero coefficient; empty for the zero series.
  std::optional<Rat> valuation() const;

  /// Coefficient at an exact exponent.  Throws if the exponent is not
  /// strictly below the truncation order (the coefficient is unknown there).
  Int coeff(const Rat& exponent) const;
  Int coeff_int(long n) const { return coeff(Rat(n)); }

  /// Adds c*q^(g/denom); exponent must be below order.  Used by builders.
  void add_term(long grid_index, const Int& c);
  void add_term_exp(const Rat& exponent, const Int& c);

  QSeries truncated(const Rat& new_order) const;

  /// Returns an equivalent series on a refined grid (new_denom must be a
  /// multiple of denom).
  QSeries refined(long new_denom) const;

  /// Divides out the common factor of denom and all grid indices.
  QSeries reduced() const;

  QSeries operator-() const;
  friend QSeries operator+(const QSeries& a, const QSeries& b);
  friend QSeries operator-(const QSeries& a, const QSeries& b);
  friend QSeries operator*(const QSeries& a, const QSeries& b);

  /// Multiplicative inverse; requires leading coefficient +-1.
  QSeries inverse() const;

  QSeries pow(long e) const;

  /// Exponent substitution e -> s*e for a positive rational s.
  QSeries rescale(const Rat& s) const;

  /// Exact equality of terms on the common valid range min(orders).
  friend bool agree_on_common_range(const QSeries& a, const QSeries& b);
  /// Exact equality of terms below an explicit bound (must not exceed
  /// either order).
  friend bool agree_below(const QSeries& a, const QSeries& b, const Rat& bound);

  std::string str() const;
  std::string json() const;

 private:
  long denom_;
  Rat order_;
  std::map<long, Int> terms_;
};

std::string rat_str(const Rat& r);

}  // namespace etaforge
