#pragma once

#include "etaforge/k3cases.hpp"

namespace etaforge {

/// Laurent polynomial in y with big-integer coefficients.
struct YPoly {
  std::map<long, Int> coeffs;  // y-exponent -> coefficient

  YPoly() = default;
  YPoly(std::initializer_list<std::pair<long, Int>> init);
  static YPoly term(const Int& c, long e);

  bool is_zero() const { return coeffs.empty(); }
  Int coeff(long e) const;
  void add(long e, const Int& c);

  YPoly operator-() const;
  friend YPoly operator+(const YPoly& a, const YPoly& b);
  friend YPoly operator-(const YPoly& a, const YPoly& b);
  friend YPoly operator*(const YPoly& a, const YPoly& b);
  bool operator==(const YPoly&) const = default;

  Int eval_one() const;        // value at y = 1
  bool is_palindromic() const;  // invariant under y <-> 1/y
  std::string str() const;
};

/// q-graded series whose coefficients are Laurent polynomials in y.
/// Exponent grid and truncation semantics match QSeries.
struct JacobiSeries {
  long denom = 1;
  Rat order;
  std::map<long, YPoly> terms;

  JacobiSeries(long denom, Rat order) : denom(denom), order(std::move(order)) {}
  static JacobiSeries from_qseries(const QSeries& f);
  static JacobiSeries unit(Rat order);

  bool is_zero() const { return terms.empty(); }
  YPoly coeff(const Rat& exponent) const;
  void add_term(long grid_index, const YPoly& p);

  JacobiSeries truncated(const Rat& new_order) const;
  friend JacobiSeries operator+(const JacobiSeries& a, const JacobiSeries& b);
  friend JacobiSeries operator-(const JacobiSeries& a, const JacobiSeries& b);
  friend JacobiSeries operator*(const JacobiSeries& a, const JacobiSeries& b);

  /// Inverse; the lowest q-coefficient must be the constant 1 (as a y-poly).
  JacobiSeries inverse() const;

  /// Specialization y = 1 as a QSeries.
  QSeries at_y_one() const;

  std::string json() const;
};

/// Expansion of the weight -2 index 1 weak Jacobi form
/// phi_{-2,1} = (y - 2 + 1/y) prod_{n>=1} (1-yq^n)^2 (1-q^n/y)^2 (1-q^n)^{-4}.
JacobiSeries weak_jacobi_phi_m2_1(long order);

/// chi_y refinement: y^{-1}(1-y)^2 Z_{X,G}(q) / phi_{-2,1}(q^k, y).
JacobiSeries chi_y_series(const CaseRecord& rec, long order);

/// Polynomial in two variables u, v.
struct BiPoly {
  std::map<std::pair<long, long>, Int> coeffs;

  Int coeff(long p, long q) const;
  void add(long p, long q, const Int& c);
  friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
  bool operator==(const BiPoly&) const = default;
  Int eval_one() const;  // u = v = 1
  std::string str() const;
};

/// Hodge-graded Goettsche series of Hilb(K3):
/// prod_{m>=1} prod_{p,q} (1 - u^p v^q (uv)^{m-1} t^m)^{-(-1)^{p+q} h^{p,q}(K3)}.
struct HodgeSeries {
  long order = 0;                // t-order
  std::vector<BiPoly> coeffs;         // index = t-degree
};
HodgeSeries hodge_series_Y(long order);

/// Euler shadow of the birational-class formula: verifies
/// (q^{-k} prod (1-q^{km})^{-24}) * (q^k prod (1-q^{km})^{24}) = 1.
bool zbir_euler_consistency(const CaseRecord& rec, long order);

}  // namespace etaforge
