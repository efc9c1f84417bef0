#pragma once

#include <optional>
#include <vector>

#include "etaforge/eta.hpp"
#include "etaforge/qseries.hpp"

namespace etaforge {

constexpr std::size_t kDefaultEnumBudget = 10000000;

/// ADE type tag, serialized as "A5", "D7", "E8".
struct AdeType {
  char family = 'A';  // 'A', 'D' or 'E'
  int rank = 1;

  static AdeType parse(const std::string& tag);
  std::string str() const { return family + std::to_string(rank); }
  bool operator==(const AdeType&) const = default;
};

/// Edge/face/vertex data of the polyhedral decomposition attached to a
/// D/E type subgroup of SO(3).
struct Polyhedral {
  long M;        // order of the rotation group, M = 2E
  long p, q, r;  // rotation orders about edge/face/vertex centers
  long E, F, V;
};

struct RootSystemData {
  AdeType type;
  int rank;
  std::vector<std::vector<long>> cartan;
  std::vector<long> highest_root;  // d
  std::vector<Rat> zeta;                // C^{-1} d
  long k;                          // |G_Delta| = 1 + sum d_i^2
  std::optional<Polyhedral> polyhedral;

  /// (u|v) = u^T C v for rational vectors.
  Rat bilinear(const std::vector<Rat>& u, const std::vector<Rat>& v) const;
  Rat zeta_norm() const;  // (zeta|zeta)

  /// Local group order: A_n -> n+1, D_n -> 4(n-2), E6/E7/E8 -> 24/48/120.
  long group_order() const { return k; }
};

RootSystemData ade_data(const AdeType& type);

/// (k(n+1)-1)/24 - (zeta|zeta)/(2k); zero for every ADE type.
Rat strange_formula_residual(const AdeType& type);

/// Shifted root-lattice theta function
///   sum_{m in Z^n} q^{(k/2)(m + zeta/k | m + zeta/k)}
/// expanded below `order`.
QSeries theta_series(const AdeType& type, const Rat& order,
                     std::size_t budget = kDefaultEnumBudget);

/// Eta quotient equal to theta_Delta.
EtaQuotient theta_eta_quotient(const AdeType& type);

/// theta_series minus the expansion of theta_eta_quotient; must vanish.
QSeries theta_eta_identity_residual(const AdeType& type, const Rat& order,
                                    std::size_t budget = kDefaultEnumBudget);

/// Exact values Q(x + shift) < bound of the positive definite rational
/// quadratic form Q(y) = y^T A y, counted with multiplicity over x in Z^n.
/// Enumeration is Fincke-Pohst style from an exact rational LDL^T
/// decomposition.  Throws BudgetExceeded past `budget` vectors.
std::map<Rat, Int> enumerate_shifted_values(
    const std::vector<std::vector<Rat>>& form, const std::vector<Rat>& shift,
    const Rat& bound, std::size_t budget = kDefaultEnumBudget);

}  // namespace etaforge
