#pragma once

#include <vector>

#include "etaforge/rootsys.hpp"

namespace etaforge {

/// Multivariate series with big-integer coefficients, truncated by total
/// degree.  Variables are q_0..q_n indexed by irreducible representations.
struct MultiSeries {
  int nvars = 0;
  long total_degree_bound = 0;
  std::map<std::vector<long>, Int> terms;

  Int coeff(const std::vector<long>& deg) const;
  bool operator==(const MultiSeries&) const = default;
};

/// Coefficient of q^j in prod_{m>=1} (1-q^m)^{-colors}.
Int colored_partition_count(int colors, long j);

/// prod_{m>=1} (1-q^m)^{-colors} below integer order.
QSeries colored_partition_series(int colors, long order);

/// Local partition function via the eta-product formula:
/// A_n -> 1/eta; D/E -> eta^2(2t) eta(4Et) / (eta(t) eta(2Et) eta(2Ft) eta(2Vt)).
QSeries local_Z_eta(const AdeType& type, const Rat& order);
EtaQuotient local_Z_eta_quotient(const AdeType& type);

/// Local partition function as theta_Delta / eta(k tau)^{n+1}.
QSeries local_Z_theta(const AdeType& type, const Rat& order,
                      std::size_t budget = kDefaultEnumBudget);

/// Local partition function from the Nakajima lattice sum specialized to
/// q_i = q^{d_i}.
QSeries nakajima_specialized(const AdeType& type, const Rat& order,
                             std::size_t budget = kDefaultEnumBudget);

/// Full multivariate orbifold series, rank <= 2 only.
MultiSeries nakajima_multivariate(const AdeType& type, long total_degree_bound);

/// Coefficient of q_1^{mu_1}...q_n^{mu_n} Q^e in the multivariate series:
/// the (n+1)-colored partition count of e - (1/2) mu^T C mu.
Int nakajima_coefficient(const AdeType& type, const std::vector<long>& mu,
                         long e);

/// Geometric oracle for A_{k-1}: counts monomial ideals in C[x,y] by the
/// Z/k representation type of O_Z, box (i,j) carrying weight (i-j) mod k.
MultiSeries cyclic_hilb_oracle(int k, int length_bound);

}  // namespace etaforge
