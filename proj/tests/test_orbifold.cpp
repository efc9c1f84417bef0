#include "doctest.h"
#include "etaforge/orbifold.hpp"

using namespace etaforge;

TEST_CASE("colored partition series") {
  QSeries p1 = colored_partition_series(1, 6);
  CHECK(p1.coeff_int(0) == 1);
  CHECK(p1.coeff_int(4) == 5);
  CHECK(p1.coeff_int(5) == 7);
  CHECK(colored_partition_count(2, 0) == 1);
  CHECK(colored_partition_count(2, 1) == 2);
  CHECK(colored_partition_count(24, 1) == 24);
  CHECK(colored_partition_count(24, 2) == 324);
  CHECK(colored_partition_count(3, -1) == 0);
}

TEST_CASE("local eta route") {
  QSeries a = local_Z_eta(AdeType{'A', 3}, Rat(5) - Rat(1, 24));
  Rat v(-1, 24);
  CHECK(a.coeff(v) == 1);
  CHECK(a.coeff(v + 1) == 1);
  CHECK(a.coeff(v + 2) == 2);
  CHECK(a.coeff(v + 3) == 3);
  CHECK(a.coeff(v + 4) == 5);

  CHECK(local_Z_eta_quotient(AdeType{'D', 4}).str() == "1^-1 2^2 4^-3 8^1");
  CHECK(local_Z_eta_quotient(AdeType{'E', 6}).str() == "1^-1 2^2 8^-2 12^-1 24^1");
  CHECK(local_Z_eta_quotient(AdeType{'A', 7}).str() == "1^-1");
}

TEST_CASE("local valuation is -1/24") {
  for (const auto& t : {AdeType{'A', 2}, AdeType{'D', 5}, AdeType{'E', 6}}) {
    CHECK(local_Z_eta_quotient(t).valuation() == Rat(-1, 24));
    QSeries s = local_Z_theta(t, Rat(3));
    CHECK(*s.valuation() == Rat(-1, 24));
    CHECK(s.coeff(Rat(-1, 24)) == 1);
  }
}

TEST_CASE("three local routes agree") {
  // A1: theta_{A1}/eta(2t)^2 = 1/eta(t)
  CHECK(agree_below(local_Z_theta(AdeType{'A', 1}, Rat(30)),
                    local_Z_eta(AdeType{'A', 1}, Rat(30)), Rat(30)));
  CHECK(agree_below(local_Z_theta(AdeType{'D', 5}, Rat(10)),
                    local_Z_eta(AdeType{'D', 5}, Rat(10)), Rat(10)));
  for (const auto& t : {AdeType{'A', 2}, AdeType{'A', 3}, AdeType{'D', 4}}) {
    QSeries eta = local_Z_eta(t, Rat(15));
    CHECK(agree_below(local_Z_theta(t, Rat(15)), eta, Rat(15)));
    CHECK(agree_below(nakajima_specialized(t, Rat(15)), eta, Rat(15)));
  }
  // E7: first 20 coefficients
  Rat ord = Rat(20) - Rat(1, 24);
  CHECK(agree_below(nakajima_specialized(AdeType{'E', 7}, ord),
                    local_Z_eta(AdeType{'E', 7}, ord), ord));
}

TEST_CASE("recombination factorization for D/E") {
  // Z_Delta = (eta^2(2t)/eta(t)) * (eta(4Et)/(eta(2Et) eta(2Ft) eta(2Vt))),
  // the second factor carrying valuation -1/6
  for (const auto& t : {AdeType{'D', 4}, AdeType{'D', 7}, AdeType{'E', 6}, AdeType{'E', 7},
                        AdeType{'E', 8}}) {
    const Polyhedral& p = *ade_data(t).polyhedral;
    EtaQuotient jtp = EtaQuotient::parse("2^2 1^-1");
    std::map<long, long> f;
    f[4 * p.E] += 1;
    f[2 * p.E] -= 1;
    f[2 * p.F] -= 1;
    f[2 * p.V] -= 1;
    EtaQuotient rest(std::move(f));
    CHECK(rest.valuation() == Rat(-1, 6));
    CHECK((jtp * rest).factors == local_Z_eta_quotient(t).factors);
  }
}

TEST_CASE("multivariate series for A1") {
  MultiSeries m = nakajima_multivariate(AdeType{'A', 1}, 8);
  CHECK(m.coeff({0, 0}) == 1);
  CHECK(m.coeff({1, 1}) == 2);
  CHECK(m.coeff({1, 2}) == 1);
  CHECK_THROWS_AS(nakajima_multivariate(AdeType{'A', 3}, 4), std::invalid_argument);
}

TEST_CASE("targeted coefficients") {
  CHECK(nakajima_coefficient(AdeType{'A', 1}, {1}, 1) == 1);
  CHECK(nakajima_coefficient(AdeType{'A', 1}, {0}, 1) == 2);
  CHECK(nakajima_coefficient(AdeType{'A', 2}, {1, 0}, 1) == 1);
  CHECK(nakajima_coefficient(AdeType{'A', 1}, {2}, 1) == 0);  // e below the square
  CHECK_THROWS_AS(nakajima_coefficient(AdeType{'A', 1}, {0}, -1), std::invalid_argument);
}

TEST_CASE("cyclic oracle") {
  MultiSeries k2n2 = cyclic_hilb_oracle(2, 2);
  CHECK(k2n2.coeff({1, 1}) == 2);  // partitions [2] and [1,1]
  MultiSeries k2n1 = cyclic_hilb_oracle(2, 1);
  CHECK(k2n1.coeff({1, 0}) == 1);
  MultiSeries k3n3 = cyclic_hilb_oracle(3, 3);
  CHECK(k3n3.coeff({1, 1, 1}) == 3);
  CHECK_THROWS_AS(cyclic_hilb_oracle(3, 31), BudgetExceeded);
  CHECK_THROWS_AS(cyclic_hilb_oracle(1, 4), std::invalid_argument);
}

TEST_CASE("oracle equals the multivariate series") {
  for (int k = 2; k <= 3; ++k) {
    MultiSeries oracle = cyclic_hilb_oracle(k, 10);
    MultiSeries nak = nakajima_multivariate(AdeType{'A', k - 1}, 10);
    CHECK(oracle.terms == nak.terms);
  }
}

TEST_CASE("coloring convention invariance") {
  // coloring (j-i) mod k is the relabeling c -> -c mod k of (i-j) mod k
  int k = 3, N = 8;
  MultiSeries base = cyclic_hilb_oracle(k, N);
  std::map<std::vector<long>, Int> relabeled;
  for (const auto& [deg, c] : base.terms) {
    std::vector<long> alt(k);
    for (int i = 0; i < k; ++i) alt[(k - i) % k] = deg[i];
    relabeled[alt] += c;
  }
  // conjugate partitions give a bijection between the two conventions
  CHECK(relabeled == base.terms);
}
