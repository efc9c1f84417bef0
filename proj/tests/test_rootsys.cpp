#include "doctest.h"
#include "etaforge/rootsys.hpp"

#include <functional>

using namespace etaforge;

namespace {

Rat min_exponent(const AdeType& t) {
  RootSystemData d = ade_data(t);
  return Rat(d.k * (d.rank + 1) - 1, 24);
}

// brute-force box oracle for enumerate_shifted_values, ranks <= 4
std::map<Rat, Int> box_enumerate(const RootSystemData& d, const Rat& bound, long R) {
  std::map<Rat, Int> values;
  std::vector<Rat> y(d.rank);
  std::function<void(int)> walk = [&](int i) {
    if (i == d.rank) {
      Rat q = d.bilinear(y, y) * Rat(d.k, 2);
      if (q < bound) values[q] += 1;
      return;
    }
    for (long x = -R; x <= R; ++x) {
      y[i] = Rat(x) + d.zeta[i] / d.k;
      walk(i + 1);
    }
  };
  walk(0);
  return values;
}

std::map<Rat, Int> lattice_values(const AdeType& t, const Rat& bound,
                                  const std::vector<Rat>& shift) {
  RootSystemData d = ade_data(t);
  std::vector<std::vector<Rat>> form(d.rank, std::vector<Rat>(d.rank));
  for (int i = 0; i < d.rank; ++i)
    for (int j = 0; j < d.rank; ++j) form[i][j] = Rat(d.cartan[i][j] * d.k, 2);
  return enumerate_shifted_values(form, shift, bound);
}

}  // namespace

TEST_CASE("ade data") {
  RootSystemData a2 = ade_data(AdeType{'A', 2});
  CHECK(a2.k == 3);
  CHECK((a2.zeta == std::vector<Rat>{1, 1}));

  RootSystemData d4 = ade_data(AdeType{'D', 4});
  CHECK(d4.k == 8);
  CHECK((d4.zeta == std::vector<Rat>{4, 7, 4, 4}));  // leaf, center, leaf, leaf
  CHECK(d4.zeta_norm() == 26);

  CHECK(ade_data(AdeType{'E', 8}).k == 120);
  CHECK(ade_data(AdeType{'E', 7}).k == 48);
  CHECK(ade_data(AdeType{'E', 6}).k == 24);

  CHECK_THROWS_AS(AdeType::parse("D3"), std::invalid_argument);
  CHECK_THROWS_AS(AdeType::parse("A0"), std::invalid_argument);
  CHECK_THROWS_AS(AdeType::parse("E9"), std::invalid_argument);
  CHECK(AdeType::parse("D12").rank == 12);
}

TEST_CASE("cartan invariants up to rank 12") {
  std::vector<AdeType> types;
  for (int n = 1; n <= 12; ++n) types.push_back({'A', n});
  for (int n = 4; n <= 12; ++n) types.push_back({'D', n});
  for (int n = 6; n <= 8; ++n) types.push_back({'E', n});
  for (const auto& t : types) {
    RootSystemData d = ade_data(t);
    long k = 1;
    for (int i = 0; i < d.rank; ++i) {
      k += d.highest_root[i] * d.highest_root[i];
      CHECK(d.cartan[i][i] == 2);
      // C * zeta = d exactly
      Rat row = 0;
      for (int j = 0; j < d.rank; ++j) {
        CHECK(d.cartan[i][j] == d.cartan[j][i]);
        if (i != j) CHECK((d.cartan[i][j] == 0 || d.cartan[i][j] == -1));
        row += d.cartan[i][j] * d.zeta[j];
      }
      CHECK(row == d.highest_root[i]);
    }
    CHECK(d.k == k);
  }
}

TEST_CASE("polyhedral data") {
  for (int n = 4; n <= 8; ++n) {
    const Polyhedral& p = *ade_data(AdeType{'D', n}).polyhedral;
    CHECK(p.E == n - 2);
    CHECK(p.F == 2);
    CHECK(p.V == n - 2);
    CHECK(p.M == 2 * p.E);
    CHECK(p.p * p.E == p.M);
    CHECK(p.q * p.F == p.M);
    CHECK(p.r * p.V == p.M);
    CHECK(p.E + p.F + p.V == 2 + p.M);
    CHECK(ade_data(AdeType{'D', n}).k == 2 * p.M);
  }
  for (int n = 6; n <= 8; ++n) {
    const Polyhedral& p = *ade_data(AdeType{'E', n}).polyhedral;
    CHECK(p.M == 2 * p.E);
    CHECK(p.p * p.E == p.M);
    CHECK(p.q * p.F == p.M);
    CHECK(p.r * p.V == p.M);
    CHECK(p.E + p.F + p.V == 2 + p.M);
    CHECK(ade_data(AdeType{'E', n}).k == 2 * p.M);
  }
  CHECK(ade_data(AdeType{'E', 8}).polyhedral->E == 30);
  CHECK(ade_data(AdeType{'E', 8}).polyhedral->F == 20);
  CHECK(ade_data(AdeType{'E', 8}).polyhedral->V == 12);
}

TEST_CASE("strange formula") {
  CHECK(strange_formula_residual(AdeType{'A', 2}) == 0);
  CHECK(Rat(3 * 3 - 1, 24) == Rat(1, 3));
  CHECK(strange_formula_residual(AdeType{'D', 4}) == 0);
  CHECK(ade_data(AdeType{'D', 4}).zeta_norm() / 16 == Rat(13, 8));
  CHECK(strange_formula_residual(AdeType{'A', 1}) == 0);
  CHECK(min_exponent(AdeType{'A', 1}) == Rat(1, 8));
}

TEST_CASE("theta series A1") {
  QSeries t = theta_series(AdeType{'A', 1}, Rat(7) + Rat(1, 8));
  Rat v(1, 8);
  CHECK(t.coeff(v) == 1);
  CHECK(t.coeff(v + 1) == 1);
  CHECK(t.coeff(v + 2) == 0);
  CHECK(t.coeff(v + 3) == 1);
  CHECK(t.coeff(v + 6) == 1);
}

TEST_CASE("theta minimal exponent coefficient is 1") {
  for (const auto& t : {AdeType{'A', 2}, AdeType{'A', 3}, AdeType{'D', 4}, AdeType{'E', 6}}) {
    Rat v = min_exponent(t);
    QSeries s = theta_series(t, v + 3);
    CHECK(*s.valuation() == v);
    CHECK(s.coeff(v) == 1);
    for (const auto& [g, c] : s.terms()) CHECK(c > 0);
  }
}

TEST_CASE("theta equals eta product") {
  CHECK(theta_eta_identity_residual(AdeType{'A', 1}, Rat(50)).is_zero());
  CHECK(theta_eta_identity_residual(AdeType{'D', 4}, Rat(20)).is_zero());
  CHECK(theta_eta_identity_residual(AdeType{'E', 8}, min_exponent(AdeType{'E', 8}) + 25)
            .is_zero());
}

TEST_CASE("enumeration matches the box oracle") {
  for (const auto& t : {AdeType{'A', 1}, AdeType{'A', 2}, AdeType{'A', 3}, AdeType{'D', 4}}) {
    RootSystemData d = ade_data(t);
    std::vector<Rat> shift(d.rank);
    for (int i = 0; i < d.rank; ++i) shift[i] = d.zeta[i] / d.k;
    Rat bound = min_exponent(t) + 10;
    auto fast = lattice_values(t, bound, shift);
    auto box = box_enumerate(d, bound, 12);
    CHECK(fast == box);
    // doubling the box radius changes nothing
    CHECK(box == box_enumerate(d, bound, 24));
  }
}

TEST_CASE("Weyl reflection leaves the value multiset unchanged") {
  for (int n = 1; n <= 3; ++n) {
    AdeType t{'A', n};
    RootSystemData d = ade_data(t);
    std::vector<Rat> shift(d.rank);
    for (int i = 0; i < d.rank; ++i) shift[i] = d.zeta[i] / d.k;
    Rat bound = min_exponent(t) + 8;
    auto base = lattice_values(t, bound, shift);
    for (int i = 0; i < d.rank; ++i) {
      // simple reflection in simple-root coordinates: x_i -> x_i - sum_j C_ij x_j
      std::vector<Rat> refl = shift;
      Rat s = 0;
      for (int j = 0; j < d.rank; ++j) s += d.cartan[i][j] * shift[j];
      refl[i] = shift[i] - s;
      CHECK(lattice_values(t, bound, refl) == base);
    }
  }
}

TEST_CASE("enumeration budget") {
  CHECK_THROWS_AS(theta_series(AdeType{'D', 4}, Rat(40), 10), BudgetExceeded);
  try {
    theta_series(AdeType{'D', 4}, Rat(40), 10);
  } catch (const BudgetExceeded& e) {
    CHECK(e.budget == 10);
    CHECK(e.reached == 11);
  }
}
