#include "doctest.h"
#include "etaforge/refine.hpp"

using namespace etaforge;

namespace {

const CaseRecord& by_xiao(int x) {
  for (const auto& r : seed_cases())
    if (r.xiao == x) return r;
  FAIL("missing seed case");
  throw std::logic_error("unreachable");
}

}  // namespace

TEST_CASE("ypoly basics") {
  YPoly p{{-1, Int(1)}, {0, Int(-2)}, {1, Int(1)}};
  CHECK(p.eval_one() == 0);
  CHECK(p.is_palindromic());
  YPoly q = p * p;
  CHECK(q.coeff(-2) == 1);
  CHECK(q.coeff(0) == 6);
  CHECK(q.coeff(2) == 1);
  CHECK_FALSE((YPoly{{1, Int(2)}}.is_palindromic()));
}

TEST_CASE("weak jacobi form") {
  JacobiSeries phi = weak_jacobi_phi_m2_1(6);
  YPoly q0 = phi.coeff(Rat(0));
  CHECK((q0 == YPoly{{-1, Int(1)}, {0, Int(-2)}, {1, Int(1)}}));
  YPoly q1 = phi.coeff(Rat(1));
  CHECK((q1 == YPoly{{-2, Int(-2)}, {-1, Int(8)}, {0, Int(-12)}, {1, Int(8)}, {2, Int(-2)}}));
  for (const auto& [g, p] : phi.terms) {
    CHECK(p.eval_one() == 0);  // (1-y)^2 factor
    CHECK(p.is_palindromic());
  }
}

TEST_CASE("chi_y of the trivial case") {
  JacobiSeries chi = chi_y_series(by_xiao(0), 12);
  CHECK((chi.coeff(Rat(-1)) == YPoly{{0, Int(1)}}));
  CHECK((chi.coeff(Rat(0)) == YPoly{{-1, Int(2)}, {0, Int(20)}, {1, Int(2)}}));
  for (const auto& [g, p] : chi.terms) CHECK(p.is_palindromic());

  // re-multiplied relation: chi * phi_{-2,1}(q,y) = y^{-1}(1-y)^2 / Delta(t)
  JacobiSeries lhs = chi * weak_jacobi_phi_m2_1(12);
  QSeries dinv = EtaQuotient::parse("1^-24").expansion(Rat(11)).reduced();
  JacobiSeries rhs = JacobiSeries::from_qseries(dinv);
  JacobiSeries pre(1, Rat(12));
  pre.add_term(0, YPoly{{-1, Int(1)}, {0, Int(-2)}, {1, Int(1)}});
  rhs = rhs * pre;
  JacobiSeries diff = (lhs - rhs).truncated(Rat(10));
  CHECK(diff.is_zero());
}

TEST_CASE("chi_y at y=1 equals the Euler series") {
  for (const auto& rec : seed_cases()) {
    JacobiSeries chi = chi_y_series(rec, 12);
    QSeries z = assemble_global(rec).expansion(Rat(12)).reduced();
    CHECK(agree_below(chi.at_y_one().reduced(), z, Rat(12)));
    for (const auto& [g, p] : chi.terms) CHECK(p.is_palindromic());
  }
}

TEST_CASE("hodge series") {
  HodgeSeries h = hodge_series_Y(4);
  BiPoly k3;
  k3.add(0, 0, 1);
  k3.add(2, 0, 1);
  k3.add(1, 1, 20);
  k3.add(0, 2, 1);
  k3.add(2, 2, 1);
  CHECK(h.coeffs[1] == k3);
  CHECK(h.coeffs[1].eval_one() == 24);
  CHECK(h.coeffs[2].eval_one() == 324);
  // u=v=1 specialization equals prod (1-t^m)^{-24}
  QSeries p24 = colored_partition_series(24, 5);
  for (long j = 0; j <= 4; ++j) CHECK(h.coeffs[j].eval_one() == p24.coeff_int(j));
}

TEST_CASE("birational Euler shadow") {
  for (const auto& rec : seed_cases()) CHECK(zbir_euler_consistency(rec, 50));
  CHECK(zbir_euler_consistency(by_xiao(1), 1));

  // negative control: exponent 23 instead of 24 leaves a nonzero residue
  long k = 2, order = 20;
  Rat prec = Rat(order) + k + 1;
  QSeries eulerk =
      colored_partition_series(1, (order + k) / k + 2).rescale(Rat(k)).truncated(prec);
  QSeries lhs = QSeries::monomial(1, Rat(-k), prec) * eulerk.pow(24) *
                QSeries::monomial(1, Rat(k), prec) * eulerk.inverse().pow(23);
  CHECK_FALSE(agree_below(lhs, QSeries::one(Rat(order) + 1), Rat(order)));
}
