#include "doctest.h"
#include "etaforge/qseries.hpp"

#include <random>

using namespace etaforge;

namespace {

QSeries binomial(long c1, const Rat& order) {  // 1 + c1*q
  QSeries s(1, order);
  s.add_term(0, 1);
  s.add_term(1, c1);
  return s;
}

QSeries random_series(std::mt19937& rng, const Rat& order) {
  std::uniform_int_distribution<long> coeff(-9, 9);
  std::uniform_int_distribution<long> expo(-3, 8);
  QSeries s(1, order);
  for (int t = 0; t < 6; ++t) {
    long e = expo(rng);
    if (Rat(e) < order) s.add_term(e, coeff(rng));
  }
  return s;
}

}  // namespace

TEST_CASE("addition") {
  CHECK(agree_below(binomial(1, Rat(3)) + binomial(-1, Rat(3)),
                    QSeries::monomial(2, Rat(0), Rat(3)), Rat(3)));
  QSeries a = binomial(5, Rat(4));
  CHECK(agree_below(a + QSeries::zero(1, Rat(4)), a, Rat(4)));

  // grid reconciliation: q^{1/24} + q^{1/8} lands on the 1/24 grid
  QSeries u = QSeries::monomial(1, Rat(1, 24), Rat(1));
  QSeries v = QSeries::monomial(1, Rat(1, 8), Rat(1));
  QSeries w = u + v;
  CHECK(w.denom() == 24);
  CHECK(w.coeff(Rat(1, 24)) == 1);
  CHECK(w.coeff(Rat(3, 24)) == 1);
  CHECK(w.coeff(Rat(2, 24)) == 0);
}

TEST_CASE("multiplication") {
  QSeries p = binomial(1, Rat(3)) * binomial(-1, Rat(3));
  CHECK(p.coeff_int(0) == 1);
  CHECK(p.coeff_int(1) == 0);
  CHECK(p.coeff_int(2) == -1);

  // Laurent exponents cancel
  QSeries qinv = QSeries::monomial(1, Rat(-1), Rat(5));
  QSeries q = QSeries::monomial(1, Rat(1), Rat(5));
  QSeries one = qinv * q;
  CHECK(one.coeff_int(0) == 1);
  CHECK(*one.valuation() == 0);

  // prod_{n=1}^{3} (1-q^n) = 1 - q - q^2 + q^4 + ... below order 4
  QSeries f = QSeries::one(Rat(5));
  for (long n = 1; n <= 3; ++n) {
    QSeries g(1, Rat(5));
    g.add_term(0, 1);
    g.add_term(n, -1);
    f = f * g;
  }
  CHECK(f.coeff_int(0) == 1);
  CHECK(f.coeff_int(1) == -1);
  CHECK(f.coeff_int(2) == -1);
  CHECK(f.coeff_int(3) == 0);
  CHECK(f.coeff_int(4) == 1);
}

TEST_CASE("sharp order propagation") {
  // order = min(a.order + val(b), b.order + val(a))
  QSeries a(1, Rat(4));
  a.add_term(-1, 1);
  a.add_term(0, 3);
  QSeries b(1, Rat(6));
  b.add_term(2, 1);
  QSeries p = a * b;
  CHECK(p.order() == Rat(5));  // min(4+2, 6-1)
}

TEST_CASE("inverse") {
  QSeries f = binomial(-1, Rat(4));
  QSeries g = f.inverse();
  for (long n = 0; n < 4; ++n) CHECK(g.coeff_int(n) == 1);

  // valuation negation
  QSeries h(1, Rat(4));
  h.add_term(-1, 1);
  h.add_term(0, 2);
  CHECK(*h.inverse().valuation() == 1);

  // 1/Delta = q^{-1}(1 + 24q + 324q^2 + 3200q^3 + ...)
  long ord = 5;
  QSeries delta = QSeries::monomial(1, Rat(1), Rat(ord + 1));
  for (long n = 1; n <= ord; ++n) {
    QSeries e(1, Rat(ord + 1));
    e.add_term(0, 1);
    e.add_term(n, -1);
    delta = delta * e.pow(24);
  }
  QSeries dinv = delta.inverse();
  CHECK(dinv.coeff_int(-1) == 1);
  CHECK(dinv.coeff_int(0) == 24);
  CHECK(dinv.coeff_int(1) == 324);
  CHECK(dinv.coeff_int(2) == 3200);
  CHECK(agree_on_common_range(delta * dinv, QSeries::one(Rat(ord))));

  CHECK_THROWS_AS(binomial(0, Rat(2)).rescale(Rat(0)), std::invalid_argument);
  QSeries bad(1, Rat(3));
  bad.add_term(0, 2);
  CHECK_THROWS_AS(bad.inverse(), std::domain_error);
}

TEST_CASE("rescale") {
  QSeries r = binomial(1, Rat(3)).rescale(Rat(2));
  CHECK(r.coeff_int(0) == 1);
  CHECK(r.coeff_int(2) == 1);
  CHECK(r.coeff_int(1) == 0);
  CHECK(r.order() == Rat(6));

  QSeries s = QSeries::monomial(1, Rat(1, 24), Rat(1)).rescale(Rat(24));
  CHECK(s.coeff(Rat(1)) == 1);
  CHECK(s.denom() == 1);
}

TEST_CASE("ring axioms on random series") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 25; ++trial) {
    QSeries a = random_series(rng, Rat(10));
    QSeries b = random_series(rng, Rat(12));
    QSeries c = random_series(rng, Rat(11));
    CHECK(agree_on_common_range((a + b) + c, a + (b + c)));
    CHECK(agree_on_common_range(a * b, b * a));
    CHECK(agree_on_common_range(a * (b + c), a * b + a * c));
    CHECK(agree_on_common_range((a * b).rescale(Rat(3, 2)),
                                a.rescale(Rat(3, 2)) * b.rescale(Rat(3, 2))));
  }
}

TEST_CASE("truncation soundness") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 10; ++trial) {
    QSeries a = random_series(rng, Rat(8));
    QSeries b = random_series(rng, Rat(8));
    QSeries lo = a * b;
    QSeries hi = a.truncated(Rat(8)) * b;  // same inputs, recompute
    CHECK(agree_on_common_range(lo, hi));
  }
}

TEST_CASE("coefficient access guards") {
  QSeries a = binomial(1, Rat(2));
  CHECK_THROWS_AS(a.coeff_int(2), std::out_of_range);
  CHECK_THROWS_AS(a.coeff(Rat(2)), std::out_of_range);
  CHECK(a.coeff(Rat(1, 2)) == 0);  // off-grid exponent below order
}

TEST_CASE("text and json rendering") {
  QSeries a(2, Rat(3));
  a.add_term(1, 5);
  CHECK(a.str() == "5*q^(1/2)");
  CHECK(a.json() == "{\"denom\": 2, \"order\": \"3\", \"terms\": [[1, \"5\"]]}");
}
