#include "etaforge/acceptance.hpp"

#include <chrono>
#include <functional>
#include <random>
#include <sstream>

namespace etaforge {

namespace {

using Clock = std::chrono::steady_clock;

struct Runner {
  std::vector<CriterionResult> results;
  std::size_t budget;

  void run(int number, const std::string& name, const std::function<bool(std::string&)>& body) {
    CriterionResult r;
    r.number = number;
    r.name = name;
    auto t0 = Clock::now();
    try {
      r.pass = body(r.detail);
    } catch (const std::exception& e) {
      r.pass = false;
      r.detail = std::string("exception: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
    results.push_back(std::move(r));
  }

  void excluded(int number, const std::string& name, const std::string& why) {
    CriterionResult r;
    r.number = number;
    r.name = name;
    r.excluded = true;
    r.pass = true;
    r.detail = why;
    results.push_back(std::move(r));
  }
};

Rat theta_min_exponent(const AdeType& t) {
  RootSystemData d = ade_data(t);
  return Rat(d.k * (d.rank + 1) - 1, 24);
}

}  // namespace

std::vector<CriterionResult> run_acceptance_suite(std::size_t budget) {
  Runner R;
  R.budget = budget;

  R.run(1, "A-type local series: lattice specialization equals 1/eta, n=1..8, through q^100",
        [&](std::string& detail) {
          for (int n = 1; n <= 8; ++n) {
            AdeType t{'A', n};
            QSeries lat = nakajima_specialized(t, Rat(100), budget);
            QSeries eta = local_Z_eta(t, Rat(100));
            if (!agree_below(lat, eta, Rat(100))) {
              detail = "mismatch at " + t.str();
              return false;
            }
          }
          return true;
        });

  R.run(2, "shifted theta = eta product (A1-A5, D4-D8: 60 coeffs; E6/E7: 40; E8: 25)",
        [&](std::string& detail) {
          auto check = [&](const AdeType& t, long ncoeffs) {
            Rat order = theta_min_exponent(t) + ncoeffs;
            return theta_eta_identity_residual(t, order, budget).is_zero();
          };
          std::vector<std::pair<AdeType, long>> jobs;
          for (int n = 1; n <= 5; ++n) jobs.push_back({{'A', n}, 60});
          for (int n = 4; n <= 8; ++n) jobs.push_back({{'D', n}, 60});
          jobs.push_back({{'E', 6}, 40});
          jobs.push_back({{'E', 7}, 40});
          jobs.push_back({{'E', 8}, 25});
          for (const auto& [t, nc] : jobs)
            if (!check(t, nc)) {
              detail = "nonzero residual for " + t.str();
              return false;
            }
          return true;
        });

  R.run(3, "strange formula residual zero (A1-A12, D4-D12, E6, E7, E8)",
        [&](std::string& detail) {
          std::vector<AdeType> types;
          for (int n = 1; n <= 12; ++n) types.push_back({'A', n});
          for (int n = 4; n <= 12; ++n) types.push_back({'D', n});
          for (int n = 6; n <= 8; ++n) types.push_back({'E', n});
          for (const auto& t : types)
            if (strange_formula_residual(t) != 0) {
              detail = "nonzero residual for " + t.str();
              return false;
            }
          return true;
        });

  R.run(4, "Jacobi-triple-product identity: sum_j q^{2j^2+j+1/8} = eta(2t)^2/eta(t) through q^100",
        [&](std::string&) {
          Rat order = Rat(101);
          QSeries lhs(8, order);
          for (long j = -10; j <= 10; ++j) {
            Rat e = Rat(2 * j * j + j) + Rat(1, 8);
            if (e < order) lhs.add_term_exp(e, 1);
          }
          QSeries rhs = EtaQuotient::parse("2^2 1^-1").expansion(order);
          return agree_below(lhs, rhs, order);
        });

  R.run(5, "monomial-ideal oracle equals Nakajima multivariate series (k=2,3, degree <= 12)",
        [&](std::string& detail) {
          for (int k = 2; k <= 3; ++k) {
            MultiSeries oracle = cyclic_hilb_oracle(k, 12);
            MultiSeries nak = nakajima_multivariate(AdeType{'A', k - 1}, 12);
            if (!(oracle.terms == nak.terms)) {
              detail = "mismatch for k = " + std::to_string(k);
              return false;
            }
          }
          return true;
        });

  R.run(6, "global assembly: weight, cusp-form valuation, multiplier and congruence checks, "
           "stratification agreement through q^50 (13 seed cases)",
        [&](std::string& detail) {
          for (const CaseRecord& rec : seed_cases()) {
            ModularityReport rep = modularity_report(rec, Rat(10));
            if (!rep.all_pass()) {
              detail = "report check failed for Xiao " + std::to_string(rec.xiao);
              return false;
            }
            QSeries direct = stratification_series(rec, Rat(50), budget);
            QSeries viaeta = assemble_global(rec).expansion(Rat(50)).reduced();
            if (!agree_below(direct, viaeta, Rat(50))) {
              detail = "stratification mismatch for Xiao " + std::to_string(rec.xiao);
              return false;
            }
          }
          return true;
        });

  R.run(7, "order 1 at cusps i-infinity and 0; total cusp order = weight*index/12 (seed cases)",
        [&](std::string& detail) {
          for (const CaseRecord& rec : seed_cases()) {
            EtaQuotient zinv = assemble_global(rec).inverse();
            if (zinv.weight().get_den() != 1) continue;
            auto cusps = cusp_orders(zinv, rec.k);
            Rat total = 0;
            bool inf_ok = false, zero_ok = false;
            for (const auto& c : cusps) {
              total += c.order;
              if (c.denominator == rec.k && c.order == 1) inf_ok = true;
              if (c.denominator == 1 && c.order == 1) zero_ok = true;
            }
            Rat expect = zinv.weight() * gamma0_index(rec.k) / 12;
            if (!inf_ok || !zero_ok || total != expect) {
              detail = "cusp order failure for Xiao " + std::to_string(rec.xiao);
              return false;
            }
          }
          return true;
        });

  R.run(8, "Hecke eigenform checks (Xiao 1,2,4,7,8,15) through q^100, with negative control",
        [&](std::string& detail) {
          auto by_xiao = [&](int x) -> const CaseRecord& {
            for (const auto& r : seed_cases())
              if (r.xiao == x) return r;
            throw std::logic_error("missing seed case");
          };
          std::vector<long> small = {3, 5};
          std::vector<long> upto13 = {2, 3, 5, 7, 11, 13};
          std::vector<std::pair<int, std::vector<long>>> jobs = {
              {1, small}, {2, upto13}, {4, upto13}, {7, upto13}, {8, upto13}, {15, upto13}};
          for (const auto& [x, primes] : jobs) {
            EigenReport rep = eigenform_check(by_xiao(x), primes, 100);
            if (!rep.all_pass()) {
              detail = "eigenform check failed for Xiao " + std::to_string(x);
              return false;
            }
          }
          // negative control: increment a(2) of the Xiao 1 form
          EtaQuotient zinv = assemble_global(by_xiao(1)).inverse();
          QSeries f = zinv.expansion(Rat(101)).reduced();
          QSeries bump(1, f.order());
          bump.add_term(2, 1);
          QSeries g = f + bump;
          QSeries t2 = hecke_apply(g, 2, 8, 1);
          QSeries a2g = QSeries::monomial(g.coeff_int(2), Rat(0), t2.order()) * g;
          if (agree_on_common_range(t2, a2g)) {
            detail = "negative control unexpectedly passed";
            return false;
          }
          return true;
        });

  R.run(9, "rigid substack: unit coefficient at the lattice square, 100 random mu per type",
        [&](std::string& detail) {
          std::mt19937 rng(20240901);
          std::uniform_int_distribution<long> dist(-5, 5);
          std::vector<AdeType> types = {{'A', 1}, {'A', 2}, {'A', 3}, {'A', 4},
                                        {'D', 4}, {'D', 5}, {'E', 6}, {'E', 7}, {'E', 8}};
          for (const auto& t : types) {
            RootSystemData d = ade_data(t);
            for (int trial = 0; trial < 100; ++trial) {
              std::vector<long> mu(d.rank);
              for (auto& m : mu) m = dist(rng);
              Rat half = 0;
              for (int a = 0; a < d.rank; ++a)
                for (int b = 0; b < d.rank; ++b) half += Rat(mu[a] * d.cartan[a][b] * mu[b], 2);
              long e = half.get_num().get_si();  // always integral on root lattices
              if (nakajima_coefficient(t, mu, e) != 1) {
                detail = "non-unit coefficient for " + t.str();
                return false;
              }
            }
          }
          return true;
        });

  R.run(10, "refinements: chi_y specialization, K3 Hodge polynomial, birational Euler shadow",
        [&](std::string& detail) {
          const CaseRecord& trivial = seed_cases().front();
          JacobiSeries chi = chi_y_series(trivial, 20);
          QSeries at1 = chi.at_y_one().reduced();
          QSeries invdelta = EtaQuotient::parse("1^-24").expansion(Rat(20)).reduced();
          if (!agree_below(at1, invdelta, Rat(20))) {
            detail = "chi_y at y=1 does not match 1/Delta";
            return false;
          }
          YPoly q0 = chi.coeff(Rat(0));
          YPoly expect{{-1, Int(2)}, {0, Int(20)}, {1, Int(2)}};
          if (!(q0 == expect)) {
            detail = "chi_y q^0 coefficient is " + q0.str();
            return false;
          }
          HodgeSeries h = hodge_series_Y(2);
          BiPoly k3;
          k3.add(0, 0, 1);
          k3.add(2, 0, 1);
          k3.add(1, 1, 20);
          k3.add(0, 2, 1);
          k3.add(2, 2, 1);
          if (!(h.coeffs[1] == k3)) {
            detail = "Hodge t^1 coefficient is " + h.coeffs[1].str();
            return false;
          }
          for (const CaseRecord& rec : seed_cases())
            if (!zbir_euler_consistency(rec, 50)) {
              detail = "birational Euler shadow failed for Xiao " + std::to_string(rec.xiao);
              return false;
            }
          return true;
        });

  R.excluded(11, "full 82-row case table, Xiao 38/69 pole data, Hecke eigenspace dimension, "
                 "elliptic genus / Igusa form",
             "data or machinery intentionally out of scope; validators accept supplied tables");

  return R.results;
}

bool suite_passed(const std::vector<CriterionResult>& results) {
  for (const auto& r : results)
    if (!r.excluded && !r.pass) return false;
  return true;
}

std::string format_suite(const std::vector<CriterionResult>& results) {
  std::ostringstream os;
  for (const auto& r : results) {
    os << (r.excluded ? "EXCLUDED" : (r.pass ? "PASS" : "FAIL")) << "  criterion " << r.number
       << ": " << r.name;
    if (!r.detail.empty() && (!r.pass || r.excluded)) os << " -- " << r.detail;
    os << "\n";
  }
  return os.str();
}

}  // namespace etaforge
