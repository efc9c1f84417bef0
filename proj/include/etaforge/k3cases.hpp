#pragma once

#include <vector>

#include "etaforge/orbifold.hpp"

namespace etaforge {

/// One symplectic K3-quotient case: group label, order, and the multiset
/// of ADE singularity types of X/G.
struct CaseRecord {
  int xiao = 0;
  std::string group_label;
  long k = 1;                                   // |G|
  std::vector<std::pair<AdeType, int>> singularities;  // (type, multiplicity)

  long r() const;          // number of singular points
  Rat a_rational() const;       // 24/k - sum 1/k_i
  long a() const;          // validated nonnegative integer
  long euler_quotient() const { return a() + r(); }
};

/// Local group order attached to a singularity type.
long local_group_order(const AdeType& type);

/// Parses the case-file format: one `xiao;group;k;sing` record per line,
/// sing a comma-separated list of `mult*Type` tokens; `#` comments.
/// Invalid records are rejected with the failing invariant named.
struct CaseParseResult {
  std::vector<CaseRecord> records;
  std::vector<std::string> errors;
};
CaseParseResult load_cases(const std::string& text);

/// Validates both Euler constraints; throws std::invalid_argument naming
/// the violated invariant.
void validate_case(const CaseRecord& rec);

/// The 13 records reconstructible from the classification constraints.
const std::vector<CaseRecord>& seed_cases();
std::string seed_case_text();

/// Eta quotient of Z_{X,G} = eta(k tau)^{-a} prod_i Z_{Delta_i}(k tau / k_i).
EtaQuotient assemble_global(const CaseRecord& rec);

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct ModularityReport {
  int xiao = 0;
  std::string eta_quotient;  // of Z^{-1}
  Rat weight;
  long level = 0;
  Rat valuation;
  std::vector<CuspOrder> cusps;
  std::vector<CheckResult> checks;
  QSeries expansion;  // of Z^{-1}
  bool all_pass() const;
  std::string json() const;
};

ModularityReport modularity_report(const CaseRecord& rec, const Rat& order);

/// Hecke operator on integer-exponent q-expansions:
/// (T_p f)(n) = a(pn) + chi_D(p) p^{w-1} a(n/p).
QSeries hecke_apply(const QSeries& f, long p, long weight,
                    long character_discriminant);

struct EigenReport {
  int xiao = 0;
  bool supported = true;
  std::vector<CheckResult> checks;
  bool all_pass() const;
};

EigenReport eigenform_check(const CaseRecord& rec,
                            const std::vector<long>& primes,
                            long order);

/// Direct stratification product for Z_{X,G}: Goettsche factor for the free
/// locus times rescaled local series (computed via the lattice route).
QSeries stratification_series(const CaseRecord& rec, const Rat& order,
                              std::size_t budget = kDefaultEnumBudget);

}  // namespace etaforge
