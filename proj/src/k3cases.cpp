#include "etaforge/k3cases.hpp"

#include "json.hpp"

#include <sstream>

namespace etaforge {

long local_group_order(const AdeType& type) {
  switch (type.family) {
    case 'A': return type.rank + 1;
    case 'D': return 4 * (type.rank - 2);
    default: return type.rank == 6 ? 24 : (type.rank == 7 ? 48 : 120);
  }
}

long CaseRecord::r() const {
  long s = 0;
  for (const auto& [t, mult] : singularities) s += mult;
  return s;
}

Rat CaseRecord::a_rational() const {
  Rat a(24, k);
  for (const auto& [t, mult] : singularities) a -= Rat(mult, local_group_order(t));
  return a;
}

long CaseRecord::a() const {
  Rat a = a_rational();
  if (a.get_den() != 1 || a < 0)
    throw std::invalid_argument("invariant violated: a = 24/k - sum 1/k_i is not a nonnegative integer");
  return a.get_num().get_si();
}

void validate_case(const CaseRecord& rec) {
  if (rec.k < 1) throw std::invalid_argument("invariant violated: k >= 1");
  (void)rec.a();
  Rat total(24, rec.k);
  for (const auto& [t, mult] : rec.singularities) {
    long ki = local_group_order(t);
    if (rec.k % ki != 0)
      throw std::invalid_argument("invariant violated: k_i divides k (type " + t.str() + ")");
    total += Rat(mult) * (Rat(t.rank + 1) - Rat(1, ki));
  }
  if (total != 24)
    throw std::invalid_argument(
        "invariant violated: 24 = 24/k + sum (n_i + 1 - 1/k_i), got " + rat_str(total));
}

CaseParseResult load_cases(const std::string& text) {
  CaseParseResult out;
  std::istringstream is(text);
  std::string line;
  int lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      CaseRecord rec;
      std::istringstream ls(line);
      std::string field;
      if (!std::getline(ls, field, ';')) throw std::invalid_argument("missing xiao field");
      rec.xiao = std::stoi(field);
      if (!std::getline(ls, rec.group_label, ';')) throw std::invalid_argument("missing group field");
      if (!std::getline(ls, field, ';')) throw std::invalid_argument("missing order field");
      rec.k = std::stoll(field);
      std::string sing;
      std::getline(ls, sing, ';');
      std::istringstream ss(sing);
      std::string tok;
      while (std::getline(ss, tok, ',')) {
        if (tok.find_first_not_of(" \t") == std::string::npos) continue;
        auto star = tok.find('*');
        if (star == std::string::npos)
          throw std::invalid_argument("bad singularity token: " + tok);
        int mult = std::stoi(tok.substr(0, star));
        AdeType t = AdeType::parse(tok.substr(star + 1));
        rec.singularities.emplace_back(t, mult);
      }
      validate_case(rec);
      out.records.push_back(std::move(rec));
    } catch (const std::exception& e) {
      out.errors.push_back("line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  return out;
}

std::string seed_case_text() {
  return "# K3 symplectic quotient cases reconstructible from the Euler constraints\n"
         "0;trivial;1;\n"
         "1;Z/2;2;8*A1\n"
         "2;Z/3;3;6*A2\n"
         "3;Z/4;4;4*A3,2*A1\n"
         "4;Z/5;5;4*A4\n"
         "5;Z/6;6;2*A5,2*A2,2*A1\n"
         "7;Z/2xZ/2;4;12*A1\n"
         "8;Z/7;7;3*A6\n"
         "11;Z/2xZ/4;8;4*A3,4*A1\n"
         "14;Z/8;8;2*A7,1*A3,1*A1\n"
         "15;Z/3xZ/3;9;8*A2\n"
         "19;Z/2xZ/6;12;3*A5,3*A1\n"
         "25;Z/4xZ/4;16;6*A3\n";
}

const std::vector<CaseRecord>& seed_cases() {
  static const std::vector<CaseRecord> cases = [] {
    CaseParseResult res = load_cases(seed_case_text());
    if (!res.errors.empty())
      throw std::logic_error("seed case table invalid: " + res.errors.front());
    return res.records;
  }();
  return cases;
}

EtaQuotient assemble_global(const CaseRecord& rec) {
  EtaQuotient z;
  long a = rec.a();
  if (a != 0) z.factors[rec.k] = -a;
  for (const auto& [t, mult] : rec.singularities) {
    long ki = local_group_order(t);
    EtaQuotient local = local_Z_eta_quotient(t).rescaled(rec.k / ki).pow(mult);
    z = z * local;
  }
  return z;
}

bool ModularityReport::all_pass() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

std::string ModularityReport::json() const {
  nlohmann::json j;
  j["xiao"] = xiao;
  j["eta_quotient"] = eta_quotient;
  j["weight"] = rat_str(weight);
  j["level"] = level;
  j["valuation"] = rat_str(valuation);
  auto& cj = j["cusp_orders"] = nlohmann::json::array();
  for (const auto& c : cusps)
    cj.push_back({{"cusp", std::to_string(c.numerator) + "/" + std::to_string(c.denominator)},
                  {"order", rat_str(c.order)}});
  auto& ck = j["checks"] = nlohmann::json::array();
  for (const auto& c : checks)
    ck.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
  j["q_expansion"] = nlohmann::json::parse(expansion.json());
  return j.dump(2);
}

ModularityReport modularity_report(const CaseRecord& rec, const Rat& order) {
  EtaQuotient z = assemble_global(rec);
  EtaQuotient zinv = z.inverse();
  ModularityReport rep{.xiao = rec.xiao,
                       .eta_quotient = zinv.str(),
                       .weight = zinv.weight(),
                       .level = rec.k,
                       .valuation = zinv.valuation(),
                       .cusps = {},
                       .checks = {},
                       .expansion = zinv.expansion(order)};
  auto check = [&](const std::string& name, bool pass, std::string detail) {
    rep.checks.push_back({name, pass, std::move(detail)});
  };
  Rat half_euler(rec.euler_quotient(), 2);
  check("weight = e(X/G)/2", rep.weight == half_euler,
        rat_str(rep.weight) + " vs " + rat_str(half_euler));
  check("cusp form: valuation 1 at i-infinity", rep.valuation == 1, rat_str(rep.valuation));
  bool div_ok = true;
  for (const auto& [m, r] : zinv.factors)
    if (rec.k % m != 0) div_ok = false;
  check("all eta multipliers divide |G|", div_ok, zinv.str());
  ModularMeta meta = eta_quotient_metadata(zinv, rec.k);
  if (meta.integer_weight) {
    check("sum m r_m = 0 mod 24", meta.sum_m_r % 24 == 0, std::to_string(meta.sum_m_r));
    check("sum (N/m) r_m = 0 mod 24", meta.sum_Nover_m_r % 24 == 0,
          std::to_string(meta.sum_Nover_m_r));
    check("character discriminant", true, std::to_string(*meta.character_discriminant));
  } else {
    check("half-integral weight: congruences informational", true,
          "multiplier system; sum m r_m = " + std::to_string(meta.sum_m_r) +
              ", sum (N/m) r_m = " + std::to_string(meta.sum_Nover_m_r));
  }
  rep.cusps = cusp_orders(zinv, rec.k);
  return rep;
}

QSeries hecke_apply(const QSeries& f, long p, long weight,
                    long character_discriminant) {
  QSeries g = f.reduced();
  if (g.denom() != 1)
    throw std::invalid_argument("Hecke operator needs an integer exponent grid");
  Int chi_pw = kronecker_symbol(character_discriminant, p);
  Int pw;
  mpz_ui_pow_ui(pw.get_mpz_t(), static_cast<unsigned long>(p),
                static_cast<unsigned long>(weight - 1));
  chi_pw *= pw;
  Rat order = g.order() / p;
  QSeries out(1, order);
  long nmax = rat_ceil(order).get_si();
  for (long n = 1; n <= nmax; ++n) {
    if (!(Rat(n) < order)) break;
    Int c = g.coeff_int(p * n);
    if (n % p == 0) c += chi_pw * g.coeff_int(n / p);
    if (c != 0) out.add_term(n, c);
  }
  return out;
}

bool EigenReport::all_pass() const {
  if (!supported) return false;
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

EigenReport eigenform_check(const CaseRecord& rec, const std::vector<long>& primes,
                            long order) {
  EigenReport rep;
  rep.xiao = rec.xiao;
  EtaQuotient zinv = assemble_global(rec).inverse();
  ModularMeta meta = eta_quotient_metadata(zinv, rec.k);
  if (!meta.integer_weight) {
    rep.supported = false;
    rep.checks.push_back({"integer weight", false, "half-integral weight unsupported"});
    return rep;
  }
  long w = meta.weight.get_num().get_si();
  long disc = *meta.character_discriminant;
  QSeries f = zinv.expansion(Rat(order + 1)).reduced();
  if (f.coeff_int(1) != 1) {
    rep.checks.push_back({"normalized a(1) = 1", false, f.coeff_int(1).get_str()});
    return rep;
  }
  for (long p : primes) {
    if (rec.k % p == 0) {
      rep.checks.push_back({"p = " + std::to_string(p), true, "skipped: p | |G|"});
      continue;
    }
    Int ap = f.coeff_int(p);
    QSeries tpf = hecke_apply(f, p, w, disc);
    QSeries apf = QSeries::monomial(ap, Rat(0), tpf.order()) * f;
    bool ok = agree_on_common_range(tpf, apf);
    rep.checks.push_back({"T_" + std::to_string(p) + " f = a_" + std::to_string(p) + " f",
                          ok, "a_p = " + ap.get_str()});
  }
  bool mult_ok = true;
  std::string mult_fail;
  for (long m = 2; m * 2 <= order && mult_ok; ++m)
    for (long n = m + 1; m * n <= order; ++n) {
      if (gcd_ll(m, n) != 1) continue;
      if (f.coeff_int(m * n) != f.coeff_int(m) * f.coeff_int(n)) {
        mult_ok = false;
        mult_fail = "fails at (" + std::to_string(m) + "," + std::to_string(n) + ")";
        break;
      }
    }
  rep.checks.push_back({"multiplicativity a(mn) = a(m)a(n)", mult_ok, mult_fail});
  return rep;
}

QSeries stratification_series(const CaseRecord& rec, const Rat& order, std::size_t budget) {
  Rat prec = order + 1;  // valuation of Z is -1
  long a = rec.a();
  QSeries acc = QSeries::one(prec);
  if (a > 0) {
    long pord = static_cast<long>(rat_ceil(prec / rec.k).get_si()) + 1;
    acc = colored_partition_series(static_cast<int>(a), pord).rescale(Rat(rec.k)).truncated(prec);
  }
  for (const auto& [t, mult] : rec.singularities) {
    long ki = local_group_order(t);
    Rat s(rec.k, ki);
    // integer-exponent local series q^{1/24} Z_Delta via the lattice route
    Rat local_prec = prec / s + 1;
    QSeries local = nakajima_specialized(t, local_prec - Rat(1, 24), budget) *
                    QSeries::monomial(1, Rat(1, 24), local_prec);
    QSeries scaled = local.rescale(s).truncated(prec);
    acc = acc * scaled.pow(mult);
  }
  return (acc * QSeries::monomial(1, Rat(-1), order + 1)).truncated(order);
}

}  // namespace etaforge
