#include "etaforge/eta.hpp"

#include <sstream>

namespace etaforge {

QSeries eta_expansion(const Rat& order) {
  if (!(order > Rat(1, 24)))
    throw std::invalid_argument("eta expansion order must exceed 1/24");
  Rat int_order = order - Rat(1, 24);
  QSeries prod = QSeries::one(int_order);
  long nmax = rat_ceil(int_order).get_si() - 1;  // largest n with n < int_order
  for (long n = 1; n <= nmax; ++n) {
    QSeries f(1, int_order);
    f.add_term(0, 1);
    f.add_term(n, -1);
    prod = prod * f;
  }
  return prod * QSeries::monomial(1, Rat(1, 24), order);
}

EtaQuotient::EtaQuotient(std::map<long, long> f) : factors(std::move(f)) {
  for (auto it = factors.begin(); it != factors.end();) {
    if (it->first <= 0) throw std::invalid_argument("eta multiplier must be positive");
    it = it->second == 0 ? factors.erase(it) : std::next(it);
  }
}

Rat EtaQuotient::weight() const {
  long s = 0;
  for (const auto& [m, r] : factors) s += r;
  return Rat(s, 2);
}

Rat EtaQuotient::valuation() const { return Rat(sum_m_r(), 24); }

long EtaQuotient::sum_m_r() const {
  long s = 0;
  for (const auto& [m, r] : factors) s += m * r;
  return s;
}

Rat EtaQuotient::s_value() const {
  Rat s = 1;
  for (const auto& [m, r] : factors) {
    Int p;
    mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(m),
                  static_cast<unsigned long>(r < 0 ? -r : r));
    if (r >= 0)
      s *= Rat(p);
    else
      s /= Rat(p);
  }
  return s;
}

EtaQuotient EtaQuotient::inverse() const {
  EtaQuotient r;
  for (const auto& [m, e] : factors) r.factors[m] = -e;
  return r;
}

EtaQuotient EtaQuotient::pow(long e) const {
  EtaQuotient r;
  if (e == 0) return r;
  for (const auto& [m, re] : factors) r.factors[m] = re * e;
  return r;
}

EtaQuotient operator*(const EtaQuotient& a, const EtaQuotient& b) {
  EtaQuotient r = a;
  for (const auto& [m, e] : b.factors) {
    auto& slot = r.factors[m];
    slot += e;
    if (slot == 0) r.factors.erase(m);
  }
  return r;
}

EtaQuotient EtaQuotient::rescaled(long s) const {
  if (s <= 0) throw std::invalid_argument("rescale multiplier must be positive");
  EtaQuotient r;
  for (const auto& [m, e] : factors) r.factors[m * s] += e;
  for (auto it = r.factors.begin(); it != r.factors.end();)
    it = it->second == 0 ? r.factors.erase(it) : std::next(it);
  return r;
}

QSeries EtaQuotient::expansion(const Rat& order) const {
  Rat val = valuation();
  if (!(order > val))
    throw std::invalid_argument("expansion order must exceed the quotient valuation");
  Rat prec = order - val;  // relative precision carried through every factor
  QSeries acc = QSeries::one(order - val + 1);
  bool first = true;
  for (const auto& [m, r] : factors) {
    QSeries base = eta_expansion(Rat(1, 24) + prec).rescale(Rat(m));
    QSeries f = base.pow(r);
    acc = first ? f : acc * f;
    first = false;
  }
  if (first) return QSeries::one(order);
  return acc.truncated(order);
}

std::string EtaQuotient::str() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, r] : factors) {
    if (!first) os << " ";
    first = false;
    os << m << "^" << r;
  }
  return os.str();
}

EtaQuotient EtaQuotient::parse(const std::string& text) {
  EtaQuotient eq;
  std::istringstream is(text);
  std::string tok;
  while (is >> tok) {
    auto caret = tok.find('^');
    if (caret == std::string::npos)
      throw std::invalid_argument("bad eta-quotient token: " + tok);
    long m = std::stoll(tok.substr(0, caret));
    long r = std::stoll(tok.substr(caret + 1));
    if (m <= 0) throw std::invalid_argument("bad eta multiplier in: " + tok);
    eq.factors[m] += r;
  }
  for (auto it = eq.factors.begin(); it != eq.factors.end();)
    it = it->second == 0 ? eq.factors.erase(it) : std::next(it);
  return eq;
}

long kronecker_symbol(long d, long n) {
  Int a(static_cast<long>(d)), b(static_cast<long>(n));
  return mpz_kronecker(a.get_mpz_t(), b.get_mpz_t());
}

long fundamental_discriminant(const Rat& t) {
  if (t == 0) throw std::invalid_argument("discriminant of zero");
  Int m = t.get_num() * t.get_den();
  int sign = sgn(m);
  m = abs(m);
  // squarefree part by trial division (all inputs are 24-smooth here)
  long sf = 1;
  Int n = m;
  for (long p = 2; p * p <= n; ++p) {
    int e = 0;
    while (mpz_divisible_ui_p(n.get_mpz_t(), static_cast<unsigned long>(p))) {
      n /= static_cast<unsigned long>(p);
      ++e;
    }
    if (e % 2) sf *= p;
  }
  if (n > 1) sf *= n.get_si();
  long d = sign * sf;
  long mod4 = ((d % 4) + 4) % 4;
  return mod4 == 1 ? d : 4 * d;
}

ModularMeta eta_quotient_metadata(const EtaQuotient& eq, long level) {
  if (level < 1) throw std::invalid_argument("level must be positive");
  ModularMeta meta;
  meta.level = level;
  meta.weight = eq.weight();
  meta.integer_weight = (meta.weight.get_den() == 1);
  meta.multiplier_system_flag = !meta.integer_weight;
  meta.sum_m_r = eq.sum_m_r();
  meta.s_value = eq.s_value();
  meta.divisibility_ok = true;
  long sum_nm = 0;
  for (const auto& [m, r] : eq.factors) {
    if (level % m != 0) {
      meta.divisibility_ok = false;
      continue;
    }
    sum_nm += (level / m) * r;
  }
  meta.sum_Nover_m_r = sum_nm;
  if (meta.integer_weight) {
    long w = meta.weight.get_num().get_si();
    Rat t = meta.s_value;
    if (w % 2) t = -t;
    meta.character_discriminant = fundamental_discriminant(t);
  }
  return meta;
}

long gamma0_index(long n) {
  long idx = n;
  long m = n;
  for (long p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      idx = idx / p * (p + 1);
      while (m % p == 0) m /= p;
    }
  }
  if (m > 1) idx = idx / m * (m + 1);
  return idx;
}

namespace {

long euler_phi(long n) {
  long r = n, m = n;
  for (long p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      r = r / p * (p - 1);
      while (m % p == 0) m /= p;
    }
  }
  if (m > 1) r = r / m * (m - 1);
  return r;
}

}  // namespace

std::vector<CuspOrder> cusp_orders(const EtaQuotient& eq, long level) {
  for (const auto& [m, r] : eq.factors)
    if (level % m != 0)
      throw std::invalid_argument("level incompatible with quotient");
  std::vector<CuspOrder> out;
  for (long c = 1; c <= level; ++c) {
    if (level % c != 0) continue;
    long g = gcd_ll(c, level / c);
    // Ligozat: order of vanishing at a/c on X0(level)
    Rat ord = 0;
    for (const auto& [m, r] : eq.factors) {
      long gc = gcd_ll(c, m);
      ord += Rat(gc * gc * r, g * c * m);
    }
    ord *= Rat(level, 24);
    long nclasses = euler_phi(g);
    long found = 0;
    for (long a = (c == 1 ? 0 : 1); found < nclasses; ++a) {
      if (c != 1 && gcd_ll(a, c) != 1) continue;
      // distinct classes are distinguished by a mod gcd(c, level/c)
      bool fresh = true;
      for (const auto& prev : out)
        if (prev.denominator == c && ((prev.numerator - a) % g) == 0) fresh = false;
      if (!fresh) continue;
      out.push_back({a, c, ord});
      ++found;
    }
  }
  return out;
}

}  // namespace etaforge
