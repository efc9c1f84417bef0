#include "etaforge/refine.hpp"

#include <sstream>

namespace etaforge {

YPoly::YPoly(std::initializer_list<std::pair<long, Int>> init) {
  for (const auto& [e, c] : init) add(e, c);
}

YPoly YPoly::term(const Int& c, long e) {
  YPoly p;
  p.add(e, c);
  return p;
}

Int YPoly::coeff(long e) const {
  auto it = coeffs.find(e);
  return it == coeffs.end() ? Int(0) : it->second;
}

void YPoly::add(long e, const Int& c) {
  if (c == 0) return;
  Int& slot = coeffs[e];
  slot += c;
  if (slot == 0) coeffs.erase(e);
}

YPoly YPoly::operator-() const {
  YPoly r;
  for (const auto& [e, c] : coeffs) r.coeffs[e] = -c;
  return r;
}

YPoly operator+(const YPoly& a, const YPoly& b) {
  YPoly r = a;
  for (const auto& [e, c] : b.coeffs) r.add(e, c);
  return r;
}

YPoly operator-(const YPoly& a, const YPoly& b) { return a + (-b); }

YPoly operator*(const YPoly& a, const YPoly& b) {
  YPoly r;
  for (const auto& [ea, ca] : a.coeffs)
    for (const auto& [eb, cb] : b.coeffs) r.add(ea + eb, ca * cb);
  return r;
}

Int YPoly::eval_one() const {
  Int s = 0;
  for (const auto& [e, c] : coeffs) s += c;
  return s;
}

bool YPoly::is_palindromic() const {
  for (const auto& [e, c] : coeffs)
    if (coeff(-e) != c) return false;
  return true;
}

std::string YPoly::str() const {
  if (coeffs.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : coeffs) {
    if (!first) os << " + ";
    first = false;
    os << c << "*y^" << e;
  }
  return os.str();
}

JacobiSeries JacobiSeries::from_qseries(const QSeries& f) {
  JacobiSeries r(f.denom(), f.order());
  for (const auto& [g, c] : f.terms()) r.terms[g] = YPoly::term(c, 0);
  return r;
}

JacobiSeries JacobiSeries::unit(Rat order) {
  JacobiSeries r(1, std::move(order));
  if (r.order > 0) r.terms[0] = YPoly::term(1, 0);
  return r;
}

YPoly JacobiSeries::coeff(const Rat& exponent) const {
  if (!(exponent < order))
    throw std::out_of_range("coefficient requested at or above truncation order");
  Rat g = exponent * denom;
  if (g.get_den() != 1) return YPoly();
  auto it = terms.find(static_cast<long>(g.get_num().get_si()));
  return it == terms.end() ? YPoly() : it->second;
}

void JacobiSeries::add_term(long g, const YPoly& p) {
  if (p.is_zero()) return;
  auto [it, inserted] = terms.try_emplace(g, p);
  if (!inserted) {
    it->second = it->second + p;
    if (it->second.is_zero()) terms.erase(it);
  }
}

JacobiSeries JacobiSeries::truncated(const Rat& new_order) const {
  JacobiSeries r(denom, new_order < order ? new_order : order);
  for (const auto& [g, p] : terms)
    if (Rat(g, denom) < r.order) r.terms[g] = p;
  return r;
}

JacobiSeries operator+(const JacobiSeries& a, const JacobiSeries& b) {
  long d = lcm_ll(a.denom, b.denom);
  JacobiSeries r(d, a.order < b.order ? a.order : b.order);
  long fa = d / a.denom, fb = d / b.denom;
  for (const auto& [g, p] : a.terms)
    if (Rat(g * fa, d) < r.order) r.add_term(g * fa, p);
  for (const auto& [g, p] : b.terms)
    if (Rat(g * fb, d) < r.order) r.add_term(g * fb, p);
  return r;
}

JacobiSeries operator-(const JacobiSeries& a, const JacobiSeries& b) {
  JacobiSeries nb = b;
  for (auto& [g, p] : nb.terms) p = -p;
  return a + nb;
}

JacobiSeries operator*(const JacobiSeries& a, const JacobiSeries& b) {
  long d = lcm_ll(a.denom, b.denom);
  Rat va = a.terms.empty() ? a.order : Rat(a.terms.begin()->first, a.denom);
  Rat vb = b.terms.empty() ? b.order : Rat(b.terms.begin()->first, b.denom);
  Rat order = a.order + vb;
  Rat alt = b.order + va;
  if (alt < order) order = alt;
  JacobiSeries r(d, order);
  long fa = d / a.denom, fb = d / b.denom;
  for (const auto& [ga, pa] : a.terms) {
    long gad = ga * fa;
    for (const auto& [gb, pb] : b.terms) {
      long g = gad + gb * fb;
      if (!(Rat(g, d) < order)) break;
      r.add_term(g, pa * pb);
    }
  }
  return r;
}

JacobiSeries JacobiSeries::inverse() const {
  if (terms.empty()) throw std::domain_error("not invertible: zero series");
  auto lead = *terms.begin();
  if (!(lead.second == YPoly::term(1, 0)))
    throw std::domain_error("not invertible: leading q-coefficient must be 1");
  long v = lead.first;
  Rat prec = order * denom - v;
  long nslots = static_cast<long>(rat_ceil(prec).get_si());
  JacobiSeries b(denom, order - Rat(2 * v, denom));
  std::map<long, YPoly> bi;
  for (long t = 0; t < nslots; ++t) {
    YPoly acc = (t == 0) ? YPoly::term(1, 0) : YPoly();
    for (const auto& [g, p] : terms) {
      long i = g - v;
      if (i <= 0) continue;
      if (i > t) break;
      auto it = bi.find(t - i);
      if (it != bi.end()) acc = acc - p * it->second;
    }
    if (!acc.is_zero()) bi[t] = acc;
  }
  for (const auto& [t, p] : bi) b.terms[-v + t] = p;
  return b;
}

QSeries JacobiSeries::at_y_one() const {
  QSeries r(denom, order);
  for (const auto& [g, p] : terms) r.add_term(g, p.eval_one());
  return r;
}

std::string JacobiSeries::json() const {
  std::ostringstream os;
  os << "{\"denom\": " << denom << ", \"order\": \"" << order << "\", \"terms\": [";
  bool first = true;
  for (const auto& [g, p] : terms) {
    if (!first) os << ", ";
    first = false;
    os << "[" << g << ", [";
    bool f2 = true;
    for (const auto& [e, c] : p.coeffs) {
      if (!f2) os << ", ";
      f2 = false;
      os << "[" << e << ", \"" << c << "\"]";
    }
    os << "]]";
  }
  os << "]}";
  return os.str();
}

namespace {

/// prod_{n>=1} (1-y q^{sn})^2 (1-y^{-1} q^{sn})^2 (1-q^{sn})^{-4} below `order`;
/// the q^0 coefficient is 1, so this is the unit part of phi_{-2,1}(q^s, y).
JacobiSeries phi_unit(long s, const Rat& order) {
  JacobiSeries acc = JacobiSeries::unit(order);
  long nmax = static_cast<long>(rat_floor(order / s).get_si());
  for (long n = 1; n <= nmax; ++n) {
    for (long ye : {-1, 1}) {
      JacobiSeries g(1, order);
      g.terms[0] = YPoly::term(1, 0);
      if (Rat(n * s) < order) g.terms[n * s] = YPoly::term(-1, ye);
      acc = acc * (g * g);
    }
  }
  // (1-q^{sn})^{-4} factor via scalar series
  QSeries euler = colored_partition_series(4, rat_floor(order / s).get_si() + 1)
                      .rescale(Rat(s))
                      .truncated(order);
  return acc * JacobiSeries::from_qseries(euler);
}

YPoly y_prefactor() {  // y^{-1}(1-y)^2 = y - 2 + 1/y
  return YPoly{{-1, Int(1)}, {0, Int(-2)}, {1, Int(1)}};
}

}  // namespace

JacobiSeries weak_jacobi_phi_m2_1(long order) {
  if (order < 1) throw std::invalid_argument("order must be >= 1");
  JacobiSeries pre(1, Rat(order));
  pre.add_term(0, y_prefactor());
  return pre * phi_unit(1, Rat(order));
}

JacobiSeries chi_y_series(const CaseRecord& rec, long order) {
  Rat prec = Rat(order) + 1;
  QSeries z = assemble_global(rec).expansion(prec - 1).reduced();
  JacobiSeries unit_inv = phi_unit(rec.k, prec).inverse();
  return (JacobiSeries::from_qseries(z) * unit_inv).truncated(Rat(order));
}

Int BiPoly::coeff(long p, long q) const {
  auto it = coeffs.find({p, q});
  return it == coeffs.end() ? Int(0) : it->second;
}

void BiPoly::add(long p, long q, const Int& c) {
  if (c == 0) return;
  Int& slot = coeffs[{p, q}];
  slot += c;
  if (slot == 0) coeffs.erase({p, q});
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
  BiPoly r;
  for (const auto& [ea, ca] : a.coeffs)
    for (const auto& [eb, cb] : b.coeffs)
      r.add(ea.first + eb.first, ea.second + eb.second, ca * cb);
  return r;
}

Int BiPoly::eval_one() const {
  Int s = 0;
  for (const auto& [e, c] : coeffs) s += c;
  return s;
}

std::string BiPoly::str() const {
  if (coeffs.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : coeffs) {
    if (!first) os << " + ";
    first = false;
    os << c << "*u^" << e.first << "*v^" << e.second;
  }
  return os.str();
}

HodgeSeries hodge_series_Y(long order) {
  if (order < 1) throw std::invalid_argument("order must be >= 1");
  // K3 Hodge numbers
  const std::vector<std::tuple<long, long, long>> hodge = {
      {0, 0, 1}, {2, 0, 1}, {1, 1, 20}, {0, 2, 1}, {2, 2, 1}};
  long n = order + 1;  // t-degrees 0..order
  std::vector<BiPoly> acc(n);
  acc[0].add(0, 0, 1);
  // multiply by (1 - u^{p+m-1} v^{q+m-1} t^m)^{-h} one geometric factor at a
  // time: for exponent -h repeat the single-factor inverse h times.
  for (long m = 1; m < n; ++m) {
    for (const auto& [p, q, h] : hodge) {
      for (long rep = 0; rep < h; ++rep) {
        // acc *= 1/(1 - X t^m) with X = u^{p+m-1} v^{q+m-1}:
        // a'[j] = a[j] + X * a'[j-m]
        for (long j = m; j < n; ++j) {
          BiPoly shift;
          for (const auto& [e, c] : acc[j - m].coeffs)
            shift.add(e.first + p + m - 1, e.second + q + m - 1, c);
          for (const auto& [e, c] : shift.coeffs) acc[j].add(e.first, e.second, c);
        }
      }
    }
  }
  HodgeSeries out;
  out.order = order;
  out.coeffs.assign(acc.begin(), acc.begin() + n);
  return out;
}

bool zbir_euler_consistency(const CaseRecord& rec, long order) {
  long k = rec.k;
  Rat prec = Rat(order) + k + 1;
  long pord = static_cast<long>(rat_ceil(prec / k).get_si()) + 1;
  QSeries eulerk = colored_partition_series(1, pord).rescale(Rat(k)).truncated(prec);
  // (1-q^{km})^{24} and its inverse, via eta-free products
  QSeries delta_part = eulerk.inverse().pow(24);   // prod (1-q^{km})^{24}
  QSeries zy_part = eulerk.pow(24);                // prod (1-q^{km})^{-24}
  QSeries lhs = QSeries::monomial(1, Rat(-k), prec) * zy_part *
                QSeries::monomial(1, Rat(k), prec) * delta_part;
  QSeries one = QSeries::one(Rat(order) + 1);
  return agree_below(lhs, one, Rat(order));
}

}  // namespace etaforge
