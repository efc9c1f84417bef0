#include "etaforge/qseries.hpp"

#include <numeric>
#include <sstream>

namespace etaforge {

long gcd_ll(long a, long b) { return std::gcd(a, b); }

long lcm_ll(long a, long b) {
  if (a == 0 || b == 0) return 0;
  return a / std::gcd(a, b) * b;
}

Int rat_floor(const Rat& r) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
  return q;
}

Int rat_ceil(const Rat& r) {
  Int q;
  mpz_cdiv_q(q.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
  return q;
}

std::string rat_str(const Rat& r) {
  std::ostringstream os;
  os << r;
  return os.str();
}

QSeries::QSeries(long denom, Rat order) : denom_(denom), order_(std::move(order)) {
  if (denom_ <= 0) throw std::invalid_argument("denom must be positive");
}

QSeries QSeries::one(Rat order) {
  QSeries s(1, std::move(order));
  if (s.order_ > 0) s.terms_[0] = 1;
  return s;
}

QSeries QSeries::monomial(const Int& coeff, const Rat& exponent, Rat order) {
  QSeries s(static_cast<long>(exponent.get_den().get_si()), std::move(order));
  if (coeff != 0 && exponent < s.order_)
    s.terms_[static_cast<long>(exponent.get_num().get_si())] = coeff;
  return s;
}

std::optional<Rat> QSeries::valuation() const {
  if (terms_.empty()) return std::nullopt;
  return Rat(terms_.begin()->first, denom_);
}

Int QSeries::coeff(const Rat& exponent) const {
  if (!(exponent < order_))
    throw std::out_of_range("coefficient requested at or above truncation order");
  Rat g = exponent * denom_;
  if (g.get_den() != 1) return 0;
  auto it = terms_.find(static_cast<long>(g.get_num().get_si()));
  return it == terms_.end() ? Int(0) : it->second;
}

void QSeries::add_term(long g, const Int& c) {
  if (c == 0) return;
  if (!(Rat(g, denom_) < order_))
    throw std::out_of_range("term exponent not below truncation order");
  Int& slot = terms_[g];
  slot += c;
  if (slot == 0) terms_.erase(g);
}

void QSeries::add_term_exp(const Rat& exponent, const Int& c) {
  Rat g = exponent * denom_;
  if (g.get_den() != 1)
    throw std::invalid_argument("exponent not on the series grid");
  add_term(static_cast<long>(g.get_num().get_si()), c);
}

QSeries QSeries::truncated(const Rat& new_order) const {
  QSeries r(denom_, new_order < order_ ? new_order : order_);
  for (const auto& [g, c] : terms_)
    if (Rat(g, denom_) < r.order_) r.terms_[g] = c;
  return r;
}

QSeries QSeries::refined(long new_denom) const {
  if (new_denom % denom_ != 0)
    throw std::invalid_argument("new denom must be a multiple of the old one");
  long f = new_denom / denom_;
  QSeries r(new_denom, order_);
  for (const auto& [g, c] : terms_) r.terms_[g * f] = c;
  return r;
}

QSeries QSeries::reduced() const {
  long g0 = denom_;
  for (const auto& [g, c] : terms_) g0 = gcd_ll(g0, g < 0 ? -g : g);
  if (g0 <= 1) return *this;
  QSeries r(denom_ / g0, order_);
  for (const auto& [g, c] : terms_) r.terms_[g / g0] = c;
  return r;
}

QSeries QSeries::operator-() const {
  QSeries r(denom_, order_);
  for (const auto& [g, c] : terms_) r.terms_[g] = -c;
  return r;
}

QSeries operator+(const QSeries& a, const QSeries& b) {
  long d = lcm_ll(a.denom_, b.denom_);
  QSeries r(d, a.order_ < b.order_ ? a.order_ : b.order_);
  long fa = d / a.denom_, fb = d / b.denom_;
  for (const auto& [g, c] : a.terms_)
    if (Rat(g * fa, d) < r.order_) r.add_term(g * fa, c);
  for (const auto& [g, c] : b.terms_)
    if (Rat(g * fb, d) < r.order_) r.add_term(g * fb, c);
  return r;
}

QSeries operator-(const QSeries& a, const QSeries& b) { return a + (-b); }

QSeries operator*(const QSeries& a, const QSeries& b) {
  long d = lcm_ll(a.denom_, b.denom_);
  // Sharp propagation: each reported coefficient must be a complete
  // convolution given both operands' windows.
  Rat va = a.terms_.empty() ? a.order_ : Rat(a.terms_.begin()->first, a.denom_);
  Rat vb = b.terms_.empty() ? b.order_ : Rat(b.terms_.begin()->first, b.denom_);
  Rat order = a.order_ + vb;
  Rat alt = b.order_ + va;
  if (alt < order) order = alt;
  QSeries r(d, order);
  long fa = d / a.denom_, fb = d / b.denom_;
  // order*d is an upper bound for admissible grid indices
  for (const auto& [ga, ca] : a.terms_) {
    long gad = ga * fa;
    for (const auto& [gb, cb] : b.terms_) {
      long g = gad + gb * fb;
      if (!(Rat(g, d) < order)) break;  // b terms are sorted ascending
      Int& slot = r.terms_[g];
      slot += ca * cb;
    }
  }
  for (auto it = r.terms_.begin(); it != r.terms_.end();)
    it = it->second == 0 ? r.terms_.erase(it) : std::next(it);
  return r;
}

QSeries QSeries::inverse() const {
  if (terms_.empty()) throw std::domain_error("not invertible over integers: zero series");
  auto lead = *terms_.begin();
  if (lead.second != 1 && lead.second != -1)
    throw std::domain_error("not invertible over integers: leading coefficient not a unit");
  long v = lead.first;
  // Relative precision of the input, in grid units.
  Rat prec = order_ * denom_ - v;  // number of valid grid slots above valuation
  long nslots = static_cast<long>(rat_ceil(prec).get_si());
  // b has valuation -v and the same relative precision.
  QSeries b(denom_, order_ - Rat(2 * v, denom_));
  // Solve sum_{i>=0} a_{v+i} * b_{-v+t-i} = delta_{t,0} for t = 0..nslots-1.
  std::map<long, Int> bi;  // offset t -> coefficient of q^{(-v+t)/denom}
  for (long t = 0; t < nslots; ++t) {
    Int acc = (t == 0) ? Int(1) : Int(0);
    for (const auto& [g, c] : terms_) {
      long i = g - v;
      if (i <= 0) continue;
      if (i > t) break;
      auto it = bi.find(t - i);
      if (it != bi.end()) acc -= c * it->second;
    }
    // divide by the unit leading coefficient
    if (lead.second == -1) acc = -acc;
    if (acc != 0) bi[t] = acc;
  }
  for (const auto& [t, c] : bi) b.terms_[-v + t] = c;
  return b;
}

QSeries QSeries::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  bool first = true;
  QSeries result = QSeries::one(Rat(1));
  QSeries cur = *this;
  long n = e;
  while (n > 0) {
    if (n & 1) {
      if (first) {
        result = cur;
        first = false;
      } else {
        result = result * cur;
      }
    }
    n >>= 1;
    if (n > 0) cur = cur * cur;
  }
  if (first) return QSeries::one(order_);  // e == 0
  return result;
}

QSeries QSeries::rescale(const Rat& s) const {
  if (!(s > 0)) throw std::invalid_argument("rescale factor must be positive");
  long p = static_cast<long>(s.get_num().get_si());
  long q = static_cast<long>(s.get_den().get_si());
  QSeries r(denom_ * q, order_ * s);
  for (const auto& [g, c] : terms_) r.terms_[g * p] = c;
  return r.reduced();
}

bool agree_below(const QSeries& a, const QSeries& b, const Rat& bound) {
  if (bound > a.order_ || bound > b.order_)
    throw std::invalid_argument("comparison bound exceeds a truncation order");
  QSeries d = (a - b).truncated(bound);
  return d.is_zero();
}

bool agree_on_common_range(const QSeries& a, const QSeries& b) {
  return agree_below(a, b, a.order_ < b.order_ ? a.order_ : b.order_);
}

std::string QSeries::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [g, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << c << "*q^(" << g << "/" << denom_ << ")";
  }
  return os.str();
}

std::string QSeries::json() const {
  std::ostringstream os;
  os << "{\"denom\": " << denom_ << ", \"order\": \"" << order_ << "\", \"terms\": [";
  bool first = true;
  for (const auto& [g, c] : terms_) {
    if (!first) os << ", ";
    first = false;
    os << "[" << g << ", \"" << c << "\"]";
  }
  os << "]}";
  return os.str();
}

}  // namespace etaforge
