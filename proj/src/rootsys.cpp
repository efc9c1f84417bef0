#include "etaforge/rootsys.hpp"

#include <functional>

namespace etaforge {

AdeType AdeType::parse(const std::string& tag) {
  if (tag.size() < 2) throw std::invalid_argument("invalid ADE tag: " + tag);
  AdeType t;
  t.family = tag[0];
  t.rank = std::stoi(tag.substr(1));
  if (t.family == 'A' && t.rank >= 1) return t;
  if (t.family == 'D' && t.rank >= 4) return t;
  if (t.family == 'E' && t.rank >= 6 && t.rank <= 8) return t;
  throw std::invalid_argument("invalid ADE tag: " + tag);
}

Rat RootSystemData::bilinear(const std::vector<Rat>& u, const std::vector<Rat>& v) const {
  Rat s = 0;
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j)
      if (cartan[i][j] != 0) s += u[i] * v[j] * cartan[i][j];
  return s;
}

Rat RootSystemData::zeta_norm() const {
  // (zeta|zeta) = zeta^T C zeta = zeta . d
  Rat s = 0;
  for (int i = 0; i < rank; ++i) s += zeta[i] * highest_root[i];
  return s;
}

namespace {

std::vector<Rat> solve_linear(std::vector<std::vector<Rat>> a, std::vector<Rat> b) {
  int n = static_cast<int>(b.size());
  for (int col = 0; col < n; ++col) {
    int piv = col;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) throw std::runtime_error("singular matrix");
    std::swap(a[piv], a[col]);
    std::swap(b[piv], b[col]);
    for (int row = 0; row < n; ++row) {
      if (row == col || a[row][col] == 0) continue;
      Rat f = a[row][col] / a[col][col];
      for (int j = col; j < n; ++j) a[row][j] -= f * a[col][j];
      b[row] -= f * b[col];
    }
  }
  std::vector<Rat> x(n);
  for (int i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
  return x;
}

}  // namespace

RootSystemData ade_data(const AdeType& type) {
  RootSystemData d;
  d.type = type;
  int n = type.rank;
  d.rank = n;
  d.cartan.assign(n, std::vector<long>(n, 0));
  for (int i = 0; i < n; ++i) d.cartan[i][i] = 2;
  auto edge = [&](int i, int j) {  // 1-based node labels
    d.cartan[i - 1][j - 1] = -1;
    d.cartan[j - 1][i - 1] = -1;
  };
  d.highest_root.assign(n, 1);
  if (type.family == 'A') {
    for (int i = 1; i < n; ++i) edge(i, i + 1);
  } else if (type.family == 'D') {
    // chain 1..n-2, both leaves n-1 and n attached to node n-2
    for (int i = 1; i < n - 2; ++i) edge(i, i + 1);
    edge(n - 2, n - 1);
    edge(n - 2, n);
    for (int i = 2; i <= n - 2; ++i) d.highest_root[i - 1] = 2;
    d.polyhedral = Polyhedral{2 * (n - 2), 2, n - 2, 2, n - 2, 2, n - 2};
  } else {
    // Bourbaki numbering: chain 1-3-4-...-n, node 2 attached to node 4
    edge(1, 3);
    for (int i = 3; i < n; ++i) edge(i, i + 1);
    edge(2, 4);
    if (n == 6) {
      d.highest_root = {1, 2, 2, 3, 2, 1};
      d.polyhedral = Polyhedral{12, 2, 3, 3, 6, 4, 4};
    } else if (n == 7) {
      d.highest_root = {2, 2, 3, 4, 3, 2, 1};
      d.polyhedral = Polyhedral{24, 2, 3, 4, 12, 8, 6};
    } else {
      d.highest_root = {2, 3, 4, 6, 5, 4, 3, 2};
      d.polyhedral = Polyhedral{60, 2, 3, 5, 30, 20, 12};
    }
  }
  std::vector<std::vector<Rat>> cr(n, std::vector<Rat>(n));
  std::vector<Rat> dr(n);
  for (int i = 0; i < n; ++i) {
    dr[i] = d.highest_root[i];
    for (int j = 0; j < n; ++j) cr[i][j] = d.cartan[i][j];
  }
  d.zeta = solve_linear(cr, dr);
  d.k = 1;
  for (int i = 0; i < n; ++i) d.k += d.highest_root[i] * d.highest_root[i];
  return d;
}

Rat strange_formula_residual(const AdeType& type) {
  RootSystemData d = ade_data(type);
  Rat lhs = Rat(d.k * (d.rank + 1) - 1, 24);
  Rat rhs = d.zeta_norm() / (2 * d.k);
  return lhs - rhs;
}

std::map<Rat, Int> enumerate_shifted_values(
    const std::vector<std::vector<Rat>>& form, const std::vector<Rat>& shift,
    const Rat& bound, std::size_t budget) {
  int n = static_cast<int>(shift.size());
  // exact LDL^T: Q(y) = sum_i diag[i] * (y_i + sum_{j>i} l[i][j] y_j)^2
  std::vector<std::vector<Rat>> a = form;
  std::vector<Rat> diag(n);
  std::vector<std::vector<Rat>> l(n, std::vector<Rat>(n, Rat(0)));
  for (int i = 0; i < n; ++i) {
    diag[i] = a[i][i];
    if (!(diag[i] > 0)) throw std::invalid_argument("form not positive definite");
    for (int j = i + 1; j < n; ++j) l[i][j] = a[i][j] / diag[i];
    for (int j = i + 1; j < n; ++j)
      for (int k2 = i + 1; k2 < n; ++k2) a[j][k2] -= a[i][j] * a[i][k2] / diag[i];
  }

  std::map<Rat, Int> values;
  std::vector<Rat> y(n);  // y_j = x_j + shift_j for chosen levels j > current
  std::size_t count = 0;

  std::function<void(int, const Rat&)> descend = [&](int i, const Rat& acc) {
    if (i < 0) {
      if (++count > budget) throw BudgetExceeded(budget, count);
      values[acc] += 1;
      return;
    }
    Rat center = shift[i];
    for (int j = i + 1; j < n; ++j)
      if (l[i][j] != 0) center += l[i][j] * y[j];
    Int x0 = rat_floor(-center);
    // valid x form a contiguous interval around -center
    for (Int x = x0;; --x) {
      Rat t = Rat(x) + center;
      Rat next = acc + diag[i] * t * t;
      if (!(next < bound)) break;
      y[i] = Rat(x) + shift[i];
      descend(i - 1, next);
    }
    for (Int x = x0 + 1;; ++x) {
      Rat t = Rat(x) + center;
      Rat next = acc + diag[i] * t * t;
      if (!(next < bound)) break;
      y[i] = Rat(x) + shift[i];
      descend(i - 1, next);
    }
  };
  if (bound > 0 && n > 0) descend(n - 1, Rat(0));
  if (n == 0 && bound > 0) values[Rat(0)] = 1;
  return values;
}

EtaQuotient theta_eta_quotient(const AdeType& type) {
  RootSystemData d = ade_data(type);
  std::map<long, long> f;
  if (type.family == 'A') {
    f[type.rank + 1] += type.rank + 1;
    f[1] -= 1;
  } else {
    const Polyhedral& p = *d.polyhedral;
    f[2] += 2;
    f[4 * p.E] += type.rank + 2;
    f[1] -= 1;
    f[2 * p.E] -= 1;
    f[2 * p.F] -= 1;
    f[2 * p.V] -= 1;
  }
  return EtaQuotient(std::move(f));
}

QSeries theta_series(const AdeType& type, const Rat& order, std::size_t budget) {
  RootSystemData d = ade_data(type);
  int n = d.rank;
  std::vector<std::vector<Rat>> form(n, std::vector<Rat>(n));
  std::vector<Rat> shift(n);
  for (int i = 0; i < n; ++i) {
    shift[i] = d.zeta[i] / d.k;
    for (int j = 0; j < n; ++j) form[i][j] = Rat(d.cartan[i][j] * d.k, 2);
  }
  auto values = enumerate_shifted_values(form, shift, order, budget);
  QSeries s(24, order);
  for (const auto& [e, c] : values) s.add_term_exp(e, c);
  return s;
}

QSeries theta_eta_identity_residual(const AdeType& type, const Rat& order,
                                    std::size_t budget) {
  return theta_series(type, order, budget) -
         theta_eta_quotient(type).expansion(order);
}

}  // namespace etaforge
