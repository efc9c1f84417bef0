#include "etaforge/orbifold.hpp"

#include <functional>

namespace etaforge {

Int MultiSeries::coeff(const std::vector<long>& deg) const {
  auto it = terms.find(deg);
  return it == terms.end() ? Int(0) : it->second;
}

QSeries colored_partition_series(int colors, long order) {
  std::vector<Int> a(static_cast<std::size_t>(order > 0 ? order : 0), 0);
  if (order > 0) a[0] = 1;
  for (int c = 0; c < colors; ++c)
    for (long m = 1; m < order; ++m)
      for (long j = m; j < order; ++j) a[j] += a[j - m];
  QSeries s(1, Rat(order));
  for (long j = 0; j < order; ++j) s.add_term(j, a[j]);
  return s;
}

Int colored_partition_count(int colors, long j) {
  if (j < 0) return 0;
  return colored_partition_series(colors, j + 1).coeff_int(j);
}

EtaQuotient local_Z_eta_quotient(const AdeType& type) {
  std::map<long, long> f;
  if (type.family == 'A') {
    f[1] = -1;
  } else {
    const Polyhedral& p = *ade_data(type).polyhedral;
    f[2] += 2;
    f[4 * p.E] += 1;
    f[1] -= 1;
    f[2 * p.E] -= 1;
    f[2 * p.F] -= 1;
    f[2 * p.V] -= 1;
  }
  return EtaQuotient(std::move(f));
}

QSeries local_Z_eta(const AdeType& type, const Rat& order) {
  return local_Z_eta_quotient(type).expansion(order);
}

QSeries local_Z_theta(const AdeType& type, const Rat& order, std::size_t budget) {
  RootSystemData d = ade_data(type);
  Rat prec = order + Rat(1, 24);  // valuation of the result is -1/24
  Rat theta_val = Rat(d.k * (d.rank + 1) - 1, 24);
  QSeries theta = theta_series(type, theta_val + prec, budget);
  QSeries eta_k = eta_expansion(Rat(1, 24) + prec).rescale(Rat(d.k));
  return (theta * eta_k.pow(-(d.rank + 1))).truncated(order);
}

QSeries nakajima_specialized(const AdeType& type, const Rat& order, std::size_t budget) {
  RootSystemData d = ade_data(type);
  int n = d.rank;
  Rat prec = order + Rat(1, 24);
  // lattice sum: exponents (m|zeta) + (k/2)(m|m) = (k/2)|m+zeta/k|^2 - (zeta|zeta)/(2k)
  Rat c0 = d.zeta_norm() / (2 * d.k);
  std::vector<std::vector<Rat>> form(n, std::vector<Rat>(n));
  std::vector<Rat> shift(n);
  for (int i = 0; i < n; ++i) {
    shift[i] = d.zeta[i] / d.k;
    for (int j = 0; j < n; ++j) form[i][j] = Rat(d.cartan[i][j] * d.k, 2);
  }
  auto values = enumerate_shifted_values(form, shift, prec + c0, budget);
  QSeries lattice(1, prec);
  for (const auto& [e, c] : values) lattice.add_term_exp(e - c0, c);
  long pord = static_cast<long>(rat_ceil(prec / d.k).get_si());
  QSeries euler = colored_partition_series(n + 1, pord).rescale(Rat(d.k)).truncated(prec);
  QSeries res = lattice * euler;
  return (res * QSeries::monomial(1, Rat(-1, 24), order + 1)).truncated(order);
}

MultiSeries nakajima_multivariate(const AdeType& type, long bound) {
  RootSystemData d = ade_data(type);
  int n = d.rank;
  if (n > 2)
    throw std::invalid_argument("use nakajima_coefficient or the specialization");
  MultiSeries out;
  out.nvars = n + 1;
  out.total_degree_bound = bound;
  // dims d_i of the irreducibles of the cyclic/trinion groups of rank <= 2:
  // all 1 for A types (the only rank <= 2 cases).
  std::vector<long> dims(n + 1, 1);
  long dimsum = n + 1;
  QSeries parts = colored_partition_series(n + 1, bound / dimsum + 1);
  std::function<void(int, std::vector<long>&)> rec = [&](int i, std::vector<long>& m) {
    if (i == n) {
      Rat half = 0;
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) half += Rat(m[a] * d.cartan[a][b] * m[b], 2);
      if (half > bound) return;
      long e0 = static_cast<long>(half.get_num().get_si());
      for (long j = 0;; ++j) {
        long e = e0 + j;
        std::vector<long> deg(n + 1);
        long total = 0;
        bool ok = true;
        deg[0] = e * dims[0];
        total += deg[0];
        for (int a = 1; a <= n; ++a) {
          deg[a] = e * dims[a] + m[a - 1];
          if (deg[a] < 0) ok = false;
          total += deg[a];
        }
        if (total > bound) break;
        if (!ok) continue;
        Int c = parts.coeff_int(j);
        if (c != 0) out.terms[deg] += c;
      }
      return;
    }
    for (long v = -bound; v <= bound; ++v) {
      m[i] = v;
      rec(i + 1, m);
    }
  };
  std::vector<long> m(n);
  rec(0, m);
  for (auto it = out.terms.begin(); it != out.terms.end();)
    it = it->second == 0 ? out.terms.erase(it) : std::next(it);
  return out;
}

Int nakajima_coefficient(const AdeType& type, const std::vector<long>& mu,
                         long e) {
  if (e < 0) throw std::invalid_argument("K-theory point count needs e >= 0");
  RootSystemData d = ade_data(type);
  if (mu.size() != static_cast<std::size_t>(d.rank))
    throw std::invalid_argument("mu has wrong rank");
  Rat half = 0;
  for (int a = 0; a < d.rank; ++a)
    for (int b = 0; b < d.rank; ++b) half += Rat(mu[a] * d.cartan[a][b] * mu[b], 2);
  Rat j = Rat(e) - half;
  if (j < 0 || j.get_den() != 1) return 0;
  return colored_partition_count(d.rank + 1, j.get_num().get_si());
}

MultiSeries cyclic_hilb_oracle(int k, int length_bound) {
  if (k < 2) throw std::invalid_argument("cyclic order must be >= 2");
  if (length_bound > 30) throw BudgetExceeded(30, static_cast<std::size_t>(length_bound));
  MultiSeries out;
  out.nvars = k;
  out.total_degree_bound = length_bound;
  std::vector<long> parts;
  std::function<void(long, long)> gen = [&](long remaining, long maxpart) {
    // record the current partition (including the empty one)
    std::vector<long> deg(k, 0);
    for (std::size_t i = 0; i < parts.size(); ++i)
      for (long j = 0; j < parts[i]; ++j)
        deg[((static_cast<long>(i) - j) % k + k) % k] += 1;
    out.terms[deg] += 1;
    for (long p = std::min(remaining, maxpart); p >= 1; --p) {
      parts.push_back(p);
      gen(remaining - p, p);
      parts.pop_back();
    }
  };
  gen(length_bound, length_bound);
  return out;
}

}  // namespace etaforge
