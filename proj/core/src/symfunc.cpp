#include "cylindric/symfunc.hpp"

#include <algorithm>
#include <stdexcept>

namespace cylindric {

SymFunc SymFunc::one() { return power_sum(Partition{}); }

SymFunc SymFunc::power_sum(const Partition& rho) {
  SymFunc f;
  f.add(rho, 1);
  return f;
}

Rational SymFunc::coefficient(const Partition& rho) const {
  const auto it = terms_.find(rho);
  return it == terms_.end() ? Rational(0) : it->second;
}

void SymFunc::add(const Partition& rho, const Rational& c) {
  if (c == 0) return;
  auto [it, fresh] = terms_.try_emplace(rho, c);
  if (!fresh && (it->second += c) == 0) terms_.erase(it);
}

SymFunc SymFunc::component(int n) const {
  SymFunc out;
  for (const auto& [rho, c] : terms_)
    if (rho.weight() == n) out.terms_.emplace(rho, c);
  return out;
}

SymFunc& SymFunc::operator+=(const SymFunc& o) {
  for (const auto& [rho, c] : o.terms_) add(rho, c);
  return *this;
}

SymFunc& SymFunc::operator-=(const SymFunc& o) {
  for (const auto& [rho, c] : o.terms_) add(rho, -c);
  return *this;
}

SymFunc& SymFunc::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [rho, x] : terms_) x *= c;
  return *this;
}

namespace {

Partition merge(const Partition& a, const Partition& b) {
  std::vector<int> parts(a.parts().begin(), a.parts().end());
  parts.insert(parts.end(), b.parts().begin(), b.parts().end());
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return Partition(std::move(parts));
}

}  // namespace

SymFunc operator*(const SymFunc& a, const SymFunc& b) {
  SymFunc out;
  for (const auto& [x, cx] : a.terms_)
    for (const auto& [y, cy] : b.terms_) out.add(merge(x, y), cx * cy);
  return out;
}

Rational z_factor(const Partition& rho) {
  Rational z = 1;
  std::size_t i = 0;
  while (i < rho.length()) {
    std::size_t j = i;
    while (j < rho.length() && rho[j] == rho[i]) ++j;
    const auto mult = static_cast<int>(j - i);
    for (int k = 1; k <= mult; ++k) z *= rho[i] * k;
    i = j;
  }
  return z;
}

Rational power_sum_to_monomial(const Partition& rho, const Partition& mu) {
  if (rho.weight() != mu.weight()) return 0;
  std::vector<int> room(mu.parts().begin(), mu.parts().end());
  auto rec = [&](auto&& self, std::size_t i) -> long {
    if (i == rho.length()) return 1;
    long ways = 0;
    for (auto& r : room) {
      if (r < rho[i]) continue;
      r -= rho[i];
      ways += self(self, i + 1);
      r += rho[i];
    }
    return ways;
  };
  return rec(rec, 0);
}

namespace {

// Inverse of a square rational matrix by Gauss-Jordan elimination.
std::vector<std::vector<Rational>> invert(std::vector<std::vector<Rational>> a) {
  const std::size_t n = a.size();
  std::vector<std::vector<Rational>> inv(n, std::vector<Rational>(n, 0));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col] == 0) ++pivot;
    if (pivot == n) throw std::logic_error("power-sum to monomial matrix is singular");
    std::swap(a[pivot], a[col]);
    std::swap(inv[pivot], inv[col]);
    const Rational scale = 1 / a[col][col];
    for (std::size_t j = 0; j < n; ++j) {
      a[col][j] *= scale;
      inv[col][j] *= scale;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      const Rational f = a[r][col];
      for (std::size_t j = 0; j < n; ++j) {
        a[r][j] -= f * a[col][j];
        inv[r][j] -= f * inv[col][j];
      }
    }
  }
  return inv;
}

}  // namespace

MacdonaldOracle::MacdonaldOracle(int max_degree, QtPoint point) : max_degree_(max_degree), point_(std::move(point)) {
  if (max_degree < 0) throw std::invalid_argument("oracle degree must be nonnegative");
  for (int n = 0; n <= max_degree; ++n) {
    const auto parts = partitions_of(n);
    const std::size_t d = parts.size();
    // p_rho = sum_mu L[rho][mu] m_mu, so m = L^{-1} p.
    std::vector<std::vector<Rational>> L(d, std::vector<Rational>(d));
    for (std::size_t r = 0; r < d; ++r)
      for (std::size_t c = 0; c < d; ++c) L[r][c] = power_sum_to_monomial(parts[r], parts[c]);
    const auto inv = invert(L);
    for (std::size_t c = 0; c < d; ++c) {
      SymFunc m;
      for (std::size_t r = 0; r < d; ++r) m.add(parts[r], inv[c][r]);
      monomial_[parts[c]] = std::move(m);
    }
    // Lexicographic order is a linear extension of dominance.
    for (std::size_t i = 0; i < d; ++i) {
      SymFunc v = monomial_[parts[i]];
      for (std::size_t j = 0; j < i; ++j) {
        const SymFunc& pj = p_[parts[j]];
        v -= pj * (inner(monomial_[parts[i]], pj) / norm_[parts[j]]);
      }
      const Rational nv = inner(v, v);
      if (nv == 0)
        throw std::domain_error("Gram-Schmidt norm of P" + to_string(parts[i]) + " vanishes at q=" +
                                point_.q.get_str() + ", t=" + point_.t.get_str() + "; choose a generic point");
      norm_[parts[i]] = nv;
      p_[parts[i]] = std::move(v);
    }
  }
}

Rational MacdonaldOracle::inner(const SymFunc& f, const SymFunc& g) const {
  Rational acc = 0;
  for (const auto& [rho, c] : f.terms()) {
    const Rational d = g.coefficient(rho);
    if (d == 0) continue;
    Rational w = z_factor(rho);
    for (int part : rho.parts()) {
      const Rational den = 1 - power(point_.t, part);
      if (den == 0) throw std::domain_error("inner product undefined: t^" + std::to_string(part) + " = 1");
      w *= (1 - power(point_.q, part)) / den;
    }
    acc += c * d * w;
  }
  return acc;
}

const SymFunc& MacdonaldOracle::monomial(const Partition& mu) const {
  const auto it = monomial_.find(mu);
  if (it == monomial_.end()) throw std::out_of_range("m" + to_string(mu) + " is beyond the oracle degree");
  return it->second;
}

std::map<Partition, Rational> MacdonaldOracle::to_monomial(const SymFunc& f) const {
  std::map<Partition, Rational> out;
  for (const auto& [rho, c] : f.terms()) {
    if (rho.weight() > max_degree_) throw std::out_of_range("term beyond the oracle degree");
    for (const auto& mu : partitions_of(rho.weight())) {
      const Rational x = power_sum_to_monomial(rho, mu) * c;
      if (x != 0 && (out[mu] += x) == 0) out.erase(mu);
    }
  }
  return out;
}

const SymFunc& MacdonaldOracle::P(const Partition& lambda) const {
  const auto it = p_.find(lambda);
  if (it == p_.end()) throw std::out_of_range("P" + to_string(lambda) + " is beyond the oracle degree");
  return it->second;
}

Rational MacdonaldOracle::b(const Partition& lambda) const {
  P(lambda);
  return 1 / norm_.at(lambda);
}

SymFunc MacdonaldOracle::Q(const Partition& lambda) const { return P(lambda) * b(lambda); }

std::map<Partition, Rational> MacdonaldOracle::to_macdonald(const SymFunc& f) const {
  std::map<Partition, Rational> out;
  for (const auto& [lambda, p] : p_) {
    const Rational c = inner(f, p) / norm_.at(lambda);
    if (c != 0) out[lambda] = c;
  }
  // Terms beyond max_degree are not seen by the P basis; refuse them.
  for (const auto& [rho, c] : f.terms())
    if (rho.weight() > max_degree_) throw std::out_of_range("term beyond the oracle degree");
  return out;
}

SymFunc MacdonaldOracle::g(int r) const {
  SymFunc out;
  for (const auto& rho : partitions_of(r)) {
    Rational c = 1 / z_factor(rho);
    for (int part : rho.parts()) {
      const Rational den = 1 - power(point_.q, part);
      if (den == 0) throw std::domain_error("g_r undefined: q^" + std::to_string(part) + " = 1");
      c *= (1 - power(point_.t, part)) / den;
    }
    out.add(rho, c);
  }
  return out;
}

SymFunc MacdonaldOracle::add(const SymFunc& f, int r) const { return f * g(r); }

SymFunc MacdonaldOracle::remove(const SymFunc& f, int r) {
  SymFunc out;
  for (const auto& [rho, c] : f.terms()) {
    const std::size_t n = rho.length();
    // Each part either stays a power sum or becomes z^part.
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
      int taken = 0;
      std::vector<int> kept;
      for (std::size_t i = 0; i < n; ++i) {
        if (mask >> i & 1)
          taken += rho[i];
        else
          kept.push_back(rho[i]);
      }
      if (taken == r) out.add(Partition(std::move(kept)), c);
    }
  }
  return out;
}

std::vector<PieriEntry> extract_pieri_coeffs(const MacdonaldOracle& oracle, int max_degree) {
  if (max_degree > oracle.max_degree()) throw std::invalid_argument("pieri extraction beyond the oracle degree");
  std::vector<PieriEntry> out;
  for (const auto& lambda : partitions_up_to(max_degree)) {
    const SymFunc& pl = oracle.P(lambda);
    for (const auto& mu : partitions_up_to(lambda.weight())) {
      bool inside = true;
      for (std::size_t i = 0; i < mu.length(); ++i) inside = inside && mu[i] <= lambda[i];
      if (!inside) continue;
      const int r = lambda.weight() - mu.weight();
      const auto added = oracle.to_macdonald(oracle.add(oracle.P(mu), r));
      const auto removed = oracle.to_macdonald(MacdonaldOracle::remove(pl, r));
      const auto phi = added.find(lambda), psi = removed.find(mu);
      out.push_back({lambda, mu, phi == added.end() ? Rational(0) : phi->second,
                     psi == removed.end() ? Rational(0) : psi->second});
    }
  }
  return out;
}

CommutationReport verify_commutation(const MacdonaldOracle& oracle, int max_degree, int order) {
  CommutationReport r;
  const QtPoint& p = oracle.point();
  Rational expected = 1;
  for (int n = 0; n <= order; ++n) {
    if (n > 0) expected *= (1 - p.t * power(p.q, n - 1)) / (1 - power(p.q, n));
    const SymFunc s = MacdonaldOracle::remove(oracle.add(SymFunc::one(), n), n);
    r.scalar.push_back(s.coefficient(Partition{}));
    r.expected.push_back(expected);
  }
  for (const auto& lambda : partitions_up_to(max_degree)) {
    const SymFunc& f = oracle.P(lambda);
    for (int a = 0; a <= order; ++a)
      for (int b = 0; b <= order; ++b) {
        const SymFunc lhs = MacdonaldOracle::remove(oracle.add(f, b), a);
        SymFunc rhs;
        for (int n = 0; n <= std::min(a, b); ++n)
          rhs += oracle.add(MacdonaldOracle::remove(f, a - n), b - n) * r.scalar[static_cast<std::size_t>(n)];
        if (!(lhs == rhs) && r.lambda_independent) {
          r.lambda_independent = false;
          r.failure = "relation fails on P" + to_string(lambda) + " at u^" + std::to_string(a) + " v^" +
                      std::to_string(b);
        }
      }
  }
  return r;
}

namespace {

SymFunc complete(int n) {
  SymFunc h;
  if (n < 0) return h;
  for (const auto& rho : partitions_of(n)) h.add(rho, 1 / z_factor(rho));
  return h;
}

}  // namespace

SymFunc jacobi_trudi(const Partition& lambda) {
  const std::size_t n = lambda.length();
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  SymFunc det;
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) inversions += perm[i] > perm[j];
    SymFunc term = SymFunc::one();
    for (std::size_t i = 0; i < n && !term.is_zero(); ++i)
      term = term * complete(lambda[i] - static_cast<int>(i) + static_cast<int>(perm[i]));
    det += term * Rational(inversions % 2 ? -1 : 1);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return det;
}

Polynomial in_variables(const std::map<Partition, Rational>& monomial_expansion, std::size_t n) {
  Polynomial out;
  for (const auto& [mu, c] : monomial_expansion) {
    if (mu.length() > n) continue;
    std::vector<int> e(n, 0);
    for (std::size_t i = 0; i < mu.length(); ++i) e[i] = mu[i];
    std::sort(e.begin(), e.end());
    do {
      if ((out[e] += c) == 0) out.erase(e);
    } while (std::next_permutation(e.begin(), e.end()));
  }
  return out;
}

bool check_translation(const MacdonaldOracle& oracle, const Partition& lambda) {
  const auto n = static_cast<std::size_t>(lambda.weight());
  // Left: P_lambda in n + 1 variables, the last one playing z.
  const Polynomial lhs = in_variables(oracle.to_monomial(oracle.P(lambda)), n + 1);
  Polynomial rhs;
  for (int r = 0; r <= lambda.weight(); ++r) {
    const SymFunc part = MacdonaldOracle::remove(oracle.P(lambda), r);
    for (const auto& [x, c] : in_variables(oracle.to_monomial(part), n)) {
      auto e = x;
      e.push_back(r);
      if ((rhs[e] += c) == 0) rhs.erase(e);
    }
  }
  return lhs == rhs;
}

}  // namespace cylindric
