#include "cylindric/identity.hpp"

#include <atomic>
#include <map>
#include <stdexcept>
#include <thread>

namespace cylindric {

std::vector<QtPoint> default_points() {
  return {{Rational(2, 7), Rational(3, 5)}, {Rational(3, 11), Rational(5, 4)}};
}

namespace {

std::vector<std::string> z_names(const Profile& profile, bool refined) {
  if (!refined) return {"z"};
  std::vector<std::string> names;
  for (std::size_t k = 0; k < profile.size(); ++k) names.push_back("z" + std::to_string(k));
  return names;
}

std::size_t z_offset(const CoefficientMode& mode) { return mode.is_series() ? 2 : 0; }

// Exponent vector of the z-monomial attached to c.
std::vector<int> lhs_exponents(const CylindricPlanePartition& c, const SeriesSpace& space,
                               const IdentityOptions& options) {
  std::vector<int> e(space.num_vars(), 0);
  const std::size_t off = z_offset(options.mode);
  if (options.refined)
    for (std::size_t k = 0; k < c.period(); ++k) e[off + k] = c.mu[k].weight();
  else
    e[off] = weight(c);
  return e;
}

// z_{(i, j]} over the cyclic interval i < k <= j (mod T), as a monomial.
LaurentMonomial interval_monomial(const SeriesSpace& space, const IdentityOptions& options, std::size_t T,
                                  std::size_t i, std::size_t j) {
  LaurentMonomial m{1, std::vector<int>(space.num_vars(), 0)};
  const std::size_t off = z_offset(options.mode);
  for (std::size_t k = (i + 1) % T;; k = (k + 1) % T) {
    m.exponents[off + (options.refined ? k : 0)] += 1;
    if (k == j) break;
  }
  return m;
}

LaurentMonomial full_turn(const SeriesSpace& space, const IdentityOptions& options, std::size_t T) {
  LaurentMonomial w{1, std::vector<int>(space.num_vars(), 0)};
  const std::size_t off = z_offset(options.mode);
  for (std::size_t k = 0; k < T; ++k) w.exponents[off + (options.refined ? k : 0)] += 1;
  return w;
}

template <class F>
void parallel_for(std::size_t n, unsigned threads, F&& body) {
  if (threads <= 1 || n < 2) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::jthread> pool;
  for (unsigned t = 0; t < std::min<std::size_t>(threads, n); ++t)
    pool.emplace_back([&] {
      for (std::size_t i; (i = next.fetch_add(1)) < n;) body(i);
    });
}

Series sum_weights(const std::vector<CylindricPlanePartition>& cpps, SpacePtr space,
                   const IdentityOptions& options, const WeightFunction& weight_of) {
  Series out(space);
  if (!options.mode.is_series()) {
    std::vector<Rational> values(cpps.size());
    parallel_for(cpps.size(), options.threads,
                 [&](std::size_t i) { values[i] = weight_of(cpps[i]).value(options.mode.point()); });
    for (std::size_t i = 0; i < cpps.size(); ++i)
      out.add_term(lhs_exponents(cpps[i], *space, options), values[i]);
    return out;
  }
  // Expand each weight in a (q, t)-only space, then place it at its z-monomial.
  const int M = options.mode.qt_degree();
  const auto qt = make_space({"q", "t"}, {M, M}, {false, false});
  std::vector<std::optional<Series>> expanded(cpps.size());
  parallel_for(cpps.size(), options.threads,
               [&](std::size_t i) { expanded[i] = factor_series(weight_of(cpps[i]), qt, options.mode); });
  std::map<std::vector<int>, Series> grouped;
  for (std::size_t i = 0; i < cpps.size(); ++i) {
    auto e = lhs_exponents(cpps[i], *space, options);
    auto [it, fresh] = grouped.try_emplace(std::move(e), qt);
    it->second += *expanded[i];
  }
  for (const auto& [e, s] : grouped) {
    auto full = e;
    for (const auto& [ab, coeff] : s.terms()) {
      full[0] = ab[0];
      full[1] = ab[1];
      out.add_term(full, coeff);
    }
  }
  return out;
}

}  // namespace

SpacePtr identity_space(const Profile& profile, const IdentityOptions& options) {
  if (profile.empty()) throw std::invalid_argument("profile must be nonempty");
  if (options.max_weight < 0) throw std::invalid_argument("max weight must be nonnegative");
  return make_mode_space(options.mode, z_names(profile, options.refined), options.max_weight, options.refined);
}

Series lhs_series(const Profile& profile, const IdentityOptions& options, const WeightFunction& weight) {
  const auto space = identity_space(profile, options);
  const auto cpps = enumerate(profile, options.max_weight, {options.threads, false});
  return sum_weights(cpps, space, options, weight);
}

Series rhs_series(const Profile& profile, const IdentityOptions& options) {
  const auto space = identity_space(profile, options);
  const std::size_t T = profile.size();
  Series out = Series::constant(space, 1);
  const LaurentMonomial w = full_turn(*space, options, T);
  for (int m = 1; space->retains(w.pow(m).exponents); ++m) out.div_one_minus(w.pow(m));
  for (std::size_t i = 0; i < T; ++i) {
    if (profile[i] != 1) continue;
    for (std::size_t j = 0; j < T; ++j) {
      if (profile[j] != 0) continue;
      const LaurentMonomial base = interval_monomial(*space, options, T, i, j);
      for (int n = 0;; ++n) {
        const LaurentMonomial a = base * w.pow(n);
        if (!space->retains(a.exponents)) break;
        out *= pochhammer_ratio(a, space, options.mode);
      }
    }
  }
  return out;
}

std::optional<Mismatch> first_mismatch(const Series& a, const Series& b) {
  const Series diff = a - b;
  const auto terms = diff.terms();
  if (terms.empty()) return std::nullopt;
  const auto& e = terms.front().first;
  return Mismatch{e, a.coefficient(e), b.coefficient(e)};
}

IdentityReport verify(const Profile& profile, const IdentityOptions& options, const WeightFunction& weight) {
  IdentityReport r{profile, options, lhs_series(profile, options, weight), rhs_series(profile, options), {}};
  r.first_mismatch = first_mismatch(r.lhs, r.rhs);
  return r;
}

Series unrefine(const Series& refined, const Profile& profile, const IdentityOptions& options) {
  IdentityOptions flat = options;
  flat.refined = false;
  const auto target = identity_space(profile, flat);
  const std::size_t off = z_offset(options.mode);
  std::vector<LaurentMonomial> images;
  for (std::size_t v = 0; v < refined.space()->num_vars(); ++v) {
    LaurentMonomial m{1, std::vector<int>(target->num_vars(), 0)};
    m.exponents[v < off ? v : off] = 1;
    images.push_back(std::move(m));
  }
  return substitute(refined, target, images);
}

std::pair<Series, Series> rpp_series(const Profile& profile, const IdentityOptions& options) {
  const auto space = identity_space(profile, options);
  const auto cpps = enumerate(profile, options.max_weight, {options.threads, true});
  Series lhs = sum_weights(cpps, space, options, macdonald_weight);
  Series rhs = Series::constant(space, 1);
  for (const auto& inv : inversions(profile)) {
    const LaurentMonomial a = interval_monomial(*space, options, profile.size(), inv.i, inv.j);
    if (space->retains(a.exponents)) rhs *= pochhammer_ratio(a, space, options.mode);
  }
  return {std::move(lhs), std::move(rhs)};
}

namespace {

SpacePtr z_space(int max_weight) { return make_space({"z"}, {max_weight}); }

LaurentMonomial z_power(int n) { return {1, {n}}; }

}  // namespace

Series count_series(const Profile& profile, int max_weight, bool reverse_plane_only, unsigned threads) {
  Series out(z_space(max_weight));
  for (const auto& c : enumerate(profile, max_weight, {threads, reverse_plane_only}))
    out.add_term(std::vector<int>{weight(c)}, 1);
  return out;
}

Series borodin_product(const Profile& profile, int max_weight) {
  const auto T = static_cast<int>(profile.size());
  Series out = Series::constant(z_space(max_weight), 1);
  for (int m = 1; m * T <= max_weight; ++m) out.div_one_minus(z_power(m * T));
  for (std::size_t i = 0; i < profile.size(); ++i)
    for (std::size_t j = 0; j < profile.size(); ++j) {
      if (profile[i] != 1 || profile[j] != 0) continue;
      const int d = ((static_cast<int>(j) - static_cast<int>(i)) % T + T) % T;
      for (int e = d; e <= max_weight; e += T) out.div_one_minus(z_power(e));
    }
  return out;
}

Series stanley_product(const Profile& profile, int max_weight) {
  Series out = Series::constant(z_space(max_weight), 1);
  for (const auto& inv : inversions(profile)) {
    const auto d = static_cast<int>(inv.j - inv.i);
    if (d <= max_weight) out.div_one_minus(z_power(d));
  }
  return out;
}

Series macmahon_product(int max_weight) {
  Series out = Series::constant(z_space(max_weight), 1);
  for (int n = 1; n <= max_weight; ++n)
    for (int r = 0; r < n; ++r) out.div_one_minus(z_power(n));
  return out;
}

namespace {

// Adds, for every plane partition whose rows after `above` fit under it,
// one to counts[used + their size].
void count_rows(const std::vector<int>& above, int used, int max_weight, std::vector<long>& counts) {
  ++counts[static_cast<std::size_t>(used)];
  // Next row: a nonempty partition bounded componentwise by `above`.
  std::vector<int> row;
  auto rec = [&](auto&& self, std::size_t i, int size) -> void {
    if (size > 0) count_rows(row, used + size, max_weight, counts);
    if (i >= above.size()) return;
    const int cap = std::min(above[i], i == 0 ? above[0] : row[i - 1]);
    for (int v = 1; v <= cap && used + size + v <= max_weight; ++v) {
      row.push_back(v);
      self(self, i + 1, size + v);
      row.pop_back();
    }
  };
  rec(rec, 0, 0);
}

}  // namespace

std::vector<long> plane_partition_counts(int max_weight) {
  if (max_weight < 0) return {};
  std::vector<long> counts(static_cast<std::size_t>(max_weight) + 1, 0);
  // The first row is bounded only by the budget.
  count_rows(std::vector<int>(static_cast<std::size_t>(max_weight), max_weight), 0, max_weight, counts);
  return counts;
}

bool MacMahonReport::passed() const {
  if (rpp != product || rpp.size() != direct.size()) return false;
  for (std::size_t n = 0; n < rpp.size(); ++n)
    if (rpp[n] != direct[n]) return false;
  return true;
}

MacMahonReport macmahon_check(int a, int b, int max_weight) {
  if (max_weight < 0) throw std::invalid_argument("max weight must be nonnegative");
  if (a < max_weight || b < max_weight)
    throw std::invalid_argument("macmahon: need a, b >= N for the truncation to stabilize (a=" +
                                std::to_string(a) + ", b=" + std::to_string(b) +
                                ", N=" + std::to_string(max_weight) + ")");
  const Profile profile(std::string(static_cast<std::size_t>(a), '1') + std::string(static_cast<std::size_t>(b), '0'));
  IdentityOptions options;
  options.max_weight = max_weight;
  options.mode = CoefficientMode::eval({Rational(2, 7), Rational(2, 7)});
  MacMahonReport r;
  r.a = a;
  r.b = b;
  r.max_weight = max_weight;
  r.rpp = z_coefficients(rpp_series(profile, options).first);
  r.product = z_coefficients(macmahon_product(max_weight));
  r.direct = plane_partition_counts(max_weight);
  return r;
}

std::vector<Rational> z_coefficients(const Series& f) {
  const SeriesSpace& sp = *f.space();
  if (sp.num_vars() != 1) throw std::invalid_argument("z_coefficients: expected a single-variable series");
  std::vector<Rational> out;
  for (int n = 0; n <= sp.max_degree(0); ++n) out.push_back(f.coefficient({n}));
  return out;
}

}  // namespace cylindric
