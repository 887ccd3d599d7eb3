#include "cylindric/cylindric_partition.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

namespace cylindric {

CylindricPlanePartition validate(Profile profile, std::vector<Partition> mu) {
  const std::size_t T = profile.size();
  if (T == 0) throw InvalidCylindricPartition("profile must be nonempty", 0, false);
  if (mu.size() != T + 1)
    throw InvalidCylindricPartition("expected " + std::to_string(T + 1) + " partitions for profile " +
                                        profile.str() + ", got " + std::to_string(mu.size()),
                                    0, false);
  if (mu.front() != mu.back())
    throw InvalidCylindricPartition("first and last partitions differ: " + to_string(mu.front()) + " vs " +
                                        to_string(mu.back()),
                                    0, false);
  for (std::size_t s = 0; s < T; ++s) {
    const bool add = profile[s] == 1;
    const bool ok = add ? is_horizontal_strip(mu[s + 1], mu[s]) : is_horizontal_strip(mu[s], mu[s + 1]);
    if (!ok) {
      const std::string k = std::to_string(s + 1);
      throw InvalidCylindricPartition(
          add ? "step k=" + k + ": " + to_string(mu[s + 1]) + "/" + to_string(mu[s]) +
                    " is not a horizontal strip (adding)"
              : "step k=" + k + ": " + to_string(mu[s]) + "/" + to_string(mu[s + 1]) +
                    " is not a horizontal strip (removing)",
          s + 1, add);
    }
  }
  return {std::move(profile), std::move(mu)};
}

int weight(const CylindricPlanePartition& c) {
  int w = 0;
  for (std::size_t k = 1; k < c.mu.size(); ++k) w += c.mu[k].weight();
  return w;
}

std::string to_string(const CylindricPlanePartition& c) {
  std::string out = c.profile.str() + " [";
  for (std::size_t k = 0; k < c.mu.size(); ++k) {
    if (k) out += ' ';
    out += to_string(c.mu[k]);
  }
  return out + ']';
}

namespace {

struct Search {
  const Profile& profile;
  int max_weight;
  std::vector<Partition> seq;
  std::vector<CylindricPlanePartition> found;

  // seq holds mu[0..s]; used is |mu[1]| + ... + |mu[s]|.
  void run(std::size_t s, int used) {
    const std::size_t T = profile.size();
    const Partition& root = seq.front();
    if (s == T) {
      if (seq.back() == root) found.push_back({profile, seq});
      return;
    }
    // mu[T] = mu[0] still has to be paid for unless this is the last step.
    const int reserve = s + 1 == T ? 0 : root.weight();
    const int room = max_weight - used - reserve;
    const Partition cur = seq.back();
    const auto next = profile[s] == 1 ? add_horizontal_strips(cur, room - cur.weight())
                                      : remove_horizontal_strips(cur);
    for (const auto& p : next) {
      if (p.weight() > room) continue;
      seq.push_back(p);
      run(s + 1, used + p.weight());
      seq.pop_back();
    }
  }
};

}  // namespace

std::vector<CylindricPlanePartition> enumerate(const Profile& profile, int max_weight,
                                               const EnumerateOptions& options) {
  if (profile.empty()) throw std::invalid_argument("enumerate: profile must be nonempty");
  if (max_weight < 0) return {};
  // The weight includes |mu[T]| = |mu[0]|, so roots larger than max_weight
  // cannot contribute.
  const std::vector<Partition> roots =
      options.reverse_plane_only ? std::vector<Partition>{Partition{}} : partitions_up_to(max_weight);

  std::vector<std::vector<CylindricPlanePartition>> per_root(roots.size());
  auto work = [&](std::size_t r) {
    Search search{profile, max_weight, {roots[r]}, {}};
    search.run(0, 0);
    per_root[r] = std::move(search.found);
  };

  const unsigned threads = std::max(1u, std::min<unsigned>(options.threads, static_cast<unsigned>(roots.size())));
  if (threads == 1) {
    for (std::size_t r = 0; r < roots.size(); ++r) work(r);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> pool;
    for (unsigned i = 0; i < threads; ++i)
      pool.emplace_back([&] {
        for (std::size_t r; (r = next.fetch_add(1)) < roots.size();) work(r);
      });
  }

  std::vector<std::pair<int, CylindricPlanePartition>> keyed;
  for (auto& batch : per_root)
    for (auto& c : batch) {
      const int w = weight(c);
      keyed.emplace_back(w, std::move(c));
    }
  std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first < b.first;
    return a.second.mu < b.second.mu;
  });
  std::vector<CylindricPlanePartition> out;
  out.reserve(keyed.size());
  for (auto& [w, c] : keyed) out.push_back(std::move(c));
  return out;
}

namespace {

// b_lambda(s) = (1 - q^a t^(l+1)) / (1 - q^(a+1) t^l) for each box s of
// lambda in the selected columns.
void collect_b(const Partition& lambda, const std::vector<bool>& in_columns, bool want, std::vector<QtFactor>& num,
               std::vector<QtFactor>& den) {
  const Partition conj = conjugate(lambda);
  for (std::size_t i = 0; i < lambda.length(); ++i)
    for (int j = 1; j <= lambda[i]; ++j) {
      const auto col = static_cast<std::size_t>(j - 1);
      const bool in = col < in_columns.size() && in_columns[col];
      if (in != want) continue;
      const int a = lambda[i] - j;
      const int l = conj[col] - static_cast<int>(i) - 1;
      num.push_back({a, l + 1});
      den.push_back({a + 1, l});
    }
}

// Columns of lambda that contain a box of lambda/mu.
std::vector<bool> strip_columns(const Partition& lambda, const Partition& mu) {
  if (!is_horizontal_strip(lambda, mu))
    throw std::invalid_argument(to_string(lambda) + "/" + to_string(mu) + " is not a horizontal strip");
  const Partition lc = conjugate(lambda), mc = conjugate(mu);
  std::vector<bool> cols(lc.length());
  for (std::size_t j = 0; j < lc.length(); ++j) cols[j] = lc[j] > mc[j];
  return cols;
}

}  // namespace

FactorList b_lambda(const Partition& lambda) {
  std::vector<QtFactor> num, den;
  collect_b(lambda, {}, false, num, den);
  return FactorList(std::move(num), std::move(den));
}

FactorList pieri_phi(const Partition& lambda, const Partition& mu) {
  const auto cols = strip_columns(lambda, mu);
  std::vector<QtFactor> num, den;
  collect_b(lambda, cols, true, num, den);
  collect_b(mu, cols, true, den, num);
  return FactorList(std::move(num), std::move(den));
}

FactorList pieri_psi(const Partition& lambda, const Partition& mu) {
  const auto cols = strip_columns(lambda, mu);
  std::vector<QtFactor> num, den;
  collect_b(mu, cols, false, num, den);
  collect_b(lambda, cols, false, den, num);
  return FactorList(std::move(num), std::move(den));
}

FactorList macdonald_weight(const CylindricPlanePartition& c) {
  FactorList w;
  for (std::size_t s = 0; s < c.period(); ++s)
    w *= c.profile[s] == 1 ? pieri_phi(c.mu[s + 1], c.mu[s]) : pieri_psi(c.mu[s], c.mu[s + 1]);
  return w;
}

}  // namespace cylindric
