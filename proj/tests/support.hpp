#pragma once

// Independent reference constructions used by several test binaries.

#include <set>
#include <string>
#include <vector>

#include "cylindric/cylindric_partition.hpp"
#include "cylindric/series.hpp"

namespace cylindric::testing {

// Every nonempty profile of length <= max_length.
inline std::vector<Profile> all_profiles(std::size_t max_length) {
  std::vector<Profile> out;
  for (std::size_t len = 1; len <= max_length; ++len)
    for (std::size_t bits = 0; bits < (std::size_t{1} << len); ++bits) {
      std::string s;
      for (std::size_t i = 0; i < len; ++i) s.push_back((bits >> (len - 1 - i) & 1) ? '1' : '0');
      out.emplace_back(s);
    }
  return out;
}

// All tuples (mu[0], ..., mu[T-1]) of partitions whose sizes sum to at most
// max_weight, closed up with mu[T] = mu[0] and kept when validate accepts
// them. No strip-aware search at all.
inline std::set<CylindricPlanePartition> brute_force_enumerate(const Profile& profile, int max_weight) {
  std::set<CylindricPlanePartition> out;
  const auto pool = partitions_up_to(max_weight);
  std::vector<Partition> seq;
  auto rec = [&](auto&& self, int budget) -> void {
    if (seq.size() == profile.size()) {
      auto mu = seq;
      mu.push_back(seq.front());
      try {
        out.insert(validate(profile, mu));
      } catch (const InvalidCylindricPartition&) {
      }
      return;
    }
    for (const auto& p : pool) {
      if (p.weight() > budget) continue;
      seq.push_back(p);
      self(self, budget - p.weight());
      seq.pop_back();
    }
  };
  rec(rec, max_weight);
  return out;
}

// q^a t^l summed over boxes of lambda in (or outside) the given columns.
inline void add_boxes(SignedAlphabet& d, const Partition& lambda, const std::vector<bool>& columns, bool inside,
                      long sign) {
  const Partition conj = conjugate(lambda);
  for (std::size_t i = 0; i < lambda.length(); ++i)
    for (int j = 0; j < lambda[i]; ++j) {
      const bool in = static_cast<std::size_t>(j) < columns.size() && columns[static_cast<std::size_t>(j)];
      if (in == inside) d.add(sign, lambda[i] - j - 1, conj[static_cast<std::size_t>(j)] - static_cast<int>(i) - 1);
    }
}

// The alphabet read step by step off the Pieri factors, before any
// regrouping: an adding step lambda/mu contributes boxes of lambda minus
// boxes of mu in the strip's columns, a removing step the boxes of the
// smaller minus the larger partition outside them.
inline SignedAlphabet unregrouped_alphabet(const CylindricPlanePartition& c) {
  SignedAlphabet d;
  for (std::size_t s = 0; s < c.period(); ++s) {
    const bool add = c.profile[s] == 1;
    const Partition& big = add ? c.mu[s + 1] : c.mu[s];
    const Partition& small = add ? c.mu[s] : c.mu[s + 1];
    const Partition bc = conjugate(big), sc = conjugate(small);
    std::vector<bool> cols(static_cast<std::size_t>(big.first()));
    for (std::size_t j = 0; j < cols.size(); ++j) cols[j] = bc[j] > sc[j];
    if (add) {
      add_boxes(d, big, cols, true, 1);
      add_boxes(d, small, cols, true, -1);
    } else {
      add_boxes(d, small, cols, false, 1);
      add_boxes(d, big, cols, false, -1);
    }
  }
  return d;
}

}  // namespace cylindric::testing
