#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "cylindric/factors.hpp"
#include "cylindric/partition.hpp"

namespace cylindric {

// A profile pi of length T and partitions mu[0..T] with mu[0] = mu[T] such
// that step s (0-indexed, mu[s] -> mu[s+1]) adds a horizontal strip when
// pi[s] = 1 and removes one when pi[s] = 0.
struct CylindricPlanePartition {
  Profile profile;
  std::vector<Partition> mu;

  std::size_t period() const { return profile.size(); }

  friend auto operator<=>(const CylindricPlanePartition&, const CylindricPlanePartition&) = default;
  friend bool operator==(const CylindricPlanePartition&, const CylindricPlanePartition&) = default;
};

// Thrown by validate. step is the 1-indexed k of the failing pair
// (mu[k-1], mu[k]), or 0 for shape errors (length, mu[0] != mu[T]).
class InvalidCylindricPartition : public std::invalid_argument {
 public:
  InvalidCylindricPartition(const std::string& what, std::size_t step, bool adding)
      : std::invalid_argument(what), step_(step), adding_(adding) {}
  std::size_t step() const { return step_; }
  bool adding() const { return adding_; }

 private:
  std::size_t step_;
  bool adding_;
};

CylindricPlanePartition validate(Profile profile, std::vector<Partition> mu);

// |mu[1]| + ... + |mu[T]|.
int weight(const CylindricPlanePartition& c);

std::string to_string(const CylindricPlanePartition& c);

struct EnumerateOptions {
  unsigned threads = 1;
  // Restrict to mu[0] = mu[T] = () (reverse plane partitions).
  bool reverse_plane_only = false;
};

// Every cylindric plane partition of the profile with weight <= max_weight,
// sorted by weight and then lexicographically on mu. The output does not
// depend on the thread count.
std::vector<CylindricPlanePartition> enumerate(const Profile& profile, int max_weight,
                                               const EnumerateOptions& options = {});

// prod_{s in lambda} (1 - q^a t^(l+1)) / (1 - q^(a+1) t^l).
FactorList b_lambda(const Partition& lambda);

// Pieri coefficients for a horizontal strip lambda/mu; throw
// std::invalid_argument otherwise. phi is the coefficient of P_lambda in
// P_mu g_r, psi the coefficient of P_mu in P_lambda(X + z) at z^r.
FactorList pieri_phi(const Partition& lambda, const Partition& mu);
FactorList pieri_psi(const Partition& lambda, const Partition& mu);

// Product of phi over adding steps and psi over removing steps.
FactorList macdonald_weight(const CylindricPlanePartition& c);

}  // namespace cylindric
