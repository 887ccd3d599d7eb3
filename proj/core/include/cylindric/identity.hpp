#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cylindric/cylindric_partition.hpp"
#include "cylindric/series.hpp"

namespace cylindric {

using WeightFunction = std::function<FactorList(const CylindricPlanePartition&)>;

struct IdentityOptions {
  int max_weight = 6;
  CoefficientMode mode = CoefficientMode::eval({Rational(2, 7), Rational(3, 5)});
  // One variable z_k per cylinder position instead of a single z.
  bool refined = false;
  unsigned threads = 1;
};

// Default evaluation points: two generic (q, t) pairs.
std::vector<QtPoint> default_points();

// The space both sides live in: q, t (series mode only), then z or z0..z{T-1}.
SpacePtr identity_space(const Profile& profile, const IdentityOptions& options);

// Sum over cylindric plane partitions of weight <= max_weight of weight(c)
// times z^|c|, or times z_0^|mu[0]| ... z_{T-1}^|mu[T-1]| when refined.
Series lhs_series(const Profile& profile, const IdentityOptions& options,
                  const WeightFunction& weight = macdonald_weight);

// prod_{m>=1} 1/(1 - w^m) times, for every ordered pair (i, j) with
// pi_i = 1 and pi_j = 0, prod_{n>=0} R(z_(i..j] w^n), where z_(i..j] is the
// product of z_k over the cyclic interval i < k <= j, w = z_0 ... z_{T-1} and
// R(a) = (t a; q)_inf / (a; q)_inf. Unrefined: every z_k is z.
Series rhs_series(const Profile& profile, const IdentityOptions& options);

struct Mismatch {
  std::vector<int> exponents;
  Rational lhs;
  Rational rhs;
};

struct IdentityReport {
  Profile profile;
  IdentityOptions options;
  Series lhs;
  Series rhs;
  std::optional<Mismatch> first_mismatch;
  bool passed() const { return !first_mismatch; }
};

// First differing coefficient in graded order, if any.
std::optional<Mismatch> first_mismatch(const Series& a, const Series& b);

IdentityReport verify(const Profile& profile, const IdentityOptions& options,
                      const WeightFunction& weight = macdonald_weight);

// Specializes a refined series (over z0..z{T-1}, plus q, t in series mode)
// to the unrefined space by z_k := z.
Series unrefine(const Series& refined, const Profile& profile, const IdentityOptions& options);

// Reverse plane partitions: mu[0] = mu[T] = (). Returns the generating
// function of their weights and prod over inversions i < j of R(z^(j-i)).
std::pair<Series, Series> rpp_series(const Profile& profile, const IdentityOptions& options);

// Number of cylindric plane partitions (or reverse plane partitions) of
// each weight, as a z-series with integer coefficients.
Series count_series(const Profile& profile, int max_weight, bool reverse_plane_only = false,
                    unsigned threads = 1);

// prod_{m>=1} 1/(1 - z^(mT)) prod_{pairs} prod_{n>=0} 1/(1 - z^(d + nT)), d = (j - i) mod T.
Series borodin_product(const Profile& profile, int max_weight);
// prod_{i<j, pi_i=1, pi_j=0} 1/(1 - z^(j-i)).
Series stanley_product(const Profile& profile, int max_weight);
// prod_{n>=1} (1 - z^n)^(-n).
Series macmahon_product(int max_weight);

// Plane partitions of n = 0..max_weight, by direct enumeration of arrays.
std::vector<long> plane_partition_counts(int max_weight);

struct MacMahonReport {
  int a = 0;
  int b = 0;
  int max_weight = 0;
  std::vector<Rational> rpp;
  std::vector<Rational> product;
  std::vector<long> direct;
  bool passed() const;
};

// Reverse plane partitions of profile 1^a 0^b at q = t against MacMahon's
// product and the direct count. Throws std::invalid_argument unless
// a, b >= max_weight, where the truncation has stabilized.
MacMahonReport macmahon_check(int a, int b, int max_weight);

// Coefficients of z^0..z^N of a series over the single variable z.
std::vector<Rational> z_coefficients(const Series& f);

}  // namespace cylindric
