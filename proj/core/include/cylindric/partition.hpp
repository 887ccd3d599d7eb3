#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace cylindric {

// An integer partition: weakly decreasing positive parts, trailing zeros dropped.
class Partition {
 public:
  Partition() = default;
  // Accepts trailing zeros; throws std::invalid_argument if the list is not
  // weakly decreasing or has a negative entry.
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  std::span<const int> parts() const { return parts_; }
  std::size_t length() const { return parts_.size(); }
  bool empty() const { return parts_.empty(); }
  int weight() const;

  // 0-indexed row access; rows beyond the length are 0.
  int operator[](std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }
  int first() const { return parts_.empty() ? 0 : parts_.front(); }

  friend auto operator<=>(const Partition&, const Partition&) = default;
  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

std::string to_string(const Partition& p);

// A finite string over {0,1}, 0-indexed. Used both for the boundary of a
// Young diagram (1 = horizontal step, 0 = vertical step) and for the
// add/remove pattern of a cylindric plane partition.
class Profile {
 public:
  Profile() = default;
  // Throws std::invalid_argument on characters other than '0' and '1'.
  explicit Profile(std::string_view bits);

  std::size_t size() const { return bits_.size(); }
  bool empty() const { return bits_.empty(); }
  int operator[](std::size_t i) const { return bits_[i] == '1' ? 1 : 0; }
  const std::string& str() const { return bits_; }

  // Starts with 1 and ends with 0, or is empty.
  bool is_minimal() const;
  std::size_t count_ones() const;

  friend auto operator<=>(const Profile&, const Profile&) = default;
  friend bool operator==(const Profile&, const Profile&) = default;

 private:
  std::string bits_;
};

// Cartesian box coordinates, both 1-indexed: row i, column j.
struct Box {
  int row = 1;
  int col = 1;
  friend auto operator<=>(const Box&, const Box&) = default;
};

// Inversion coordinates: 0-indexed positions i < j in a profile with
// bits[i] = 1 and bits[j] = 0.
struct Inversion {
  std::size_t i = 0;
  std::size_t j = 0;
  friend auto operator<=>(const Inversion&, const Inversion&) = default;
};

struct ArmLeg {
  int arm = 0;
  int leg = 0;
  friend auto operator<=>(const ArmLeg&, const ArmLeg&) = default;
};

Partition conjugate(const Partition& lambda);

Profile to_minimal_profile(const Partition& lambda);

// Generalized profile of lambda with `rows` vertical and `cols` horizontal
// steps (leading zeros and trailing ones pad the minimal profile). Requires
// rows >= length and cols >= first part.
Profile to_profile(const Partition& lambda, std::size_t rows, std::size_t cols);

// Strips leading zeros and trailing ones; accepts any generalized profile.
Partition from_profile(const Profile& p);

// All inversions, ordered lexicographically by (i, j).
std::vector<Inversion> inversions(const Profile& p);

// The box <-> inversion correspondence for a generalized profile p of lambda:
// column j is the j-th one of p, row i is the i-th zero counted from the end.
Inversion box_to_inversion(const Profile& p, Box s);
Box inversion_to_box(const Profile& p, Inversion s);

bool contains(const Partition& lambda, Box s);

// Cartesian: arm = lambda_i - j, leg = lambda'_j - i. Throws
// std::out_of_range if s is not a box of lambda.
ArmLeg arm_leg(const Partition& lambda, Box s);
// Inversion coordinates: arm = #ones strictly between, leg = #zeros strictly
// between. Throws std::out_of_range if s is not an inversion of p.
ArmLeg arm_leg(const Profile& p, Inversion s);

// a + l + 1. The hook length is only exposed for completeness.
int hook_length(const Partition& lambda, Box s);

// lambda / mu is a horizontal strip: lambda_1 >= mu_1 >= lambda_2 >= mu_2 >= ...
bool is_horizontal_strip(const Partition& lambda, const Partition& mu);
// Same predicate via lambda'_j - mu'_j in {0, 1} for every column j.
bool is_horizontal_strip_by_columns(const Partition& lambda, const Partition& mu);
// Same predicate via the k-th ones of aligned generalized profiles moving by 0 or 1.
bool is_horizontal_strip_by_profiles(const Partition& lambda, const Partition& mu);

// Partitions of n in lexicographically increasing order, e.g. (1,1,1) < (2,1) < (3).
std::vector<Partition> partitions_of(int n);
// Partitions of 0..n, grouped by size and lexicographic within a size.
std::vector<Partition> partitions_up_to(int n);

// Every lambda obtained from mu by adding a horizontal strip of at most
// `max_added` boxes (including mu itself).
std::vector<Partition> add_horizontal_strips(const Partition& mu, int max_added);
// Every mu obtained from lambda by removing a horizontal strip (including lambda).
std::vector<Partition> remove_horizontal_strips(const Partition& lambda);

}  // namespace cylindric
