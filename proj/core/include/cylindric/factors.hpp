#pragma once

#include <compare>
#include <string>
#include <vector>

#include "cylindric/rational.hpp"

namespace cylindric {

struct QtPoint {
  Rational q;
  Rational t;
};

// The factor (1 - q^a t^b) with (a, b) != (0, 0).
struct QtFactor {
  int q_exp = 0;
  int t_exp = 0;
  friend auto operator<=>(const QtFactor&, const QtFactor&) = default;
};

// A rational function written as prod(num) / prod(den) of (1 - q^a t^b)
// factors. Always stored in canonical form: both lists sorted, and no factor
// appears in both lists. This is how Pieri coefficients and cylindric weights
// are carried, so that they can be evaluated exactly at a point or expanded
// as (q,t) power series without polynomial GCDs.
class FactorList {
 public:
  FactorList() = default;
  // Throws std::invalid_argument on a (0,0) factor.
  FactorList(std::vector<QtFactor> num, std::vector<QtFactor> den);

  static FactorList ratio(QtFactor num, QtFactor den) { return FactorList({num}, {den}); }

  const std::vector<QtFactor>& numerator() const { return num_; }
  const std::vector<QtFactor>& denominator() const { return den_; }
  bool is_one() const { return num_.empty() && den_.empty(); }

  FactorList& operator*=(const FactorList& other);
  friend FactorList operator*(FactorList a, const FactorList& b) { return a *= b; }
  FactorList inverse() const { return FactorList(den_, num_); }

  // Exact value; throws std::domain_error if a denominator factor vanishes.
  Rational value(const QtPoint& p) const;

  // Specializes q = 0, leaving a factor list in t alone (q exponents all 0).
  FactorList at_q_zero() const;

  // True when every factor cancels after q = t, i.e. the multisets
  // {a + b} of numerator and denominator agree.
  bool cancels_at_q_equals_t() const;

  std::string to_string() const;

  friend bool operator==(const FactorList&, const FactorList&) = default;

 private:
  void canonicalize();
  std::vector<QtFactor> num_;
  std::vector<QtFactor> den_;
};

}  // namespace cylindric
