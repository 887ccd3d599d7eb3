#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "cylindric/factors.hpp"
#include "cylindric/rational.hpp"

namespace cylindric {

// The variables of a truncated power series and the monomial ideal it is
// truncated by: a monomial is retained iff every exponent is within its
// per-variable bound and, if a total bound is set, the exponents of the
// graded variables sum to at most that bound.
class SeriesSpace {
 public:
  SeriesSpace(std::vector<std::string> names, std::vector<int> max_degree,
              std::vector<bool> graded = {}, std::optional<int> total_bound = std::nullopt);

  std::size_t num_vars() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  int max_degree(std::size_t v) const { return max_degree_[v]; }
  bool graded(std::size_t v) const { return graded_[v]; }
  std::optional<int> total_bound() const { return total_bound_; }
  std::optional<std::size_t> index_of(std::string_view name) const;

  bool retains(std::span<const int> exps) const;
  int graded_degree(std::span<const int> exps) const;

  std::size_t dense_size() const { return dense_size_; }
  std::size_t flat_index(std::span<const int> exps) const;
  std::vector<int> exponents(std::size_t flat) const;

  friend bool operator==(const SeriesSpace& a, const SeriesSpace& b) {
    return a.names_ == b.names_ && a.max_degree_ == b.max_degree_ && a.graded_ == b.graded_ &&
           a.total_bound_ == b.total_bound_;
  }

 private:
  std::vector<std::string> names_;
  std::vector<int> max_degree_;
  std::vector<bool> graded_;
  std::optional<int> total_bound_;
  std::vector<std::size_t> strides_;
  std::size_t dense_size_ = 1;
};

using SpacePtr = std::shared_ptr<const SeriesSpace>;

SpacePtr make_space(std::vector<std::string> names, std::vector<int> max_degree,
                    std::vector<bool> graded = {}, std::optional<int> total_bound = std::nullopt);

// c * x^e with integer (possibly negative) exponents over a space's variables.
struct LaurentMonomial {
  Rational coefficient{1};
  std::vector<int> exponents;

  LaurentMonomial& operator*=(const LaurentMonomial& o);
  friend LaurentMonomial operator*(LaurentMonomial a, const LaurentMonomial& b) { return a *= b; }
  LaurentMonomial inverse() const;
  LaurentMonomial pow(int n) const;
  bool nonnegative() const;
};

// A truncated multivariate power series with exact rational coefficients.
// Storage is dense over the box of per-variable bounds; monomials outside the
// truncation ideal are always zero. All arithmetic is exact on retained
// monomials, so (f*g) truncated equals the truncation of the full product.
class Series {
 public:
  explicit Series(SpacePtr space);

  static Series zero(SpacePtr space) { return Series(std::move(space)); }
  static Series constant(SpacePtr space, const Rational& c);
  static Series monomial(SpacePtr space, const LaurentMonomial& m);
  // The named variable; throws std::invalid_argument if absent.
  static Series variable(SpacePtr space, std::string_view name);

  const SpacePtr& space() const { return space_; }

  Rational coefficient(std::span<const int> exps) const;
  Rational coefficient(std::initializer_list<int> exps) const {
    return coefficient(std::span<const int>(exps.begin(), exps.size()));
  }
  // Adds c*x^exps; ignored when the monomial is not retained.
  void add_term(std::span<const int> exps, const Rational& c);
  const Rational& constant_term() const { return coeffs_.front(); }

  // Nonzero terms, graded-lex order: by graded degree, then total degree,
  // then exponent vector descending.
  std::vector<std::pair<std::vector<int>, Rational>> terms() const;
  bool is_zero() const;

  Series& operator+=(const Series& o);
  Series& operator-=(const Series& o);
  Series& operator*=(const Series& o);
  Series& operator*=(const Rational& c);
  friend Series operator+(Series a, const Series& b) { return a += b; }
  friend Series operator-(Series a, const Series& b) { return a -= b; }
  friend Series operator*(const Series& a, const Series& b);
  friend Series operator*(Series a, const Rational& c) { return a *= c; }
  Series operator-() const;

  // Multiplication by a monomial with nonnegative exponents.
  Series shifted(const LaurentMonomial& m) const;
  // In-place f <- f * (1 - m) and f <- f / (1 - m); m must be nonconstant.
  void mul_one_minus(const LaurentMonomial& m);
  void div_one_minus(const LaurentMonomial& m);
  // Throws std::domain_error unless the constant term is nonzero.
  Series inverse() const;

  std::string to_string() const;

  friend bool operator==(const Series& a, const Series& b);

 private:
  SpacePtr space_;
  std::vector<Rational> coeffs_;
};

// Substitutes each source variable v by images[v], a Laurent monomial over the
// target space. Throws std::domain_error if a retained source term maps to a
// monomial with a negative exponent.
Series substitute(const Series& f, SpacePtr target, const std::vector<LaurentMonomial>& images);

// Fixes the named variables to exact rationals; the result lives in the space
// of the remaining variables. Evaluates the truncated polynomial exactly.
Series eval_at(const Series& f, const std::map<std::string, Rational>& point);

// How q and t are realized: as formal variables truncated at degree
// qt_degree in each, or as a fixed rational point.
class CoefficientMode {
 public:
  static CoefficientMode series(int qt_degree);
  static CoefficientMode eval(QtPoint point);

  bool is_series() const { return !point_.has_value(); }
  int qt_degree() const { return qt_degree_; }
  const QtPoint& point() const { return *point_; }
  std::string describe() const;

 private:
  int qt_degree_ = 0;
  std::optional<QtPoint> point_;
};

// Builds the space for a mode: in series mode the variables q and t come
// first (not graded), followed by the z variables, which are graded.
SpacePtr make_mode_space(const CoefficientMode& mode, std::vector<std::string> z_names,
                         int z_degree, bool total_bound);

// A signed monomial alphabet sum c * q^a t^b, kept canonical: equal (a, b)
// merged, zero coefficients dropped, sorted by (a, b).
class SignedAlphabet {
 public:
  struct Term {
    long coefficient = 0;
    int q_exp = 0;
    int t_exp = 0;
    friend bool operator==(const Term&, const Term&) = default;
  };

  SignedAlphabet() = default;
  SignedAlphabet(std::initializer_list<Term> terms);

  void add(long coefficient, int q_exp, int t_exp);
  std::vector<Term> terms() const;
  bool empty() const { return terms_.empty(); }
  long coefficient(int q_exp, int t_exp) const;

  SignedAlphabet& operator+=(const SignedAlphabet& o);
  SignedAlphabet& operator-=(const SignedAlphabet& o);
  friend SignedAlphabet operator+(SignedAlphabet a, const SignedAlphabet& b) { return a += b; }
  friend SignedAlphabet operator-(SignedAlphabet a, const SignedAlphabet& b) { return a -= b; }
  SignedAlphabet operator-() const;

  std::string to_string() const;

  friend bool operator==(const SignedAlphabet&, const SignedAlphabet&) = default;

 private:
  std::map<std::pair<int, int>, long> terms_;
};

// The alphabet q - t.
SignedAlphabet q_minus_t();

// Formal product of alphabets: exponents add, coefficients multiply.
SignedAlphabet scale_alphabet(const SignedAlphabet& a, const SignedAlphabet& factor);

// Omega[a] = prod (1 - q^a t^b)^(-c) as a factor list. Throws
// std::invalid_argument on a (0,0) term.
FactorList omega_factors(const SignedAlphabet& a);
// Omega[a] in a space with variables named q and t.
Series omega(const SignedAlphabet& a, SpacePtr space);
// Omega[a] at a point; throws std::domain_error if a factor vanishes.
Rational omega_value(const SignedAlphabet& a, const QtPoint& p);

// Expands a factor list in the coefficient ring of a mode: as a (q,t) series
// in the space's q and t variables, or as a constant at the mode's point.
Series factor_series(const FactorList& f, SpacePtr space, const CoefficientMode& mode);

// (t m; q)_inf / (m; q)_inf = sum_n (t;q)_n/(q;q)_n m^n, truncated. m must have
// nonnegative exponents and positive degree in the graded (z) variables;
// std::invalid_argument otherwise.
Series pochhammer_ratio(const LaurentMonomial& m, SpacePtr space, const CoefficientMode& mode);

// (t;q)_n / (q;q)_n as a factor list.
FactorList q_binomial_coefficient(int n);

}  // namespace cylindric
