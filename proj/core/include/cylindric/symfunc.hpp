#pragma once

#include <map>
#include <string>
#include <vector>

#include "cylindric/factors.hpp"
#include "cylindric/partition.hpp"
#include "cylindric/rational.hpp"

namespace cylindric {

// A symmetric function with rational coefficients in the power-sum basis:
// coefficient of p_rho for each partition rho.
class SymFunc {
 public:
  SymFunc() = default;
  static SymFunc one();
  static SymFunc power_sum(const Partition& rho);

  const std::map<Partition, Rational>& terms() const { return terms_; }
  Rational coefficient(const Partition& rho) const;
  void add(const Partition& rho, const Rational& c);
  bool is_zero() const { return terms_.empty(); }
  // Degree-n part.
  SymFunc component(int n) const;

  SymFunc& operator+=(const SymFunc& o);
  SymFunc& operator-=(const SymFunc& o);
  SymFunc& operator*=(const Rational& c);
  friend SymFunc operator+(SymFunc a, const SymFunc& b) { return a += b; }
  friend SymFunc operator-(SymFunc a, const SymFunc& b) { return a -= b; }
  friend SymFunc operator*(SymFunc a, const Rational& c) { return a *= c; }
  friend SymFunc operator*(const SymFunc& a, const SymFunc& b);

  friend bool operator==(const SymFunc&, const SymFunc&) = default;

 private:
  std::map<Partition, Rational> terms_;
};

// z_rho = prod_i i^{m_i} m_i!.
Rational z_factor(const Partition& rho);

// Coefficient of m_mu in p_rho: the number of ways to distribute the parts
// of rho among the rows of mu so that row r receives exactly mu_r.
Rational power_sum_to_monomial(const Partition& rho, const Partition& mu);

// Macdonald polynomials and Pieri operators at a fixed (q, t) point, up to a
// degree bound. Construction runs Gram-Schmidt on the monomial basis in
// lexicographic order (a linear extension of dominance) for each degree and
// throws std::domain_error when a norm vanishes, i.e. the point is not
// generic enough.
class MacdonaldOracle {
 public:
  MacdonaldOracle(int max_degree, QtPoint point);

  int max_degree() const { return max_degree_; }
  const QtPoint& point() const { return point_; }

  // <p_rho, p_sigma> = delta z_rho prod (1 - q^rho_i) / (1 - t^rho_i).
  Rational inner(const SymFunc& f, const SymFunc& g) const;

  // m_mu in the power-sum basis.
  const SymFunc& monomial(const Partition& mu) const;
  // Coefficients of f in the monomial basis.
  std::map<Partition, Rational> to_monomial(const SymFunc& f) const;

  const SymFunc& P(const Partition& lambda) const;
  // Q_lambda = b_lambda P_lambda with b_lambda = 1 / <P_lambda, P_lambda>.
  SymFunc Q(const Partition& lambda) const;
  Rational b(const Partition& lambda) const;
  // Coefficients of f in the P basis (all degrees up to max_degree).
  std::map<Partition, Rational> to_macdonald(const SymFunc& f) const;

  // g_r = sum_{|rho| = r} z_rho^-1 prod (1 - t^rho_i) / (1 - q^rho_i) p_rho,
  // the z^r coefficient of prod_i (t x_i z; q)_inf / (x_i z; q)_inf.
  SymFunc g(int r) const;
  // f * g_r.
  SymFunc add(const SymFunc& f, int r) const;
  // z^r coefficient of f(X + z), i.e. p_k -> p_k + z^k.
  static SymFunc remove(const SymFunc& f, int r);

 private:
  int max_degree_;
  QtPoint point_;
  std::map<Partition, SymFunc> monomial_;
  std::map<Partition, SymFunc> p_;
  std::map<Partition, Rational> norm_;
};

struct PieriEntry {
  Partition lambda;
  Partition mu;
  // Coefficient of P_lambda in P_mu g_r and of P_mu z^r in P_lambda(X + z).
  Rational phi;
  Rational psi;
};

// One entry for every pair mu subset lambda with |lambda| <= max_degree
// (including non-strips, whose coefficients should vanish).
std::vector<PieriEntry> extract_pieri_coeffs(const MacdonaldOracle& oracle, int max_degree);

struct CommutationReport {
  // s_n read from remove_n(add_n(1)); S(x) = sum s_n x^n.
  std::vector<Rational> scalar;
  // (t; q)_n / (q; q)_n at the oracle point.
  std::vector<Rational> expected;
  // remove_a add_b P_lambda = sum_n s_n add_{b-n} remove_{a-n} P_lambda for
  // all |lambda| <= max_degree and a, b <= order.
  bool lambda_independent = true;
  std::string failure;
  bool passed() const { return lambda_independent && scalar == expected; }
};

CommutationReport verify_commutation(const MacdonaldOracle& oracle, int max_degree, int order);

// det(h_{lambda_i - i + j}) in the power-sum basis.
SymFunc jacobi_trudi(const Partition& lambda);

// Polynomials in finitely many variables: exponent vector -> coefficient.
using Polynomial = std::map<std::vector<int>, Rational>;

// f(x_1, ..., x_n) from its monomial expansion.
Polynomial in_variables(const std::map<Partition, Rational>& monomial_expansion, std::size_t n);

// Checks P_lambda(x_1..x_n, z) = sum_mu psi_{lambda/mu} z^{|lambda/mu|} P_mu(x_1..x_n)
// with n = |lambda| variables, psi read from the oracle's translation.
bool check_translation(const MacdonaldOracle& oracle, const Partition& lambda);

}  // namespace cylindric
