#include "cylindric/series.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace cylindric {

// ---------------------------------------------------------------------------
// SeriesSpace

SeriesSpace::SeriesSpace(std::vector<std::string> names, std::vector<int> max_degree,
                         std::vector<bool> graded, std::optional<int> total_bound)
    : names_(std::move(names)),
      max_degree_(std::move(max_degree)),
      graded_(std::move(graded)),
      total_bound_(total_bound) {
  if (names_.size() != max_degree_.size())
    throw std::invalid_argument("series space: one bound per variable required");
  if (graded_.empty()) graded_.assign(names_.size(), true);
  if (graded_.size() != names_.size())
    throw std::invalid_argument("series space: graded mask has the wrong length");
  for (int d : max_degree_)
    if (d < 0) throw std::invalid_argument("series space: negative degree bound");
  strides_.assign(names_.size(), 1);
  for (std::size_t v = names_.size(); v-- > 0;) {
    strides_[v] = dense_size_;
    dense_size_ *= static_cast<std::size_t>(max_degree_[v] + 1);
  }
}

std::optional<std::size_t> SeriesSpace::index_of(std::string_view name) const {
  for (std::size_t v = 0; v < names_.size(); ++v)
    if (names_[v] == name) return v;
  return std::nullopt;
}

int SeriesSpace::graded_degree(std::span<const int> exps) const {
  int d = 0;
  for (std::size_t v = 0; v < exps.size(); ++v)
    if (graded_[v]) d += exps[v];
  return d;
}

bool SeriesSpace::retains(std::span<const int> exps) const {
  if (exps.size() != names_.size()) return false;
  for (std::size_t v = 0; v < exps.size(); ++v)
    if (exps[v] < 0 || exps[v] > max_degree_[v]) return false;
  return !total_bound_ || graded_degree(exps) <= *total_bound_;
}

std::size_t SeriesSpace::flat_index(std::span<const int> exps) const {
  std::size_t idx = 0;
  for (std::size_t v = 0; v < exps.size(); ++v) idx += strides_[v] * static_cast<std::size_t>(exps[v]);
  return idx;
}

std::vector<int> SeriesSpace::exponents(std::size_t flat) const {
  std::vector<int> e(names_.size());
  for (std::size_t v = 0; v < e.size(); ++v) {
    e[v] = static_cast<int>(flat / strides_[v]);
    flat %= strides_[v];
  }
  return e;
}

SpacePtr make_space(std::vector<std::string> names, std::vector<int> max_degree, std::vector<bool> graded,
                    std::optional<int> total_bound) {
  return std::make_shared<const SeriesSpace>(std::move(names), std::move(max_degree), std::move(graded),
                                             total_bound);
}

// ---------------------------------------------------------------------------
// LaurentMonomial

LaurentMonomial& LaurentMonomial::operator*=(const LaurentMonomial& o) {
  if (exponents.size() != o.exponents.size())
    throw std::invalid_argument("monomials over different variable sets");
  coefficient *= o.coefficient;
  for (std::size_t v = 0; v < exponents.size(); ++v) exponents[v] += o.exponents[v];
  return *this;
}

LaurentMonomial LaurentMonomial::inverse() const {
  if (coefficient == 0) throw std::domain_error("inverse of a zero monomial");
  LaurentMonomial r{1 / coefficient, exponents};
  for (int& e : r.exponents) e = -e;
  return r;
}

LaurentMonomial LaurentMonomial::pow(int n) const {
  LaurentMonomial r{power(coefficient, n), exponents};
  for (int& e : r.exponents) e *= n;
  return r;
}

bool LaurentMonomial::nonnegative() const {
  return std::all_of(exponents.begin(), exponents.end(), [](int e) { return e >= 0; });
}

// ---------------------------------------------------------------------------
// Series

namespace {

void require_same_space(const Series& a, const Series& b) {
  if (a.space() != b.space() && !(*a.space() == *b.space()))
    throw std::invalid_argument("series over incompatible spaces");
}

struct Nonzero {
  std::size_t flat;
  std::vector<int> exps;
  const Rational* coeff;
};

}  // namespace

Series::Series(SpacePtr space) : space_(std::move(space)), coeffs_(space_->dense_size()) {}

Series Series::constant(SpacePtr space, const Rational& c) {
  Series s(std::move(space));
  s.coeffs_[0] = c;
  return s;
}

Series Series::monomial(SpacePtr space, const LaurentMonomial& m) {
  Series s(std::move(space));
  if (!m.nonnegative()) throw std::domain_error("monomial with a negative exponent");
  s.add_term(m.exponents, m.coefficient);
  return s;
}

Series Series::variable(SpacePtr space, std::string_view name) {
  const auto v = space->index_of(name);
  if (!v) throw std::invalid_argument("no variable named " + std::string(name));
  std::vector<int> e(space->num_vars(), 0);
  e[*v] = 1;
  return monomial(std::move(space), {1, e});
}

Rational Series::coefficient(std::span<const int> exps) const {
  if (!space_->retains(exps)) return 0;
  return coeffs_[space_->flat_index(exps)];
}

void Series::add_term(std::span<const int> exps, const Rational& c) {
  if (space_->retains(exps)) coeffs_[space_->flat_index(exps)] += c;
}

std::vector<std::pair<std::vector<int>, Rational>> Series::terms() const {
  std::vector<std::pair<std::vector<int>, Rational>> out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) out.emplace_back(space_->exponents(i), coeffs_[i]);
  const SeriesSpace& sp = *space_;
  std::stable_sort(out.begin(), out.end(), [&sp](const auto& a, const auto& b) {
    const int ga = sp.graded_degree(a.first), gb = sp.graded_degree(b.first);
    if (ga != gb) return ga < gb;
    const int ta = std::accumulate(a.first.begin(), a.first.end(), 0);
    const int tb = std::accumulate(b.first.begin(), b.first.end(), 0);
    if (ta != tb) return ta < tb;
    return a.first > b.first;
  });
  return out;
}

bool Series::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c == 0; });
}

Series& Series::operator+=(const Series& o) {
  require_same_space(*this, o);
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (o.coeffs_[i] != 0) coeffs_[i] += o.coeffs_[i];
  return *this;
}

Series& Series::operator-=(const Series& o) {
  require_same_space(*this, o);
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (o.coeffs_[i] != 0) coeffs_[i] -= o.coeffs_[i];
  return *this;
}

Series& Series::operator*=(const Rational& c) {
  for (auto& x : coeffs_) x *= c;
  return *this;
}

Series Series::operator-() const {
  Series r = *this;
  for (auto& x : r.coeffs_) x = -x;
  return r;
}

Series operator*(const Series& a, const Series& b) {
  require_same_space(a, b);
  const SeriesSpace& sp = *a.space_;
  auto collect = [&sp](const Series& s) {
    std::vector<Nonzero> nz;
    for (std::size_t i = 0; i < s.coeffs_.size(); ++i)
      if (s.coeffs_[i] != 0) nz.push_back({i, sp.exponents(i), &s.coeffs_[i]});
    return nz;
  };
  const auto na = collect(a), nb = collect(b);
  Series out(a.space_);
  std::vector<int> sum(sp.num_vars());
  Rational prod;
  for (const auto& x : na) {
    for (const auto& y : nb) {
      bool ok = true;
      for (std::size_t v = 0; v < sum.size() && ok; ++v) {
        sum[v] = x.exps[v] + y.exps[v];
        ok = sum[v] <= sp.max_degree(v);
      }
      if (!ok || (sp.total_bound() && sp.graded_degree(sum) > *sp.total_bound())) continue;
      mpq_mul(prod.get_mpq_t(), x.coeff->get_mpq_t(), y.coeff->get_mpq_t());
      out.coeffs_[x.flat + y.flat] += prod;
    }
  }
  return out;
}

Series& Series::operator*=(const Series& o) { return *this = *this * o; }

Series Series::shifted(const LaurentMonomial& m) const {
  if (!m.nonnegative()) throw std::domain_error("shift by a monomial with a negative exponent");
  Series out(space_);
  std::vector<int> e(space_->num_vars());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    e = space_->exponents(i);
    for (std::size_t v = 0; v < e.size(); ++v) e[v] += m.exponents[v];
    if (space_->retains(e)) out.coeffs_[space_->flat_index(e)] = coeffs_[i] * m.coefficient;
  }
  return out;
}

namespace {

void check_nonconstant(const LaurentMonomial& m, const SeriesSpace& sp) {
  if (m.exponents.size() != sp.num_vars() || !m.nonnegative())
    throw std::domain_error("(1 - m) needs a monomial with nonnegative exponents");
  if (std::all_of(m.exponents.begin(), m.exponents.end(), [](int e) { return e == 0; }))
    throw std::domain_error("(1 - m) with constant m is not a unit-preserving factor");
}

}  // namespace

void Series::mul_one_minus(const LaurentMonomial& m) {
  check_nonconstant(m, *space_);
  // Descending flat order: the target index is larger than the source.
  std::vector<int> e;
  Rational prod;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    if (coeffs_[i] == 0) continue;
    e = space_->exponents(i);
    for (std::size_t v = 0; v < e.size(); ++v) e[v] += m.exponents[v];
    if (!space_->retains(e)) continue;
    mpq_mul(prod.get_mpq_t(), coeffs_[i].get_mpq_t(), m.coefficient.get_mpq_t());
    coeffs_[space_->flat_index(e)] -= prod;
  }
}

void Series::div_one_minus(const LaurentMonomial& m) {
  check_nonconstant(m, *space_);
  // g = f + m g, solved in ascending flat order.
  std::vector<int> e;
  Rational prod;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    e = space_->exponents(i);
    for (std::size_t v = 0; v < e.size(); ++v) e[v] += m.exponents[v];
    if (!space_->retains(e)) continue;
    mpq_mul(prod.get_mpq_t(), coeffs_[i].get_mpq_t(), m.coefficient.get_mpq_t());
    coeffs_[space_->flat_index(e)] += prod;
  }
}

Series Series::inverse() const {
  const Rational& c0 = coeffs_.front();
  if (c0 == 0) throw std::domain_error("series with zero constant term is not invertible");
  const SeriesSpace& sp = *space_;
  std::vector<Nonzero> nz;
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) nz.push_back({i, sp.exponents(i), &coeffs_[i]});
  Series g(space_);
  const Rational inv0 = 1 / c0;
  g.coeffs_[0] = inv0;
  std::vector<int> diff(sp.num_vars());
  for (std::size_t i = 1; i < coeffs_.size(); ++i) {
    const auto e = sp.exponents(i);
    if (!sp.retains(e)) continue;
    Rational acc = 0;
    for (const auto& x : nz) {
      if (x.flat > i) break;
      bool ok = true;
      for (std::size_t v = 0; v < diff.size() && ok; ++v) {
        diff[v] = e[v] - x.exps[v];
        ok = diff[v] >= 0;
      }
      if (ok) acc += *x.coeff * g.coeffs_[i - x.flat];
    }
    g.coeffs_[i] = -acc * inv0;
  }
  return g;
}

std::string Series::to_string() const {
  const auto ts = terms();
  if (ts.empty()) return "0";
  std::string out;
  for (const auto& [exps, c] : ts) {
    const bool is_const = std::all_of(exps.begin(), exps.end(), [](int e) { return e == 0; });
    Rational mag = abs(c);
    if (out.empty())
      out += c < 0 ? "-" : "";
    else
      out += c < 0 ? " - " : " + ";
    std::string mono;
    for (std::size_t v = 0; v < exps.size(); ++v) {
      if (exps[v] == 0) continue;
      if (!mono.empty()) mono += '*';
      mono += space_->names()[v];
      if (exps[v] > 1) mono += '^' + std::to_string(exps[v]);
    }
    if (is_const)
      out += mag.get_str();
    else if (mag == 1)
      out += mono;
    else
      out += mag.get_str() + '*' + mono;
  }
  return out;
}

bool operator==(const Series& a, const Series& b) {
  if (!(*a.space_ == *b.space_)) return false;
  return a.coeffs_ == b.coeffs_;
}

// ---------------------------------------------------------------------------
// Substitution and evaluation

Series substitute(const Series& f, SpacePtr target, const std::vector<LaurentMonomial>& images) {
  const SeriesSpace& src = *f.space();
  if (images.size() != src.num_vars())
    throw std::invalid_argument("substitute: one image per source variable required");
  for (const auto& m : images)
    if (m.exponents.size() != target->num_vars())
      throw std::invalid_argument("substitute: image over the wrong variable set");
  Series out(target);
  for (const auto& [exps, c] : f.terms()) {
    LaurentMonomial img{c, std::vector<int>(target->num_vars(), 0)};
    for (std::size_t v = 0; v < exps.size(); ++v)
      if (exps[v]) img *= images[v].pow(exps[v]);
    if (!img.nonnegative())
      throw std::domain_error("substitution sends a retained term to a negative exponent");
    out.add_term(img.exponents, img.coefficient);
  }
  return out;
}

Series eval_at(const Series& f, const std::map<std::string, Rational>& point) {
  const SeriesSpace& src = *f.space();
  std::vector<std::string> names;
  std::vector<int> bounds;
  std::vector<bool> graded;
  std::vector<std::optional<Rational>> value(src.num_vars());
  for (std::size_t v = 0; v < src.num_vars(); ++v) {
    const auto it = point.find(src.names()[v]);
    if (it != point.end()) {
      value[v] = it->second;
    } else {
      names.push_back(src.names()[v]);
      bounds.push_back(src.max_degree(v));
      graded.push_back(src.graded(v));
    }
  }
  for (const auto& [name, _] : point)
    if (!src.index_of(name)) throw std::invalid_argument("eval_at: unknown variable " + name);
  auto target = make_space(names, bounds, graded, src.total_bound());
  Series out(target);
  std::vector<int> rest;
  for (const auto& [exps, c] : f.terms()) {
    Rational term = c;
    rest.clear();
    for (std::size_t v = 0; v < exps.size(); ++v) {
      if (value[v])
        term *= power(*value[v], exps[v]);
      else
        rest.push_back(exps[v]);
    }
    out.add_term(rest, term);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Coefficient modes

CoefficientMode CoefficientMode::series(int qt_degree) {
  if (qt_degree < 0) throw std::invalid_argument("negative (q,t) degree bound");
  CoefficientMode m;
  m.qt_degree_ = qt_degree;
  return m;
}

CoefficientMode CoefficientMode::eval(QtPoint point) {
  CoefficientMode m;
  m.point_ = std::move(point);
  return m;
}

std::string CoefficientMode::describe() const {
  if (is_series()) return "series(qt_degree=" + std::to_string(qt_degree_) + ")";
  return "eval(q=" + point_->q.get_str() + ", t=" + point_->t.get_str() + ")";
}

SpacePtr make_mode_space(const CoefficientMode& mode, std::vector<std::string> z_names, int z_degree,
                         bool total_bound) {
  std::vector<std::string> names;
  std::vector<int> bounds;
  std::vector<bool> graded;
  if (mode.is_series()) {
    names = {"q", "t"};
    bounds = {mode.qt_degree(), mode.qt_degree()};
    graded = {false, false};
  }
  for (auto& z : z_names) {
    names.push_back(std::move(z));
    bounds.push_back(z_degree);
    graded.push_back(true);
  }
  return make_space(std::move(names), std::move(bounds), std::move(graded),
                    total_bound ? std::optional<int>(z_degree) : std::nullopt);
}

// ---------------------------------------------------------------------------
// Alphabets and Omega

SignedAlphabet::SignedAlphabet(std::initializer_list<Term> terms) {
  for (const auto& t : terms) add(t.coefficient, t.q_exp, t.t_exp);
}

void SignedAlphabet::add(long coefficient, int q_exp, int t_exp) {
  if (q_exp < 0 || t_exp < 0) throw std::invalid_argument("alphabet exponents must be nonnegative");
  if (coefficient == 0) return;
  const auto key = std::make_pair(q_exp, t_exp);
  const long c = (terms_[key] += coefficient);
  if (c == 0) terms_.erase(key);
}

std::vector<SignedAlphabet::Term> SignedAlphabet::terms() const {
  std::vector<Term> out;
  for (const auto& [key, c] : terms_) out.push_back({c, key.first, key.second});
  return out;
}

long SignedAlphabet::coefficient(int q_exp, int t_exp) const {
  const auto it = terms_.find({q_exp, t_exp});
  return it == terms_.end() ? 0 : it->second;
}

SignedAlphabet& SignedAlphabet::operator+=(const SignedAlphabet& o) {
  for (const auto& [key, c] : o.terms_) add(c, key.first, key.second);
  return *this;
}

SignedAlphabet& SignedAlphabet::operator-=(const SignedAlphabet& o) {
  for (const auto& [key, c] : o.terms_) add(-c, key.first, key.second);
  return *this;
}

SignedAlphabet SignedAlphabet::operator-() const {
  SignedAlphabet r;
  return r -= *this;
}

std::string SignedAlphabet::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [key, c] : terms_) {
    const auto [a, b] = key;
    const long mag = c < 0 ? -c : c;
    out += out.empty() ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + ");
    std::string mono;
    if (a) mono += a == 1 ? "q" : "q^" + std::to_string(a);
    if (a && b) mono += '*';
    if (b) mono += b == 1 ? "t" : "t^" + std::to_string(b);
    if (mono.empty())
      out += std::to_string(mag);
    else
      out += (mag == 1 ? "" : std::to_string(mag) + "*") + mono;
  }
  return out;
}

SignedAlphabet q_minus_t() { return SignedAlphabet{{1, 1, 0}, {-1, 0, 1}}; }

SignedAlphabet scale_alphabet(const SignedAlphabet& a, const SignedAlphabet& factor) {
  SignedAlphabet out;
  for (const auto& x : a.terms())
    for (const auto& y : factor.terms()) out.add(x.coefficient * y.coefficient, x.q_exp + y.q_exp, x.t_exp + y.t_exp);
  return out;
}

FactorList omega_factors(const SignedAlphabet& a) {
  std::vector<QtFactor> num, den;
  for (const auto& term : a.terms()) {
    if (term.q_exp == 0 && term.t_exp == 0)
      throw std::invalid_argument("Omega is undefined on an alphabet with a constant term");
    auto& list = term.coefficient > 0 ? den : num;
    const long reps = term.coefficient > 0 ? term.coefficient : -term.coefficient;
    for (long r = 0; r < reps; ++r) list.push_back({term.q_exp, term.t_exp});
  }
  return FactorList(std::move(num), std::move(den));
}

namespace {

LaurentMonomial qt_monomial(const SeriesSpace& sp, int a, int b) {
  const auto q = sp.index_of("q"), t = sp.index_of("t");
  if (!q || !t) throw std::invalid_argument("series space has no q and t variables");
  LaurentMonomial m{1, std::vector<int>(sp.num_vars(), 0)};
  m.exponents[*q] = a;
  m.exponents[*t] = b;
  return m;
}

}  // namespace

Series omega(const SignedAlphabet& a, SpacePtr space) {
  for (const auto& term : a.terms())
    if (term.q_exp == 0 && term.t_exp == 0)
      throw std::invalid_argument("Omega is undefined on an alphabet with a constant term");
  Series s = Series::constant(space, 1);
  for (const auto& term : a.terms()) {
    const auto m = qt_monomial(*space, term.q_exp, term.t_exp);
    for (long r = 0; r < term.coefficient; ++r) s.div_one_minus(m);
    for (long r = 0; r < -term.coefficient; ++r) s.mul_one_minus(m);
  }
  return s;
}

Rational omega_value(const SignedAlphabet& a, const QtPoint& p) { return omega_factors(a).value(p); }

Series factor_series(const FactorList& f, SpacePtr space, const CoefficientMode& mode) {
  if (!mode.is_series()) return Series::constant(std::move(space), f.value(mode.point()));
  Series s = Series::constant(space, 1);
  for (const auto& x : f.numerator()) s.mul_one_minus(qt_monomial(*space, x.q_exp, x.t_exp));
  for (const auto& x : f.denominator()) s.div_one_minus(qt_monomial(*space, x.q_exp, x.t_exp));
  return s;
}

FactorList q_binomial_coefficient(int n) {
  std::vector<QtFactor> num, den;
  for (int i = 0; i < n; ++i) {
    num.push_back({i, 1});
    den.push_back({i + 1, 0});
  }
  return FactorList(std::move(num), std::move(den));
}

Series pochhammer_ratio(const LaurentMonomial& m, SpacePtr space, const CoefficientMode& mode) {
  const SeriesSpace& sp = *space;
  if (m.exponents.size() != sp.num_vars() || !m.nonnegative())
    throw std::domain_error("pochhammer_ratio needs a monomial with nonnegative exponents");
  if (sp.graded_degree(m.exponents) <= 0)
    throw std::invalid_argument("pochhammer_ratio argument must have positive z-degree");
  Series out = Series::constant(space, 1);
  Series coeff = Series::constant(space, 1);
  Rational coeff_value = 1;
  for (int n = 1;; ++n) {
    const auto mn = m.pow(n);
    if (!sp.retains(mn.exponents)) {
      // Larger powers only grow in every exponent, so nothing further survives.
      break;
    }
    if (mode.is_series()) {
      coeff.mul_one_minus(qt_monomial(sp, n - 1, 1));
      coeff.div_one_minus(qt_monomial(sp, n, 0));
      out += coeff.shifted(mn);
    } else {
      const QtPoint& p = mode.point();
      const Rational den = 1 - power(p.q, n);
      if (den == 0) throw std::domain_error("(q;q)_n vanishes at the evaluation point");
      coeff_value *= (1 - p.t * power(p.q, n - 1)) / den;
      LaurentMonomial term = mn;
      term.coefficient *= coeff_value;
      out.add_term(term.exponents, term.coefficient);
    }
  }
  return out;
}

}  // namespace cylindric
