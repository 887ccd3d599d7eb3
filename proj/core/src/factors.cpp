#include "cylindric/factors.hpp"

#include <algorithm>
#include <iterator>
#include <stdexcept>

namespace cylindric {

FactorList::FactorList(std::vector<QtFactor> num, std::vector<QtFactor> den)
    : num_(std::move(num)), den_(std::move(den)) {
  canonicalize();
}

void FactorList::canonicalize() {
  for (const auto* list : {&num_, &den_})
    for (const auto& f : *list)
      if (f.q_exp == 0 && f.t_exp == 0)
        throw std::invalid_argument("factor (1 - q^0 t^0) vanishes identically");
  std::sort(num_.begin(), num_.end());
  std::sort(den_.begin(), den_.end());
  std::vector<QtFactor> num, den;
  std::set_difference(num_.begin(), num_.end(), den_.begin(), den_.end(), std::back_inserter(num));
  std::set_difference(den_.begin(), den_.end(), num_.begin(), num_.end(), std::back_inserter(den));
  num_ = std::move(num);
  den_ = std::move(den);
}

FactorList& FactorList::operator*=(const FactorList& other) {
  num_.insert(num_.end(), other.num_.begin(), other.num_.end());
  den_.insert(den_.end(), other.den_.begin(), other.den_.end());
  canonicalize();
  return *this;
}

Rational FactorList::value(const QtPoint& p) const {
  auto factor = [&](const QtFactor& f) { return Rational(1 - power(p.q, f.q_exp) * power(p.t, f.t_exp)); };
  Rational num = 1, den = 1;
  for (const auto& f : num_) num *= factor(f);
  for (const auto& f : den_) den *= factor(f);
  if (den == 0)
    throw std::domain_error("factor list " + to_string() + " has a vanishing denominator at q=" +
                            p.q.get_str() + ", t=" + p.t.get_str());
  return num / den;
}

FactorList FactorList::at_q_zero() const {
  std::vector<QtFactor> num, den;
  for (const auto& f : num_)
    if (f.q_exp == 0) num.push_back(f);
  for (const auto& f : den_)
    if (f.q_exp == 0) den.push_back(f);
  return FactorList(std::move(num), std::move(den));
}

bool FactorList::cancels_at_q_equals_t() const {
  auto degrees = [](const std::vector<QtFactor>& fs) {
    std::vector<int> d;
    for (const auto& f : fs) d.push_back(f.q_exp + f.t_exp);
    std::sort(d.begin(), d.end());
    return d;
  };
  return degrees(num_) == degrees(den_);
}

std::string FactorList::to_string() const {
  auto render = [](const std::vector<QtFactor>& fs) {
    if (fs.empty()) return std::string("1");
    std::string out;
    for (const auto& f : fs) {
      out += "(1-";
      if (f.q_exp) out += f.q_exp == 1 ? "q" : "q^" + std::to_string(f.q_exp);
      if (f.q_exp && f.t_exp) out += '*';
      if (f.t_exp) out += f.t_exp == 1 ? "t" : "t^" + std::to_string(f.t_exp);
      out += ')';
    }
    return out;
  };
  if (den_.empty()) return render(num_);
  return render(num_) + "/" + render(den_);
}

}  // namespace cylindric
