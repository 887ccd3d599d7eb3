#include "cylindric/partition.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace cylindric {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 0) throw std::invalid_argument("partition has a negative part");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw std::invalid_argument("partition parts must be weakly decreasing");
  }
}

int Partition::weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

std::string to_string(const Partition& p) {
  std::string out = "(";
  for (std::size_t i = 0; i < p.length(); ++i) {
    if (i) out += ',';
    out += std::to_string(p[i]);
  }
  return out + ')';
}

Profile::Profile(std::string_view bits) : bits_(bits) {
  for (char c : bits_)
    if (c != '0' && c != '1')
      throw std::invalid_argument("profile '" + bits_ + "' has a character outside {0,1}");
}

bool Profile::is_minimal() const {
  return bits_.empty() || (bits_.front() == '1' && bits_.back() == '0');
}

std::size_t Profile::count_ones() const {
  return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), '1'));
}

Partition conjugate(const Partition& lambda) {
  std::vector<int> out(static_cast<std::size_t>(lambda.first()), 0);
  for (int part : lambda.parts())
    for (int j = 0; j < part; ++j) ++out[static_cast<std::size_t>(j)];
  return Partition(std::move(out));
}

Profile to_profile(const Partition& lambda, std::size_t rows, std::size_t cols) {
  if (rows < lambda.length() || cols < static_cast<std::size_t>(lambda.first()))
    throw std::invalid_argument("profile frame too small for " + to_string(lambda));
  // Walk rows from the bottom (shortest) to the top: before the zero of row i
  // come the ones of all columns j <= lambda_i.
  std::string bits;
  bits.reserve(rows + cols);
  std::size_t ones = 0;
  for (std::size_t r = rows; r-- > 0;) {
    const auto part = static_cast<std::size_t>(lambda[r]);
    bits.append(part - ones, '1');
    ones = part;
    bits.push_back('0');
  }
  bits.append(cols - ones, '1');
  return Profile(bits);
}

Profile to_minimal_profile(const Partition& lambda) {
  return to_profile(lambda, lambda.length(), static_cast<std::size_t>(lambda.first()));
}

Partition from_profile(const Profile& p) {
  const std::string& s = p.str();
  const auto begin = s.find('1');
  if (begin == std::string::npos) return {};
  const auto end = s.rfind('0');
  if (end == std::string::npos || end < begin) return {};
  std::vector<int> rows;
  int ones = 0;
  for (std::size_t k = begin; k <= end; ++k) {
    if (s[k] == '1')
      ++ones;
    else
      rows.push_back(ones);
  }
  std::reverse(rows.begin(), rows.end());
  return Partition(std::move(rows));
}

std::vector<Inversion> inversions(const Profile& p) {
  std::vector<Inversion> out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] != 1) continue;
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if (p[j] == 0) out.push_back({i, j});
  }
  return out;
}

Inversion box_to_inversion(const Profile& p, Box s) {
  if (s.row < 1 || s.col < 1) throw std::out_of_range("box coordinates are 1-indexed");
  std::size_t i = p.size(), j = p.size();
  int ones = 0;
  for (std::size_t k = 0; k < p.size(); ++k)
    if (p[k] == 1 && ++ones == s.col) {
      i = k;
      break;
    }
  int zeros = 0;
  for (std::size_t k = p.size(); k-- > 0;)
    if (p[k] == 0 && ++zeros == s.row) {
      j = k;
      break;
    }
  if (i >= p.size() || j >= p.size() || i > j)
    throw std::out_of_range("box does not lie in the partition of profile " + p.str());
  return {i, j};
}

Box inversion_to_box(const Profile& p, Inversion s) {
  if (s.i >= s.j || s.j >= p.size() || p[s.i] != 1 || p[s.j] != 0)
    throw std::out_of_range("not an inversion of profile " + p.str());
  Box b{0, 0};
  for (std::size_t k = 0; k <= s.i; ++k) b.col += p[k];
  for (std::size_t k = s.j; k < p.size(); ++k) b.row += 1 - p[k];
  return b;
}

bool contains(const Partition& lambda, Box s) {
  return s.row >= 1 && s.col >= 1 && s.col <= lambda[static_cast<std::size_t>(s.row - 1)];
}

ArmLeg arm_leg(const Partition& lambda, Box s) {
  if (!contains(lambda, s))
    throw std::out_of_range("box (" + std::to_string(s.row) + "," + std::to_string(s.col) +
                            ") is not in " + to_string(lambda));
  const Partition conj = conjugate(lambda);
  return {lambda[static_cast<std::size_t>(s.row - 1)] - s.col,
          conj[static_cast<std::size_t>(s.col - 1)] - s.row};
}

ArmLeg arm_leg(const Profile& p, Inversion s) {
  if (s.i >= s.j || s.j >= p.size() || p[s.i] != 1 || p[s.j] != 0)
    throw std::out_of_range("not an inversion of profile " + p.str());
  ArmLeg al;
  for (std::size_t k = s.i + 1; k < s.j; ++k) (p[k] == 1 ? al.arm : al.leg) += 1;
  return al;
}

int hook_length(const Partition& lambda, Box s) {
  const auto al = arm_leg(lambda, s);
  return al.arm + al.leg + 1;
}

bool is_horizontal_strip(const Partition& lambda, const Partition& mu) {
  const std::size_t n = std::max(lambda.length(), mu.length());
  for (std::size_t i = 0; i < n; ++i) {
    if (lambda[i] < mu[i]) return false;
    if (mu[i] < lambda[i + 1]) return false;
  }
  return true;
}

bool is_horizontal_strip_by_columns(const Partition& lambda, const Partition& mu) {
  const Partition lc = conjugate(lambda), mc = conjugate(mu);
  const std::size_t n = std::max(lc.length(), mc.length());
  for (std::size_t j = 0; j < n; ++j) {
    const int d = lc[j] - mc[j];
    if (d != 0 && d != 1) return false;
  }
  return true;
}

bool is_horizontal_strip_by_profiles(const Partition& lambda, const Partition& mu) {
  const std::size_t rows = std::max(lambda.length(), mu.length());
  const auto cols = static_cast<std::size_t>(std::max(lambda.first(), mu.first()));
  const Profile pl = to_profile(lambda, rows, cols), pm = to_profile(mu, rows, cols);
  std::vector<std::size_t> ones_l, ones_m;
  for (std::size_t k = 0; k < pl.size(); ++k) {
    if (pl[k] == 1) ones_l.push_back(k);
    if (pm[k] == 1) ones_m.push_back(k);
  }
  for (std::size_t k = 0; k < ones_l.size(); ++k) {
    const auto shift = static_cast<long>(ones_m[k]) - static_cast<long>(ones_l[k]);
    if (shift != 0 && shift != 1) return false;
  }
  return true;
}

namespace {

void partitions_rec(int remaining, int max_part, std::vector<int>& cur, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(cur);
    return;
  }
  for (int part = std::min(remaining, max_part); part >= 1; --part) {
    cur.push_back(part);
    partitions_rec(remaining - part, part, cur, out);
    cur.pop_back();
  }
}

void add_strip_rec(const Partition& mu, std::size_t row, int budget, std::vector<int>& cur,
                   std::vector<Partition>& out) {
  if (row > mu.length()) {
    out.emplace_back(cur);
    return;
  }
  const int lo = mu[row];
  const int hi = row == 0 ? mu[0] + budget : std::min(mu[row - 1], mu[row] + budget);
  for (int v = lo; v <= hi; ++v) {
    cur.push_back(v);
    add_strip_rec(mu, row + 1, budget - (v - lo), cur, out);
    cur.pop_back();
  }
}

void remove_strip_rec(const Partition& lambda, std::size_t row, std::vector<int>& cur,
                      std::vector<Partition>& out) {
  if (row == lambda.length()) {
    out.emplace_back(cur);
    return;
  }
  for (int v = lambda[row + 1]; v <= lambda[row]; ++v) {
    cur.push_back(v);
    remove_strip_rec(lambda, row + 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  if (n < 0) return out;
  std::vector<int> cur;
  partitions_rec(n, n, cur, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Partition> partitions_up_to(int n) {
  std::vector<Partition> out;
  for (int k = 0; k <= n; ++k) {
    auto level = partitions_of(k);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

std::vector<Partition> add_horizontal_strips(const Partition& mu, int max_added) {
  std::vector<Partition> out;
  if (max_added < 0) return out;
  std::vector<int> cur;
  add_strip_rec(mu, 0, max_added, cur, out);
  return out;
}

std::vector<Partition> remove_horizontal_strips(const Partition& lambda) {
  std::vector<Partition> out;
  std::vector<int> cur;
  remove_strip_rec(lambda, 0, cur, out);
  return out;
}

}  // namespace cylindric
