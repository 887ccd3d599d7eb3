#include "cylindric/paths.hpp"

#include <algorithm>
#include <stdexcept>

namespace cylindric {

int PathFamily::height(std::size_t i, std::size_t k) const {
  const LatticePath& p = paths.at(i);
  int y = p.start;
  for (std::size_t s = 0; s < k; ++s) y += p.steps[s] == '1' ? 1 : -1;
  return y;
}

PathFamily to_paths(const CylindricPlanePartition& c) {
  const std::size_t T = c.period();
  int widest = 0;
  std::vector<Partition> conj;
  for (const auto& p : c.mu) {
    widest = std::max(widest, p.first());
    conj.push_back(conjugate(p));
  }
  const auto m = static_cast<std::size_t>(widest) + 1;
  const auto rows = static_cast<int>(c.mu.front().length());

  PathFamily f{T, {}};
  for (std::size_t j = 0; j < m; ++j) {
    LatticePath path;
    // Path j+1 sits at twice the position of the (j+1)-th one of mu[0]'s
    // profile: (j+1) ones and rows - mu'_{j+1} zeros precede it.
    path.start = 2 * (static_cast<int>(j) + 1 + rows - conj.front()[j]);
    for (std::size_t k = 0; k < T; ++k) {
      const int bit = conj[k][j] - conj[k + 1][j] + c.profile[k];
      path.steps.push_back(bit == 1 ? '1' : '0');
    }
    f.paths.push_back(std::move(path));
  }
  return f;
}

namespace {

void check_shape(const PathFamily& f) {
  if (f.period == 0) throw std::invalid_argument("path family has period 0");
  if (f.paths.empty()) throw std::invalid_argument("path family has no paths");
  for (const auto& p : f.paths) {
    if (p.steps.size() != f.period)
      throw std::invalid_argument("path with " + std::to_string(p.steps.size()) + " steps in a family of period " +
                                  std::to_string(f.period));
    if (p.steps.find_first_not_of("01") != std::string::npos)
      throw std::invalid_argument("path steps must be over {0,1}");
  }
  if (f.paths.front().start % 2 != 0) throw std::invalid_argument("path starts must be even");
  const int shift = f.height(0, f.period) - f.height(0, 0);
  for (std::size_t i = 0; i + 1 < f.paths.size(); ++i) {
    if ((f.paths[i + 1].start - f.paths[i].start) % 2 != 0)
      throw std::invalid_argument("paths " + std::to_string(i + 1) + " and " + std::to_string(i + 2) +
                                  " start at heights of different parity");
    for (std::size_t k = 0; k <= f.period; ++k)
      if (f.height(i + 1, k) <= f.height(i, k))
        throw std::invalid_argument("paths " + std::to_string(i + 1) + " and " + std::to_string(i + 2) +
                                    " intersect at step " + std::to_string(k));
  }
  for (std::size_t i = 0; i < f.paths.size(); ++i)
    if (f.height(i, f.period) - f.height(i, 0) != shift)
      throw std::invalid_argument("path " + std::to_string(i + 1) + " does not close up on the cylinder");
}

}  // namespace

Profile vertical_reading(const PathFamily& f, std::size_t x) {
  check_shape(f);
  if (x > f.period) throw std::out_of_range("column beyond the period");
  const std::size_t m = f.paths.size();
  std::vector<int> ys;
  for (std::size_t i = 0; i + 1 < m; ++i) ys.push_back(f.height(i, x));
  const int top = f.height(m - 1, x);
  std::string bits;
  for (int y = f.height(0, x); y < top; y += 2)
    bits.push_back(std::binary_search(ys.begin(), ys.end(), y) ? '1' : '0');
  return Profile(bits);
}

CylindricPlanePartition from_paths(const PathFamily& f) {
  check_shape(f);
  const std::size_t T = f.period;
  std::vector<Partition> mu;
  for (std::size_t k = 0; k < T; ++k) mu.push_back(from_profile(vertical_reading(f, k)));
  mu.push_back(mu.front());
  CylindricPlanePartition c;
  try {
    c = validate(Profile(f.paths.back().steps), std::move(mu));
  } catch (const InvalidCylindricPartition& e) {
    throw std::invalid_argument(std::string("path family does not encode a cylindric plane partition: ") +
                                e.what());
  }
  const PathFamily canonical = to_paths(c);
  if (canonical.paths.size() != f.paths.size())
    throw std::invalid_argument("path family is not minimal: expected " + std::to_string(canonical.paths.size()) +
                                " paths, got " + std::to_string(f.paths.size()));
  const int offset = f.paths.front().start - canonical.paths.front().start;
  for (std::size_t i = 0; i < f.paths.size(); ++i)
    if (f.paths[i].steps != canonical.paths[i].steps || f.paths[i].start - canonical.paths[i].start != offset)
      throw std::invalid_argument("path " + std::to_string(i + 1) + " is inconsistent with the vertical readings");
  return c;
}

CubeClassification classify_cubes(const PathFamily& f) {
  check_shape(f);
  const std::size_t T = f.period;
  CubeClassification out;
  for (std::size_t x = 0; x < T; ++x) {
    const Profile rho = vertical_reading(f, x);
    const int bottom = f.height(0, x);
    // Index of the path through each occupied position.
    std::vector<std::size_t> path_at(rho.size(), 0);
    for (std::size_t i = 0; i + 1 < f.paths.size(); ++i)
      path_at[static_cast<std::size_t>((f.height(i, x) - bottom) / 2)] = i;
    for (const auto& inv : inversions(rho)) {
      ClassifiedCube cc;
      cc.cube = {x, bottom + 2 * static_cast<int>(inv.i), bottom + 2 * static_cast<int>(inv.j)};
      cc.path = path_at[inv.i];
      const auto al = arm_leg(rho, inv);
      cc.arm = al.arm;
      cc.leg = al.leg;
      const std::string& steps = f.paths[cc.path].steps;
      const char in = steps[(x + T - 1) % T], out_step = steps[x];
      if (in == '0' && out_step == '1')
        cc.kind = CubeKind::valley;
      else if (in == '1' && out_step == '0')
        cc.kind = CubeKind::peak;
      out.all.push_back(cc);
      if (cc.kind == CubeKind::peak) out.peaks.push_back(cc);
      if (cc.kind == CubeKind::valley) out.valleys.push_back(cc);
      if (cc.surface()) out.surface.push_back(cc);
    }
  }
  return out;
}

ArmLeg cube_arm_leg(const PathFamily& f, const Cube& c) {
  if (c.column >= f.period) throw std::invalid_argument("cube column outside 0..T-1");
  const Profile rho = vertical_reading(f, c.column);
  const int bottom = f.height(0, c.column);
  const int bi = c.black_y - bottom, wi = c.white_y - bottom;
  const auto n = static_cast<int>(rho.size());
  if (bi < 0 || wi <= bi || bi % 2 || wi % 2 || wi / 2 >= n || rho[static_cast<std::size_t>(bi / 2)] != 1 ||
      rho[static_cast<std::size_t>(wi / 2)] != 0)
    throw std::invalid_argument("not a cube of the family");
  return arm_leg(rho, Inversion{static_cast<std::size_t>(bi / 2), static_cast<std::size_t>(wi / 2)});
}

SignedAlphabet d_alphabet(const CylindricPlanePartition& c) {
  SignedAlphabet d;
  for (const auto& cc : classify_cubes(to_paths(c)).all) {
    if (cc.kind == CubeKind::valley) d.add(1, cc.arm, cc.leg);
    if (cc.kind == CubeKind::peak) d.add(-1, cc.arm, cc.leg);
  }
  return d;
}

namespace {

// Columns j (0-indexed) with lambda'_j > mu'_j.
std::vector<bool> moving_columns(const Partition& lambda, const Partition& mu) {
  const Partition lc = conjugate(lambda), mc = conjugate(mu);
  std::vector<bool> cols(static_cast<std::size_t>(std::max(lambda.first(), mu.first())));
  for (std::size_t j = 0; j < cols.size(); ++j) cols[j] = lc[j] > mc[j];
  return cols;
}

bool member(const std::vector<bool>& cols, int j) {
  return static_cast<std::size_t>(j) < cols.size() && cols[static_cast<std::size_t>(j)];
}

}  // namespace

SignedAlphabet d_alphabet_interlacing(const CylindricPlanePartition& c) {
  const std::size_t T = c.period();
  SignedAlphabet d;
  for (std::size_t k = 1; k <= T; ++k) {
    const Partition& prev = c.mu[k - 1];
    const Partition& cur = c.mu[k];
    const Partition& next = c.mu[k == T ? 1 : k + 1];
    const int in = c.profile[k - 1], out = c.profile[k % T];
    // Column sets of the strips on either side of mu[k], oriented as
    // larger/smaller partition.
    const auto before = in == 1 ? moving_columns(cur, prev) : moving_columns(prev, cur);
    const auto after = out == 1 ? moving_columns(next, cur) : moving_columns(cur, next);
    const Partition conj = conjugate(cur);
    for (std::size_t i = 0; i < cur.length(); ++i)
      for (int j = 0; j < cur[i]; ++j) {
        const bool b = member(before, j), a = member(after, j);
        int sign = 0;
        // (in, out) = 11: +[b] - [a];  00: +[!b] - [!a];
        //             10: +[b] - [!a]; 01: +[!b] - [a].
        sign += in == 1 ? (b ? 1 : 0) : (b ? 0 : 1);
        sign -= out == 1 ? (a ? 1 : 0) : (a ? 0 : 1);
        if (sign != 0) d.add(sign, cur[i] - j - 1, conj[static_cast<std::size_t>(j)] - static_cast<int>(i) - 1);
      }
  }
  return d;
}

FactorList hall_littlewood_weight(const CylindricPlanePartition& c) {
  std::vector<QtFactor> num, den;
  for (const auto& cc : classify_cubes(to_paths(c)).surface) {
    if (cc.kind == CubeKind::valley) num.push_back({0, cc.level()});
    if (cc.kind == CubeKind::peak) den.push_back({0, cc.level()});
  }
  return FactorList(std::move(num), std::move(den));
}

}  // namespace cylindric
