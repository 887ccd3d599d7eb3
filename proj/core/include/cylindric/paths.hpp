#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "cylindric/cylindric_partition.hpp"
#include "cylindric/series.hpp"

namespace cylindric {

// One lattice path on the period-T cylinder: start height y_0 and T steps,
// '1' = up (+1), '0' = down (-1).
struct LatticePath {
  int start = 0;
  std::string steps;
  friend bool operator==(const LatticePath&, const LatticePath&) = default;
};

// Paths listed bottom to top. The top path repeats the profile.
struct PathFamily {
  std::size_t period = 0;
  std::vector<LatticePath> paths;

  // y_k of path i, k = 0..T.
  int height(std::size_t i, std::size_t k) const;

  friend bool operator==(const PathFamily&, const PathFamily&) = default;
};

// The family of a cylindric plane partition, with the bottom path placed so
// that path i starts at twice the position of the i-th one of mu[0]'s profile.
PathFamily to_paths(const CylindricPlanePartition& c);

// Inverse of to_paths. Accepts any even vertical translate of a canonical family;
// throws std::invalid_argument if the paths cross, do not close up, are not
// minimal, or do not come from a cylindric plane partition.
CylindricPlanePartition from_paths(const PathFamily& f);

// Column x read upward from the bottom path to just below the top path:
// '1' for a vertex on a path, '0' otherwise. A generalized profile of mu[x].
Profile vertical_reading(const PathFamily& f, std::size_t x);

enum class CubeKind { peak, valley, neither };

// An occupied (black) vertex below an unoccupied (white) one in column x.
struct Cube {
  std::size_t column = 0;
  int black_y = 0;
  int white_y = 0;
  friend auto operator<=>(const Cube&, const Cube&) = default;
};

struct ClassifiedCube {
  Cube cube;
  CubeKind kind = CubeKind::neither;
  // Index of the path through the black vertex.
  std::size_t path = 0;
  int arm = 0;
  int leg = 0;
  bool surface() const { return arm == 0; }
  // Rungs between the two vertices.
  int level() const { return (cube.white_y - cube.black_y) / 2; }
};

struct CubeClassification {
  std::vector<ClassifiedCube> all;
  std::vector<ClassifiedCube> peaks;
  std::vector<ClassifiedCube> valleys;
  std::vector<ClassifiedCube> surface;
};

// Cubes of columns 0..T-1; column T is the same column as 0 on the cylinder.
CubeClassification classify_cubes(const PathFamily& f);

// arm = occupied vertices strictly between, leg = unoccupied ones. Throws
// std::invalid_argument if c is not a cube of f.
ArmLeg cube_arm_leg(const PathFamily& f, const Cube& c);

// Sum of q^arm t^leg over valley cubes minus the same over peak cubes.
SignedAlphabet d_alphabet(const CylindricPlanePartition& c);

// The same alphabet from the interlacing sequence alone: every box of every
// mu[k] contributes q^a t^l with a sign fixed by (pi_k, pi_{k+1}) and by
// whether its column meets the strips on either side.
SignedAlphabet d_alphabet_interlacing(const CylindricPlanePartition& c);

// At q = 0: prod over surface valley cubes of (1 - t^level) divided by the
// same over surface peak cubes.
FactorList hall_littlewood_weight(const CylindricPlanePartition& c);

}  // namespace cylindric
