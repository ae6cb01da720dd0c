#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sfc/curve.hpp"

namespace sfc {

struct PointPath {
    std::vector<Coord> points;
    Heading entry_dir, exit_dir;
    bool operator==(const PointPath&) const = default;
};

std::string to_json(const PointPath& p);
PointPath point_path_from_json(const std::string& text);

PointPath coordinates(const BaseSequence& s, Coord entry = {0, 0});
PointPath walk(const Encoding& e, Coord entry = {0, 0}, int max_level = kDefaultMaxLevel);

// Offset from the entry cell of a square curve to the entry cell of whatever follows it.
Coord unit_offset(const Encoding& square);
Coord first_cell(const Encoding& square);  // relative to the lower-left cell of the square
Coord last_cell(const Encoding& square);

// Entry cell in the frame whose lower-left curve cell is (1,1).
Coord entry_point(const Encoding& e);

struct Located {
    Coord point;
    std::vector<Coord> anchors;  // entry cell of the subunit chosen at each level
    std::vector<int> digits;     // quaternary digits q_1..q_k
};

Located locate_point_verbose(const Encoding& e, std::int64_t n, Coord entry);
Coord locate_point(const Encoding& e, std::int64_t n, Coord entry);
// Same quantity summed from the table of subunit forms rather than by anchors.
Coord locate_point_tabulated(const Encoding& e, std::int64_t n, Coord entry);

// Q(unit, i, j): quaternary index of the quadrant at column i, row j (both 1-based).
using QuadrantMatrix = std::array<std::array<int, 2>, 2>;
QuadrantMatrix quadrant_matrix(OrientedBase b, int code);

struct BBox {
    Coord lo, hi;  // inclusive corners
};

struct Indexed {
    std::int64_t index;
    std::vector<int> digits;
};

Indexed index_of_verbose(const Encoding& e, Coord target, BBox box);
std::int64_t index_of(const Encoding& e, Coord target, BBox box);
BBox bounding_box(const Encoding& e, Coord entry);

enum class Quadrant { LL, LR, UL, UR };
std::optional<Quadrant> quadrant_from_string(const std::string& s);

// Entry cell in the (1,1) frame of a 2^k square, heading of the first step,
// the quadrant holding the last level-1 subunit and the exit heading.
struct Endpoints {
    int k;
    Coord entry;
    Heading entry_dir;
    Quadrant exit_quadrant;
    Heading exit_dir;
};

Endpoints endpoints_of(const Encoding& e);
std::vector<Encoding> determine_all_from_endpoints(const Endpoints& ep);
Encoding determine_from_endpoints(const Endpoints& ep);

}  // namespace sfc
