#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sfc/curve.hpp"
#include "sfc/geometry.hpp"

namespace sfc {

// Everything here is restricted to single-base seeds unless stated otherwise.

enum class Induced { Corner, Side };

// Symbolic shape key. Side-induced keys carry the normalized tail pi_2..pi_k.
struct ShapeKey {
    Induced induced = Induced::Corner;
    int group = 1;
    Codes omega;
    bool operator==(const ShapeKey&) const = default;
    auto operator<=>(const ShapeKey&) const = default;
};

int corner_group(Base x, bool first_two_equal);
int side_group(Base x);
bool is_corner_induced(const Encoding& e);

ShapeKey shape_group(const Encoding& e);  // k >= 2
std::string to_string(const ShapeKey& s);

// Canonical geometric signature: lexicographic minimum of the translated point
// list over the 8 dihedral maps and both traversal orders.
std::vector<Coord> shape_signature(const std::vector<Coord>& pts);
std::vector<Coord> shape_signature(const Encoding& e);

bool same_shape(const Encoding& a, const Encoding& b);
bool same_shape_geometric(const Encoding& a, const Encoding& b);

bool is_homogeneous(const Encoding& a, const Encoding& b);
std::optional<int> homogeneous_family(const Encoding& e);

// Points of the curve mapped by a rotation and optional mirror so that its
// four subunits run lower-left, upper-left, upper-right, lower-right.
std::vector<Coord> base_facing_points(const Encoding& e);

std::int64_t count_shapes(int k);

struct PartialTag {
    int group = 1;
    Codes codes;          // empty for the two level-2 groups
    bool level2 = false;  // k == 2: group 1 is {1,2,6}, group 2 is {3,4,5}
    bool operator==(const PartialTag&) const = default;
};
std::string to_string(const PartialTag& t);

std::optional<PartialTag> partial_tag(const Encoding& e);
std::optional<PartialTag> partially_identical(const Encoding& a, const Encoding& b);

bool completely_distinct(const Encoding& a, const Encoding& b);
// Brute force: level-2 units at equal positions differ on every reduction.
bool completely_distinct_sweep(const Encoding& a, const Encoding& b);

struct Taxonomy {
    enum Kind { Hilbert, HilbertVariant, BetaOmega, BetaOmegaVariant } kind = Hilbert;
    int order = 0;     // variants only
    std::string type;  // V1..V9, or O/B1/B2 for the curve itself
    bool operator==(const Taxonomy&) const = default;
};
std::string to_string(const Taxonomy& t);

Taxonomy classify_taxonomy(const Encoding& e);  // k >= 2

struct Flags {
    bool recursive = false;
    bool subunit_identical = false;
    bool subunit_different = false;
    bool completely_non_recursive = false;
    bool symmetric_A = false;
    bool symmetric_AB = false;
    bool closed = false;
    bool operator==(const Flags&) const = default;
};

Flags structural_flags(const Encoding& e);  // pattern rules, k >= 2

// Flags evaluated from their definitions on the point path.
bool recursive_geometric(const Encoding& e);
bool subunit_identical_geometric(const Encoding& e);
bool subunit_different_geometric(const Encoding& e);
bool completely_non_recursive_geometric(const Encoding& e);
bool symmetric_A_geometric(const Encoding& e);
bool symmetric_B_geometric(const Encoding& e);
bool closed_geometric(const Encoding& e);

struct GroupCounts {
    int group = 1;
    int h = 1;
    std::int64_t shapes = 1;          // n_k
    std::vector<std::int64_t> H, B;  // index j - 1 for order j = 1..k-2
};
std::vector<GroupCounts> hierarchical_shape_counts(int k);

struct ShapeClass {
    ShapeKey key;
    std::int64_t delta = 0;  // integer representation of pi_2..pi_k, side-induced only
    Taxonomy taxonomy;
    Flags flags;
};

ShapeClass classify(const Encoding& e);
std::string to_json(const Encoding& e, const ShapeClass& c);

}  // namespace sfc
