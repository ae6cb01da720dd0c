#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace sfc {

struct Error : std::runtime_error {
    enum Kind { Parse, Validation, Domain };
    Kind kind;
    Error(Kind k, const std::string& what) : std::runtime_error(what), kind(k) {}
};

enum class Base : std::uint8_t { I, R, L, U, B, D, P, Q, C };
inline constexpr std::array<Base, 9> kAllBases = {Base::I, Base::R, Base::L, Base::U, Base::B,
                                                  Base::D, Base::P, Base::Q, Base::C};

// Headings are absolute: 0 = right, 90 = up. Closed slots are reported as nullopt.
using Heading = std::optional<int>;

struct Coord {
    int x = 0, y = 0;
    bool operator==(const Coord&) const = default;
    auto operator<=>(const Coord&) const = default;
    Coord operator+(Coord o) const { return {x + o.x, y + o.y}; }
    Coord operator-(Coord o) const { return {x - o.x, y - o.y}; }
};

inline int norm(int deg) { return ((deg % 360) + 360) % 360; }
inline int complement(int code) { return 3 - code; }

Coord heading_vec(int heading);
Coord rotate_vec(Coord v, int deg);
std::optional<int> heading_between(Coord from, Coord to);

char symbol(Base b);
std::optional<Base> base_from_char(char c);
bool is_primary(Base b);
bool entry_closed(Base b);
bool exit_closed(Base b);

struct OrientedBase {
    Base base = Base::I;
    std::uint8_t quarter = 0;  // rotation / 90

    OrientedBase() = default;
    OrientedBase(Base b, int deg) : base(b), quarter(static_cast<std::uint8_t>(norm(deg) / 90)) {}
    int rot() const { return quarter * 90; }
    bool operator==(const OrientedBase&) const = default;
};

std::string to_string(OrientedBase b);

Heading entry_heading(OrientedBase b);
Heading exit_heading(OrientedBase b);

OrientedBase rotate_base(OrientedBase b, int t);
int next_code(Base prev, int prev_code);
int next_rotation(OrientedBase prev);
OrientedBase reflect_base(OrientedBase b);
OrientedBase reverse_base(OrientedBase b);

std::vector<OrientedBase> reflect_seq(const std::vector<OrientedBase>& s);
std::vector<OrientedBase> reverse_seq(const std::vector<OrientedBase>& s);

// Cells of a 2x2 unit: lower-left is (0,0).
Coord rotate_cell(Coord c, int deg);
int corner_value(Coord cell);

struct CornerTuple {
    int entry = 1, exit = 2;
    bool operator==(const CornerTuple&) const = default;
};

struct Level1Unit {
    std::array<OrientedBase, 4> bases;
    std::array<Coord, 4> cells;
    OrientedBase source;
    int code = 1;
};

struct RuleEntry {
    std::array<OrientedBase, 4> bases;
    std::array<Coord, 4> cells;
    int candidates = 1;   // survivors of the constraint search
    std::string resolved;  // non-empty when a tie had to be broken
};

struct RuleTable {
    // indexed [base][code - 1]
    std::array<std::array<RuleEntry, 2>, 9> entries;
    const RuleEntry& at(Base b, int code) const { return entries[static_cast<int>(b)][code - 1]; }
    std::vector<std::string> diagnostics() const;
};

RuleTable build_rule_table();
const RuleTable& rule_table();

Level1Unit expand_base(OrientedBase b, int code);
CornerTuple corner_tuple(const Level1Unit& u);

}  // namespace sfc
