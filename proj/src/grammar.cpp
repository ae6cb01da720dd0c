#include "sfc/grammar.hpp"

#include <algorithm>

namespace sfc {

namespace {

constexpr const char kSymbols[] = "IRLUBDPQC";

// base-state entry/exit headings, -1 = closed slot
constexpr int kEntry[9] = {90, 90, 90, 90, -1, -1, 90, 90, -1};
constexpr int kExit[9] = {90, 0, 180, 270, 90, 90, -1, -1, -1};

int idx(Base b) { return static_cast<int>(b); }

bool inside(Coord c) { return c.x >= 0 && c.x <= 1 && c.y >= 0 && c.y <= 1; }

OrientedBase primary_for(int in, int out) {
    int turn = norm(out - in);
    Base b = turn == 0 ? Base::I : turn == 270 ? Base::R : Base::L;
    return {b, in - 90};
}

std::vector<std::array<Coord, 4>> hamiltonian_paths(Coord start) {
    // the 2x2 grid is a 4-cycle; from each start there are two directions round it
    static const std::array<Coord, 4> ring = {Coord{0, 0}, Coord{0, 1}, Coord{1, 1}, Coord{1, 0}};
    int s = 0;
    while (ring[s] != start) ++s;
    std::vector<std::array<Coord, 4>> out;
    for (int step : {1, 3}) {
        std::array<Coord, 4> p;
        for (int i = 0; i < 4; ++i) p[i] = ring[(s + step * i) % 4];
        out.push_back(p);
    }
    return out;
}

std::optional<std::array<OrientedBase, 4>> realise(Base x, const std::array<Coord, 4>& cells) {
    int closing = *heading_between(cells[3], cells[0]);
    int in = kEntry[idx(x)] < 0 ? closing : kEntry[idx(x)];
    int out = kExit[idx(x)] < 0 ? closing : kExit[idx(x)];
    if (kEntry[idx(x)] >= 0 && inside(cells[0] - heading_vec(in))) return std::nullopt;
    if (kExit[idx(x)] >= 0 && inside(cells[3] + heading_vec(out))) return std::nullopt;
    std::array<OrientedBase, 4> bases;
    for (int i = 0; i < 4; ++i) {
        int a = i == 0 ? in : *heading_between(cells[i - 1], cells[i]);
        int b = i == 3 ? out : *heading_between(cells[i], cells[i + 1]);
        if (norm(b - a) == 180) return std::nullopt;
        bases[i] = primary_for(a, b);
    }
    return bases;
}

Coord entry_cell(Base x, int code) {
    if (x == Base::D) return code == 1 ? Coord{1, 1} : Coord{0, 1};
    return code == 1 ? Coord{0, 0} : Coord{1, 0};
}

std::array<OrientedBase, 4> rotated(std::array<OrientedBase, 4> s, int deg) {
    for (auto& b : s) b = rotate_base(b, deg);
    return s;
}

std::array<OrientedBase, 4> reversed_unit(const std::array<OrientedBase, 4>& s) {
    std::vector<OrientedBase> v(s.begin(), s.end());
    v = reverse_seq(v);
    return {v[0], v[1], v[2], v[3]};
}

std::array<Coord, 4> trace_cells(const std::array<OrientedBase, 4>& bases, Coord start) {
    std::array<Coord, 4> cells;
    cells[0] = start;
    for (int i = 1; i < 4; ++i) cells[i] = cells[i - 1] + heading_vec(*exit_heading(bases[i - 1]));
    return cells;
}

}  // namespace

Coord heading_vec(int h) {
    switch (norm(h)) {
        case 0: return {1, 0};
        case 90: return {0, 1};
        case 180: return {-1, 0};
        default: return {0, -1};
    }
}

Coord rotate_vec(Coord v, int deg) {
    switch (norm(deg)) {
        case 0: return v;
        case 90: return {-v.y, v.x};
        case 180: return {-v.x, -v.y};
        default: return {v.y, -v.x};
    }
}

std::optional<int> heading_between(Coord from, Coord to) {
    Coord d = to - from;
    for (int h : {0, 90, 180, 270})
        if (heading_vec(h) == d) return h;
    return std::nullopt;
}

char symbol(Base b) { return kSymbols[idx(b)]; }

std::optional<Base> base_from_char(char c) {
    for (int i = 0; i < 9; ++i)
        if (kSymbols[i] == c) return static_cast<Base>(i);
    return std::nullopt;
}

bool is_primary(Base b) { return b == Base::I || b == Base::R || b == Base::L; }
bool entry_closed(Base b) { return kEntry[idx(b)] < 0; }
bool exit_closed(Base b) { return kExit[idx(b)] < 0; }

std::string to_string(OrientedBase b) {
    std::string s(1, symbol(b.base));
    if (b.rot()) s += "^" + std::to_string(b.rot());
    return s;
}

Heading entry_heading(OrientedBase b) {
    if (entry_closed(b.base)) return std::nullopt;
    return norm(kEntry[idx(b.base)] + b.rot());
}

Heading exit_heading(OrientedBase b) {
    if (exit_closed(b.base)) return std::nullopt;
    return norm(kExit[idx(b.base)] + b.rot());
}

OrientedBase rotate_base(OrientedBase b, int t) { return {b.base, b.rot() + t}; }

int next_code(Base prev, int prev_code) {
    switch (prev) {
        case Base::I: case Base::U: case Base::B: case Base::D: return prev_code;
        case Base::R: case Base::L: return complement(prev_code);
        case Base::C: throw Error(Error::Validation, "singleton-seed violation: C has no successor");
        default: throw Error(Error::Validation, "no successor: exit-closed base");
    }
}

int next_rotation(OrientedBase prev) {
    auto h = exit_heading(prev);
    if (!h) throw Error(Error::Validation, "no successor: exit-closed base " + to_string(prev));
    return norm(*h - 90);
}

OrientedBase reflect_base(OrientedBase b) {
    Base s = b.base == Base::R ? Base::L : b.base == Base::L ? Base::R : b.base;
    return {s, b.rot() % 180 == 0 ? b.rot() : b.rot() + 180};
}

OrientedBase reverse_base(OrientedBase b) {
    static const OrientedBase table[9] = {
        {Base::I, 180}, {Base::L, 90}, {Base::R, 270}, {Base::U, 0}, {Base::P, 180},
        {Base::Q, 180}, {Base::B, 180}, {Base::D, 180}, {Base::C, 0}};
    return rotate_base(table[idx(b.base)], b.rot());
}

std::vector<OrientedBase> reflect_seq(const std::vector<OrientedBase>& s) {
    std::vector<OrientedBase> out;
    out.reserve(s.size());
    for (auto b : s) out.push_back(reflect_base(b));
    return out;
}

std::vector<OrientedBase> reverse_seq(const std::vector<OrientedBase>& s) {
    std::vector<OrientedBase> out(s.rbegin(), s.rend());
    for (auto& b : out) b = reverse_base(b);
    return out;
}

Coord rotate_cell(Coord c, int deg) {
    for (int i = 0; i < norm(deg) / 90; ++i) c = {1 - c.y, c.x};
    return c;
}

int corner_value(Coord cell) { return cell.x == cell.y ? 1 : 2; }

RuleTable build_rule_table() {
    RuleTable t;
    std::array<std::array<std::vector<std::array<OrientedBase, 4>>, 2>, 9> found;
    std::array<std::array<std::vector<std::array<Coord, 4>>, 2>, 9> paths;
    for (Base x : kAllBases)
        for (int code : {1, 2})
            for (auto& p : hamiltonian_paths(entry_cell(x, code)))
                if (auto s = realise(x, p)) {
                    found[idx(x)][code - 1].push_back(*s);
                    paths[idx(x)][code - 1].push_back(p);
                }

    auto pick = [&](Base x, int code, const std::array<OrientedBase, 4>& want, const std::string& why) {
        auto& cands = found[idx(x)][code - 1];
        auto it = std::find(cands.begin(), cands.end(), want);
        if (it == cands.end())
            throw Error(Error::Domain, std::string("rule-derivation failure: tie-break for ") + symbol(x) +
                                           std::to_string(code) + " names no surviving candidate");
        auto& e = t.entries[idx(x)][code - 1];
        e.bases = *it;
        e.cells = paths[idx(x)][code - 1][it - cands.begin()];
        e.candidates = static_cast<int>(cands.size());
        e.resolved = why;
    };

    for (Base x : kAllBases)
        for (int code : {1, 2}) {
            auto& cands = found[idx(x)][code - 1];
            if (cands.empty())
                throw Error(Error::Domain, std::string("rule-derivation failure: no unit for ") + symbol(x) +
                                               std::to_string(code));
            if (cands.size() == 1) pick(x, code, cands[0], "");
        }

    // Exit-closed units are not pinned by the corner constraints. P and Q must
    // reverse onto B and D (r(P|c) = B^180|c', r(Q|c) = D^180|c'), and C's
    // first unit starts with R^90 with its second being the mirror image.
    for (int code : {1, 2}) {
        auto b = rotated(t.at(Base::B, complement(code)).bases, 180);
        pick(Base::P, code, reversed_unit(b), "reversal of B^180 with complemented code");
        auto d = rotated(t.at(Base::D, complement(code)).bases, 180);
        pick(Base::Q, code, reversed_unit(d), "reversal of D^180 with complemented code");
    }
    for (auto& c : found[idx(Base::C)][0])
        if (c[0] == OrientedBase(Base::R, 90)) {
            pick(Base::C, 1, c, "first base R^90");
            break;
        }
    if (t.at(Base::C, 1).bases[0] != OrientedBase(Base::R, 90))
        throw Error(Error::Domain, "rule-derivation failure: no C1 unit starting with R^90");
    {
        auto& c1 = t.at(Base::C, 1).bases;
        std::vector<OrientedBase> v(c1.begin(), c1.end());
        v = reflect_seq(v);
        pick(Base::C, 2, {v[0], v[1], v[2], v[3]}, "horizontal mirror of C1");
    }

    for (Base x : kAllBases)
        for (int code : {1, 2}) {
            auto& e = t.entries[idx(x)][code - 1];
            if (e.candidates > 1 && e.resolved.empty())
                throw Error(Error::Domain, std::string("rule-derivation failure: ") + symbol(x) +
                                               std::to_string(code) + " has several candidates");
            if (trace_cells(e.bases, e.cells[0]) != e.cells)
                throw Error(Error::Domain, "rule-derivation failure: disconnected unit");
        }
    return t;
}

std::vector<std::string> RuleTable::diagnostics() const {
    std::vector<std::string> out;
    for (Base x : kAllBases)
        for (int code : {1, 2}) {
            auto& e = at(x, code);
            std::string line = std::string(1, symbol(x)) + std::to_string(code) + " =";
            for (auto b : e.bases) line += " " + to_string(b);
            line += "  (" + std::to_string(e.candidates) + " candidate" + (e.candidates > 1 ? "s" : "") + ")";
            if (!e.resolved.empty()) line += " tie broken by " + e.resolved;
            out.push_back(line);
        }
    return out;
}

const RuleTable& rule_table() {
    static const RuleTable t = build_rule_table();
    return t;
}

Level1Unit expand_base(OrientedBase b, int code) {
    const auto& e = rule_table().at(b.base, code);
    Level1Unit u;
    u.source = b;
    u.code = code;
    for (int i = 0; i < 4; ++i) {
        u.bases[i] = rotate_base(e.bases[i], b.rot());
        u.cells[i] = rotate_cell(e.cells[i], b.rot());
    }
    return u;
}

CornerTuple corner_tuple(const Level1Unit& u) {
    return {corner_value(u.cells[0]), corner_value(u.cells[3])};
}

}  // namespace sfc
