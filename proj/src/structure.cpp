#include "sfc/structure.hpp"

#include <algorithm>
#include <array>

#include "json.hpp"

#include "sfc/transform.hpp"

namespace sfc {

namespace {

void need_single(const Encoding& e, const char* op) {
    if (e.seed.bases.size() != 1)
        throw Error(Error::Domain, std::string(op) + " is defined for single-base seeds only");
}

void need_level(const Encoding& e, int k, const char* op) {
    if (e.level() < k)
        throw Error(Error::Domain, std::string(op) + " needs level >= " + std::to_string(k) + ", got " +
                                       std::to_string(e.level()));
}

void need_same_level(const Encoding& a, const Encoding& b) {
    if (a.level() != b.level())
        throw Error(Error::Domain, "curves are on different levels (" + std::to_string(a.level()) + " vs " +
                                       std::to_string(b.level()) + ")");
}

Base first_base(const Encoding& e) { return e.seed.bases[0].base; }

// pi_2..pi_k expressed relative to the group's reference first code
int side_ref(Base x) { return x == Base::U || x == Base::Q || x == Base::C ? 1 : 2; }

Coord dihedral(Coord c, int t) {
    Coord r = rotate_vec(c, (t % 4) * 90);
    if (t >= 4) r.x = -r.x;
    return r;
}

std::vector<Coord> normalized(std::vector<Coord> pts) {
    if (pts.empty()) return pts;
    Coord lo = pts[0];
    for (auto c : pts) lo = {std::min(lo.x, c.x), std::min(lo.y, c.y)};
    for (auto& c : pts) c = c - lo;
    return pts;
}

std::vector<Coord> slice(const std::vector<Coord>& p, std::size_t from, std::size_t n) {
    return {p.begin() + from, p.begin() + from + n};
}

std::vector<Coord> points_at(const Encoding& e, int level) {
    return walk(reduce(e, e.level() - level)).points;
}

// signatures of the four subunits of a level-i reduction, plus that of its own reduction
struct Subunits {
    std::array<std::vector<Coord>, 4> units;
    std::vector<Coord> parent;
    bool all_same() const { return units[0] == units[1] && units[1] == units[2] && units[2] == units[3]; }
};

Subunits subunits_at(const Encoding& e, int i) {
    auto pts = points_at(e, i);
    std::size_t m = pts.size() / 4;
    Subunits s;
    for (int j = 0; j < 4; ++j) s.units[j] = shape_signature(slice(pts, j * m, m));
    s.parent = shape_signature(points_at(e, i - 1));
    return s;
}

bool constant(const Codes& c, std::size_t from, std::size_t to) {
    for (std::size_t i = from; i + 1 < to; ++i)
        if (c[i] != c[i + 1]) return false;
    return true;
}

std::string order1_hilbert_type(int group) {
    static const char* t[] = {"", "", "V1", "V2", "V3", "V4", "V5"};
    return t[group];
}

}  // namespace

int corner_group(Base x, bool eq) {
    switch (x) {
        case Base::I: return eq ? 1 : 5;
        case Base::R:
        case Base::L: return eq ? 1 : 4;
        case Base::U: return eq ? 1 : 3;
        case Base::B: return eq ? 2 : 4;
        case Base::D: return eq ? 3 : 2;
        case Base::P: return eq ? 2 : 4;
        case Base::Q: return eq ? 2 : 3;
        case Base::C: return eq ? 3 : 6;
    }
    return 0;
}

int side_group(Base x) {
    switch (x) {
        case Base::I: return 1;
        case Base::R:
        case Base::L: return 2;
        case Base::B:
        case Base::P: return 3;
        case Base::U: return 4;
        case Base::D:
        case Base::Q: return 5;
        case Base::C: return 6;
    }
    return 0;
}

bool is_corner_induced(const Encoding& e) { return constant(e.codes, 1, e.codes.size()); }

ShapeKey shape_group(const Encoding& e) {
    need_single(e, "shape_group");
    need_level(e, 2, "shape_group");
    const Codes& c = e.codes;
    Base x = first_base(e);
    if (is_corner_induced(e)) return {Induced::Corner, corner_group(x, c[0] == c[1]), {}};
    Codes omega(c.begin() + 1, c.end());
    if (c[0] != side_ref(x)) omega = complement(omega);
    return {Induced::Side, side_group(x), omega};
}

std::string to_string(const ShapeKey& s) {
    if (s.induced == Induced::Corner) return "corner:" + std::to_string(s.group);
    return "side:" + std::to_string(s.group) + ":" + codes_string(s.omega);
}

std::vector<Coord> shape_signature(const std::vector<Coord>& pts) {
    std::vector<Coord> best;
    for (int t = 0; t < 8; ++t) {
        std::vector<Coord> m;
        m.reserve(pts.size());
        for (auto c : pts) m.push_back(dihedral(c, t));
        m = normalized(std::move(m));
        for (int pass = 0; pass < 2; ++pass) {
            if (best.empty() || m < best) best = m;
            std::reverse(m.begin(), m.end());
        }
    }
    return best;
}

std::vector<Coord> shape_signature(const Encoding& e) { return shape_signature(walk(e).points); }

bool same_shape(const Encoding& a, const Encoding& b) {
    need_same_level(a, b);
    if (a.level() < 2) return true;
    if (a.seed.bases.size() != 1 || b.seed.bases.size() != 1) return same_shape_geometric(a, b);
    return shape_group(a) == shape_group(b);
}

bool same_shape_geometric(const Encoding& a, const Encoding& b) {
    auto pa = walk(a).points, pb = walk(b).points;
    return pa.size() == pb.size() && shape_signature(pa) == shape_signature(pb);
}

bool is_homogeneous(const Encoding& a, const Encoding& b) {
    if (a.level() != b.level() || a.seed.bases.size() != b.seed.bases.size())
        throw Error(Error::Domain, "is_homogeneous needs equal levels and seed lengths");
    auto sa = expand(a), sb = expand(b);
    for (std::size_t i = 1; i + 1 < sa.size(); ++i)
        if (sa[i] != sb[i]) return false;
    return true;
}

std::vector<Coord> base_facing_points(const Encoding& e) {
    need_single(e, "base facing normalization");
    need_level(e, 1, "base facing normalization");
    auto pts = walk(e).points;
    const int s = 1 << (e.level() - 1);
    const std::size_t m = pts.size() / 4;
    const Coord want[4] = {{0, 0}, {0, 1}, {1, 1}, {1, 0}};
    for (int t = 0; t < 8; ++t) {
        std::vector<Coord> q;
        for (auto c : pts) q.push_back(dihedral(c, t));
        q = normalized(std::move(q));
        bool ok = true;
        for (int j = 0; j < 4 && ok; ++j) {
            Coord c = q[j * m];
            ok = Coord{c.x / s, c.y / s} == want[j];
        }
        if (ok) return q;
    }
    throw Error(Error::Domain, "no base facing orientation for " + to_string(e));
}

std::optional<int> homogeneous_family(const Encoding& e) {
    need_single(e, "homogeneous_family");
    if (e.level() < 2 || !is_corner_induced(e)) return std::nullopt;
    auto q = base_facing_points(e);
    const int s = 1 << (e.level() - 1);
    auto corner = [s](Coord c) -> std::optional<Quadrant> {
        bool lo_x = c.x == 0, hi_x = c.x == s - 1, lo_y = c.y == 0, hi_y = c.y == s - 1;
        if (lo_x && lo_y) return Quadrant::LL;
        if (hi_x && lo_y) return Quadrant::LR;
        if (lo_x && hi_y) return Quadrant::UL;
        if (hi_x && hi_y) return Quadrant::UR;
        return std::nullopt;
    };
    auto in = corner(q.front());
    auto out = corner(q.back() - Coord{s, 0});
    if (!in || !out) return std::nullopt;
    using Q = Quadrant;
    const std::pair<Q, Q> table[8] = {{Q::LL, Q::LR}, {Q::LL, Q::UL}, {Q::LR, Q::LL}, {Q::LR, Q::UR},
                                      {Q::UL, Q::LL}, {Q::UL, Q::UR}, {Q::UR, Q::LR}, {Q::UR, Q::UL}};
    for (int f = 0; f < 8; ++f)
        if (table[f] == std::pair{*in, *out}) return f + 1;
    return std::nullopt;
}

std::int64_t count_shapes(int k) {
    if (k < 0) throw Error(Error::Domain, "negative level");
    if (k <= 1) return 1;
    return 6 + 6 * ((std::int64_t{1} << (k - 1)) - 2);
}

std::string to_string(const PartialTag& t) {
    if (t.level2) return t.group == 1 ? "L2{1,2,6}" : "L2{3,4,5}";
    return "G(" + std::to_string(t.group) + "," + codes_string(t.codes) + ")";
}

std::optional<PartialTag> partial_tag(const Encoding& e) {
    need_single(e, "partial_tag");
    need_level(e, 2, "partial_tag");
    const Codes& c = e.codes;
    int g = corner_group(first_base(e), c[0] == c[1]);
    if (e.level() == 2) return PartialTag{g == 1 || g == 2 || g == 6 ? 1 : 2, {}, true};
    if (g > 4) return std::nullopt;
    std::size_t m = 1;  // 0-based index of the first break after pi_2
    while (m < c.size() && c[m] == c[1]) ++m;
    if (m == c.size()) return std::nullopt;
    static const int kappa[] = {0, 2, 2, 1, 1};
    Codes tail(c.begin() + m, c.end());
    if (c[1] != kappa[g]) tail = complement(tail);
    return PartialTag{g, tail, false};
}

std::optional<PartialTag> partially_identical(const Encoding& a, const Encoding& b) {
    need_same_level(a, b);
    if (same_shape(a, b)) return std::nullopt;
    auto ta = partial_tag(a), tb = partial_tag(b);
    if (ta && tb && *ta == *tb) return ta;
    return std::nullopt;
}

bool completely_distinct(const Encoding& a, const Encoding& b) {
    need_single(a, "completely_distinct");
    need_single(b, "completely_distinct");
    need_same_level(a, b);
    need_level(a, 2, "completely_distinct");
    if (same_shape(reduce(a, a.level() - 2), reduce(b, b.level() - 2))) return false;
    const Codes &p = a.codes, &s = b.codes;
    for (std::size_t i = 2; i < p.size(); ++i) {
        int want = p[i] == p[i - 1] ? complement(s[i - 1]) : s[i - 1];
        if (s[i] != want) return false;
    }
    return true;
}

bool completely_distinct_sweep(const Encoding& a, const Encoding& b) {
    need_same_level(a, b);
    need_level(a, 2, "completely_distinct_sweep");
    for (int i = 2; i <= a.level(); ++i) {
        auto pa = points_at(a, i), pb = points_at(b, i);
        if (pa.size() != pb.size()) return false;
        for (std::size_t u = 0; u < pa.size(); u += 16)
            if (shape_signature(slice(pa, u, 16)) == shape_signature(slice(pb, u, 16))) return false;
    }
    return true;
}

std::string to_string(const Taxonomy& t) {
    switch (t.kind) {
        case Taxonomy::Hilbert: return "Hilbert";
        case Taxonomy::BetaOmega: return "BetaOmega(" + t.type + ")";
        case Taxonomy::HilbertVariant: {
            std::string s = "HilbertVariant(" + std::to_string(t.order);
            if (!t.type.empty()) s += "," + t.type + (t.type == "V2" ? "/Moore" : "");
            return s + ")";
        }
        case Taxonomy::BetaOmegaVariant: {
            std::string s = "BetaOmegaVariant(" + std::to_string(t.order);
            if (!t.type.empty()) s += "," + t.type;
            return s + ")";
        }
    }
    return {};
}

Taxonomy classify_taxonomy(const Encoding& e) {
    need_single(e, "classify_taxonomy");
    need_level(e, 2, "classify_taxonomy");
    const Codes& c = e.codes;
    const int k = e.level();
    Base x = first_base(e);
    if (c[k - 1] == c[k - 2]) {
        int run = 1;
        while (run < k && c[k - 1 - run] == c[k - 1]) ++run;
        if (run == k) {
            if (x == Base::I || x == Base::R || x == Base::L || x == Base::U) return {Taxonomy::Hilbert, 0, ""};
            return {Taxonomy::HilbertVariant, 1, order1_hilbert_type(corner_group(x, true))};
        }
        if (run == k - 1) return {Taxonomy::HilbertVariant, 1, order1_hilbert_type(corner_group(x, false))};
        return {Taxonomy::HilbertVariant, k - run, ""};
    }
    int run = 1;
    while (run < k && c[k - 1 - run] != c[k - run]) ++run;
    if (run == k) {
        switch (x) {
            case Base::I: return {Taxonomy::BetaOmega, 0, "O"};
            case Base::R:
            case Base::L: return {Taxonomy::BetaOmega, 0, "B1"};
            case Base::B:
            case Base::P: return {Taxonomy::BetaOmega, 0, "B2"};
            case Base::U: return {Taxonomy::BetaOmegaVariant, 1, "V7"};
            case Base::Q: return {Taxonomy::BetaOmegaVariant, 1, "V8"};
            case Base::D: return {Taxonomy::BetaOmegaVariant, 1, "V5"};
            case Base::C: return {Taxonomy::BetaOmegaVariant, 1, "V9"};
        }
    }
    if (run == k - 1) {
        switch (x) {
            case Base::I: return {Taxonomy::BetaOmegaVariant, 1, "V1"};
            case Base::R:
            case Base::L: return {Taxonomy::BetaOmegaVariant, 1, "V2"};
            case Base::B:
            case Base::P: return {Taxonomy::BetaOmegaVariant, 1, "V3"};
            case Base::U: return {Taxonomy::BetaOmegaVariant, 1, "V4"};
            case Base::Q: return {Taxonomy::BetaOmegaVariant, 1, "V5"};
            case Base::D: return {Taxonomy::BetaOmegaVariant, 1, "V8"};
            case Base::C: return {Taxonomy::BetaOmegaVariant, 1, "V6"};
        }
    }
    return {Taxonomy::BetaOmegaVariant, k - run, ""};
}

Flags structural_flags(const Encoding& e) {
    need_single(e, "structural_flags");
    need_level(e, 2, "structural_flags");
    const Codes& c = e.codes;
    const std::size_t k = c.size();
    const Base x = first_base(e);
    auto in = [x](std::initializer_list<Base> s) { return std::find(s.begin(), s.end(), x) != s.end(); };
    const bool all_same = constant(c, 0, k);
    const bool head_then_flip = c[0] != c[1] && constant(c, 1, k);  // a(â)_{k-1}

    Flags f;
    f.recursive = classify_taxonomy(e).kind == Taxonomy::Hilbert ||
                  (k == 3 && in({Base::B, Base::P}) && c[0] != c[1] && c[1] != c[2]);
    if (k >= 3) {
        f.subunit_identical = is_corner_induced(e) || in({Base::I, Base::B, Base::P, Base::C});
        f.subunit_different = in({Base::R, Base::L, Base::U, Base::D, Base::Q}) && c[1] != c[2];
        if (in({Base::U, Base::D, Base::Q})) {
            f.completely_non_recursive = c[1] != c[2];
        } else if (in({Base::R, Base::L})) {
            // any tail after aa-hat(a) qualifies; no alternation exclusion
            f.completely_non_recursive = c[0] == c[1] && c[1] != c[2];
        }
    }
    if (in({Base::I, Base::U, Base::C}))
        f.symmetric_A = true;
    else if (in({Base::R, Base::L, Base::D}))
        f.symmetric_A = all_same;
    else if (x == Base::Q)
        f.symmetric_A = head_then_flip;
    f.symmetric_AB = x == Base::C || (x == Base::D && all_same) || (in({Base::U, Base::Q}) && head_then_flip);
    f.closed = f.symmetric_AB;
    return f;
}

bool recursive_geometric(const Encoding& e) {
    for (int i = 3; i <= e.level(); ++i) {
        auto s = subunits_at(e, i);
        if (!s.all_same() || s.units[0] != s.parent) return false;
    }
    return true;
}

bool subunit_identical_geometric(const Encoding& e) {
    for (int i = 3; i <= e.level(); ++i)
        if (!subunits_at(e, i).all_same()) return false;
    return true;
}

bool subunit_different_geometric(const Encoding& e) {
    for (int i = 3; i <= e.level(); ++i)
        if (subunits_at(e, i).all_same()) return false;
    return true;
}

bool completely_non_recursive_geometric(const Encoding& e) {
    for (int i = 3; i <= e.level(); ++i) {
        auto s = subunits_at(e, i);
        if (s.all_same()) return false;
        for (const auto& u : s.units)
            if (u == s.parent) return false;
    }
    return true;
}

bool symmetric_A_geometric(const Encoding& e) {
    auto p = base_facing_points(e);
    const int w = (1 << e.level()) - 1;
    const std::size_t n = p.size();
    for (std::size_t i = 0; i < n; ++i)
        if (p[i] != Coord{w - p[n - 1 - i].x, p[n - 1 - i].y}) return false;
    return true;
}

bool symmetric_B_geometric(const Encoding& e) {
    auto p = base_facing_points(e);
    const int h = (1 << e.level()) - 1;
    const std::size_t m = p.size() / 4;
    auto mirror = [h](Coord c) { return Coord{c.x, h - c.y}; };
    for (std::size_t i = 0; i < m; ++i) {
        if (p[i] != mirror(p[2 * m - 1 - i])) return false;
        if (p[3 * m + i] != mirror(p[3 * m - 1 - i])) return false;
    }
    return true;
}

bool closed_geometric(const Encoding& e) {
    auto p = walk(e).points;
    Coord d = p.back() - p.front();
    return d.x * d.x + d.y * d.y == 1;
}

std::vector<GroupCounts> hierarchical_shape_counts(int k) {
    if (k < 2) throw Error(Error::Domain, "hierarchical counts need level >= 2");
    static const int h[] = {3, 2, 3, 2, 1, 1};
    std::vector<GroupCounts> out;
    for (int g = 0; g < 6; ++g) {
        GroupCounts c;
        c.group = g + 1;
        c.h = h[g];
        c.shapes = 1 + h[g] * ((std::int64_t{1} << (k - 2)) - 1);
        for (int j = 1; j <= k - 2; ++j) {
            std::int64_t n = j == 1 ? 1 : h[g] * (std::int64_t{1} << (j - 2));
            c.H.push_back(n);
            c.B.push_back(j == 1 ? h[g] : n);
        }
        out.push_back(c);
    }
    return out;
}

ShapeClass classify(const Encoding& e) {
    ShapeClass c;
    c.key = shape_group(e);
    if (c.key.induced == Induced::Side) c.delta = integer_rep(Codes(e.codes.begin() + 1, e.codes.end()));
    c.taxonomy = classify_taxonomy(e);
    c.flags = structural_flags(e);
    return c;
}

std::string to_json(const Encoding& e, const ShapeClass& c) {
    nlohmann::ordered_json j;
    j["encoding"] = to_string(e);
    j["induced"] = c.key.induced == Induced::Corner ? "corner" : "side";
    j["group"] = c.key.group;
    if (c.key.induced == Induced::Side) {
        j["delta"] = c.delta;
        j["omega"] = codes_string(c.key.omega);
    }
    j["taxonomy"] = to_string(c.taxonomy);
    const Flags& f = c.flags;
    j["flags"] = {{"recursive", f.recursive},
                  {"subunit_identical", f.subunit_identical},
                  {"subunit_different", f.subunit_different},
                  {"completely_non_recursive", f.completely_non_recursive},
                  {"symmetric_A", f.symmetric_A},
                  {"symmetric_AB", f.symmetric_AB},
                  {"closed", f.closed}};
    return j.dump();
}

}  // namespace sfc
