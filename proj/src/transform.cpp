#include "sfc/transform.hpp"

#include <algorithm>
#include <set>

namespace sfc {

namespace {

bool turns(Base b) { return b == Base::R || b == Base::L; }

// code for the first level of a reversed sequence
int rev_first(int pi, int dtheta, Base xn) {
    bool keep = (dtheta == 0) == turns(xn);
    return keep ? pi : complement(pi);
}

// code for levels two and deeper
int rev_rest(int pi, int dtheta, Base xn, Base x1) {
    if (x1 == Base::C) return complement(pi);
    bool straight_exit = xn == Base::I || xn == Base::U || xn == Base::B || xn == Base::D || xn == Base::P;
    bool keep = straight_exit ? dtheta == 90 : dtheta == 0;
    if (x1 == Base::D) keep = !keep;
    return keep ? pi : complement(pi);
}

bool unit_steps(const std::vector<Coord>& pts) {
    for (std::size_t i = 1; i < pts.size(); ++i) {
        Coord d = pts[i] - pts[i - 1];
        if (std::abs(d.x) + std::abs(d.y) != 1) return false;
    }
    return true;
}

int floor_div2(int v) { return v >= 0 ? v / 2 : -((-v + 1) / 2); }

std::optional<PointPath> try_reduce(const PointPath& p) {
    if (p.points.empty() || p.points.size() % 4) return std::nullopt;
    PointPath out;
    out.entry_dir = p.entry_dir;
    out.exit_dir = p.exit_dir;
    std::optional<Coord> parity;
    for (std::size_t b = 0; b < p.points.size(); b += 4) {
        Coord lo = p.points[b], hi = p.points[b];
        std::set<Coord> cells;
        for (std::size_t i = b; i < b + 4; ++i) {
            Coord c = p.points[i];
            lo = {std::min(lo.x, c.x), std::min(lo.y, c.y)};
            hi = {std::max(hi.x, c.x), std::max(hi.y, c.y)};
            cells.insert(c);
        }
        if (cells.size() != 4 || hi.x - lo.x != 1 || hi.y - lo.y != 1) return std::nullopt;
        Coord par{lo.x & 1, lo.y & 1};
        if (parity && *parity != par) return std::nullopt;
        parity = par;
        out.points.push_back({floor_div2(lo.x), floor_div2(lo.y)});
    }
    if (!unit_steps(out.points)) return std::nullopt;
    return out;
}

std::vector<Coord> shape(const std::vector<Coord>& pts) {
    std::vector<Coord> out;
    for (auto c : pts) out.push_back(c - pts.front());
    return out;
}

std::vector<Seed> seed_candidates(const std::vector<Coord>& w) {
    std::vector<Seed> out;
    const std::size_t n = w.size();
    if (n == 1) {
        for (Base b : kAllBases)
            for (int r = 0; r < 360; r += 90) out.push_back(Seed{{OrientedBase(b, r)}});
        return out;
    }
    std::vector<Base> interior;
    for (std::size_t i = 1; i + 1 < n; ++i) {
        int in = *heading_between(w[i - 1], w[i]), out_h = *heading_between(w[i], w[i + 1]);
        int turn = norm(out_h - in);
        if (turn == 180) return out;
        interior.push_back(turn == 0 ? Base::I : turn == 270 ? Base::R : Base::L);
    }
    for (Base first : kAllBases)
        for (int r = 0; r < 360; r += 90)
            for (Base last : kAllBases) {
                std::vector<Base> tokens{first};
                tokens.insert(tokens.end(), interior.begin(), interior.end());
                tokens.push_back(last);
                try {
                    Seed s = validate_seed(tokens, r);
                    if (shape(coordinates(s.bases).points) == shape(w)) out.push_back(s);
                } catch (const Error&) {
                }
            }
    return out;
}

}  // namespace

Encoding rotate_curve(const Encoding& e, int t) {
    Encoding out = e;
    for (auto& b : out.seed.bases) b = rotate_base(b, t);
    return out;
}

Encoding reflect_h_curve(const Encoding& e) { return {Seed{reflect_seq(e.seed.bases)}, complement(e.codes)}; }
Encoding reflect_v_curve(const Encoding& e) { return reflect_h_curve(rotate_curve(e, 180)); }
Encoding reflect_d1_curve(const Encoding& e) { return reflect_h_curve(rotate_curve(e, 90)); }
Encoding reflect_dm1_curve(const Encoding& e) { return reflect_h_curve(rotate_curve(e, 270)); }

Encoding reverse_curve(const Encoding& e) {
    const auto& s = e.seed.bases;
    OrientedBase x1 = s.front(), xn = s.back();
    int dtheta = norm(xn.rot() - x1.rot()) % 180;
    Encoding out;
    out.seed.bases = reverse_seq(s);
    for (std::size_t i = 0; i < e.codes.size(); ++i)
        out.codes.push_back(i == 0 ? rev_first(e.codes[i], dtheta, xn.base)
                                   : rev_rest(e.codes[i], dtheta, xn.base, x1.base));
    return out;
}

Encoding reduce(const Encoding& e, int depth) {
    if (depth < 0 || depth > e.level())
        throw Error(Error::Domain, "reduction depth " + std::to_string(depth) + " outside 0.." +
                                       std::to_string(e.level()));
    return {e.seed, Codes(e.codes.begin(), e.codes.end() - depth)};
}

Encoding apply_transform(const Encoding& e, const std::string& op) {
    if (op == "rot0") return e;
    if (op == "rot90") return rotate_curve(e, 90);
    if (op == "rot180") return rotate_curve(e, 180);
    if (op == "rot270") return rotate_curve(e, 270);
    if (op == "h") return reflect_h_curve(e);
    if (op == "v") return reflect_v_curve(e);
    if (op == "d1") return reflect_d1_curve(e);
    if (op == "d-1") return reflect_dm1_curve(e);
    if (op == "reverse") return reverse_curve(e);
    if (op.rfind("reduce:", 0) == 0) {
        std::string n = op.substr(7);
        if (n.empty() || !std::all_of(n.begin(), n.end(), [](char c) { return c >= '0' && c <= '9'; }))
            throw Error(Error::Parse, "bad reduction depth in \"" + op + "\"");
        return reduce(e, std::stoi(n));
    }
    throw Error(Error::Parse, "unknown transform \"" + op + "\"");
}

PointPath rotate_path(const PointPath& p, int deg) {
    PointPath out = p;
    for (auto& c : out.points) c = rotate_vec(c, deg);
    if (p.entry_dir) out.entry_dir = norm(*p.entry_dir + deg);
    if (p.exit_dir) out.exit_dir = norm(*p.exit_dir + deg);
    return out;
}

PointPath mirror_path_h(const PointPath& p) {
    PointPath out = p;
    for (auto& c : out.points) c.x = -c.x;
    if (p.entry_dir) out.entry_dir = norm(180 - *p.entry_dir);
    if (p.exit_dir) out.exit_dir = norm(180 - *p.exit_dir);
    return out;
}

PointPath reverse_path(const PointPath& p) {
    PointPath out;
    out.points.assign(p.points.rbegin(), p.points.rend());
    if (p.exit_dir) out.entry_dir = norm(*p.exit_dir + 180);
    if (p.entry_dir) out.exit_dir = norm(*p.entry_dir + 180);
    return out;
}

PointPath reduce_walk(const PointPath& p) {
    auto r = try_reduce(p);
    if (!r) throw Error(Error::Validation, "not a level-1 or higher curve walk: points do not group into 2x2 blocks");
    return *r;
}

Inference infer_encoding(const PointPath& p, Heading entry_dir, Heading exit_dir) {
    if (p.points.empty()) throw Error(Error::Validation, "empty point path");
    if (!unit_steps(p.points)) throw Error(Error::Validation, "invalid step length in point path");
    if (std::set<Coord>(p.points.begin(), p.points.end()).size() != p.points.size())
        throw Error(Error::Validation, "point path revisits a cell");
    if (!entry_dir) entry_dir = p.entry_dir;
    if (!exit_dir) exit_dir = p.exit_dir;

    // levels[j] is the walk reduced j times; the deepest one is the seed walk
    std::vector<PointPath> levels{p};
    while (auto r = try_reduce(levels.back())) levels.push_back(*r);
    const int k = static_cast<int>(levels.size()) - 1;

    std::vector<Encoding> fits;
    for (const Seed& seed : seed_candidates(levels.back().points)) {
        Codes codes;
        OrientedBase z = seed.bases[0];
        bool ok = true;
        for (int i = 1; i <= k && ok; ++i) {
            auto want = shape({levels[k - i].points.begin(), levels[k - i].points.begin() + 4});
            ok = false;
            for (int c : {1, 2}) {
                auto u = expand_base(z, c);
                if (shape({u.cells.begin(), u.cells.end()}) == want) {
                    codes.push_back(c);
                    z = u.bases[0];
                    ok = true;
                    break;
                }
            }
        }
        if (!ok) continue;
        Encoding e{seed, codes};
        auto full = expand(e, std::max(k, kDefaultMaxLevel));
        if (coordinates(full, p.points.front()).points != p.points) continue;
        if (entry_dir && entry_heading(full.front()) != entry_dir) continue;
        if (exit_dir && exit_heading(full.back()) != exit_dir) continue;
        fits.push_back(e);
    }
    if (fits.empty()) throw Error(Error::Validation, "no matching level-1 pattern for the point path");
    std::sort(fits.begin(), fits.end(),
              [](const Encoding& a, const Encoding& b) { return to_string(a) < to_string(b); });
    Inference out{fits.front(), fits.size() > 1, {}, k};
    for (std::size_t i = 1; i < fits.size(); ++i) out.alternatives.push_back(to_string(fits[i]));
    return out;
}

}  // namespace sfc
