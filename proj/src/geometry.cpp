#include "sfc/geometry.hpp"

#include <algorithm>

#include "json.hpp"

namespace sfc {

namespace {

std::int64_t pow4(int k) { return std::int64_t{1} << (2 * k); }

const Encoding& single(const Encoding& e, const char* what) {
    if (e.seed.bases.size() != 1) throw Error(Error::Domain, std::string(what) + " needs a single-base seed");
    return e;
}

// The four subunits of a square curve one level down.
std::array<Encoding, 4> children(const Encoding& sq) {
    auto u = expand_base(sq.seed.bases[0], sq.codes[0]);
    Encoding level{Seed{BaseSequence(u.bases.begin(), u.bases.end())}, Codes(sq.codes.begin() + 1, sq.codes.end())};
    std::array<Encoding, 4> out;
    for (int t = 0; t < 4; ++t) out[t] = {Seed{{u.bases[t]}}, code_sequence_for_base(level, t + 1)};
    return out;
}

Coord corner_cell(const Encoding& sq, int which) {
    OrientedBase z = sq.seed.bases[0];
    Codes c = sq.codes;
    Coord acc{0, 0};
    const int m = static_cast<int>(c.size());
    for (int level = 0; level < m; ++level) {
        auto u = expand_base(z, c[0]);
        Coord cell = u.cells[which];
        int side = 1 << (m - level - 1);
        acc = acc + Coord{cell.x * side, cell.y * side};
        Encoding lv{Seed{BaseSequence(u.bases.begin(), u.bases.end())}, Codes(c.begin() + 1, c.end())};
        c = code_sequence_for_base(lv, which + 1);
        z = u.bases[which];
    }
    return acc;
}

Quadrant quadrant_of(Coord cell) {
    if (cell.y == 0) return cell.x == 0 ? Quadrant::LL : Quadrant::LR;
    return cell.x == 0 ? Quadrant::UL : Quadrant::UR;
}

Coord quadrant_cell(Quadrant q) {
    switch (q) {
        case Quadrant::LL: return {0, 0};
        case Quadrant::LR: return {1, 0};
        case Quadrant::UL: return {0, 1};
        default: return {1, 1};
    }
}

std::vector<int> digits_of(std::int64_t n0, int k) {
    std::vector<int> d(k);
    for (int i = k - 1; i >= 0; --i, n0 >>= 2) d[i] = static_cast<int>(n0 & 3) + 1;
    return d;
}

// Resolves a multi-base seed to the square curve containing index n.
Coord square_start(const Encoding& e, std::int64_t& n, Encoding& sq, Coord entry) {
    const std::int64_t per = pow4(e.level());
    const std::int64_t total = per * static_cast<std::int64_t>(e.seed.bases.size());
    if (n < 1 || n > total)
        throw Error(Error::Domain, "index " + std::to_string(n) + " outside 1.." + std::to_string(total));
    std::size_t c = static_cast<std::size_t>((n - 1) / per) + 1;
    Coord v = entry;
    for (std::size_t i = 1; i < c; ++i)
        v = v + unit_offset({Seed{{e.seed.bases[i - 1]}}, code_sequence_for_base(e, i)});
    sq = {Seed{{e.seed.bases[c - 1]}}, code_sequence_for_base(e, c)};
    n -= static_cast<std::int64_t>(c - 1) * per;
    return v;
}

}  // namespace

std::string to_json(const PointPath& p) {
    nlohmann::ordered_json j;
    auto pts = nlohmann::ordered_json::array();
    for (auto c : p.points) pts.push_back({c.x, c.y});
    j["points"] = pts;
    j["entry_dir"] = p.entry_dir ? nlohmann::ordered_json(*p.entry_dir) : nlohmann::ordered_json(nullptr);
    j["exit_dir"] = p.exit_dir ? nlohmann::ordered_json(*p.exit_dir) : nlohmann::ordered_json(nullptr);
    return j.dump();
}

PointPath point_path_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& ex) {
        throw Error(Error::Parse, std::string("point path JSON: ") + ex.what());
    }
    PointPath p;
    try {
        for (auto& pt : j.at("points")) {
            if (!pt.is_array() || pt.size() != 2) throw Error(Error::Parse, "point path JSON: points must be [x,y]");
            p.points.push_back({pt[0].get<int>(), pt[1].get<int>()});
        }
        auto dir = [&](const char* key) -> Heading {
            if (!j.contains(key) || j[key].is_null()) return std::nullopt;
            int d = j[key].get<int>();
            if (norm(d) % 90) throw Error(Error::Parse, std::string("point path JSON: bad ") + key);
            return norm(d);
        };
        p.entry_dir = dir("entry_dir");
        p.exit_dir = dir("exit_dir");
    } catch (const nlohmann::json::exception& ex) {
        throw Error(Error::Parse, std::string("point path JSON: ") + ex.what());
    }
    return p;
}

PointPath coordinates(const BaseSequence& s, Coord entry) {
    PointPath p;
    if (s.empty()) return p;
    p.points.reserve(s.size());
    p.points.push_back(entry);
    // offset table indexed by exit heading / 90 stands in for the rotation matrices
    static const Coord step[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    for (std::size_t i = 0; i + 1 < s.size(); ++i) {
        auto h = exit_heading(s[i]);
        if (!h) throw Error(Error::Validation, "exit-closed base in the middle of a sequence");
        p.points.push_back(p.points.back() + step[*h / 90]);
    }
    p.entry_dir = entry_heading(s.front());
    p.exit_dir = exit_heading(s.back());
    return p;
}

PointPath walk(const Encoding& e, Coord entry, int max_level) { return coordinates(expand(e, max_level), entry); }

Coord first_cell(const Encoding& sq) { return corner_cell(single(sq, "first_cell"), 0); }
Coord last_cell(const Encoding& sq) { return corner_cell(single(sq, "last_cell"), 3); }

Coord unit_offset(const Encoding& sq) {
    OrientedBase z = single(sq, "unit_offset").seed.bases[0];
    const int m = sq.level();
    const int side = 1 << m;
    const int d = static_cast<int>(integer_rep(sq.codes));
    switch (z.base) {
        case Base::I: return rotate_vec({0, side}, z.rot());
        case Base::R: return rotate_vec({side - d + 1, d - 1}, z.rot());
        case Base::L: return rotate_vec({-d, side - d}, z.rot());
        default: break;
    }
    auto h = exit_heading(z);
    if (!h) throw Error(Error::Domain, "exit-closed square " + to_string(sq) + " has no successor");
    return last_cell(sq) - first_cell(sq) + heading_vec(*h);
}

Coord entry_point(const Encoding& e) { return first_cell(e) + Coord{1, 1}; }

Located locate_point_verbose(const Encoding& e, std::int64_t n, Coord entry) {
    Encoding sq;
    Located out;
    Coord v = square_start(e, n, sq, entry);
    out.digits = digits_of(n - 1, e.level());
    for (int q : out.digits) {
        auto kids = children(sq);
        for (int t = 0; t + 1 < q; ++t) v = v + unit_offset(kids[t]);
        out.anchors.push_back(v);
        sq = kids[q - 1];
    }
    out.point = v;
    return out;
}

Coord locate_point(const Encoding& e, std::int64_t n, Coord entry) { return locate_point_verbose(e, n, entry).point; }

Coord locate_point_tabulated(const Encoding& e, std::int64_t n, Coord entry) {
    Encoding sq;
    Coord v = square_start(e, n, sq, entry);
    auto digits = digits_of(n - 1, e.level());
    std::vector<std::array<Encoding, 4>> table;
    for (int q : digits) {
        table.push_back(children(sq));
        sq = table.back()[q - 1];
    }
    for (std::size_t i = 0; i < digits.size(); ++i)
        for (int j = 0; j + 1 < digits[i]; ++j) v = v + unit_offset(table[i][j]);
    return v;
}

QuadrantMatrix quadrant_matrix(OrientedBase b, int code) {
    auto u = expand_base(b, code);
    QuadrantMatrix m{};
    for (int t = 0; t < 4; ++t) m[u.cells[t].x][u.cells[t].y] = t + 1;
    return m;
}

BBox bounding_box(const Encoding& e, Coord entry) {
    Coord lo = entry - first_cell(single(e, "bounding_box"));
    int side = 1 << e.level();
    return {lo, lo + Coord{side - 1, side - 1}};
}

Indexed index_of_verbose(const Encoding& e, Coord target, BBox box) {
    single(e, "index_of");
    const int k = e.level();
    const std::int64_t side = std::int64_t{1} << k;
    if (box.hi.x - box.lo.x + 1 != side || box.hi.y - box.lo.y + 1 != side)
        throw Error(Error::Domain, "bounding box side must be 2^" + std::to_string(k));
    if (target.x < box.lo.x || target.x > box.hi.x || target.y < box.lo.y || target.y > box.hi.y)
        throw Error(Error::Domain, "target outside the bounding box");
    Indexed out{1, {}};
    Encoding sq = e;
    Coord lo = box.lo;
    for (int level = 1; level <= k; ++level) {
        int half = 1 << (k - level);
        int i = target.x - lo.x < half ? 0 : 1;
        int j = target.y - lo.y < half ? 0 : 1;
        int q = quadrant_matrix(sq.seed.bases[0], sq.codes[0])[i][j];
        out.digits.push_back(q);
        out.index += (q - 1) * pow4(k - level);
        lo = lo + Coord{i * half, j * half};
        sq = children(sq)[q - 1];
    }
    return out;
}

std::int64_t index_of(const Encoding& e, Coord target, BBox box) { return index_of_verbose(e, target, box).index; }

std::optional<Quadrant> quadrant_from_string(const std::string& s) {
    if (s == "LL") return Quadrant::LL;
    if (s == "LR") return Quadrant::LR;
    if (s == "UL") return Quadrant::UL;
    if (s == "UR") return Quadrant::UR;
    return std::nullopt;
}

Endpoints endpoints_of(const Encoding& e) {
    single(e, "endpoints_of");
    if (e.level() < 1) throw Error(Error::Domain, "endpoints are defined from level 1");
    auto u = expand_base(e.seed.bases[0], e.codes[0]);
    return {e.level(), entry_point(e), entry_heading(u.bases[0]), quadrant_of(u.cells[3]),
            exit_heading(u.bases[3])};
}

std::vector<Encoding> determine_all_from_endpoints(const Endpoints& ep) {
    const int k = ep.k;
    if (k < 1) throw Error(Error::Domain, "endpoint determination needs k >= 1");
    const int side = 1 << k, half = side / 2;
    Coord target = ep.entry - Coord{1, 1};
    if (target.x < 0 || target.y < 0 || target.x >= side || target.y >= side)
        throw Error(Error::Domain, "entry point outside the square");
    if (!ep.entry_dir || !ep.exit_dir) throw Error(Error::Validation, "inconsistent directions: both are required");

    Coord u1{target.x / half, target.y / half};
    Coord u4 = quadrant_cell(ep.exit_quadrant);
    auto within = [&](Coord c, Coord q) {
        return c.x >= 0 && c.y >= 0 && c.x < side && c.y < side && c.x / half == q.x && c.y / half == q.y;
    };
    auto outside = [&](Coord c) { return c.x < 0 || c.y < 0 || c.x >= side || c.y >= side; };
    Coord from = target - heading_vec(*ep.entry_dir);
    if (!outside(from) && !within(from, u4))
        throw Error(Error::Validation, "illegal entry side: the entry step comes from inside the square");
    if (u4 == u1 || std::abs(u4.x - u1.x) + std::abs(u4.y - u1.y) != 1)
        throw Error(Error::Validation, "inconsistent directions: subunit 4 must neighbour subunit 1");

    std::vector<Encoding> found;
    for (Base x : kAllBases)
        for (int r = 0; r < 360; r += 90)
            for (int code : {1, 2}) {
                OrientedBase src(x, r);
                auto u = expand_base(src, code);
                if (u.cells[0] != u1 || u.cells[3] != u4) continue;
                if (entry_heading(u.bases[0]) != ep.entry_dir || exit_heading(u.bases[3]) != ep.exit_dir) continue;
                Codes codes{code};
                OrientedBase z = u.bases[0];
                Coord lo{u1.x * half, u1.y * half};
                bool ok = true;
                for (int level = 2; level <= k && ok; ++level) {
                    int h = 1 << (k - level);
                    ok = false;
                    for (int c : {1, 2}) {
                        auto v = expand_base(z, c);
                        Coord cell = lo + Coord{v.cells[0].x * h, v.cells[0].y * h};
                        if (target.x >= cell.x && target.x < cell.x + h && target.y >= cell.y &&
                            target.y < cell.y + h) {
                            codes.push_back(c);
                            z = v.bases[0];
                            lo = cell;
                            ok = true;
                            break;
                        }
                    }
                }
                if (!ok) continue;
                Encoding e{Seed{{src}}, codes};
                if (first_cell(e) == target) found.push_back(e);
            }
    std::sort(found.begin(), found.end(),
              [](const Encoding& a, const Encoding& b) { return to_string(a) < to_string(b); });
    return found;
}

Encoding determine_from_endpoints(const Endpoints& ep) {
    auto all = determine_all_from_endpoints(ep);
    if (all.empty()) throw Error(Error::Validation, "inconsistent directions: no curve has these endpoints");
    return all.front();
}

}  // namespace sfc
