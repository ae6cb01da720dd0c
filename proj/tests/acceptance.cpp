// Acceptance run: one PASS/FAIL line per criterion.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "sfc/structure.hpp"
#include "sfc/transform.hpp"

using namespace sfc;

namespace {

struct Outcome {
    bool ok = true;
    std::string note;
    void fail(const std::string& why) {
        if (ok) note = why;
        ok = false;
    }
};

std::string seq_string(const BaseSequence& s) {
    std::string out;
    for (auto b : s) out += to_string(b) + " ";
    return out;
}

std::vector<Encoding> random_curves(std::mt19937& rng, int k, int n) {
    auto all = all_single_base(k);
    std::vector<Encoding> out;
    for (int i = 0; i < n; ++i) out.push_back(all[rng() % all.size()]);
    return out;
}

Outcome worked_example() {
    Outcome o;
    auto e = parse_encoding("B^270|1221");
    auto t0 = std::chrono::steady_clock::now();
    auto r = locate_point_verbose(e, 158, {0, 0});
    auto ix = index_of_verbose(e, {5, -12}, {{-7, -14}, {8, 1}});
    auto us = std::chrono::duration_cast<std::chrono::microseconds>(std::chrono::steady_clock::now() - t0).count();
    if (r.point != Coord{5, -12}) o.fail("locate gave the wrong cell");
    if (r.anchors != std::vector<Coord>{{1, -13}, {5, -13}, {6, -12}, {5, -12}}) o.fail("anchors differ");
    if (ix.index != 158) o.fail("index is not 158");
    if (ix.digits != std::vector<int>{3, 2, 4, 2}) o.fail("quaternary digits are not 3242");
    if (us >= 1000) o.fail("took " + std::to_string(us) + " us");
    o.note += (o.note.empty() ? "" : "; ") + std::to_string(us) + " us";
    return o;
}

Outcome encoding_counts() {
    Outcome o;
    for (auto [k, want] : {std::pair{3, 288u}, std::pair{4, 576u}}) {
        auto all = all_single_base(k);
        std::set<std::string> seqs;
        std::set<std::vector<Coord>> paths;
        for (auto& e : all) {
            seqs.insert(seq_string(expand(e)));
            auto p = walk(e);
            // directions are part of the path
            p.points.push_back({p.entry_dir.value_or(-1), p.exit_dir.value_or(-1)});
            paths.insert(p.points);
        }
        if (all.size() != want || seqs.size() != want || paths.size() != want)
            o.fail("k=" + std::to_string(k) + ": " + std::to_string(all.size()) + "/" + std::to_string(seqs.size()) +
                   "/" + std::to_string(paths.size()));
    }
    return o;
}

Outcome shape_census() {
    Outcome o;
    const int corner_sizes[] = {32, 32, 32, 32, 8, 8};
    const int side_sizes[] = {8, 16, 16, 8, 16, 8};
    for (int k = 2; k <= 4; ++k) {
        std::map<std::vector<Coord>, std::set<std::string>> geo;
        std::map<ShapeKey, std::set<std::string>> sym;
        for (auto& e : all_single_base(k)) {
            geo[shape_signature(e)].insert(to_string(e));
            sym[shape_group(e)].insert(to_string(e));
        }
        std::set<std::set<std::string>> a, b;
        for (auto& [_, v] : geo) a.insert(v);
        for (auto& [key, v] : sym) {
            b.insert(v);
            int want = key.induced == Induced::Corner ? corner_sizes[key.group - 1] : side_sizes[key.group - 1];
            if (static_cast<int>(v.size()) != want) o.fail("class " + to_string(key) + " has " + std::to_string(v.size()));
        }
        if (a != b) o.fail("symbolic and geometric partitions differ at k=" + std::to_string(k));
        if (static_cast<std::int64_t>(geo.size()) != count_shapes(k))
            o.fail(std::to_string(geo.size()) + " classes at k=" + std::to_string(k));
        o.note += (o.note.empty() ? "" : " ") + std::to_string(geo.size());
    }
    return o;
}

Outcome point_location(std::mt19937& rng) {
    Outcome o;
    for (int k = 1; k <= 7; ++k)
        for (auto& e : random_curves(rng, k, 50)) {
            Coord entry{static_cast<int>(rng() % 21) - 10, static_cast<int>(rng() % 21) - 10};
            auto pts = walk(e, entry).points;
            auto box = bounding_box(e, entry);
            for (std::size_t i = 0; i < pts.size(); ++i) {
                auto n = static_cast<std::int64_t>(i + 1);
                Coord c = locate_point(e, n, entry);
                if (c != pts[i]) o.fail(to_string(e) + " locate at " + std::to_string(n));
                if (index_of(e, c, box) != n) o.fail(to_string(e) + " index at " + std::to_string(n));
            }
        }
    return o;
}

Outcome transforms(std::mt19937& rng) {
    Outcome o;
    for (int t = 0; t < 200; ++t) {
        int k = static_cast<int>(rng() % 6);
        auto e = random_curves(rng, k, 1)[0];
        auto p = walk(e);
        if (walk(rotate_curve(e, 90)) != rotate_path(p, 90)) o.fail("rotation " + to_string(e));
        if (walk(reflect_h_curve(e)) != mirror_path_h(p)) o.fail("reflection " + to_string(e));
        if (walk(reverse_curve(e), p.points.back()) != reverse_path(p)) o.fail("reversal " + to_string(e));
        for (int i = 0; i <= k; ++i) {
            if (reduce(rotate_curve(e, 90), i) != rotate_curve(reduce(e, i), 90)) o.fail("rot/reduce " + to_string(e));
            if (reduce(reflect_h_curve(e), i) != reflect_h_curve(reduce(e, i))) o.fail("h/reduce " + to_string(e));
            if (reduce(reverse_curve(e), i) != reverse_curve(reduce(e, i))) o.fail("r/reduce " + to_string(e));
        }
    }
    return o;
}

Outcome inference() {
    Outcome o;
    int n = 0;
    for (auto& e : all_single_base(4)) {
        auto p = walk(e);
        if (infer_encoding(p, p.entry_dir, p.exit_dir).encoding != e) o.fail("round trip " + to_string(e));
        ++n;
    }
    auto r = infer_encoding(walk(parse_encoding("R^90|12212")), 180, 90);
    if (to_string(r.encoding) != "R^90|12212") o.fail("example gave " + to_string(r.encoding));
    if (o.ok) o.note = std::to_string(n) + " curves";
    return o;
}

Outcome grammar() {
    Outcome o;
    RuleTable t = build_rule_table();
    std::set<std::string> rows;
    for (Base x : kAllBases)
        for (int c : {1, 2}) {
            std::string s(1, symbol(x));
            for (auto b : t.at(x, c).bases) {
                if (!is_primary(b.base)) o.fail("non-primary base in a unit");
                s += " " + to_string(b);
            }
            rows.insert(s);
        }
    if (rows.size() != 18) o.fail(std::to_string(rows.size()) + " distinct rows");
    auto unit = [&](Base x, int r, int c) {
        std::string s;
        for (auto b : expand_base({x, r}, c).bases) s += (s.empty() ? "" : " ") + to_string(b);
        return s;
    };
    auto first = [&](Base x, int r, int c) { return to_string(expand_base({x, r}, c).bases[0]); };
    const std::vector<std::pair<std::string, std::string>> golden = {
        {unit(Base::I, 0, 1), "R L^270 L R^90"},
        {unit(Base::R, 90, 1), "I^90 R^90 R L^270"},
        {seq_string(expand(parse_encoding("R^90|11"))),
         "R^90 L L^90 R^180 I^90 R^90 R L^270 L R^90 R I^270 R^270 L^180 L^270 I "},
        {first(Base::I, 270, 2), "L^270"},
        {first(Base::R, 270, 2), "L^270"},
        {first(Base::R, 0, 1), "I"},
        {first(Base::U, 0, 1), "I"},
        {first(Base::P, 270, 2), "L^270"},
        {first(Base::Q, 0, 1), "I"},
        {first(Base::C, 0, 1), "R^90"},
        {first(Base::D, 180, 1), "R^90"},
        {first(Base::B, 270, 2), "R^90"},
        {to_string(apply_transform(parse_encoding("R|11"), "reverse")), "L^90|11"},
        {to_string(apply_transform(parse_encoding("R|11"), "h")), "L|22"},
    };
    for (auto& [got, want] : golden)
        if (got != want) o.fail("got \"" + got + "\" want \"" + want + "\"");
    if (o.ok) o.note = "18 rows, " + std::to_string(golden.size()) + " golden";
    return o;
}

Outcome taxonomy() {
    Outcome o;
    for (int k = 3; k <= 5; ++k)
        for (auto& e : all_single_base(k)) {
            auto t = classify_taxonomy(e);
            int kinds = (t.kind == Taxonomy::Hilbert) + (t.kind == Taxonomy::HilbertVariant) +
                        (t.kind == Taxonomy::BetaOmega) + (t.kind == Taxonomy::BetaOmegaVariant);
            if (kinds != 1) o.fail(to_string(e));
            if (t.kind == Taxonomy::HilbertVariant || t.kind == Taxonomy::BetaOmegaVariant) {
                if (t.order < 1 || t.order > k - 2 + (k == 2)) o.fail("order out of range " + to_string(e));
                if (t.order == 1 && t.type.empty()) o.fail("untyped order-1 variant " + to_string(e));
            }
        }
    const std::pair<const char*, const char*> named[] = {
        {"R|1111", "Hilbert"},
        {"C|1111", "HilbertVariant(1,V2/Moore)"},
        {"I^270|2121", "BetaOmega(O)"},
        {"C|1121", "BetaOmegaVariant(1,V6)"},
    };
    for (auto [s, want] : named)
        if (to_string(classify_taxonomy(parse_encoding(s))) != want) o.fail(s);
    return o;
}

Outcome flags() {
    Outcome o;
    for (int k = 2; k <= 5; ++k)
        for (auto& e : all_single_base(k)) {
            auto f = structural_flags(e);
            if (f.closed != closed_geometric(e)) o.fail("closed " + to_string(e));
            bool a = symmetric_A_geometric(e), b = symmetric_B_geometric(e);
            if (f.symmetric_A != a) o.fail("type-A " + to_string(e));
            if (f.symmetric_AB != (a && b)) o.fail("type-AB " + to_string(e));
            if (k >= 3) {
                bool hilbert = classify_taxonomy(e).kind == Taxonomy::Hilbert;
                Base x = e.seed.bases[0].base;
                std::string c = codes_string(e.codes);
                bool special = k == 3 && (x == Base::B || x == Base::P) && (c == "121" || c == "212");
                if (recursive_geometric(e) != (hilbert || special)) o.fail("recursive " + to_string(e));
                if (f.recursive != (hilbert || special)) o.fail("recursive flag " + to_string(e));
            }
        }
    return o;
}

Outcome space_filling(std::mt19937& rng) {
    Outcome o;
    for (int k = 0; k <= 6; ++k) {
        auto curves = k <= 4 ? all_single_base(k) : random_curves(rng, k, 150);
        for (auto& e : curves) {
            auto p = walk(e);
            std::set<Coord> cells(p.points.begin(), p.points.end());
            if (cells.size() != (std::size_t{1} << (2 * k))) o.fail("cells " + to_string(e));
            for (std::size_t i = 1; i < p.points.size(); ++i) {
                Coord d = p.points[i] - p.points[i - 1];
                if (std::abs(d.x) + std::abs(d.y) != 1) o.fail("step " + to_string(e));
            }
            for (int i = 1; i <= k; ++i) {
                // a closed slot of a level-0 symbol has no direction to compare
                auto q = walk(reduce(e, i));
                if ((q.entry_dir && q.entry_dir != p.entry_dir) || (q.exit_dir && q.exit_dir != p.exit_dir))
                    o.fail("directions " + to_string(e));
                if (i < k && (!q.entry_dir || !q.exit_dir)) o.fail("undefined direction " + to_string(e));
            }
        }
    }
    return o;
}

}  // namespace

int main() {
    std::mt19937 rng(20240611);
    struct Criterion {
        const char* name;
        std::function<Outcome()> run;
        double limit;  // seconds, 0 = none
    };
    const std::vector<Criterion> criteria = {
        {"worked example locate/index", worked_example, 0},
        {"encoding uniqueness counts", encoding_counts, 5},
        {"shape census", shape_census, 60},
        {"point location oracle", [&] { return point_location(rng); }, 120},
        {"transform/geometry consistency", [&] { return transforms(rng); }, 0},
        {"inference round trip", inference, 0},
        {"grammar self-validation", grammar, 0},
        {"taxonomy totality", taxonomy, 0},
        {"structural flag cross-checks", flags, 60},
        {"space-filling properties", [&] { return space_filling(rng); }, 0},
    };
    int failed = 0, i = 0;
    for (auto& [name, run, limit] : criteria) {
        auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = run();
        } catch (const std::exception& ex) {
            o.fail(std::string("exception: ") + ex.what());
        }
        double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (limit > 0 && s > limit) o.fail("over the " + std::to_string(static_cast<int>(limit)) + " s budget");
        std::printf("%s %2d %-32s %8.3fs%s%s\n", o.ok ? "PASS" : "FAIL", ++i, name, s, o.note.empty() ? "" : "  ",
                    o.note.c_str());
        failed += !o.ok;
    }
    return failed ? 1 : 0;
}
