// sfc: command-line front end for the 2x2 curve library.

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "sfc/curve.hpp"
#include "sfc/geometry.hpp"
#include "sfc/structure.hpp"
#include "sfc/transform.hpp"

using namespace sfc;
using json = nlohmann::ordered_json;

namespace {

std::vector<int> parse_ints(const std::string& s, std::size_t want, const char* what) {
    std::vector<int> out;
    std::stringstream in(s);
    std::string part;
    while (std::getline(in, part, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stoi(part, &used));
            if (used != part.size()) throw std::invalid_argument(part);
        } catch (const std::exception&) {
            throw Error(Error::Parse, std::string("bad ") + what + " \"" + s + "\"");
        }
    }
    if (out.size() != want)
        throw Error(Error::Parse, std::string(what) + " needs " + std::to_string(want) + " comma-separated integers");
    return out;
}

Coord parse_coord(const std::string& s) {
    auto v = parse_ints(s, 2, "coordinate");
    return {v[0], v[1]};
}

Heading parse_heading(const std::string& s) {
    if (s.empty()) return std::nullopt;
    int d = parse_ints(s, 1, "direction")[0];
    if (norm(d) % 90) throw Error(Error::Parse, "direction " + s + " is not a multiple of 90");
    return norm(d);
}

std::string coord_str(Coord c) { return std::to_string(c.x) + "," + std::to_string(c.y); }

std::string render_ascii(const PointPath& p) {
    Coord lo = p.points[0], hi = p.points[0];
    for (auto c : p.points) {
        lo = {std::min(lo.x, c.x), std::min(lo.y, c.y)};
        hi = {std::max(hi.x, c.x), std::max(hi.y, c.y)};
    }
    const int w = 2 * (hi.x - lo.x) + 1, h = 2 * (hi.y - lo.y) + 1;
    std::vector<std::string> g(h, std::string(w, ' '));
    auto at = [&](Coord c) -> char& { return g[h - 1 - 2 * (c.y - lo.y)][2 * (c.x - lo.x)]; };
    for (std::size_t i = 0; i < p.points.size(); ++i) {
        at(p.points[i]) = 'o';
        if (i == 0) continue;
        Coord a = p.points[i - 1], b = p.points[i];
        int row = h - 1 - (a.y - lo.y) - (b.y - lo.y), col = (a.x - lo.x) + (b.x - lo.x);
        g[row][col] = a.y == b.y ? '-' : '|';
    }
    at(p.points.back()) = 'E';
    at(p.points.front()) = p.points.size() == 1 ? '@' : 'S';
    std::string out;
    for (auto& line : g) {
        auto end = line.find_last_not_of(' ');
        out += line.substr(0, end == std::string::npos ? 0 : end + 1) + "\n";
    }
    return out;
}

std::string render_svg(const PointPath& p) {
    const int cell = 10, margin = 15;
    Coord lo = p.points[0], hi = p.points[0];
    for (auto c : p.points) {
        lo = {std::min(lo.x, c.x), std::min(lo.y, c.y)};
        hi = {std::max(hi.x, c.x), std::max(hi.y, c.y)};
    }
    const int width = (hi.x - lo.x + 1) * cell + 2 * margin, height = (hi.y - lo.y + 1) * cell + 2 * margin;
    auto sx = [&](double x) { return margin + (x - lo.x + 0.5) * cell; };
    auto sy = [&](double y) { return margin + (hi.y - y + 0.5) * cell; };
    std::ostringstream o;
    o << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << width << "\" height=\"" << height
      << "\" viewBox=\"0 0 " << width << " " << height << "\">\n";
    o << "<polyline fill=\"none\" stroke=\"black\" stroke-width=\"1.5\" points=\"";
    for (std::size_t i = 0; i < p.points.size(); ++i)
        o << (i ? " " : "") << sx(p.points[i].x) << "," << sy(p.points[i].y);
    o << "\"/>\n";
    // triangle pointing along heading d with its tip at (x, y)
    auto arrow = [&](double x, double y, int d, const char* color) {
        Coord v = heading_vec(d), n{-v.y, v.x};
        auto pt = [&](double fx, double fy) {
            std::ostringstream s;
            s << sx(x + fx) << "," << sy(y + fy);
            return s.str();
        };
        o << "<polygon fill=\"" << color << "\" points=\"" << pt(0, 0) << " "
          << pt(-0.6 * v.x + 0.3 * n.x, -0.6 * v.y + 0.3 * n.y) << " "
          << pt(-0.6 * v.x - 0.3 * n.x, -0.6 * v.y - 0.3 * n.y) << "\"/>\n";
    };
    if (p.entry_dir) {
        Coord v = heading_vec(*p.entry_dir);
        Coord f = p.points.front();
        o << "<line stroke=\"black\" stroke-width=\"1.5\" x1=\"" << sx(f.x - v.x) << "\" y1=\"" << sy(f.y - v.y)
          << "\" x2=\"" << sx(f.x) << "\" y2=\"" << sy(f.y) << "\"/>\n";
        arrow(f.x - 0.4 * v.x, f.y - 0.4 * v.y, *p.entry_dir, "green");
    }
    if (p.exit_dir) {
        Coord v = heading_vec(*p.exit_dir);
        Coord b = p.points.back();
        o << "<line stroke=\"black\" stroke-width=\"1.5\" x1=\"" << sx(b.x) << "\" y1=\"" << sy(b.y) << "\" x2=\""
          << sx(b.x + v.x) << "\" y2=\"" << sy(b.y + v.y) << "\"/>\n";
        arrow(b.x + v.x, b.y + v.y, *p.exit_dir, "red");
    }
    o << "</svg>\n";
    return o.str();
}

bool matches_filter(const Encoding& e, const std::string& f) {
    if (f == "closed") return closed_geometric(e);
    auto c = classify(e);
    const auto& fl = c.flags;
    if (f == "recursive") return fl.recursive;
    if (f == "subunit-identical") return fl.subunit_identical;
    if (f == "subunit-different") return fl.subunit_different;
    if (f == "completely-non-recursive") return fl.completely_non_recursive;
    if (f == "symmetric-A") return fl.symmetric_A;
    if (f == "symmetric-AB") return fl.symmetric_AB;
    if (f == "corner") return c.key.induced == Induced::Corner;
    if (f == "side") return c.key.induced == Induced::Side;
    if (f == "hilbert") return c.taxonomy.kind == Taxonomy::Hilbert;
    if (f == "hilbert-variant") return c.taxonomy.kind == Taxonomy::HilbertVariant;
    if (f == "beta-omega") return c.taxonomy.kind == Taxonomy::BetaOmega;
    if (f == "beta-omega-variant") return c.taxonomy.kind == Taxonomy::BetaOmegaVariant;
    throw Error(Error::Parse, "unknown filter \"" + f + "\"");
}

std::string read_input(const std::string& path) {
    if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
    std::ifstream in(path);
    if (!in) throw Error(Error::Domain, "cannot read " + path);
    return {std::istreambuf_iterator<char>(in), {}};
}

std::string csv_row(const Encoding& e, const ShapeClass& c) {
    const auto& f = c.flags;
    std::ostringstream o;
    o << to_string(e) << "," << (c.key.induced == Induced::Corner ? "corner" : "side") << "," << c.key.group << ","
      << (c.key.induced == Induced::Side ? std::to_string(c.delta) : "") << "," << codes_string(c.key.omega) << ","
      << to_string(c.taxonomy) << "," << f.recursive << "," << f.subunit_identical << "," << f.subunit_different
      << "," << f.completely_non_recursive << "," << f.symmetric_A << "," << f.symmetric_AB << "," << f.closed;
    return o.str();
}

const char* kCsvHeader =
    "encoding,induced,group,delta,omega,taxonomy,recursive,subunit_identical,subunit_different,"
    "completely_non_recursive,symmetric_A,symmetric_AB,closed";

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"2x2 space-filling curves: generate, transform, classify, locate"};
    app.require_subcommand(1);

    std::string enc, enc2, entry = "0,0", format, op_target, bbox, file, in_dir, out_dir, filter;
    std::vector<std::string> ops;
    std::int64_t n = 1;
    int level = 0, max_level = kDefaultMaxLevel;
    bool verbose = false, count = false, shapes = false;

    auto* gen = app.add_subcommand("gen", "expand an encoding and emit its point path");
    gen->add_option("encoding", enc)->required();
    gen->add_option("--entry", entry, "entry cell x,y");
    gen->add_option("--format", format, "json, csv, svg or ascii")
        ->check(CLI::IsMember({"json", "csv", "svg", "ascii"}));
    gen->add_option("--max-level", max_level, "expansion cap");

    auto* xf = app.add_subcommand("xform", "apply transforms in order: rot90 rot180 rot270 h v d1 d-1 reverse reduce:<i>");
    xf->add_option("encoding", enc)->required();
    xf->add_option("ops", ops)->required();

    auto* cl = app.add_subcommand("classify", "shape group, taxonomy and structural flags");
    cl->add_option("encoding", enc)->required();
    cl->add_option("--against", enc2, "compare with a second curve");
    cl->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));

    auto* lo = app.add_subcommand("locate", "coordinate of the n-th cell (1-based)");
    lo->add_option("encoding", enc)->required();
    lo->add_option("n", n)->required();
    lo->add_option("--entry", entry, "entry cell x,y");
    lo->add_flag("--verbose", verbose, "print quaternary digits and subunit anchors");

    auto* ix = app.add_subcommand("index", "1-based index of a cell");
    ix->add_option("encoding", enc)->required();
    ix->add_option("point", op_target, "x,y")->required();
    ix->add_option("--bbox", bbox, "x0,y0,x1,y1; defaults to the box of the curve entered at --entry");
    ix->add_option("--entry", entry, "entry cell x,y");
    ix->add_flag("--verbose", verbose, "print quaternary digits");

    auto* inf = app.add_subcommand("infer", "recover an encoding from a point path JSON file ('-' for stdin)");
    inf->add_option("file", file)->required();
    inf->add_option("--entry-dir", in_dir, "entry heading in degrees");
    inf->add_option("--exit-dir", out_dir, "exit heading in degrees");
    inf->add_flag("--verbose", verbose, "list other fitting encodings");

    auto* en = app.add_subcommand("enumerate", "all single-base curves of a level, sorted by encoding");
    en->add_option("k", level)->required()->check(CLI::Range(0, 16));
    en->add_flag("--count", count, "print only the number of results");
    en->add_flag("--shapes", shapes, "one representative per shape class, with class size");
    en->add_option("--filter", filter,
                   "closed recursive subunit-identical subunit-different completely-non-recursive symmetric-A "
                   "symmetric-AB corner side hilbert hilbert-variant beta-omega beta-omega-variant");
    en->add_option("--format", format, "text or csv")->check(CLI::IsMember({"text", "csv"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (gen->parsed()) {
            auto p = walk(parse_encoding(enc), parse_coord(entry), max_level);
            if (format == "csv") {
                std::cout << "index,x,y\n";
                for (std::size_t i = 0; i < p.points.size(); ++i)
                    std::cout << i + 1 << "," << p.points[i].x << "," << p.points[i].y << "\n";
            } else if (format == "svg") {
                std::cout << render_svg(p);
            } else if (format == "ascii") {
                std::cout << render_ascii(p);
            } else {
                std::cout << to_json(p) << "\n";
            }
        } else if (xf->parsed()) {
            Encoding e = parse_encoding(enc);
            for (const auto& op : ops) e = apply_transform(e, op);
            std::cout << to_string(e) << "\n";
        } else if (cl->parsed()) {
            Encoding e = parse_encoding(enc);
            auto c = classify(e);
            if (format == "csv") {
                std::cout << kCsvHeader << "\n" << csv_row(e, c) << "\n";
            } else {
                json j = json::parse(to_json(e, c));
                if (auto f = homogeneous_family(e)) j["family"] = *f;
                if (!enc2.empty()) {
                    Encoding b = parse_encoding(enc2);
                    json cmp;
                    cmp["encoding"] = to_string(b);
                    cmp["same_shape"] = same_shape(e, b);
                    cmp["homogeneous"] = is_homogeneous(e, b);
                    cmp["completely_distinct"] = completely_distinct(e, b);
                    auto t = partially_identical(e, b);
                    cmp["partially_identical"] = t ? json(to_string(*t)) : json(nullptr);
                    j["against"] = cmp;
                }
                std::cout << j.dump(2) << "\n";
            }
        } else if (lo->parsed()) {
            Encoding e = parse_encoding(enc);
            auto r = locate_point_verbose(e, n, parse_coord(entry));
            if (verbose) {
                std::cout << "digits ";
                for (int d : r.digits) std::cout << d;
                std::cout << "\n";
                for (std::size_t i = 0; i < r.anchors.size(); ++i)
                    std::cout << "anchor " << i + 1 << " " << coord_str(r.anchors[i]) << "\n";
            }
            std::cout << coord_str(r.point) << "\n";
        } else if (ix->parsed()) {
            Encoding e = parse_encoding(enc);
            BBox box;
            if (bbox.empty()) {
                box = bounding_box(e, parse_coord(entry));
            } else {
                auto v = parse_ints(bbox, 4, "bounding box");
                box = {{v[0], v[1]}, {v[2], v[3]}};
            }
            auto r = index_of_verbose(e, parse_coord(op_target), box);
            if (verbose) {
                std::cout << "digits ";
                for (int d : r.digits) std::cout << d;
                std::cout << "\n";
            }
            std::cout << r.index << "\n";
        } else if (inf->parsed()) {
            auto p = point_path_from_json(read_input(file));
            auto r = infer_encoding(p, parse_heading(in_dir), parse_heading(out_dir));
            std::cout << to_string(r.encoding) << "\n";
            if (verbose)
                for (const auto& a : r.alternatives) std::cout << "alternative " << a << "\n";
        } else if (en->parsed()) {
            auto all = all_single_base(level);
            std::vector<Encoding> picked;
            for (auto& e : all)
                if (filter.empty() || matches_filter(e, filter)) picked.push_back(e);
            if (shapes) {
                std::vector<std::pair<Encoding, int>> reps;
                std::map<std::string, std::size_t> seen;
                for (auto& e : picked) {
                    std::string key = level < 2 ? "" : to_string(shape_group(e));
                    auto [it, fresh] = seen.emplace(key, reps.size());
                    if (fresh) reps.push_back({e, 0});
                    ++reps[it->second].second;
                }
                if (count) {
                    std::cout << reps.size() << "\n";
                } else {
                    for (auto& [e, size] : reps)
                        std::cout << to_string(e) << " " << (level < 2 ? "all" : to_string(shape_group(e))) << " "
                                  << size << "\n";
                }
            } else if (count) {
                std::cout << picked.size() << "\n";
            } else if (format == "csv") {
                std::cout << kCsvHeader << "\n";
                for (auto& e : picked) std::cout << csv_row(e, classify(e)) << "\n";
            } else {
                for (auto& e : picked) std::cout << to_string(e) << "\n";
            }
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        switch (e.kind) {
            case Error::Parse: return 2;
            case Error::Validation: return 3;
            case Error::Domain: return 4;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
