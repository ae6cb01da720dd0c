#include "sfc/curve.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace sfc {

namespace {

std::string pos(std::size_t i) { return "base " + std::to_string(i + 1); }

void check_positions(const std::vector<Base>& t) {
    const std::size_t n = t.size();
    for (std::size_t i = 0; i < n; ++i) {
        Base b = t[i];
        bool first = i == 0, last = i + 1 == n;
        if (b == Base::C && n > 1)
            throw Error(Error::Validation, "singleton-C violation at " + pos(i) + ": C must be the only base");
        if ((b == Base::B || b == Base::D) && !first)
            throw Error(Error::Validation, std::string("position violation at ") + pos(i) + ": " + symbol(b) +
                                               " may only be first");
        if ((b == Base::P || b == Base::Q) && !last)
            throw Error(Error::Validation, std::string("position violation at ") + pos(i) + ": " + symbol(b) +
                                               " may only be last");
        if (b == Base::U && !first && !last)
            throw Error(Error::Validation, "position violation at " + pos(i) + ": U may only be first or last");
    }
}

void check_self_intersection(const BaseSequence& s) {
    std::set<Coord> seen;
    Coord v{0, 0};
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (!seen.insert(v).second)
            throw Error(Error::Validation, "self-intersecting seed path at " + pos(i));
        if (i + 1 < s.size()) v = v + heading_vec(*exit_heading(s[i]));
    }
}

int parse_degrees(const std::string& text, std::size_t& i) {
    std::size_t start = i;
    bool neg = i < text.size() && text[i] == '-';
    if (neg) ++i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == start + (neg ? 1 : 0))
        throw Error(Error::Parse, "expected rotation degrees at position " + std::to_string(start));
    int deg = std::stoi(text.substr(start, i - start));
    if (norm(deg) % 90 != 0)
        throw Error(Error::Parse, "rotation " + std::to_string(deg) + " at position " + std::to_string(start) +
                                      " is not a multiple of 90");
    return norm(deg);
}

}  // namespace

Seed validate_seed(const std::vector<Base>& tokens, int first_rotation) {
    if (tokens.empty()) throw Error(Error::Validation, "empty seed");
    check_positions(tokens);
    Seed s;
    s.bases.emplace_back(tokens[0], first_rotation);
    for (std::size_t i = 1; i < tokens.size(); ++i)
        s.bases.emplace_back(tokens[i], next_rotation(s.bases.back()));
    check_self_intersection(s.bases);
    return s;
}

Seed validate_seed(const BaseSequence& bases) {
    std::vector<Base> tokens;
    for (auto b : bases) tokens.push_back(b.base);
    Seed s = validate_seed(tokens, bases.empty() ? 0 : bases[0].rot());
    if (s.bases != bases) throw Error(Error::Validation, "seed rotations are not connected");
    return s;
}

Encoding parse_encoding(const std::string& text) {
    auto bar = text.find('|');
    if (bar == std::string::npos) throw Error(Error::Parse, "missing '|' in encoding \"" + text + "\"");
    std::vector<Base> tokens;
    std::vector<std::pair<std::size_t, int>> stated;  // token index, degrees
    std::size_t i = 0;
    while (i < bar) {
        auto b = base_from_char(text[i]);
        if (!b)
            throw Error(Error::Parse, std::string("unknown base '") + text[i] + "' at position " + std::to_string(i));
        tokens.push_back(*b);
        ++i;
        if (i < bar && text[i] == '^') {
            ++i;
            stated.emplace_back(tokens.size() - 1, parse_degrees(text, i));
        }
    }
    if (tokens.empty()) throw Error(Error::Parse, "empty seed in encoding \"" + text + "\"");
    if (i != bar) throw Error(Error::Parse, "unexpected character at position " + std::to_string(i));
    int first = 0;
    for (auto [t, d] : stated)
        if (t == 0) first = d;
    Encoding e;
    e.seed = validate_seed(tokens, first);
    for (auto [t, d] : stated)
        if (e.seed.bases[t].rot() != d)
            throw Error(Error::Validation, "stated rotation " + std::to_string(d) + " at " + pos(t) +
                                               " disagrees with the connected rotation " +
                                               std::to_string(e.seed.bases[t].rot()));
    e.codes = parse_codes(text.substr(bar + 1));
    return e;
}

Codes parse_codes(const std::string& s) {
    Codes c;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] != '1' && s[i] != '2')
            throw Error(Error::Parse, std::string("expansion code '") + s[i] + "' is not 1 or 2");
        c.push_back(s[i] - '0');
    }
    return c;
}

std::string codes_string(const Codes& c) {
    std::string s;
    for (int v : c) s += static_cast<char>('0' + v);
    return s;
}

std::string to_string(const Encoding& e) {
    std::string s = to_string(e.seed.bases[0]);
    for (std::size_t i = 1; i < e.seed.bases.size(); ++i) s += symbol(e.seed.bases[i].base);
    return s + "|" + codes_string(e.codes);
}

Codes complement(const Codes& c) {
    Codes out(c);
    for (int& v : out) v = complement(v);
    return out;
}

Codes s_map(const Codes& c, int dtheta) { return norm(dtheta) % 180 == 0 ? c : complement(c); }

std::vector<int> expansion_path(const BaseSequence& s, int first_code) {
    std::vector<int> out(s.size());
    if (s.empty()) return out;
    out[0] = first_code;
    for (std::size_t i = 1; i < s.size(); ++i) out[i] = next_code(s[i - 1].base, out[i - 1]);
    return out;
}

BaseSequence expand(const Encoding& e, int max_level) {
    if (e.level() > max_level)
        throw Error(Error::Domain, "level " + std::to_string(e.level()) + " exceeds the expansion cap " +
                                       std::to_string(max_level));
    BaseSequence cur = e.seed.bases;
    for (int code : e.codes) {
        auto path = expansion_path(cur, code);
        BaseSequence next;
        next.reserve(cur.size() * 4);
        for (std::size_t i = 0; i < cur.size(); ++i) {
            auto u = expand_base(cur[i], path[i]);
            next.insert(next.end(), u.bases.begin(), u.bases.end());
        }
        cur = std::move(next);
    }
    return cur;
}

Codes code_sequence_for_base(const Encoding& e, std::size_t i) {
    const auto& s = e.seed.bases;
    if (i < 1 || i > s.size())
        throw Error(Error::Domain, "base index " + std::to_string(i) + " outside seed of length " +
                                       std::to_string(s.size()));
    Codes c = e.codes;
    for (std::size_t j = 2; j <= i; ++j) {
        Base prev = s[j - 2].base;
        if (j == 2 && prev == Base::D) {
            Codes rest(c.begin() + (c.empty() ? 0 : 1), c.end());
            rest = complement(rest);
            if (!c.empty()) rest.insert(rest.begin(), c[0]);
            c = rest;
        } else if (prev == Base::R || prev == Base::L) {
            c = complement(c);
        }
    }
    return c;
}

std::int64_t integer_rep(const Codes& c) {
    std::int64_t d = 1;
    for (int v : c) d = d * 2 + (v - 1);
    return d - (std::int64_t{1} << c.size()) + 1;
}

Codes codes_from_integer(std::int64_t delta, int k) {
    if (k < 0 || k > 62 || delta < 1 || delta > (std::int64_t{1} << k))
        throw Error(Error::Domain, "integer representation " + std::to_string(delta) + " out of range for level " +
                                       std::to_string(k));
    Codes c(k);
    std::int64_t v = delta - 1;
    for (int i = k - 1; i >= 0; --i, v >>= 1) c[i] = static_cast<int>(v & 1) + 1;
    return c;
}

Encoding reassociate(const Encoding& e, int i) {
    if (i < 0 || i > e.level())
        throw Error(Error::Domain, "reassociation level " + std::to_string(i) + " outside 0.." +
                                       std::to_string(e.level()));
    if (i == 0) return e;
    Encoding head{e.seed, Codes(e.codes.begin(), e.codes.begin() + i)};
    Encoding out;
    out.seed = validate_seed(expand(head));
    out.codes.assign(e.codes.begin() + i, e.codes.end());
    return out;
}

Encoding subunit_encoding(const Encoding& e, const std::vector<int>& path) {
    if (e.seed.bases.size() != 1) throw Error(Error::Domain, "subunits are defined for single-base seeds");
    if (path.size() > e.codes.size())
        throw Error(Error::Domain, "subunit path of length " + std::to_string(path.size()) + " exceeds level " +
                                       std::to_string(e.level()));
    OrientedBase z = e.seed.bases[0];
    Codes c = e.codes;
    for (int q : path) {
        if (q < 1 || q > 4) throw Error(Error::Domain, "quaternary digit " + std::to_string(q) + " not in 1..4");
        auto u = expand_base(z, c[0]);
        Encoding level{Seed{BaseSequence(u.bases.begin(), u.bases.end())}, Codes(c.begin() + 1, c.end())};
        c = code_sequence_for_base(level, q);
        z = u.bases[q - 1];
    }
    return {Seed{{z}}, c};
}

std::vector<Encoding> all_single_base(int k) {
    std::vector<Encoding> out;
    for (Base b : kAllBases)
        for (int r = 0; r < 360; r += 90)
            for (std::int64_t d = 1; d <= (std::int64_t{1} << k); ++d)
                out.push_back({Seed{{OrientedBase(b, r)}}, codes_from_integer(d, k)});
    std::sort(out.begin(), out.end(),
              [](const Encoding& a, const Encoding& b) { return to_string(a) < to_string(b); });
    return out;
}

}  // namespace sfc
