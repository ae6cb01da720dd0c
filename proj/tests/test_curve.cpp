#include <set>

#include "doctest.h"
#include "sfc/curve.hpp"
#include "sfc/geometry.hpp"

using namespace sfc;

namespace {

std::string seq_string(const BaseSequence& s) {
    std::string out;
    for (auto b : s) out += (out.empty() ? "" : " ") + to_string(b);
    return out;
}

Error::Kind error_kind(const std::string& text) {
    try {
        parse_encoding(text);
    } catch (const Error& e) {
        return e.kind;
    }
    FAIL("no error for " << text);
    return Error::Domain;
}

}  // namespace

TEST_CASE("parse and print") {
    for (const char* s : {"R|111", "I^270|2121", "B^270|1221", "C|", "R^90|12212", "U^180|1"})
        CHECK(to_string(parse_encoding(s)) == s);
    CHECK(to_string(parse_encoding("R^0|11")) == "R|11");
    CHECK(to_string(parse_encoding("R^-90|1")) == "R^270|1");
    CHECK(to_string(parse_encoding("R^450|1")) == "R^90|1");
    // rotations after the first token must agree with the connected chain
    CHECK(to_string(parse_encoding("RR^270|1")) == "RR|1");
    CHECK(parse_encoding("IRL|1").seed.bases[2].rot() == 270);
}

TEST_CASE("parse errors are classified") {
    CHECK(error_kind("R11") == Error::Parse);
    CHECK(error_kind("X|1") == Error::Parse);
    CHECK(error_kind("R^45|1") == Error::Parse);
    CHECK(error_kind("R|13") == Error::Parse);
    CHECK(error_kind("|1") == Error::Parse);
    CHECK(error_kind("RC|1") == Error::Validation);   // C must be alone
    CHECK(error_kind("ID|1") == Error::Validation);   // D only first
    CHECK(error_kind("PI|1") == Error::Validation);   // P only last
    CHECK(error_kind("IUI|1") == Error::Validation);  // U first or last
    CHECK(error_kind("RRRRR|1") == Error::Validation); // closes on itself
    CHECK(error_kind("RR^90|1") == Error::Validation);
}

TEST_CASE("expansion of a printed example") {
    CHECK(seq_string(expand(parse_encoding("R^90|11"))) ==
          "R^90 L L^90 R^180 I^90 R^90 R L^270 L R^90 R I^270 R^270 L^180 L^270 I");
    CHECK(seq_string(expand(parse_encoding("R^90|1"))) == "I^90 R^90 R L^270");
}

TEST_CASE("expansion cap") {
    CHECK_THROWS_AS(expand(parse_encoding("I|1111"), 3), Error);
    CHECK(expand(parse_encoding("I|1111"), 4).size() == 256);
}

TEST_CASE("encoding counts and uniqueness") {
    for (int k = 0; k <= 4; ++k) {
        auto all = all_single_base(k);
        CHECK(all.size() == 36u << k);
        std::set<std::string> names, seqs;
        for (auto& e : all) {
            names.insert(to_string(e));
            seqs.insert(seq_string(expand(e)));
        }
        CHECK(names.size() == all.size());
        if (k >= 1) CHECK(seqs.size() == all.size());
    }
}

TEST_CASE("expanded sequences contain only primary bases") {
    for (auto& e : all_single_base(2))
        for (auto b : expand(e)) CHECK(is_primary(b.base));
}

TEST_CASE("code sequences along a seed") {
    auto e = parse_encoding("IRI|12");
    CHECK(code_sequence_for_base(e, 1) == Codes{1, 2});
    CHECK(code_sequence_for_base(e, 2) == Codes{1, 2});
    CHECK(code_sequence_for_base(e, 3) == Codes{2, 1});
    auto d = parse_encoding("DII|122");
    CHECK(code_sequence_for_base(d, 2) == Codes{1, 1, 1});
    CHECK_THROWS_AS(code_sequence_for_base(e, 4), Error);
    // oracle: the first level of every base follows the expansion path
    for (const char* s : {"IRLU|212", "DIRP|121", "BLLQ|2", "UIRL|11"}) {
        auto m = parse_encoding(s);
        auto path = expansion_path(m.seed.bases, m.codes[0]);
        for (std::size_t i = 0; i < path.size(); ++i) CHECK(code_sequence_for_base(m, i + 1)[0] == path[i]);
    }
}

TEST_CASE("multi-base expansion equals per-base expansion") {
    for (const char* s : {"IRLU|212", "DIRP|121", "BLLQ|22", "R^90IL|1212"}) {
        auto m = parse_encoding(s);
        BaseSequence joined;
        for (std::size_t i = 0; i < m.seed.bases.size(); ++i) {
            auto part = expand({Seed{{m.seed.bases[i]}}, code_sequence_for_base(m, i + 1)});
            joined.insert(joined.end(), part.begin(), part.end());
        }
        CHECK(joined == expand(m));
    }
}

TEST_CASE("integer representation") {
    CHECK(integer_rep({1, 1}) == 1);
    CHECK(integer_rep({2, 2}) == 4);
    CHECK(integer_rep({2, 1, 2}) == 6);
    CHECK(integer_rep({}) == 1);
    for (int k = 0; k <= 6; ++k)
        for (std::int64_t d = 1; d <= (1 << k); ++d) CHECK(integer_rep(codes_from_integer(d, k)) == d);
    CHECK_THROWS_AS(codes_from_integer(0, 3), Error);
    CHECK_THROWS_AS(codes_from_integer(9, 3), Error);
}

TEST_CASE("reassociation keeps the expanded curve") {
    for (const char* s : {"R|1221", "B^270|1221", "IRL|212", "C|2121"}) {
        auto e = parse_encoding(s);
        for (int i = 0; i <= e.level(); ++i) CHECK(expand(reassociate(e, i)) == expand(e));
    }
}

TEST_CASE("subunits") {
    auto e = parse_encoding("B^270|1221");
    CHECK(to_string(subunit_encoding(e, {3})) == "L^270|221");
    CHECK(to_string(subunit_encoding(e, {3, 2})) == "L^270|21");
    // oracle: a subunit's expansion is the matching slice of the parent's
    for (auto& p : all_single_base(3))
        for (int q = 1; q <= 4; ++q) {
            auto whole = expand(p), part = expand(subunit_encoding(p, {q}));
            CHECK(std::equal(part.begin(), part.end(), whole.begin() + (q - 1) * 16));
        }
}

TEST_CASE("space filling") {
    for (auto& e : all_single_base(3)) {
        auto p = walk(e);
        CHECK(std::set<Coord>(p.points.begin(), p.points.end()).size() == 64);
    }
    auto m = walk(parse_encoding("IRLU|21"));
    CHECK(std::set<Coord>(m.points.begin(), m.points.end()).size() == 4 * 16);
}
