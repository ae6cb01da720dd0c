#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sfc/grammar.hpp"

namespace sfc {

using Codes = std::vector<int>;
using BaseSequence = std::vector<OrientedBase>;

struct Seed {
    BaseSequence bases;
    bool operator==(const Seed&) const = default;
};

struct Encoding {
    Seed seed;
    Codes codes;
    int level() const { return static_cast<int>(codes.size()); }
    bool operator==(const Encoding&) const = default;
};

inline constexpr int kDefaultMaxLevel = 12;

Seed validate_seed(const std::vector<Base>& tokens, int first_rotation);
Seed validate_seed(const BaseSequence& bases);  // rotations must already be consistent

Encoding parse_encoding(const std::string& text);
std::string to_string(const Encoding& e);
std::string codes_string(const Codes& c);
Codes parse_codes(const std::string& s);

// Identity when dtheta mod 180 == 0, otherwise complement.
Codes s_map(const Codes& c, int dtheta);
Codes complement(const Codes& c);

BaseSequence expand(const Encoding& e, int max_level = kDefaultMaxLevel);
std::vector<int> expansion_path(const BaseSequence& s, int first_code);
Codes code_sequence_for_base(const Encoding& e, std::size_t i);  // i is 1-based

std::int64_t integer_rep(const Codes& c);
Codes codes_from_integer(std::int64_t delta, int k);

Encoding reassociate(const Encoding& e, int i);
Encoding subunit_encoding(const Encoding& e, const std::vector<int>& path);

// every single-base encoding at level k: 36 * 2^k of them, sorted by encoding string
std::vector<Encoding> all_single_base(int k);

}  // namespace sfc
