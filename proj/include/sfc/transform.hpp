#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sfc/curve.hpp"
#include "sfc/geometry.hpp"

namespace sfc {

Encoding rotate_curve(const Encoding& e, int t);
Encoding reflect_h_curve(const Encoding& e);
Encoding reflect_v_curve(const Encoding& e);
Encoding reflect_d1_curve(const Encoding& e);   // across y = x
Encoding reflect_dm1_curve(const Encoding& e);  // across y = -x
Encoding reverse_curve(const Encoding& e);
Encoding reduce(const Encoding& e, int depth);

// op names accepted on the command line: rot90 rot180 rot270 h v d1 d-1 reverse reduce:<i>
Encoding apply_transform(const Encoding& e, const std::string& op);

// Geometric counterparts on point paths, used as oracles.
PointPath rotate_path(const PointPath& p, int deg);
PointPath mirror_path_h(const PointPath& p);  // x -> -x
PointPath reverse_path(const PointPath& p);

PointPath reduce_walk(const PointPath& p);

struct Inference {
    Encoding encoding;
    bool homogeneous_ambiguous = false;
    std::vector<std::string> alternatives;  // other encodings that fit the same points
    int level = 0;
};

Inference infer_encoding(const PointPath& p, Heading entry_dir = std::nullopt, Heading exit_dir = std::nullopt);

}  // namespace sfc
