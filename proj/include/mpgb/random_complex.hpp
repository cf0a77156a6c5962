#pragma once

#include <optional>
#include <random>

#include "mpgb/filtration.hpp"

namespace mpgb {

/// Knobs for the random multifiltration generator used by the property
/// tests and the scaling benchmark. Grades are assigned bottom-up so the
/// output always validates.
struct RandomComplexOptions {
    std::size_t r = 2;
    int max_vertices = 8;
    int max_grades = 3; // per simplex, before antichain minimalization
    bool one_critical = false;
    /// Exactly two incomparable grades per simplex (needs r >= 2).
    bool exactly_two_grades = false;
    unsigned max_coord = 2; // vertex coordinate range
    unsigned max_step = 2;  // random increment above the face lower bound
    double edge_prob = 0.45;
    double triangle_prob = 0.5;
    double tetra_prob = 0.3;
    /// When set, build a complex with exactly this many simplices.
    std::optional<std::size_t> target_simplices;
};

Multifiltration random_multifiltration(const RandomComplexOptions& opts, std::mt19937_64& rng);

} // namespace mpgb
