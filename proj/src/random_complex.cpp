#include "mpgb/random_complex.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace mpgb {

namespace {

using Grades = std::vector<Grade>;

struct GradeAssigner {
    const RandomComplexOptions& opts;
    std::mt19937_64& rng;
    std::map<Simplex, Grades> assigned;

    unsigned uniform(unsigned lo, unsigned hi) {
        return std::uniform_int_distribution<unsigned>(lo, hi)(rng);
    }

    // componentwise max over one random entry grade of each face
    Grade face_bound(const Simplex& s) {
        Grade base = Grade::zero(opts.r);
        for (const auto& [face, sign] : s.boundary_faces()) {
            (void)sign;
            const Grades& fg = assigned.at(face);
            base = lcm(base, fg[uniform(0, static_cast<unsigned>(fg.size()) - 1)]);
        }
        return base;
    }

    Grades assign(const Simplex& s) {
        Grades out;
        if (opts.exactly_two_grades && opts.r >= 2) {
            // two incomparable corners over a common lower bound
            Grade base = face_bound(s);
            Grade g1 = base, g2 = base;
            g1[0] += 1 + uniform(0, opts.max_step);
            g2[1] += 1 + uniform(0, opts.max_step);
            out = {g1, g2};
        } else {
            int k = opts.one_critical ? 1 : static_cast<int>(uniform(1, opts.max_grades));
            for (int i = 0; i < k; ++i) {
                Grade g = face_bound(s);
                for (std::size_t c = 0; c < opts.r; ++c)
                    g[c] += (s.dimension() == 0) ? uniform(0, opts.max_coord)
                                                 : uniform(0, opts.max_step);
                out.push_back(g);
            }
            out = minimalize_antichain(std::move(out));
        }
        assigned[s] = out;
        return out;
    }
};

std::vector<Simplex> random_skeleton(const RandomComplexOptions& opts, std::mt19937_64& rng) {
    std::bernoulli_distribution edge(opts.edge_prob), tri(opts.triangle_prob),
        tet(opts.tetra_prob);
    int nv = std::uniform_int_distribution<int>(1, opts.max_vertices)(rng);
    std::vector<Simplex> out;
    std::set<Simplex> present;
    auto add = [&](std::vector<int> v) {
        Simplex s{std::move(v)};
        out.push_back(s);
        present.insert(s);
    };
    for (int v = 0; v < nv; ++v) add({v});
    for (int a = 0; a < nv; ++a)
        for (int b = a + 1; b < nv; ++b)
            if (edge(rng)) add({a, b});
    auto has = [&](std::vector<int> v) { return present.count(Simplex{std::move(v)}) > 0; };
    for (int a = 0; a < nv; ++a)
        for (int b = a + 1; b < nv; ++b)
            for (int c = b + 1; c < nv; ++c)
                if (has({a, b}) && has({a, c}) && has({b, c}) && tri(rng)) add({a, b, c});
    for (int a = 0; a < nv; ++a)
        for (int b = a + 1; b < nv; ++b)
            for (int c = b + 1; c < nv; ++c)
                for (int d = c + 1; d < nv; ++d)
                    if (has({a, b, c}) && has({a, b, d}) && has({a, c, d}) && has({b, c, d}) &&
                        tet(rng))
                        add({a, b, c, d});
    return out;
}

// grow a complex one simplex at a time until it has exactly `target` simplices
std::vector<Simplex> sized_skeleton(std::size_t target, std::mt19937_64& rng) {
    std::size_t nv = 3;
    while (nv + nv * (nv - 1) / 2 + nv * (nv - 1) * (nv - 2) / 6 < target) ++nv;
    nv = std::min<std::size_t>(nv, std::max<std::size_t>(3, target));
    std::vector<Simplex> out;
    std::set<Simplex> present;
    auto add = [&](std::vector<int> v) {
        Simplex s{std::move(v)};
        out.push_back(s);
        present.insert(s);
    };
    for (std::size_t v = 0; v < std::min(nv, target); ++v) add({static_cast<int>(v)});
    std::bernoulli_distribution want_triangle(0.35);
    auto has = [&](std::vector<int> v) { return present.count(Simplex{std::move(v)}) > 0; };
    std::uniform_int_distribution<int> pick(0, static_cast<int>(nv) - 1);
    std::size_t stall = 0;
    while (out.size() < target && stall < 10000) {
        if (want_triangle(rng)) {
            int a = pick(rng), b = pick(rng), c = pick(rng);
            std::vector<int> v{a, b, c};
            std::sort(v.begin(), v.end());
            if (v[0] == v[1] || v[1] == v[2] || has(v) ||
                !has({v[0], v[1]}) || !has({v[0], v[2]}) || !has({v[1], v[2]})) {
                ++stall;
                continue;
            }
            add(v);
        } else {
            int a = pick(rng), b = pick(rng);
            if (a == b) { ++stall; continue; }
            std::vector<int> v{std::min(a, b), std::max(a, b)};
            if (has(v)) { ++stall; continue; }
            add(v);
        }
        stall = 0;
    }
    return out;
}

} // namespace

Multifiltration random_multifiltration(const RandomComplexOptions& opts, std::mt19937_64& rng) {
    std::vector<Simplex> skeleton = opts.target_simplices
        ? sized_skeleton(*opts.target_simplices, rng)
        : random_skeleton(opts, rng);
    std::sort(skeleton.begin(), skeleton.end()); // faces first
    GradeAssigner assigner{opts, rng, {}};
    std::vector<std::pair<Simplex, Grades>> entries;
    for (const auto& s : skeleton) entries.push_back({s, assigner.assign(s)});
    return Multifiltration(opts.r, std::move(entries));
}

} // namespace mpgb
