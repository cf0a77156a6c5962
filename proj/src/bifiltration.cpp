#include "mpgb/bifiltration.hpp"

#include <cmath>
#include <istream>
#include <sstream>

namespace mpgb {

namespace {

// q - p in the (direction, direction-perp) frame
std::array<double, 2> rotated_delta(const Point& p, const Point& q, const Point& direction) {
    double nx = direction[0], ny = direction[1];
    double norm = std::hypot(nx, ny);
    if (norm == 0.0) throw std::invalid_argument("direction must be nonzero");
    nx /= norm;
    ny /= norm;
    double dx = q[0] - p[0], dy = q[1] - p[1];
    return {dx * nx + dy * ny, -dx * ny + dy * nx};
}

} // namespace

PointCloud load_point_cloud_csv(std::istream& in) {
    PointCloud cloud;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string trimmed = line;
        if (auto pos = trimmed.find('#'); pos != std::string::npos) trimmed.resize(pos);
        if (trimmed.find_first_not_of(" \t\r") == std::string::npos) continue;
        std::replace(trimmed.begin(), trimmed.end(), ',', ' ');
        std::istringstream is(trimmed);
        double x, y;
        if (!(is >> x >> y)) {
            // permit a single header line
            if (cloud.points.empty() && lineno == 1) continue;
            throw ParseError(lineno, "expected two numeric columns");
        }
        std::string rest;
        if (is >> rest) throw ParseError(lineno, "trailing input after two columns");
        cloud.points.push_back({x, y});
    }
    return cloud;
}

bool ellipse_intersects(const Point& p, const Point& q, double a, double b,
                        const Point& direction, double eps) {
    if (a < 0 || b < 0) throw std::invalid_argument("semi-axes must be nonnegative");
    auto [dx, dy] = rotated_delta(p, q, direction);
    dx = std::abs(dx);
    dy = std::abs(dy);
    if (a == 0.0 && b == 0.0) return dx <= eps && dy <= eps;
    if (a == 0.0) return dx <= eps && dy * dy <= (4.0 + eps) * b * b;
    if (b == 0.0) return dy <= eps && dx * dx <= (4.0 + eps) * a * a;
    double t = (dx / a) * (dx / a) + (dy / b) * (dy / b);
    return t <= 4.0 + eps;
}

std::optional<double> edge_min_axis(const Point& p, const Point& q, const Point& direction,
                                    double b) {
    if (b < 0) throw std::invalid_argument("semi-axis must be nonnegative");
    auto [dx, dy] = rotated_delta(p, q, direction);
    dx = std::abs(dx);
    dy = std::abs(dy);
    if (dy > 2.0 * b) return std::nullopt;
    if (b == 0.0) return dx / 2.0; // both degenerate: segments along the direction
    if (dy == 2.0 * b) {
        if (dx == 0.0) return 0.0;
        return std::nullopt; // tangency needs unbounded a
    }
    if (dx == 0.0) return 0.0;
    double s = dy / (2.0 * b);
    return dx / (2.0 * std::sqrt(1.0 - s * s));
}

Multifiltration generate_ellipse_bifiltration(const PointCloud& cloud, const GridSpec& grid,
                                              int max_dim, double eps) {
    if (grid.steps_a == 0 || grid.steps_b == 0)
        throw std::invalid_argument("grid steps must be positive");
    if (max_dim < 0) throw std::invalid_argument("max_dim must be nonnegative");
    std::size_t n = cloud.points.size();

    // per-pair staircase: minimal grid i at each grid j, or none
    constexpr unsigned kAbsent = ~0u;
    std::vector<std::vector<unsigned>> pair_min(n * n);
    auto stair = [&](std::size_t i, std::size_t j) -> std::vector<unsigned>& {
        return pair_min[i * n + j];
    };
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            std::vector<unsigned> mins(grid.steps_b + 1, kAbsent);
            for (unsigned gj = 0; gj <= grid.steps_b; ++gj) {
                for (unsigned gi = 0; gi <= grid.steps_a; ++gi) {
                    if (ellipse_intersects(cloud.points[i], cloud.points[j], grid.a_at(gi),
                                           grid.b_at(gj), cloud.direction, eps)) {
                        mins[gj] = gi;
                        break; // monotone in a
                    }
                }
            }
            stair(i, j) = mins;
            stair(j, i) = mins;
        }
    }

    std::vector<std::pair<Simplex, std::vector<Grade>>> simplices;
    for (std::size_t i = 0; i < n; ++i)
        simplices.push_back({Simplex{{static_cast<int>(i)}}, {Grade{0, 0}}});

    // adjacency for clique growth: pairs that connect somewhere on the grid
    auto connected = [&](std::size_t i, std::size_t j) {
        for (unsigned v : stair(i, j))
            if (v != kAbsent) return true;
        return false;
    };

    // entry antichain of a clique: per grid j, the max over pair staircases
    auto clique_grades = [&](const std::vector<int>& verts) {
        std::vector<Grade> grades;
        for (unsigned gj = 0; gj <= grid.steps_b; ++gj) {
            unsigned need = 0;
            bool ok = true;
            for (std::size_t a = 0; a < verts.size() && ok; ++a) {
                for (std::size_t b = a + 1; b < verts.size(); ++b) {
                    unsigned m = stair(verts[a], verts[b])[gj];
                    if (m == kAbsent) { ok = false; break; }
                    need = std::max(need, m);
                }
            }
            if (ok) grades.push_back(Grade{need, gj});
        }
        return minimalize_antichain(std::move(grades));
    };

    // grow cliques in vertex order up to max_dim
    std::vector<std::vector<int>> frontier;
    for (std::size_t i = 0; i < n; ++i) frontier.push_back({static_cast<int>(i)});
    for (int dim = 1; dim <= max_dim; ++dim) {
        std::vector<std::vector<int>> next;
        for (const auto& c : frontier) {
            for (std::size_t w = c.back() + 1; w < n; ++w) {
                bool ok = true;
                for (int v : c)
                    if (!connected(v, w)) { ok = false; break; }
                if (!ok) continue;
                std::vector<int> grown = c;
                grown.push_back(static_cast<int>(w));
                auto grades = clique_grades(grown);
                if (grades.empty()) continue; // the pairs never intersect jointly
                simplices.push_back({Simplex{grown}, grades});
                next.push_back(std::move(grown));
            }
        }
        frontier = std::move(next);
    }
    return Multifiltration(2, std::move(simplices));
}

} // namespace mpgb
