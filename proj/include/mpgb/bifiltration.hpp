#pragma once

#include <array>
#include <iosfwd>
#include <optional>

#include "mpgb/filtration.hpp"

namespace mpgb {

using Point = std::array<double, 2>;

/// Planar point cloud plus the direction of the a-semi-axis shared by
/// all ellipses.
struct PointCloud {
    std::vector<Point> points;
    Point direction{1.0, 0.0}; // normalized on input
};

/// Integer grid on the (a, b) semi-axis plane: grade (i, j) stands for
/// semi-axes (i*a_max/steps_a, j*b_max/steps_b). Grade (0,0) is the
/// degenerate point ellipse.
struct GridSpec {
    double a_max = 1.0;
    double b_max = 1.0;
    unsigned steps_a = 1;
    unsigned steps_b = 1;

    double a_at(unsigned i) const { return a_max * i / steps_a; }
    double b_at(unsigned j) const { return b_max * j / steps_b; }
};

/// Two columns x,y; optional header line; blank lines skipped.
PointCloud load_point_cloud_csv(std::istream& in);

/// Congruent co-oriented ellipses of semi-axes (a, b) centered at p and
/// q intersect iff q - p lies in the doubled ellipse:
/// (dx/a)^2 + (dy/b)^2 <= 4 in the rotated frame. Degenerate axes take
/// the componentwise limit. Tangency within eps counts as touching.
bool ellipse_intersects(const Point& p, const Point& q, double a, double b,
                        const Point& direction, double eps = 1e-9);

/// Least a making the two ellipses touch at fixed b, or nothing when no
/// finite a works. Weakly decreasing in b.
std::optional<double> edge_min_axis(const Point& p, const Point& q, const Point& direction,
                                    double b);

/// Flag complex over the grid: a simplex enters at (i, j) when all its
/// vertex pairs intersect at those semi-axes; entry sets are the minimal
/// staircase corners. Vertices enter at (0,0). Simplices that never
/// enter on the grid are omitted.
Multifiltration generate_ellipse_bifiltration(const PointCloud& cloud, const GridSpec& grid,
                                              int max_dim, double eps = 1e-9);

} // namespace mpgb
