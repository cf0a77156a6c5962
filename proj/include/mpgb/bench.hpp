#pragma once

#include <cmath>
#include <cstdint>

#include "mpgb/homology.hpp"
#include "mpgb/random_complex.hpp"

namespace mpgb {

struct BenchRow {
    std::size_t size = 0; // simplex count
    double seconds_presentation = 0;
    double seconds_boundaries = 0;
    double seconds_cycles = 0;
    double seconds_homology = 0;
    double seconds_total = 0;
};

struct BenchReport {
    std::vector<BenchRow> rows;
    /// Least-squares slope of ln(total seconds) against ln(size).
    double loglog_slope = 0;
};

/// Times the full pipeline on seeded random non one-critical
/// bifiltrations (r = 2, two incomparable grades per simplex) of the
/// requested sizes. Inputs depend only on (size, seed).
inline BenchReport run_benchmark(const std::vector<std::size_t>& sizes, std::uint64_t seed) {
    BenchReport rep;
    for (std::size_t size : sizes) {
        std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ull + size);
        RandomComplexOptions opts;
        opts.r = 2;
        opts.exactly_two_grades = true;
        opts.target_simplices = size;
        Multifiltration mf = random_multifiltration(opts, rng);

        BenchRow row;
        row.size = mf.entries().size();
        PipelineResult<Rational> res = run_pipeline<Rational>(mf, Rational::Field{}, MonomialOrder{});
        row.seconds_presentation = res.seconds_presentation;
        for (const auto& d : res.dimensions) {
            row.seconds_boundaries += d.seconds_boundaries;
            row.seconds_cycles += d.seconds_cycles;
            row.seconds_homology += d.seconds_homology;
        }
        row.seconds_total = row.seconds_presentation + row.seconds_boundaries +
                            row.seconds_cycles + row.seconds_homology;
        rep.rows.push_back(row);
    }
    // slope of ln t over ln n
    double n = static_cast<double>(rep.rows.size());
    if (n >= 2) {
        double sx = 0, sy = 0, sxx = 0, sxy = 0;
        for (const auto& r : rep.rows) {
            double x = std::log(static_cast<double>(r.size));
            double y = std::log(std::max(r.seconds_total, 1e-9));
            sx += x; sy += y; sxx += x * x; sxy += x * y;
        }
        double denom = n * sxx - sx * sx;
        rep.loglog_slope = denom == 0 ? 0 : (n * sxy - sx * sy) / denom;
    }
    return rep;
}

} // namespace mpgb
