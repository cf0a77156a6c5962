#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace mpgb::cli {

// exit codes: 0 success, 1 invalid input data, 2 I/O, usage or internal

struct HomologyConfig {
    std::string path;
    std::string field = "q";
    std::string order = "pot-grlex";
    std::vector<int> dims;       // empty = all dimensions
    std::string format = "text"; // text | json
    bool oracle = false;
    std::vector<unsigned> bound; // oracle degree bound; empty = v' + (2..2)
    bool quotient = false;
    unsigned threads = 1;
};

struct GenerateConfig {
    std::string csv_path;
    std::vector<double> direction{1.0, 0.0};
    std::vector<double> grid; // a_max, b_max, steps_a, steps_b
    int max_dim = 2;
    std::string out_path;
    double eps = 1e-9;
};

struct BenchConfig {
    std::vector<std::size_t> sizes;
    std::uint64_t seed = 1;
};

struct MatricesConfig {
    std::string path;
    std::vector<int> dims;
    std::string format = "text";
};

int cmd_validate(const std::string& path, std::ostream& out, std::ostream& err);
int cmd_homology(const HomologyConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_generate(const GenerateConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_bench(const BenchConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_matrices(const MatricesConfig& cfg, std::ostream& out, std::ostream& err);

unsigned threads_from_env();

} // namespace mpgb::cli
