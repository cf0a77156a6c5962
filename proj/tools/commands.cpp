#include "commands.hpp"

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "mpgb/bench.hpp"
#include "mpgb/bifiltration.hpp"
#include "mpgb/homology.hpp"
#include "mpgb/json_io.hpp"

namespace mpgb::cli {

namespace {

std::optional<Multifiltration> read_filtration(const std::string& path, std::ostream& err) {
    std::ifstream in(path);
    if (!in) {
        err << "error: cannot open " << path << "\n";
        return std::nullopt;
    }
    try {
        return parse_multifiltration(in);
    } catch (const ParseError& e) {
        err << "error: " << path << ": " << e.what() << "\n";
        return std::nullopt;
    }
}

struct FieldChoice {
    bool rational = true;
    std::uint64_t p = 0;
};

std::optional<FieldChoice> parse_field(const std::string& s, std::ostream& err) {
    if (s == "q") return FieldChoice{true, 0};
    if (s.rfind("gf:", 0) == 0) {
        std::uint64_t p = 0;
        try {
            p = std::stoull(s.substr(3));
        } catch (...) {
            err << "error: malformed field '" << s << "'\n";
            return std::nullopt;
        }
        if (!is_prime_u64(p)) {
            err << "error: " << p << " is not prime\n";
            return std::nullopt;
        }
        return FieldChoice{false, p};
    }
    err << "error: unknown field '" << s << "' (use q or gf:<p>)\n";
    return std::nullopt;
}

template <class K>
int homology_with_field(const HomologyConfig& cfg, const Multifiltration& mf,
                        typename K::Field field, MonomialOrder order, std::ostream& out,
                        std::ostream& err) {
    PipelineOptions popts;
    popts.threads = cfg.threads;
    popts.quotient_relations = cfg.quotient;
    PipelineResult<K> res;
    try {
        res = run_pipeline<K>(mf, field, order, popts);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    if (res.monitor.violations != 0) {
        err << "internal error: homogeneity violated: " << res.monitor.first_violation << "\n";
        return 2;
    }

    std::vector<int> wanted = cfg.dims;
    if (wanted.empty())
        for (const auto& d : res.dimensions) wanted.push_back(d.n);

    // optional degreewise verification against the linear-algebra oracle
    struct OracleLine { int n; OracleComparison cmp; };
    std::vector<OracleLine> oracle_lines;
    if (cfg.oracle) {
        Grade bound = cfg.bound.empty()
            ? res.v_prime + Grade(std::vector<unsigned>(mf.r(), 2))
            : Grade(std::vector<unsigned>(cfg.bound.begin(), cfg.bound.end()));
        if (bound.size() != mf.r()) {
            err << "error: oracle bound needs " << mf.r() << " components\n";
            return 2;
        }
        DimensionSpaces<K> below = make_spaces<K>(mf, -1, field);
        for (int n : wanted) {
            if (n < 0 || n >= static_cast<int>(res.dimensions.size())) continue;
            auto pm = build_shifted_boundary(res.spaces[n], n == 0 ? below : res.spaces[n - 1], order);
            std::optional<PresentationMatrix<K>> above;
            if (n + 1 < static_cast<int>(res.spaces.size()))
                above = build_shifted_boundary(res.spaces[n + 1], res.spaces[n], order);
            OracleComparison cmp =
                compare_with_oracle(pm, res.dimensions[n].cycles.generators,
                                    above ? &*above : nullptr,
                                    res.dimensions[n].boundaries.generators, bound);
            oracle_lines.push_back({n, cmp});
            if (!cmp.cycles_ok || !cmp.boundaries_ok) {
                err << "internal error: oracle disagreement at dimension " << n << ", degree "
                    << cmp.first_mismatch.str() << "\n";
                return 2;
            }
        }
    }

    if (cfg.format == "json") {
        nlohmann::json j = result_to_json(res);
        if (cfg.oracle) {
            nlohmann::json jo = nlohmann::json::array();
            for (const auto& l : oracle_lines)
                jo.push_back({{"n", l.n},
                              {"degrees_checked", l.cmp.degrees_checked},
                              {"cycles_ok", l.cmp.cycles_ok},
                              {"boundaries_ok", l.cmp.boundaries_ok}});
            j["oracle"] = std::move(jo);
        }
        // keep only requested dimensions
        if (!cfg.dims.empty()) {
            nlohmann::json filtered = nlohmann::json::array();
            for (const auto& jd : j["dimensions"])
                if (std::find(cfg.dims.begin(), cfg.dims.end(), jd["n"].get<int>()) != cfg.dims.end())
                    filtered.push_back(jd);
            j["dimensions"] = std::move(filtered);
        }
        out << j.dump(2) << "\n";
        return 0;
    }

    out << "v' = " << res.v_prime.str() << "  field = " << field.name()
        << "  order = " << order.name() << "\n";
    for (int n : wanted) {
        if (n < 0 || n >= static_cast<int>(res.dimensions.size())) {
            out << "\ndimension " << n << ": empty\n";
            continue;
        }
        const auto& d = res.dimensions[n];
        out << "\ndimension " << n << ": |F_" << n << "| = " << d.fundamental_count
            << ", d_" << n << " = " << d.simplex_count << "\n";
        out << "  boundaries (" << d.boundaries.generators.size() << " generators, "
            << std::fixed << std::setprecision(4) << d.seconds_boundaries << "s):\n";
        for (const auto& g : d.boundaries.generators) out << "    " << g.str(true) << "\n";
        out << "  cycles (" << d.cycles.generators.size() << " generators, "
            << d.seconds_cycles << "s):\n";
        for (const auto& g : d.cycles.generators) out << "    " << g.str(true) << "\n";
        out << "  homology (" << d.homology.size() << " generators, " << d.seconds_homology
            << "s):\n";
        for (const auto& g : d.homology) out << "    " << g.str(true) << "\n";
        if (cfg.quotient && !d.quotient_relations.empty()) {
            out << "  homology relations (" << d.quotient_relations.size() << "):\n";
            for (const auto& g : d.quotient_relations) out << "    " << g.str(true) << "\n";
        }
    }
    for (const auto& l : oracle_lines)
        out << "oracle dimension " << l.n << ": " << l.cmp.degrees_checked
            << " degrees checked, cycles ok, boundaries ok\n";
    return 0;
}

} // namespace

int cmd_validate(const std::string& path, std::ostream& out, std::ostream& err) {
    auto mf = read_filtration(path, err);
    if (!mf) return 2;
    ValidationReport rep = validate(*mf);
    if (rep.ok) {
        out << "ok: " << mf->entries().size() << " simplices, r = " << mf->r() << ", v' = "
            << stabilization_grade(*mf).str() << "\n";
        return 0;
    }
    for (const auto& v : rep.violations)
        out << "violation: simplex " << v.simplex.str() << " at " << v.grade.str()
            << " lacks face " << v.missing_face.str() << "\n";
    return 1;
}

int cmd_homology(const HomologyConfig& cfg, std::ostream& out, std::ostream& err) {
    auto mf = read_filtration(cfg.path, err);
    if (!mf) return 2;
    ValidationReport rep = validate(*mf);
    if (!rep.ok) {
        err << "error: input is not a valid multifiltration ("
            << rep.violations.size() << " violations; run validate)\n";
        return 1;
    }
    auto order = MonomialOrder::parse(cfg.order);
    if (!order) {
        err << "error: unknown order '" << cfg.order << "'\n";
        return 2;
    }
    auto fc = parse_field(cfg.field, err);
    if (!fc) return 2;
    if (fc->rational)
        return homology_with_field<Rational>(cfg, *mf, Rational::Field{}, *order, out, err);
    return homology_with_field<PrimeField>(cfg, *mf, PrimeField::Field{fc->p}, *order, out, err);
}

int cmd_generate(const GenerateConfig& cfg, std::ostream& out, std::ostream& err) {
    std::ifstream in(cfg.csv_path);
    if (!in) {
        err << "error: cannot open " << cfg.csv_path << "\n";
        return 2;
    }
    PointCloud cloud;
    try {
        cloud = load_point_cloud_csv(in);
    } catch (const ParseError& e) {
        err << "error: " << cfg.csv_path << ": " << e.what() << "\n";
        return 2;
    }
    if (cfg.direction.size() != 2 || (cfg.direction[0] == 0 && cfg.direction[1] == 0)) {
        err << "error: --direction needs a nonzero dx,dy\n";
        return 2;
    }
    cloud.direction = {cfg.direction[0], cfg.direction[1]};
    if (cfg.grid.size() != 4 || cfg.grid[0] <= 0 || cfg.grid[1] <= 0 || cfg.grid[2] < 1 ||
        cfg.grid[3] < 1) {
        err << "error: --grid needs amax,bmax,na,nb with positive entries\n";
        return 2;
    }
    GridSpec grid{cfg.grid[0], cfg.grid[1], static_cast<unsigned>(cfg.grid[2]),
                  static_cast<unsigned>(cfg.grid[3])};
    Multifiltration mf = generate_ellipse_bifiltration(cloud, grid, cfg.max_dim, cfg.eps);

    std::string text = serialize(mf);
    if (cfg.out_path.empty() || cfg.out_path == "-") {
        out << text;
    } else {
        std::ofstream o(cfg.out_path);
        if (!o) {
            err << "error: cannot write " << cfg.out_path << "\n";
            return 2;
        }
        o << text;
    }
    err << "generated " << mf.entries().size() << " simplices ("
        << (is_one_critical(mf) ? "one-critical" : "non one-critical") << ")\n";
    return 0;
}

int cmd_bench(const BenchConfig& cfg, std::ostream& out, std::ostream& err) {
    if (cfg.sizes.empty()) {
        err << "error: --sizes must list at least one size\n";
        return 2;
    }
    BenchReport rep = run_benchmark(cfg.sizes, cfg.seed);
    out << std::left << std::setw(10) << "size" << std::setw(12) << "present" << std::setw(12)
        << "boundaries" << std::setw(12) << "cycles" << std::setw(12) << "homology"
        << std::setw(12) << "total" << "\n";
    out << std::fixed << std::setprecision(5);
    for (const auto& r : rep.rows)
        out << std::left << std::setw(10) << r.size << std::setw(12) << r.seconds_presentation
            << std::setw(12) << r.seconds_boundaries << std::setw(12) << r.seconds_cycles
            << std::setw(12) << r.seconds_homology << std::setw(12) << r.seconds_total << "\n";
    if (rep.rows.size() >= 2)
        out << "log-log slope: " << std::setprecision(3) << rep.loglog_slope << "\n";
    return 0;
}

int cmd_matrices(const MatricesConfig& cfg, std::ostream& out, std::ostream& err) {
    auto mf = read_filtration(cfg.path, err);
    if (!mf) return 2;
    ValidationReport rep = validate(*mf);
    if (!rep.ok) {
        err << "error: input is not a valid multifiltration\n";
        return 1;
    }
    MonomialOrder order;
    Rational::Field field;
    int d = mf->dimension();
    nlohmann::json jall = nlohmann::json::array();
    for (int n = 0; n <= d; ++n) {
        if (!cfg.dims.empty() && std::find(cfg.dims.begin(), cfg.dims.end(), n) == cfg.dims.end())
            continue;
        auto pm = build_shifted_boundary<Rational>(*mf, n, field, order);
        if (cfg.format == "json") {
            nlohmann::json jm;
            jm["n"] = n;
            nlohmann::json rows = nlohmann::json::array();
            for (const auto& s : pm.target.simplices) rows.push_back(s.vertices);
            jm["rows"] = std::move(rows);
            nlohmann::json cols = nlohmann::json::array();
            for (std::size_t c = 0; c < pm.columns.size(); ++c) {
                cols.push_back({{"simplex", pm.source.fundamentals[c].simplex.vertices},
                                {"grade", pm.source.fundamentals[c].grade.exponents()},
                                {"column", element_to_json(pm.columns[c], pm.target.simplices)}});
            }
            jm["columns"] = std::move(cols);
            jall.push_back(std::move(jm));
            continue;
        }
        out << "shifted boundary, dimension " << n << " (" << pm.target.simplices.size()
            << " x " << pm.columns.size() << ")\n";
        for (std::size_t c = 0; c < pm.columns.size(); ++c) {
            const auto& f = pm.source.fundamentals[c];
            out << "  column (" << f.simplex.str() << ", " << f.grade.str()
                << "): " << pm.columns[c].str(true) << "\n";
        }
    }
    if (cfg.format == "json") out << jall.dump(2) << "\n";
    return 0;
}

unsigned threads_from_env() {
    const char* v = std::getenv("MPGB_THREADS");
    if (!v) return 1;
    long n = std::strtol(v, nullptr, 10);
    return n > 0 ? static_cast<unsigned>(n) : 1;
}

} // namespace mpgb::cli
