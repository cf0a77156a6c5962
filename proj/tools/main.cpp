#include <CLI11.hpp>
#include <iostream>

#include "commands.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Groebner bases of boundary, cycle and homology modules of multifiltered "
                 "simplicial complexes"};
    app.require_subcommand(1);

    std::string path;
    auto* validate = app.add_subcommand("validate", "check a multifiltration file");
    validate->add_option("file", path, "multifiltration file")->required();

    mpgb::cli::HomologyConfig hcfg;
    auto* homology = app.add_subcommand("homology", "compute boundary, cycle and homology bases");
    homology->add_option("file", hcfg.path, "multifiltration file")->required();
    homology->add_option("--dim", hcfg.dims, "dimension filter (repeatable)");
    homology->add_option("--field", hcfg.field, "coefficient field: q or gf:<p>")
        ->default_val("q");
    homology->add_option("--order", hcfg.order, "monomial order: pot-grlex, pot-lex or top-grlex")
        ->default_val("pot-grlex");
    homology->add_option("--format", hcfg.format, "output format: text or json")
        ->check(CLI::IsMember({"text", "json"}))
        ->default_val("text");
    homology->add_flag("--oracle", hcfg.oracle, "verify bases degreewise by exact linear algebra");
    homology->add_option("--bound", hcfg.bound, "oracle degree bound g1,g2,...")->delimiter(',');
    homology->add_flag("--quotient", hcfg.quotient, "also emit relations among homology generators");

    mpgb::cli::GenerateConfig gcfg;
    auto* generate = app.add_subcommand("generate", "ellipse bifiltration from a planar point cloud");
    generate->add_option("points", gcfg.csv_path, "CSV with columns x,y")->required();
    generate->add_option("--direction", gcfg.direction, "a-axis direction dx,dy")
        ->delimiter(',')
        ->expected(2);
    generate->add_option("--grid", gcfg.grid, "grid spec amax,bmax,na,nb")
        ->delimiter(',')
        ->expected(4)
        ->required();
    generate->add_option("--max-dim", gcfg.max_dim, "top simplex dimension")->default_val(2);
    generate->add_option("--out", gcfg.out_path, "output file ('-' for stdout)");
    generate->add_option("--eps", gcfg.eps, "tangency tolerance")->default_val(1e-9);

    mpgb::cli::BenchConfig bcfg;
    auto* bench = app.add_subcommand("bench", "scaling benchmark on random bifiltrations");
    bench->add_option("--sizes", bcfg.sizes, "simplex counts s1,s2,...")
        ->delimiter(',')
        ->required();
    bench->add_option("--seed", bcfg.seed, "random seed")->default_val(1);

    mpgb::cli::MatricesConfig mcfg;
    auto* matrices = app.add_subcommand("matrices", "dump the shifted boundary matrices");
    matrices->add_option("file", mcfg.path, "multifiltration file")->required();
    matrices->add_option("--dim", mcfg.dims, "dimension filter (repeatable)");
    matrices->add_option("--format", mcfg.format, "output format: text or json")
        ->check(CLI::IsMember({"text", "json"}))
        ->default_val("text");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    hcfg.threads = mpgb::cli::threads_from_env();
    try {
        if (validate->parsed()) return mpgb::cli::cmd_validate(path, std::cout, std::cerr);
        if (homology->parsed()) return mpgb::cli::cmd_homology(hcfg, std::cout, std::cerr);
        if (generate->parsed()) return mpgb::cli::cmd_generate(gcfg, std::cout, std::cerr);
        if (bench->parsed()) return mpgb::cli::cmd_bench(bcfg, std::cout, std::cerr);
        if (matrices->parsed()) return mpgb::cli::cmd_matrices(mcfg, std::cout, std::cerr);
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
