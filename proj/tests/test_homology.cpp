#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "golden_demo.hpp"
#include "test_util.hpp"

using namespace mpgb;
using mpgb::test::apply_combination;
using mpgb::test::make_elem;

namespace {
const MonomialOrder kOrder{};
const Rational::Field kQ{};
} // namespace

TEST_CASE("boundary bases of the demo match the reference modules") {
    auto mf = mpgb::test::load_demo();
    auto b1 = boundaries_gb<Rational>(mf, 1, kQ, kOrder);
    REQUIRE(b1.generators.size() == 1);
    auto ref1 = mpgb::test::golden_boundaries1<Rational>(b1.module, kOrder);
    CHECK(module_equal(b1.generators, ref1, b1.module, kOrder).equal);

    auto b0 = boundaries_gb<Rational>(mf, 0, kQ, kOrder);
    REQUIRE(b0.generators.size() == 7);
    auto ref0 = mpgb::test::golden_boundaries0<Rational>(b0.module, kOrder);
    CHECK(module_equal(b0.generators, ref0, b0.module, kOrder).equal);
    // membership of a listed element, one reduction each way
    CHECK(reduce(ref0[6], b0.generators).is_zero());

    auto b2 = boundaries_gb<Rational>(mf, 2, kQ, kOrder);
    CHECK(b2.generators.empty());
}

TEST_CASE("cycle bases of the demo match the reference modules") {
    auto mf = mpgb::test::load_demo();
    auto z0 = cycles_gb<Rational>(mf, 0, kQ, kOrder);
    auto ref0 = mpgb::test::golden_cycles0<Rational>(z0.module, kOrder);
    REQUIRE(z0.generators.size() == 7);
    CHECK(module_equal(z0.generators, ref0, z0.module, kOrder).equal);

    auto z1 = cycles_gb<Rational>(mf, 1, kQ, kOrder);
    auto ref1 = mpgb::test::golden_cycles1<Rational>(z1.module, kOrder);
    REQUIRE(z1.generators.size() == 3);
    CHECK(module_equal(z1.generators, ref1, z1.module, kOrder).equal);

    auto z2 = cycles_gb<Rational>(mf, 2, kQ, kOrder);
    CHECK(z2.generators.empty()); // one injective column
}

TEST_CASE("homology generators survive exactly when reduction leaves them nonzero") {
    auto mf = mpgb::test::load_demo();
    auto res = run_pipeline<Rational>(mf, kQ, kOrder);
    REQUIRE(res.dimensions.size() == 3);
    // dimension 1: all three cycle classes survive; divisibility fails on
    // (2,2) against (3,1) and (0,2)
    CHECK(res.dimensions[1].homology.size() == 3);
    for (std::size_t i = 0; i < 3; ++i)
        CHECK(res.dimensions[1].homology[i] == res.dimensions[1].cycles.generators[i]);
    // top dimension: no boundaries, generators verbatim
    CHECK(res.dimensions[2].homology.size() == res.dimensions[2].cycles.generators.size());
}

TEST_CASE("equal cycle and boundary modules give empty homology") {
    // a filled triangle entering all at once: H_1 = 0
    auto mf = parse_multifiltration(std::string(
        "dim 2\n"
        "simplex 0 @ (0,0)\nsimplex 1 @ (0,0)\nsimplex 2 @ (0,0)\n"
        "simplex 0 1 @ (0,0)\nsimplex 0 2 @ (0,0)\nsimplex 1 2 @ (0,0)\n"
        "simplex 0 1 2 @ (0,0)\n"));
    auto res = run_pipeline<Rational>(mf, kQ, kOrder);
    CHECK(res.dimensions[1].homology.empty());
    CHECK(module_equal(res.dimensions[1].cycles.generators,
                       res.dimensions[1].boundaries.generators,
                       res.dimensions[1].cycles.module, kOrder)
              .equal);
}

TEST_CASE("boundaries reduce to zero over cycles") {
    auto corpus = mpgb::test::random_corpus(12, 51);
    corpus.push_back(mpgb::test::load_demo());
    for (const auto& mf : corpus) {
        auto res = run_pipeline<Rational>(mf, kQ, kOrder);
        for (const auto& d : res.dimensions) {
            for (const auto& b : d.boundaries.generators)
                CHECK(reduce(b, d.cycles.generators).is_zero());
        }
    }
}

TEST_CASE("module equality handles redundant generators and witnesses") {
    auto m = make_free_module<Rational>(kQ, 2, 2);
    auto x = make_elem<Rational>(m, kOrder, {{1, Grade{1, 0}, 0}});
    auto x2 = make_elem<Rational>(m, kOrder, {{1, Grade{2, 0}, 0}});
    auto y = make_elem<Rational>(m, kOrder, {{1, Grade{0, 1}, 0}});
    CHECK(module_equal(std::vector{x}, std::vector{x, x2}, m, kOrder).equal);
    auto neq = module_equal(std::vector{x}, std::vector{y}, m, kOrder);
    REQUIRE_FALSE(neq.equal);
    REQUIRE(neq.witness.has_value());
    CHECK(*neq.witness == y);
    CHECK(module_equal(std::vector<FreeModuleElement<Rational>>{},
                       std::vector<FreeModuleElement<Rational>>{}, m, kOrder)
              .equal);
}

TEST_CASE("degreewise oracle on degenerate inputs") {
    auto m = make_free_module<Rational>(kQ, 2, 2);
    auto zero = FreeModuleElement<Rational>::zero(m, kOrder);
    auto kernels = oracle_syzygy_degreewise<Rational>({zero, zero}, {Grade{0, 0}, Grade{1, 0}},
                                                      Grade{1, 1}, kQ);
    for (const auto& dk : kernels)
        CHECK(dk.kernel.size() == dk.columns.size()); // full kernel

    auto f = make_elem<Rational>(m, kOrder, {{1, Grade{1, 0}, 0}, {1, Grade{1, 0}, 1}});
    auto kernels2 = oracle_syzygy_degreewise<Rational>({f}, {Grade{1, 0}}, Grade{2, 2}, kQ);
    for (const auto& dk : kernels2)
        CHECK(dk.kernel.empty()); // injective single column
}

TEST_CASE("oracle spans agree with the groebner route on the demo") {
    auto mf = mpgb::test::load_demo();
    auto res = run_pipeline<Rational>(mf, kQ, kOrder);
    auto below = make_spaces<Rational>(mf, -1, kQ);
    Grade bound = stabilization_grade(mf) + Grade{2, 2};
    for (int n = 0; n <= 2; ++n) {
        auto pm = build_shifted_boundary(res.spaces[n], n == 0 ? below : res.spaces[n - 1], kOrder);
        std::optional<PresentationMatrix<Rational>> above;
        if (n + 1 <= 2) above = build_shifted_boundary(res.spaces[n + 1], res.spaces[n], kOrder);
        auto cmp = compare_with_oracle(pm, res.dimensions[n].cycles.generators,
                                       above ? &*above : nullptr,
                                       res.dimensions[n].boundaries.generators, bound);
        CHECK(cmp.cycles_ok);
        CHECK(cmp.boundaries_ok);
        CHECK(cmp.degrees_checked == 6 * 5);
    }
}

TEST_CASE("general pipeline agrees with the one-critical route") {
    auto corpus = mpgb::test::random_corpus(8, 52, /*one_critical=*/true);
    for (const auto& mf : corpus) {
        REQUIRE(is_one_critical(mf));
        auto general = run_pipeline<Rational>(mf, kQ, kOrder);
        auto direct = one_critical_pipeline<Rational>(mf, kQ, kOrder);
        REQUIRE(general.dimensions.size() == direct.size());
        for (std::size_t n = 0; n < direct.size(); ++n) {
            auto D = general.spaces[n].D;
            CHECK(module_equal(general.dimensions[n].boundaries.generators,
                               direct[n].boundaries, D, kOrder)
                      .equal);
            CHECK(module_equal(general.dimensions[n].cycles.generators, direct[n].cycles, D,
                               kOrder)
                      .equal);
            // compare homology as submodules above the common boundaries
            auto with_b = [&](std::vector<FreeModuleElement<Rational>> gens,
                              const std::vector<FreeModuleElement<Rational>>& b) {
                gens.insert(gens.end(), b.begin(), b.end());
                return gens;
            };
            CHECK(module_equal(
                      with_b(general.dimensions[n].homology,
                             general.dimensions[n].boundaries.generators),
                      with_b(direct[n].homology, direct[n].boundaries), D, kOrder)
                      .equal);
        }
    }
}

TEST_CASE("pipeline is deterministic and thread count does not matter") {
    auto mf = mpgb::test::load_demo();
    PipelineOptions seq, par;
    seq.threads = 1;
    par.threads = 3;
    auto a = run_pipeline<Rational>(mf, kQ, kOrder, seq);
    auto b = run_pipeline<Rational>(mf, kQ, kOrder, par);
    REQUIRE(a.dimensions.size() == b.dimensions.size());
    for (std::size_t n = 0; n < a.dimensions.size(); ++n) {
        CHECK(a.dimensions[n].cycles.generators == b.dimensions[n].cycles.generators);
        CHECK(a.dimensions[n].boundaries.generators == b.dimensions[n].boundaries.generators);
        CHECK(a.dimensions[n].homology == b.dimensions[n].homology);
    }
}

TEST_CASE("empty complexes produce no dimensions") {
    auto mf = parse_multifiltration(std::string("dim 2\n"));
    auto res = run_pipeline<Rational>(mf, kQ, kOrder);
    CHECK(res.dimensions.empty());
    CHECK(res.v_prime == Grade{0, 0});
}

TEST_CASE("invalid filtrations are rejected by the pipeline") {
    auto mf = parse_multifiltration(std::string(
        "dim 2\nsimplex 0 @ (0,0)\nsimplex 1 @ (1,0)\nsimplex 0 1 @ (0,0)\n"));
    CHECK_THROWS_AS(run_pipeline<Rational>(mf, kQ, kOrder), std::invalid_argument);
}

TEST_CASE("quotient relations annihilate the homology generators") {
    auto mf = mpgb::test::load_demo();
    PipelineOptions opts;
    opts.quotient_relations = true;
    auto res = run_pipeline<Rational>(mf, kQ, kOrder, opts);
    const auto& d0 = res.dimensions[0];
    for (const auto& rel : d0.quotient_relations)
        CHECK(apply_combination(rel, d0.homology).is_zero());
}

TEST_CASE("prime field pipeline matches the rational one mod 2 on the demo") {
    auto mf = mpgb::test::load_demo();
    auto res2 = run_pipeline<PrimeField>(mf, PrimeField::Field{2}, kOrder);
    REQUIRE(res2.dimensions.size() == 3);
    CHECK(res2.dimensions[0].cycles.generators.size() == 7);
    CHECK(res2.dimensions[0].boundaries.generators.size() == 7);
    CHECK(res2.dimensions[1].cycles.generators.size() == 3);
    CHECK(res2.dimensions[1].boundaries.generators.size() == 1);
    CHECK(res2.monitor.violations == 0);
}
