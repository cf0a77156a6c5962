#pragma once

#include <chrono>
#include <future>
#include <optional>
#include <vector>

#include "mpgb/groebner.hpp"
#include "mpgb/linalg.hpp"
#include "mpgb/presentation.hpp"

namespace mpgb {

struct PipelineOptions {
    /// Verify homogeneity of every engine-produced element.
    bool check_homogeneity = true;
    /// Also compute relations among the homology generators, giving a
    /// full quotient presentation alongside the normal forms.
    bool quotient_relations = false;
    /// Per-dimension parallelism; 1 = sequential.
    unsigned threads = 1;
};

template <class K>
struct DimensionResult {
    int n = 0;
    std::size_t fundamental_count = 0; // |F_n|
    std::size_t simplex_count = 0;     // d_n
    GroebnerBasis<K> boundaries;       // reduced, in D_n
    GroebnerBasis<K> cycles;           // reduced, in D_n
    std::vector<FreeModuleElement<K>> homology; // normal forms mod boundaries
    std::vector<FreeModuleElement<K>> quotient_relations;
    double seconds_boundaries = 0, seconds_cycles = 0, seconds_homology = 0;
};

template <class K>
struct PipelineResult {
    Grade v_prime;
    MonomialOrder order;
    typename K::Field field;
    std::vector<DimensionResult<K>> dimensions;
    std::vector<DimensionSpaces<K>> spaces; // index = dimension (0..d)
    HomogeneityMonitor monitor;
    double seconds_presentation = 0;
};

namespace detail {

template <class K>
GroebnerBasis<K> empty_reduced_basis(ModulePtr<K> module, MonomialOrder order) {
    GroebnerBasis<K> gb;
    gb.module = std::move(module);
    gb.order = order;
    gb.reduced = true;
    return gb;
}

template <class K>
GroebnerBasis<K> reduced_basis_of(const std::vector<FreeModuleElement<K>>& gens,
                                  ModulePtr<K> module, MonomialOrder order,
                                  EngineOptions opts, ModulePtr<K> source = nullptr) {
    bool all_zero = true;
    for (const auto& g : gens)
        if (!g.is_zero()) { all_zero = false; break; }
    if (all_zero) return empty_reduced_basis(std::move(module), order);
    return reduce_basis(buchberger(gens, order, opts, std::move(source)));
}

} // namespace detail

/// Reduced Groebner basis of x^{v'}B_n = Im(shifted boundary of n+1).
template <class K>
GroebnerBasis<K> boundaries_gb(const PresentationMatrix<K>& above, MonomialOrder order,
                               EngineOptions opts = {}) {
    return detail::reduced_basis_of(above.columns, above.target.D, order, opts,
                                    above.source.F);
}

template <class K>
GroebnerBasis<K> boundaries_gb(const Multifiltration& mf, int n, typename K::Field field,
                               MonomialOrder order, EngineOptions opts = {}) {
    if (n >= mf.dimension())
        return detail::empty_reduced_basis(make_spaces<K>(mf, n, field).D, order);
    return boundaries_gb(build_shifted_boundary<K>(mf, n + 1, field, order), order, opts);
}

/// Reduced Groebner basis of x^{v'}Z_n: the syzygies of the shifted
/// boundary columns, mapped into D_n. The n = 0 boundary is the zero
/// map, so Z_0 is generated by the embedded fundamental elements
/// directly.
template <class K>
GroebnerBasis<K> cycles_gb(const PresentationMatrix<K>& pm, MonomialOrder order,
                           EngineOptions opts = {},
                           SyzygyBasis<K>* syzygies_out = nullptr) {
    const DimensionSpaces<K>& sp = pm.source;
    std::vector<FreeModuleElement<K>> embedded;
    if (pm.n == 0) {
        for (std::size_t i = 0; i < sp.fundamentals.size(); ++i) {
            embedded.push_back(embed_into_D(
                sp, FreeModuleElement<K>::monomial(sp.F, order, sp.F->field.from_long(1),
                                                   Grade::zero(sp.F->r),
                                                   static_cast<std::uint32_t>(i))));
        }
    } else if (!pm.columns.empty()) {
        auto [gb, syz] = buchberger_with_syzygy(pm.columns, order, opts, sp.F);
        (void)gb;
        for (const auto& s : syz.generators) {
            FreeModuleElement<K> e = embed_into_D(sp, s);
            if (opts.monitor) opts.monitor->check(e);
            embedded.push_back(std::move(e));
        }
        if (syzygies_out) *syzygies_out = std::move(syz);
    }
    if (embedded.empty()) return detail::empty_reduced_basis(sp.D, order);
    return detail::reduced_basis_of(embedded, sp.D, order, opts);
}

template <class K>
GroebnerBasis<K> cycles_gb(const Multifiltration& mf, int n, typename K::Field field,
                           MonomialOrder order, EngineOptions opts = {}) {
    return cycles_gb(build_shifted_boundary<K>(mf, n, field, order), order, opts);
}

/// Normal forms of the cycle generators modulo the boundary basis;
/// zero forms are dropped. The result generates x^{v'}H_n.
template <class K>
std::vector<FreeModuleElement<K>> homology_generators(const GroebnerBasis<K>& cycles,
                                                      const GroebnerBasis<K>& boundaries,
                                                      HomogeneityMonitor* monitor = nullptr) {
    std::vector<FreeModuleElement<K>> out;
    for (const auto& z : cycles.generators) {
        FreeModuleElement<K> h = reduce(z, boundaries.generators, /*full=*/true, monitor);
        if (!h.is_zero()) out.push_back(std::move(h));
    }
    return out;
}

/// Full pipeline over all dimensions 0..dim(X).
template <class K>
PipelineResult<K> run_pipeline(const Multifiltration& mf, typename K::Field field,
                               MonomialOrder order, PipelineOptions popts = {}) {
    ValidationReport rep = validate(mf);
    if (!rep.ok) throw std::invalid_argument("multifiltration fails validation");

    using clock = std::chrono::steady_clock;
    auto seconds_since = [](clock::time_point t0) {
        return std::chrono::duration<double>(clock::now() - t0).count();
    };

    PipelineResult<K> res;
    res.v_prime = stabilization_grade(mf);
    res.order = order;
    res.field = field;

    auto t0 = clock::now();
    int d = mf.dimension();
    for (int n = 0; n <= d; ++n) res.spaces.push_back(make_spaces<K>(mf, n, field));
    std::vector<PresentationMatrix<K>> pms;
    DimensionSpaces<K> below = make_spaces<K>(mf, -1, field);
    for (int n = 0; n <= d; ++n)
        pms.push_back(build_shifted_boundary(res.spaces[n], n == 0 ? below : res.spaces[n - 1], order));
    res.seconds_presentation = seconds_since(t0);

    std::vector<HomogeneityMonitor> monitors(static_cast<std::size_t>(d + 1));
    auto run_dim = [&](int n) {
        DimensionResult<K> dr;
        dr.n = n;
        dr.fundamental_count = res.spaces[n].fundamentals.size();
        dr.simplex_count = res.spaces[n].simplices.size();
        EngineOptions eopts;
        eopts.monitor = popts.check_homogeneity ? &monitors[n] : nullptr;

        auto tb = clock::now();
        if (n < d)
            dr.boundaries = boundaries_gb(pms[n + 1], order, eopts);
        else
            dr.boundaries = detail::empty_reduced_basis(res.spaces[n].D, order);
        dr.seconds_boundaries = seconds_since(tb);

        auto tc = clock::now();
        dr.cycles = cycles_gb(pms[n], order, eopts);
        dr.seconds_cycles = seconds_since(tc);

        auto th = clock::now();
        dr.homology = homology_generators(dr.cycles, dr.boundaries, eopts.monitor);
        if (popts.quotient_relations && !dr.homology.empty()) {
            auto [hgb, hsyz] = buchberger_with_syzygy(dr.homology, order, eopts);
            (void)hgb;
            dr.quotient_relations = hsyz.generators;
        }
        dr.seconds_homology = seconds_since(th);
        return dr;
    };

    res.dimensions.resize(static_cast<std::size_t>(d + 1));
    unsigned threads = std::max(1u, popts.threads);
    if (threads <= 1 || d <= 0) {
        for (int n = 0; n <= d; ++n) res.dimensions[n] = run_dim(n);
    } else {
        std::vector<std::future<DimensionResult<K>>> futs;
        for (int n = 0; n <= d; ++n)
            futs.push_back(std::async(std::launch::async, run_dim, n));
        for (int n = 0; n <= d; ++n) res.dimensions[n] = futs[n].get();
    }
    for (const auto& m : monitors) {
        res.monitor.checked += m.checked;
        if (m.violations && res.monitor.violations == 0)
            res.monitor.first_violation = m.first_violation;
        res.monitor.violations += m.violations;
    }
    return res;
}

/// Decides <A> == <B> inside one ambient module by reducing each side's
/// generators to zero against a Groebner basis of the other. On failure
/// the witness is a generator of one side outside the other's module.
template <class K>
struct ModuleEqualResult {
    bool equal = true;
    std::optional<FreeModuleElement<K>> witness;
};

template <class K>
ModuleEqualResult<K> module_equal(const std::vector<FreeModuleElement<K>>& A,
                                  const std::vector<FreeModuleElement<K>>& B,
                                  ModulePtr<K> module, MonomialOrder order) {
    for (const auto& a : A)
        if (!same_module(a.module(), module))
            throw std::invalid_argument("ambient module mismatch");
    for (const auto& b : B)
        if (!same_module(b.module(), module))
            throw std::invalid_argument("ambient module mismatch");
    EngineOptions opts;
    opts.track_cofactors = false;
    GroebnerBasis<K> gba = detail::reduced_basis_of(A, module, order, opts);
    for (const auto& b : B) {
        if (!reduce(b, gba.generators).is_zero())
            return {false, b};
    }
    GroebnerBasis<K> gbb = detail::reduced_basis_of(B, module, order, opts);
    for (const auto& a : A) {
        if (!reduce(a, gbb.generators).is_zero())
            return {false, a};
    }
    return {};
}

/// Exact linear-algebra view of one multidegree u: the coordinate
/// vector of x^{u-deg g} g over the basis slots of g's module, or
/// nothing when deg g does not precede u.
template <class K>
std::optional<std::vector<K>> degree_component(const FreeModuleElement<K>& g, const Grade& u) {
    auto dg = g.multidegree();
    if (!dg || !divides(*dg, u)) return std::nullopt;
    const auto& module = *g.module();
    std::vector<K> v(module.rank(), module.field.from_long(0));
    for (const auto& t : g.terms()) v[t.basis] = v[t.basis] + t.coeff;
    return v;
}

/// Span of the degree-u slices of a homogeneous generating set, as rows.
template <class K>
std::vector<std::vector<K>> degree_span(const std::vector<FreeModuleElement<K>>& gens,
                                        const Grade& u) {
    std::vector<std::vector<K>> rows;
    for (const auto& g : gens) {
        if (g.is_zero()) continue;
        if (auto v = degree_component(g, u)) rows.push_back(std::move(*v));
    }
    return rows;
}

/// Degreewise syzygy oracle: for each u below the bound, an exact
/// k-basis of the coefficient vectors c with sum_tau c_tau x^{u-deg tau}
/// f_tau = 0, computed by Gaussian elimination. Entirely independent of
/// the Groebner engine.
template <class K>
struct DegreeKernel {
    Grade degree;
    std::vector<std::size_t> columns; // source columns with deg tau <= u
    std::vector<std::vector<K>> kernel;
};

template <class K>
std::vector<DegreeKernel<K>> oracle_syzygy_degreewise(
    const std::vector<FreeModuleElement<K>>& columns, const std::vector<Grade>& source_degrees,
    const Grade& bound, const typename K::Field& field) {
    if (columns.size() != source_degrees.size())
        throw std::invalid_argument("one source degree per column required");
    std::vector<DegreeKernel<K>> out;
    for (const Grade& u : grades_below(bound)) {
        DegreeKernel<K> dk;
        dk.degree = u;
        std::vector<std::vector<K>> cols;
        for (std::size_t t = 0; t < columns.size(); ++t) {
            if (!divides(source_degrees[t], u)) continue;
            dk.columns.push_back(t);
            if (columns[t].is_zero()) {
                std::size_t n = columns[t].module() ? columns[t].module()->rank() : 0;
                cols.push_back(std::vector<K>(n, field.from_long(0)));
            } else {
                auto v = degree_component(columns[t].shifted(u - source_degrees[t]), u);
                if (!v) throw std::invalid_argument("column is not homogeneous of its source degree");
                cols.push_back(std::move(*v));
            }
        }
        if (!dk.columns.empty()) {
            std::size_t nrows = cols[0].size();
            std::vector<std::vector<K>> m(nrows, std::vector<K>(dk.columns.size(), field.from_long(0)));
            for (std::size_t c = 0; c < cols.size(); ++c)
                for (std::size_t r = 0; r < nrows; ++r) m[r][c] = cols[c][r];
            dk.kernel = kernel_basis(std::move(m), dk.columns.size(), field);
        }
        out.push_back(std::move(dk));
    }
    return out;
}

struct OracleComparison {
    bool cycles_ok = true;
    bool boundaries_ok = true;
    std::size_t degrees_checked = 0;
    Grade first_mismatch;
};

/// Checks, degree by degree up to the bound, that the cycle basis spans
/// exactly the oracle kernel of the shifted boundary and that the
/// boundary basis spans exactly the column span of the one above.
template <class K>
OracleComparison compare_with_oracle(const PresentationMatrix<K>& pm,
                                     const std::vector<FreeModuleElement<K>>& cycle_gens,
                                     const PresentationMatrix<K>* above,
                                     const std::vector<FreeModuleElement<K>>& boundary_gens,
                                     const Grade& bound) {
    const auto& field = pm.source.D->field;
    std::vector<Grade> source_degrees;
    for (const auto& f : pm.source.fundamentals) source_degrees.push_back(f.grade);
    auto kernels = oracle_syzygy_degreewise(pm.columns, source_degrees, bound, field);

    OracleComparison cmp;
    std::size_t dn = pm.source.D->rank();
    for (const auto& dk : kernels) {
        ++cmp.degrees_checked;
        // kernel coefficient vectors, pushed into D_n coordinates
        std::vector<std::vector<K>> oracle_rows;
        for (const auto& kv : dk.kernel) {
            std::vector<K> w(dn, field.from_long(0));
            for (std::size_t c = 0; c < dk.columns.size(); ++c) {
                const FundamentalElement& f = pm.source.fundamentals[dk.columns[c]];
                std::size_t i = pm.source.simplex_index(f.simplex);
                w[i] = w[i] + kv[c];
            }
            oracle_rows.push_back(std::move(w));
        }
        if (!same_span(oracle_rows, degree_span(cycle_gens, dk.degree))) {
            cmp.cycles_ok = false;
            cmp.first_mismatch = dk.degree;
            return cmp;
        }
        // image of the shifted boundary above at this degree
        std::vector<std::vector<K>> image_rows;
        if (above) {
            for (std::size_t t = 0; t < above->columns.size(); ++t) {
                const Grade& dt = above->source.fundamentals[t].grade;
                if (!divides(dt, dk.degree) || above->columns[t].is_zero()) continue;
                auto v = degree_component(above->columns[t].shifted(dk.degree - dt), dk.degree);
                if (v) image_rows.push_back(std::move(*v));
            }
        }
        if (!same_span(image_rows, degree_span(boundary_gens, dk.degree))) {
            cmp.boundaries_ok = false;
            cmp.first_mismatch = dk.degree;
            return cmp;
        }
    }
    return cmp;
}

/// One-critical route: run the three steps directly on the graded
/// boundary matrices of C_n, then shift everything into D_n so the
/// result is comparable with the general pipeline.
template <class K>
struct OneCriticalResult {
    int n = 0;
    std::vector<FreeModuleElement<K>> boundaries; // in D_n
    std::vector<FreeModuleElement<K>> cycles;     // in D_n
    std::vector<FreeModuleElement<K>> homology;   // in D_n
};

template <class K>
FreeModuleElement<K> embed_one_critical(const ModulePtr<K>& graded,
                                        const std::vector<Simplex>& graded_simplices,
                                        const DimensionSpaces<K>& sp,
                                        const FreeModuleElement<K>& f) {
    std::vector<ModuleTerm<K>> terms;
    for (const auto& t : f.terms()) {
        terms.push_back({t.coeff, t.monomial + graded->basis[t.basis].degree,
                         static_cast<std::uint32_t>(sp.simplex_index(graded_simplices[t.basis]))});
    }
    return FreeModuleElement<K>::make(sp.D, f.order(), std::move(terms));
}

template <class K>
std::vector<OneCriticalResult<K>> one_critical_pipeline(const Multifiltration& mf,
                                                        typename K::Field field,
                                                        MonomialOrder order) {
    if (!is_one_critical(mf))
        throw std::invalid_argument("filtration is not one-critical");
    int d = mf.dimension();
    std::vector<OneCriticalResult<K>> out;
    std::vector<GradedBoundary<K>> gbs;
    for (int n = 0; n <= d; ++n) gbs.push_back(build_graded_boundary<K>(mf, n, field, order));
    EngineOptions opts;
    for (int n = 0; n <= d; ++n) {
        OneCriticalResult<K> r;
        r.n = n;
        DimensionSpaces<K> sp = make_spaces<K>(mf, n, field);

        std::vector<FreeModuleElement<K>> b_gens;
        if (n < d && !gbs[n + 1].columns.empty()) {
            GroebnerBasis<K> bgb = detail::reduced_basis_of(gbs[n + 1].columns, gbs[n + 1].target,
                                                            order, opts);
            b_gens = bgb.generators;
        }

        std::vector<FreeModuleElement<K>> z_gens;
        if (n == 0) {
            for (std::size_t i = 0; i < gbs[0].source_simplices.size(); ++i)
                z_gens.push_back(FreeModuleElement<K>::monomial(
                    gbs[0].source, order, field.from_long(1), Grade::zero(mf.r()),
                    static_cast<std::uint32_t>(i)));
        } else if (!gbs[n].columns.empty()) {
            auto [gb, syz] = buchberger_with_syzygy(gbs[n].columns, order, opts, gbs[n].source);
            (void)gb;
            z_gens = syz.generators;
        }
        if (!z_gens.empty()) {
            GroebnerBasis<K> zgb = detail::reduced_basis_of(z_gens, gbs[n].source, order, opts);
            z_gens = zgb.generators;
        }

        std::vector<FreeModuleElement<K>> h_gens;
        for (const auto& z : z_gens) {
            FreeModuleElement<K> h = reduce(z, b_gens, /*full=*/true);
            if (!h.is_zero()) h_gens.push_back(std::move(h));
        }

        for (const auto& b : b_gens)
            r.boundaries.push_back(embed_one_critical(gbs[n + 1 <= d ? n + 1 : n].target,
                                                      gbs[n + 1 <= d ? n + 1 : n].target_simplices,
                                                      sp, b));
        for (const auto& z : z_gens)
            r.cycles.push_back(embed_one_critical(gbs[n].source, gbs[n].source_simplices, sp, z));
        for (const auto& h : h_gens)
            r.homology.push_back(embed_one_critical(gbs[n].source, gbs[n].source_simplices, sp, h));
        out.push_back(std::move(r));
    }
    return out;
}

} // namespace mpgb
