#pragma once

#include <algorithm>
#include <vector>

#include "mpgb/filtration.hpp"
#include "mpgb/module.hpp"

namespace mpgb {

/// A copy of a simplex entering at one of its critical coordinates.
struct FundamentalElement {
    Simplex simplex;
    Grade grade;
    bool operator==(const FundamentalElement&) const = default;
};

/// The canonical antichain of minimal entry grades of a listed simplex.
inline std::vector<Grade> critical_coordinates(const Multifiltration& mf, const Simplex& s) {
    const SimplexEntry* e = mf.find(s);
    if (!e) throw std::invalid_argument("unknown simplex " + s.str());
    return e->grades;
}

/// All dimension-n fundamental elements: simplices in canonical order,
/// grades within a simplex lexicographic.
inline std::vector<FundamentalElement> fundamental_elements(const Multifiltration& mf, int n) {
    std::vector<FundamentalElement> out;
    for (const auto& e : mf.entries()) {
        if (e.simplex.dimension() != n) continue;
        for (const auto& g : e.grades) out.push_back({e.simplex, g});
    }
    return out;
}

/// Scalar simplicial boundary of the full complex X_{v'}: one signed
/// incidence column per n-simplex over the (n-1)-simplices. n = 0 gives
/// the zero map.
struct ScalarBoundary {
    int n = 0;
    std::vector<Simplex> rows;
    std::vector<Simplex> cols;
    /// per column, (row index, sign) pairs
    std::vector<std::vector<std::pair<std::size_t, int>>> entries;
};

inline ScalarBoundary top_boundary(const Multifiltration& mf, int n) {
    ScalarBoundary b;
    b.n = n;
    Grade vp = stabilization_grade(mf);
    b.cols = chain_basis_at(mf, vp, n);
    if (n >= 1) b.rows = chain_basis_at(mf, vp, n - 1);
    b.entries.resize(b.cols.size());
    for (std::size_t c = 0; c < b.cols.size(); ++c) {
        for (const auto& [face, sign] : b.cols[c].boundary_faces()) {
            auto it = std::lower_bound(b.rows.begin(), b.rows.end(), face);
            if (it == b.rows.end() || *it != face)
                throw std::invalid_argument("face " + face.str() + " missing from complex");
            b.entries[c].push_back({static_cast<std::size_t>(it - b.rows.begin()), sign});
        }
    }
    return b;
}

/// Per-dimension ambient data: the free module D_n on the n-simplices
/// of X_{v'} (generators at multidegree zero) and the graded free module
/// on the fundamental elements (generators at their critical grades).
template <class K>
struct DimensionSpaces {
    int n = 0;
    std::vector<Simplex> simplices;
    ModulePtr<K> D;
    std::vector<FundamentalElement> fundamentals;
    ModulePtr<K> F;

    std::size_t simplex_index(const Simplex& s) const {
        auto it = std::lower_bound(simplices.begin(), simplices.end(), s);
        if (it == simplices.end() || *it != s)
            throw std::invalid_argument("simplex " + s.str() + " not in dimension basis");
        return static_cast<std::size_t>(it - simplices.begin());
    }
};

template <class K>
DimensionSpaces<K> make_spaces(const Multifiltration& mf, int n, typename K::Field field) {
    DimensionSpaces<K> sp;
    sp.n = n;
    Grade vp = stabilization_grade(mf);
    if (n >= 0) sp.simplices = chain_basis_at(mf, vp, n);
    std::vector<GradedBasisElement> dbasis;
    for (const auto& s : sp.simplices) dbasis.push_back({s.str(), Grade::zero(mf.r())});
    sp.D = make_module<K>(field, mf.r(), std::move(dbasis));
    if (n >= 0) sp.fundamentals = fundamental_elements(mf, n);
    std::vector<GradedBasisElement> fbasis;
    for (const auto& f : sp.fundamentals)
        fbasis.push_back({"(" + f.simplex.str() + "," + f.grade.str() + ")", f.grade});
    sp.F = make_module<K>(field, mf.r(), std::move(fbasis));
    return sp;
}

/// The shifted boundary: one homogeneous column of D_{n-1} per
/// fundamental element (sigma, v), equal to x^v times sigma's scalar
/// boundary column. All n = 0 columns are zero.
template <class K>
struct PresentationMatrix {
    int n = 0;
    DimensionSpaces<K> source; // dimension n
    DimensionSpaces<K> target; // dimension n-1
    std::vector<FreeModuleElement<K>> columns;
};

template <class K>
PresentationMatrix<K> build_shifted_boundary(const DimensionSpaces<K>& source,
                                             const DimensionSpaces<K>& target,
                                             MonomialOrder order) {
    PresentationMatrix<K> pm;
    pm.n = source.n;
    pm.source = source;
    pm.target = target;
    for (const auto& f : source.fundamentals) {
        std::vector<ModuleTerm<K>> terms;
        if (pm.n >= 1) {
            for (const auto& [face, sign] : f.simplex.boundary_faces()) {
                std::uint32_t row = static_cast<std::uint32_t>(target.simplex_index(face));
                terms.push_back({target.D->field.from_long(sign), f.grade, row});
            }
        }
        pm.columns.push_back(FreeModuleElement<K>::make(target.D, order, std::move(terms)));
    }
    return pm;
}

template <class K>
PresentationMatrix<K> build_shifted_boundary(const Multifiltration& mf, int n,
                                             typename K::Field field, MonomialOrder order) {
    return build_shifted_boundary(make_spaces<K>(mf, n, field),
                                  make_spaces<K>(mf, n - 1, field), order);
}

/// Maps an element over the fundamental basis into D_n: the term
/// c*x^u*eps_(sigma,v) becomes c*x^(u+v)*e_sigma. Degree-preserving.
template <class K>
FreeModuleElement<K> embed_into_D(const DimensionSpaces<K>& sp, const FreeModuleElement<K>& s) {
    if (!same_module(s.module(), sp.F))
        throw std::invalid_argument("element is not over the fundamental basis");
    std::vector<ModuleTerm<K>> terms;
    for (const auto& t : s.terms()) {
        const FundamentalElement& f = sp.fundamentals[t.basis];
        terms.push_back({t.coeff, t.monomial + f.grade,
                         static_cast<std::uint32_t>(sp.simplex_index(f.simplex))});
    }
    return FreeModuleElement<K>::make(sp.D, s.order(), std::move(terms));
}

/// Pushes an element of D_n through the scalar boundary into D_{n-1}.
/// Used to state the chain condition on shifted boundary columns.
template <class K>
FreeModuleElement<K> apply_scalar_boundary(const DimensionSpaces<K>& source,
                                           const DimensionSpaces<K>& target,
                                           const FreeModuleElement<K>& f) {
    if (!same_module(f.module(), source.D))
        throw std::invalid_argument("element is not in the expected chain module");
    std::vector<ModuleTerm<K>> terms;
    for (const auto& t : f.terms()) {
        const Simplex& s = source.simplices[t.basis];
        for (const auto& [face, sign] : s.boundary_faces()) {
            K c = t.coeff * target.D->field.from_long(sign);
            terms.push_back({std::move(c), t.monomial,
                             static_cast<std::uint32_t>(target.simplex_index(face))});
        }
    }
    return FreeModuleElement<K>::make(target.D, f.order(), std::move(terms));
}

/// One-critical graded boundary: source generators are the n-simplices
/// at their unique entry grades, entries are x^(v_sigma - v_face) times
/// the incidence sign. Defined only for one-critical filtrations.
template <class K>
struct GradedBoundary {
    int n = 0;
    std::vector<Simplex> source_simplices;
    std::vector<Simplex> target_simplices;
    ModulePtr<K> source; // C_n with graded basis
    ModulePtr<K> target; // C_{n-1} with graded basis
    std::vector<FreeModuleElement<K>> columns;
};

template <class K>
ModulePtr<K> make_one_critical_chain_module(const Multifiltration& mf, int n,
                                            typename K::Field field,
                                            std::vector<Simplex>* simplices_out = nullptr) {
    if (!is_one_critical(mf))
        throw std::invalid_argument("filtration is not one-critical");
    Grade vp = stabilization_grade(mf);
    std::vector<Simplex> simplices = n >= 0 ? chain_basis_at(mf, vp, n) : std::vector<Simplex>{};
    std::vector<GradedBasisElement> basis;
    for (const auto& s : simplices)
        basis.push_back({s.str(), mf.find(s)->grades.front()});
    if (simplices_out) *simplices_out = simplices;
    return make_module<K>(field, mf.r(), std::move(basis));
}

template <class K>
GradedBoundary<K> build_graded_boundary(const Multifiltration& mf, int n,
                                        typename K::Field field, MonomialOrder order) {
    GradedBoundary<K> gb;
    gb.n = n;
    gb.source = make_one_critical_chain_module<K>(mf, n, field, &gb.source_simplices);
    gb.target = make_one_critical_chain_module<K>(mf, n - 1, field, &gb.target_simplices);
    for (std::size_t c = 0; c < gb.source_simplices.size(); ++c) {
        const Simplex& s = gb.source_simplices[c];
        const Grade& vs = gb.source->basis[c].degree;
        std::vector<ModuleTerm<K>> terms;
        if (n >= 1) {
            for (const auto& [face, sign] : s.boundary_faces()) {
                auto it = std::lower_bound(gb.target_simplices.begin(), gb.target_simplices.end(), face);
                if (it == gb.target_simplices.end() || *it != face)
                    throw std::invalid_argument("face " + face.str() + " missing from complex");
                std::uint32_t row = static_cast<std::uint32_t>(it - gb.target_simplices.begin());
                // entry grades of faces weakly precede the coface's
                terms.push_back({gb.target->field.from_long(sign),
                                 vs - gb.target->basis[row].degree, row});
            }
        }
        gb.columns.push_back(FreeModuleElement<K>::make(gb.target, order, std::move(terms)));
    }
    return gb;
}

} // namespace mpgb
