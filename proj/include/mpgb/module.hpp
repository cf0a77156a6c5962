#pragma once

#include <algorithm>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "mpgb/grade.hpp"
#include "mpgb/scalar.hpp"

namespace mpgb {

enum class OrderScheme { PositionOverTerm, TermOverPosition };
enum class MonoTiebreak { GrLex, Lex, GrevLex };
/// Which basis position counts as greater under the order.
enum class BasisRank { LowerIndexGreater, HigherIndexGreater };

/// Total order on module monomials x^u e_i. Multiplicative in the
/// monomial part and a well-ordering within each position.
struct MonomialOrder {
    OrderScheme scheme = OrderScheme::PositionOverTerm;
    MonoTiebreak tiebreak = MonoTiebreak::GrLex;
    BasisRank rank = BasisRank::LowerIndexGreater;

    bool operator==(const MonomialOrder&) const = default;

    std::strong_ordering mono_compare(const Grade& a, const Grade& b) const {
        check_same_length(a, b);
        switch (tiebreak) {
        case MonoTiebreak::Lex:
            return lex(a, b);
        case MonoTiebreak::GrLex: {
            if (auto c = a.total() <=> b.total(); c != 0) return c;
            return lex(a, b);
        }
        case MonoTiebreak::GrevLex: {
            if (auto c = a.total() <=> b.total(); c != 0) return c;
            for (std::size_t i = a.size(); i > 0; --i) {
                if (a[i - 1] != b[i - 1])
                    return b[i - 1] <=> a[i - 1]; // smaller last exponent is greater
            }
            return std::strong_ordering::equal;
        }
        }
        return std::strong_ordering::equal;
    }

    std::strong_ordering position_compare(std::uint32_t i, std::uint32_t j) const {
        if (i == j) return std::strong_ordering::equal;
        bool greater = (rank == BasisRank::LowerIndexGreater) ? i < j : i > j;
        return greater ? std::strong_ordering::greater : std::strong_ordering::less;
    }

    /// Compare x^u e_i with x^v e_j.
    std::strong_ordering compare(const Grade& u, std::uint32_t i,
                                 const Grade& v, std::uint32_t j) const {
        if (scheme == OrderScheme::PositionOverTerm) {
            if (auto c = position_compare(i, j); c != 0) return c;
            return mono_compare(u, v);
        }
        if (auto c = mono_compare(u, v); c != 0) return c;
        return position_compare(i, j);
    }

    std::string name() const;
    static std::optional<MonomialOrder> parse(const std::string& s);

private:
    static std::strong_ordering lex(const Grade& a, const Grade& b) {
        for (std::size_t i = 0; i < a.size(); ++i)
            if (a[i] != b[i]) return a[i] <=> b[i];
        return std::strong_ordering::equal;
    }
};

/// A monomial position in a free module: x^mono at basis slot pos.
struct ModuleMono {
    Grade mono;
    std::uint32_t pos = 0;
    bool operator==(const ModuleMono&) const = default;
};

/// One generator of a graded free module.
struct GradedBasisElement {
    std::string name;
    Grade degree;
    bool operator==(const GradedBasisElement&) const = default;
};

/// Ambient context for free-module elements: coefficient field, the
/// parameter count r, and the graded basis. Elements belonging to
/// structurally different modules never mix.
template <class K>
struct FreeModule {
    typename K::Field field;
    std::size_t r = 0;
    std::vector<GradedBasisElement> basis;

    bool operator==(const FreeModule&) const = default;

    std::size_t rank() const { return basis.size(); }
    Grade zero_grade() const { return Grade::zero(r); }
};

template <class K>
using ModulePtr = std::shared_ptr<const FreeModule<K>>;

template <class K>
ModulePtr<K> make_module(typename K::Field field, std::size_t r,
                         std::vector<GradedBasisElement> basis) {
    for (const auto& b : basis)
        if (b.degree.size() != r)
            throw std::invalid_argument("basis degree length does not match r");
    return std::make_shared<const FreeModule<K>>(
        FreeModule<K>{std::move(field), r, std::move(basis)});
}

/// Free module on n generators named e1..en, all at degree zero.
template <class K>
ModulePtr<K> make_free_module(typename K::Field field, std::size_t r, std::size_t n) {
    std::vector<GradedBasisElement> basis;
    basis.reserve(n);
    for (std::size_t i = 0; i < n; ++i)
        basis.push_back({"e_" + std::to_string(i + 1), Grade::zero(r)});
    return make_module<K>(std::move(field), r, std::move(basis));
}

template <class K>
bool same_module(const ModulePtr<K>& a, const ModulePtr<K>& b) {
    return a == b || (a && b && *a == *b);
}

template <class K>
struct ModuleTerm {
    K coeff;
    Grade monomial;
    std::uint32_t basis = 0;

    bool operator==(const ModuleTerm&) const = default;
};

std::string monomial_str(const Grade& g);

/// Sparse element of a graded free module. Terms are kept strictly
/// descending under the element's monomial order, with no zero
/// coefficients and no duplicate (monomial, basis) pairs; the canonical
/// form is unique per (order, field).
template <class K>
class FreeModuleElement {
public:
    using Term = ModuleTerm<K>;

    FreeModuleElement() = default;

    static FreeModuleElement zero(ModulePtr<K> module, MonomialOrder order) {
        return FreeModuleElement(std::move(module), order, {});
    }

    static FreeModuleElement make(ModulePtr<K> module, MonomialOrder order,
                                  std::vector<Term> terms) {
        FreeModuleElement e(std::move(module), order, {});
        e.assign_normalized(std::move(terms));
        return e;
    }

    static FreeModuleElement monomial(ModulePtr<K> module, MonomialOrder order,
                                      K coeff, Grade mono, std::uint32_t basis) {
        std::vector<Term> t;
        if (!coeff.is_zero()) t.push_back({std::move(coeff), std::move(mono), basis});
        return make(std::move(module), order, std::move(t));
    }

    const ModulePtr<K>& module() const { return module_; }
    const MonomialOrder& order() const { return order_; }
    const std::vector<Term>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }

    ModuleMono leading_monomial() const {
        require_nonzero();
        return {terms_.front().monomial, terms_.front().basis};
    }
    const K& leading_coefficient() const {
        require_nonzero();
        return terms_.front().coeff;
    }

    FreeModuleElement operator-() const {
        FreeModuleElement e = *this;
        for (auto& t : e.terms_) t.coeff = -t.coeff;
        return e;
    }

    friend FreeModuleElement operator+(const FreeModuleElement& f, const FreeModuleElement& g) {
        f.require_compatible(g);
        std::vector<Term> out;
        out.reserve(f.terms_.size() + g.terms_.size());
        auto a = f.terms_.begin(), b = g.terms_.begin();
        while (a != f.terms_.end() && b != g.terms_.end()) {
            auto c = f.order_.compare(a->monomial, a->basis, b->monomial, b->basis);
            if (c == std::strong_ordering::greater) {
                out.push_back(*a++);
            } else if (c == std::strong_ordering::less) {
                out.push_back(*b++);
            } else {
                K s = a->coeff + b->coeff;
                if (!s.is_zero()) out.push_back({std::move(s), a->monomial, a->basis});
                ++a; ++b;
            }
        }
        out.insert(out.end(), a, f.terms_.end());
        out.insert(out.end(), b, g.terms_.end());
        FreeModuleElement e(f.module_, f.order_, {});
        e.terms_ = std::move(out); // merge of canonical inputs is canonical
        return e;
    }

    friend FreeModuleElement operator-(const FreeModuleElement& f, const FreeModuleElement& g) {
        return f + (-g);
    }

    /// c * x^u * f. A zero scalar yields the zero element.
    FreeModuleElement scaled(const K& c, const Grade& u) const {
        if (c.is_zero()) return zero(module_, order_);
        FreeModuleElement e = *this;
        for (auto& t : e.terms_) {
            t.coeff = t.coeff * c;
            t.monomial = t.monomial + u;
        }
        return e; // monomial shift preserves the term order
    }

    /// x^u * f.
    FreeModuleElement shifted(const Grade& u) const {
        FreeModuleElement e = *this;
        for (auto& t : e.terms_) t.monomial = t.monomial + u;
        return e;
    }

    FreeModuleElement monic() const {
        require_nonzero();
        if (leading_coefficient().is_one()) return *this;
        return scaled(leading_coefficient().inverse(), module_->zero_grade());
    }

    /// Multidegree of a term: monomial plus the degree of its basis slot.
    Grade term_degree(const Term& t) const {
        return t.monomial + module_->basis[t.basis].degree;
    }

    bool is_homogeneous() const {
        if (terms_.empty()) return true;
        Grade d = term_degree(terms_.front());
        for (const auto& t : terms_)
            if (term_degree(t) != d) return false;
        return true;
    }

    /// Multidegree of a nonzero homogeneous element.
    std::optional<Grade> multidegree() const {
        if (terms_.empty() || !is_homogeneous()) return std::nullopt;
        return term_degree(terms_.front());
    }

    bool operator==(const FreeModuleElement& o) const {
        return same_module(module_, o.module_) && order_ == o.order_ && terms_ == o.terms_;
    }

    /// Same element re-canonicalized under a different order.
    FreeModuleElement resorted(MonomialOrder order) const {
        FreeModuleElement e(module_, order, {});
        e.assign_normalized(terms_);
        return e;
    }

    /// Renders "c*x1^a1*...*xr^ar*e_i" terms, descending, signs folded
    /// into coefficients. With labels, basis slots print their names.
    std::string str(bool labels = false) const {
        if (terms_.empty()) return "0";
        std::string out;
        for (std::size_t i = 0; i < terms_.size(); ++i) {
            const Term& t = terms_[i];
            std::string c = t.coeff.str();
            bool neg = !c.empty() && c[0] == '-';
            if (i == 0) {
                if (neg) out += "-";
            } else {
                out += neg ? " - " : " + ";
            }
            if (neg) c = c.substr(1);
            std::string mono = monomial_str(t.monomial);
            std::string base = labels ? module_->basis[t.basis].name
                                      : "e_" + std::to_string(t.basis + 1);
            if (c != "1") {
                out += c;
                out += "*";
            }
            if (!mono.empty()) {
                out += mono;
                out += "*";
            }
            out += base;
        }
        return out;
    }

private:
    FreeModuleElement(ModulePtr<K> module, MonomialOrder order, std::vector<Term> terms)
        : module_(std::move(module)), order_(order), terms_(std::move(terms)) {}

    void require_nonzero() const {
        if (terms_.empty())
            throw std::domain_error("leading term of the zero element is undefined");
    }

    void require_compatible(const FreeModuleElement& o) const {
        if (!same_module(module_, o.module_))
            throw std::invalid_argument("free module mismatch");
        if (!(order_ == o.order_))
            throw std::invalid_argument("monomial order mismatch");
    }

    void assign_normalized(std::vector<Term> terms) {
        for (const auto& t : terms) {
            if (t.basis >= module_->rank())
                throw std::invalid_argument("basis index out of range");
            if (t.monomial.size() != module_->r)
                throw std::invalid_argument("monomial length does not match module context");
        }
        std::sort(terms.begin(), terms.end(), [this](const Term& a, const Term& b) {
            auto c = order_.compare(a.monomial, a.basis, b.monomial, b.basis);
            return c == std::strong_ordering::greater;
        });
        terms_.clear();
        for (auto& t : terms) {
            if (t.coeff.is_zero()) continue;
            if (!terms_.empty() && terms_.back().monomial == t.monomial &&
                terms_.back().basis == t.basis) {
                terms_.back().coeff += t.coeff;
                if (terms_.back().coeff.is_zero()) terms_.pop_back();
            } else {
                terms_.push_back(std::move(t));
            }
        }
    }

    ModulePtr<K> module_;
    MonomialOrder order_;
    std::vector<Term> terms_;
};

template <class K>
FreeModuleElement<K> elem_add(const FreeModuleElement<K>& f, const FreeModuleElement<K>& g) {
    return f + g;
}

template <class K>
FreeModuleElement<K> elem_scale(const FreeModuleElement<K>& f, const K& c, const Grade& u) {
    return f.scaled(c, u);
}

/// (LM, LC) of a nonzero element.
template <class K>
std::pair<ModuleMono, K> leading_term(const FreeModuleElement<K>& f) {
    return {f.leading_monomial(), f.leading_coefficient()};
}

} // namespace mpgb
