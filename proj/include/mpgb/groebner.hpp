#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "mpgb/module.hpp"

namespace mpgb {

/// Counts homogeneity violations among engine-produced elements. All
/// pipeline inputs are homogeneous, so any violation is a bug; the
/// acceptance suite asserts the count stays zero.
struct HomogeneityMonitor {
    long long checked = 0;
    long long violations = 0;
    std::string first_violation;

    template <class K>
    void check(const FreeModuleElement<K>& e) {
        if (e.is_zero()) return;
        ++checked;
        if (!e.is_homogeneous()) {
            if (violations++ == 0) first_violation = e.str();
        }
    }
};

struct EngineOptions {
    /// Tail-reduce remainders; leading-term reduction alone already
    /// yields a Groebner basis.
    bool full_reduction = true;
    /// Keep, per basis element, the combination of the inputs that
    /// produced it.
    bool track_cofactors = true;
    /// Record the cofactor of every zero reduction. Forces pruning off:
    /// skipped pairs would lose syzygy generators.
    bool record_syzygies = false;
    /// Chain-criterion pair pruning (only honored without syzygies).
    bool prune_pairs = true;
    HomogeneityMonitor* monitor = nullptr;
};

template <class K>
struct GroebnerBasis {
    ModulePtr<K> module;
    MonomialOrder order;
    std::vector<FreeModuleElement<K>> generators;
    bool reduced = false;
    /// cofactors[i] expresses generators[i] over the engine inputs;
    /// empty when tracking was off.
    std::vector<FreeModuleElement<K>> cofactors;
    ModulePtr<K> source_module;
};

template <class K>
struct SyzygyBasis {
    /// Free module R^m whose basis element eps_i carries degree deg(f_i).
    ModulePtr<K> source_module;
    std::vector<FreeModuleElement<K>> generators;
    std::vector<FreeModuleElement<K>> inputs;
};

template <class K>
struct GroebnerCertificate {
    bool ok = true;
    std::size_t witness_i = 0, witness_j = 0;
    std::optional<FreeModuleElement<K>> witness;
};

/// S-vector s21*f1 - (LC(f1)/LC(f2))*s12*f2 with s_ij = lcm/LM(f_j).
/// Leading monomials in different basis positions have no lcm; the pair
/// is skipped and the zero element returned.
template <class K>
FreeModuleElement<K> s_vector(const FreeModuleElement<K>& f1, const FreeModuleElement<K>& f2) {
    ModuleMono l1 = f1.leading_monomial();
    ModuleMono l2 = f2.leading_monomial();
    if (l1.pos != l2.pos) return FreeModuleElement<K>::zero(f1.module(), f1.order());
    Grade l = lcm(l1.mono, l2.mono);
    K c = f1.leading_coefficient() / f2.leading_coefficient();
    return f1.shifted(l - l1.mono) - f2.scaled(c, l - l2.mono);
}

namespace detail {

template <class K>
struct Tracked {
    FreeModuleElement<K> g;
    FreeModuleElement<K> cof; // over the source module; zero-module ptr when untracked
};

/// Division algorithm. Reduces h over G; when full, irreducible leading
/// terms migrate to the remainder and reduction continues on the tail.
/// The cofactor (when given) is updated so that the invariant
/// h_original = remainder + sum(quotients * g_i) stays exact.
template <class K>
FreeModuleElement<K> reduce_tracked(FreeModuleElement<K> h, FreeModuleElement<K>* cof,
                                    const std::vector<Tracked<K>>& G, bool full,
                                    HomogeneityMonitor* monitor) {
    FreeModuleElement<K> rem = FreeModuleElement<K>::zero(h.module(), h.order());
    bool moved_any = false;
    while (!h.is_zero()) {
        ModuleMono lm = h.leading_monomial();
        const Tracked<K>* hit = nullptr;
        for (const auto& t : G) {
            if (t.g.is_zero()) continue;
            ModuleMono glm = t.g.leading_monomial();
            if (glm.pos == lm.pos && divides(glm.mono, lm.mono)) { hit = &t; break; }
        }
        if (hit) {
            K c = h.leading_coefficient() / hit->g.leading_coefficient();
            Grade q = lm.mono - hit->g.leading_monomial().mono;
            h = h - hit->g.scaled(c, q);
            if (monitor) monitor->check(h);
            if (cof && !hit->cof.is_zero()) *cof = *cof - hit->cof.scaled(c, q);
        } else {
            if (!full) return h;
            // strip the irreducible leading term and keep dividing
            FreeModuleElement<K> lead = FreeModuleElement<K>::monomial(
                h.module(), h.order(), h.leading_coefficient(), lm.mono, lm.pos);
            rem = rem + lead;
            h = h - lead;
            moved_any = true;
        }
    }
    if (monitor && moved_any) monitor->check(rem);
    return full ? rem : h;
}

} // namespace detail

/// Remainder of f on division by G. The leading monomial of a nonzero
/// result is divisible by no LM(g); with full reduction no term is.
template <class K>
FreeModuleElement<K> reduce(const FreeModuleElement<K>& f,
                            const std::vector<FreeModuleElement<K>>& G,
                            bool full = true, HomogeneityMonitor* monitor = nullptr) {
    std::vector<detail::Tracked<K>> tracked;
    tracked.reserve(G.size());
    for (const auto& g : G)
        tracked.push_back({g, FreeModuleElement<K>()});
    FreeModuleElement<K> h = f;
    return detail::reduce_tracked(h, static_cast<FreeModuleElement<K>*>(nullptr), tracked,
                                  full, monitor);
}

template <class K>
class GroebnerEngine {
public:
    using Elem = FreeModuleElement<K>;

    GroebnerEngine(std::vector<Elem> inputs, MonomialOrder order, EngineOptions opts,
                   ModulePtr<K> source_module = nullptr)
        : order_(order), opts_(opts), inputs_(std::move(inputs)), queue_(PairLess{order}) {
        if (inputs_.empty()) throw std::invalid_argument("engine needs at least one input element");
        module_ = inputs_[0].module();
        for (auto& f : inputs_) {
            if (!same_module(f.module(), module_))
                throw std::invalid_argument("engine inputs from different modules");
            if (!(f.order() == order_)) f = f.resorted(order_);
        }
        if (opts_.record_syzygies) opts_.prune_pairs = false;
        bool need_source = opts_.track_cofactors || opts_.record_syzygies;
        if (need_source) {
            if (source_module) {
                if (source_module->rank() != inputs_.size())
                    throw std::invalid_argument("source module rank does not match input count");
                source_ = std::move(source_module);
            } else {
                std::vector<GradedBasisElement> eps;
                for (std::size_t i = 0; i < inputs_.size(); ++i) {
                    Grade d = inputs_[i].multidegree().value_or(Grade::zero(module_->r));
                    eps.push_back({"eps" + std::to_string(i + 1), d});
                }
                source_ = make_module<K>(module_->field, module_->r, std::move(eps));
            }
        }
    }

    void run() {
        for (std::size_t i = 0; i < inputs_.size(); ++i) {
            Elem cof = source_
                ? Elem::monomial(source_, order_, unit(), Grade::zero(module_->r),
                                 static_cast<std::uint32_t>(i))
                : Elem();
            if (inputs_[i].is_zero()) {
                // a zero input is itself a relation among the inputs
                if (opts_.record_syzygies) syzygies_.push_back(cof);
                continue;
            }
            add_element(inputs_[i], cof, /*pair_with_existing=*/true);
        }
        while (!queue_.empty()) {
            PairKey p = *queue_.begin();
            queue_.erase(queue_.begin());
            if (opts_.prune_pairs && !opts_.record_syzygies && chain_criterion(p)) {
                done_.insert({p.i, p.j});
                continue;
            }
            done_.insert({p.i, p.j});
            process_pair(p.i, p.j);
        }
    }

    GroebnerBasis<K> basis() const {
        GroebnerBasis<K> gb;
        gb.module = module_;
        gb.order = order_;
        gb.source_module = source_;
        for (const auto& t : basis_) {
            gb.generators.push_back(t.g);
            if (source_ && opts_.track_cofactors) gb.cofactors.push_back(t.cof);
        }
        return gb;
    }

    SyzygyBasis<K> syzygy_basis() const {
        return {source_, syzygies_, inputs_};
    }

private:
    struct PairKey {
        Grade lcm_mono;
        std::uint32_t pos;
        std::uint32_t i, j;
    };
    struct PairLess {
        MonomialOrder order;
        bool operator()(const PairKey& a, const PairKey& b) const {
            auto c = order.compare(a.lcm_mono, a.pos, b.lcm_mono, b.pos);
            if (c != std::strong_ordering::equal) return c == std::strong_ordering::less;
            if (a.i != b.i) return a.i < b.i;
            return a.j < b.j;
        }
    };

    K unit() const { return module_->field.from_long(1); }

    void add_element(const Elem& g, const Elem& cof, bool pair_with_existing) {
        // monic normalization keeps outputs canonical and coefficients small
        K inv = g.leading_coefficient().inverse();
        Elem gm = g.scaled(inv, Grade::zero(module_->r));
        Elem cm = cof.module() ? cof.scaled(inv, Grade::zero(module_->r)) : cof;
        if (opts_.monitor) {
            opts_.monitor->check(gm);
            if (cm.module()) opts_.monitor->check(cm);
        }
        std::uint32_t idx = static_cast<std::uint32_t>(basis_.size());
        if (pair_with_existing) {
            ModuleMono lm = gm.leading_monomial();
            for (std::uint32_t k = 0; k < idx; ++k) {
                ModuleMono klm = basis_[k].g.leading_monomial();
                if (klm.pos != lm.pos) continue; // lcm undefined across positions
                queue_.insert({lcm(klm.mono, lm.mono), lm.pos, k, idx});
            }
        }
        basis_.push_back({std::move(gm), std::move(cm)});
    }

    bool chain_criterion(const PairKey& p) const {
        for (std::uint32_t k = 0; k < basis_.size(); ++k) {
            if (k == p.i || k == p.j) continue;
            ModuleMono klm = basis_[k].g.leading_monomial();
            if (klm.pos != p.pos || !divides(klm.mono, p.lcm_mono)) continue;
            if (done_.count(key(p.i, k)) && done_.count(key(p.j, k))) return true;
        }
        return false;
    }

    static std::pair<std::uint32_t, std::uint32_t> key(std::uint32_t a, std::uint32_t b) {
        return {std::min(a, b), std::max(a, b)};
    }

    void process_pair(std::uint32_t i, std::uint32_t j) {
        const auto& fi = basis_[i];
        const auto& fj = basis_[j];
        ModuleMono li = fi.g.leading_monomial();
        ModuleMono lj = fj.g.leading_monomial();
        Grade l = lcm(li.mono, lj.mono);
        K c = fi.g.leading_coefficient() / fj.g.leading_coefficient();
        Elem h = fi.g.shifted(l - li.mono) - fj.g.scaled(c, l - lj.mono);
        Elem s;
        Elem* sp = nullptr;
        if (source_) {
            s = fi.cof.shifted(l - li.mono) - fj.cof.scaled(c, l - lj.mono);
            sp = &s;
        }
        if (opts_.monitor) {
            opts_.monitor->check(h);
            if (sp) opts_.monitor->check(*sp);
        }
        h = detail::reduce_tracked(std::move(h), sp, basis_, opts_.full_reduction, opts_.monitor);
        if (h.is_zero()) {
            if (opts_.record_syzygies && sp && !sp->is_zero()) {
                Elem sm = sp->scaled(sp->leading_coefficient().inverse(), Grade::zero(module_->r));
                if (opts_.monitor) opts_.monitor->check(sm);
                syzygies_.push_back(std::move(sm));
            }
            return;
        }
        add_element(h, source_ ? s : Elem(), /*pair_with_existing=*/true);
    }

    MonomialOrder order_;
    EngineOptions opts_;
    std::vector<Elem> inputs_;
    ModulePtr<K> module_;
    ModulePtr<K> source_;
    std::vector<detail::Tracked<K>> basis_;
    std::set<PairKey, PairLess> queue_;
    std::set<std::pair<std::uint32_t, std::uint32_t>> done_;
    std::vector<Elem> syzygies_;
};

/// Buchberger's algorithm: a Groebner basis of <F>. Zero inputs are
/// dropped. Pairs are processed smallest lcm first.
template <class K>
GroebnerBasis<K> buchberger(const std::vector<FreeModuleElement<K>>& F, MonomialOrder order,
                            EngineOptions opts = {}, ModulePtr<K> source_module = nullptr) {
    if (F.empty()) {
        GroebnerBasis<K> gb;
        gb.order = order;
        return gb;
    }
    GroebnerEngine<K> eng(F, order, opts, std::move(source_module));
    eng.run();
    return eng.basis();
}

/// Groebner basis of <F> together with a generating set of
/// Syz(f_1..f_m): every pair that reduces to zero donates its tracked
/// cofactor. Pair pruning is disabled so no zero reduction is lost.
template <class K>
std::pair<GroebnerBasis<K>, SyzygyBasis<K>> buchberger_with_syzygy(
    const std::vector<FreeModuleElement<K>>& F, MonomialOrder order, EngineOptions opts = {},
    ModulePtr<K> source_module = nullptr) {
    opts.record_syzygies = true;
    opts.track_cofactors = true;
    opts.prune_pairs = false;
    GroebnerEngine<K> eng(F, order, opts, std::move(source_module));
    eng.run();
    return {eng.basis(), eng.syzygy_basis()};
}

/// The unique reduced Groebner basis of <G>: monic, minimal,
/// inter-reduced, sorted descending by leading monomial.
template <class K>
GroebnerBasis<K> reduce_basis(const GroebnerBasis<K>& gb) {
    using Elem = FreeModuleElement<K>;
    bool tracked = gb.cofactors.size() == gb.generators.size() && !gb.generators.empty();
    std::vector<detail::Tracked<K>> work;
    for (std::size_t i = 0; i < gb.generators.size(); ++i) {
        if (gb.generators[i].is_zero()) continue;
        Elem g = gb.generators[i].monic();
        Elem c = tracked
            ? gb.cofactors[i].scaled(gb.generators[i].leading_coefficient().inverse(),
                                     Grade::zero(gb.module->r))
            : Elem();
        work.push_back({std::move(g), std::move(c)});
    }
    // minimality: drop any generator whose LM another one's LM divides
    std::vector<bool> keep(work.size(), true);
    for (std::size_t i = 0; i < work.size(); ++i) {
        if (!keep[i]) continue;
        ModuleMono li = work[i].g.leading_monomial();
        for (std::size_t j = 0; j < work.size(); ++j) {
            if (i == j || !keep[j]) continue;
            ModuleMono lj = work[j].g.leading_monomial();
            if (li.pos != lj.pos || !divides(lj.mono, li.mono)) continue;
            if (li.mono == lj.mono && j > i) continue; // equal LMs: first one wins
            keep[i] = false;
            break;
        }
    }
    std::vector<detail::Tracked<K>> kept;
    for (std::size_t i = 0; i < work.size(); ++i)
        if (keep[i]) kept.push_back(std::move(work[i]));

    // inter-reduce tails; leading monomials are already pairwise minimal
    GroebnerBasis<K> out;
    out.module = gb.module;
    out.order = gb.order;
    out.reduced = true;
    out.source_module = gb.source_module;
    std::vector<detail::Tracked<K>> result;
    for (std::size_t i = 0; i < kept.size(); ++i) {
        std::vector<detail::Tracked<K>> others;
        for (std::size_t j = 0; j < kept.size(); ++j)
            if (j != i) others.push_back(kept[j]);
        Elem cof = kept[i].cof;
        Elem r = detail::reduce_tracked(kept[i].g, tracked ? &cof : nullptr, others,
                                        /*full=*/true, nullptr);
        K inv = r.leading_coefficient().inverse();
        result.push_back({r.scaled(inv, Grade::zero(gb.module->r)),
                          tracked ? cof.scaled(inv, Grade::zero(gb.module->r)) : Elem()});
    }
    std::sort(result.begin(), result.end(), [&](const auto& a, const auto& b) {
        ModuleMono la = a.g.leading_monomial(), lb = b.g.leading_monomial();
        return gb.order.compare(la.mono, la.pos, lb.mono, lb.pos) == std::strong_ordering::greater;
    });
    for (auto& t : result) {
        out.generators.push_back(std::move(t.g));
        if (tracked) out.cofactors.push_back(std::move(t.cof));
    }
    return out;
}

/// Direct check of the Groebner property: every same-position S-vector
/// must reduce to zero. On failure the offending S-vector remainder is
/// returned as a witness.
template <class K>
GroebnerCertificate<K> is_groebner(const std::vector<FreeModuleElement<K>>& G,
                                   MonomialOrder order) {
    std::vector<FreeModuleElement<K>> gens;
    gens.reserve(G.size());
    for (const auto& g : G)
        gens.push_back(g.order() == order ? g : g.resorted(order));
    GroebnerCertificate<K> cert;
    for (std::size_t i = 0; i < gens.size(); ++i) {
        for (std::size_t j = i + 1; j < gens.size(); ++j) {
            ModuleMono li = gens[i].leading_monomial();
            ModuleMono lj = gens[j].leading_monomial();
            if (li.pos != lj.pos) continue;
            FreeModuleElement<K> s = s_vector(gens[i], gens[j]);
            if (s.is_zero()) continue;
            FreeModuleElement<K> r = reduce(s, gens, /*full=*/false);
            if (!r.is_zero()) {
                cert.ok = false;
                cert.witness_i = i;
                cert.witness_j = j;
                cert.witness = std::move(r);
                return cert;
            }
        }
    }
    return cert;
}

} // namespace mpgb
