#pragma once

#include <fstream>
#include <random>
#include <tuple>

#include "mpgb/homology.hpp"
#include "mpgb/random_complex.hpp"

namespace mpgb::test {

inline std::string data_path(const std::string& name) {
    return std::string(MPGB_DATA_DIR) + "/" + name;
}

inline Multifiltration load_demo() {
    std::ifstream in(data_path("demo.mf"));
    if (!in) throw std::runtime_error("demo fixture not found");
    return parse_multifiltration(in);
}

/// terse element builder: (integer coeff, monomial, basis index) triples
template <class K>
FreeModuleElement<K> make_elem(const ModulePtr<K>& m, MonomialOrder o,
                               std::vector<std::tuple<long, Grade, std::uint32_t>> ts) {
    std::vector<ModuleTerm<K>> terms;
    for (auto& [c, g, b] : ts) terms.push_back({m->field.from_long(c), g, b});
    return FreeModuleElement<K>::make(m, o, std::move(terms));
}

/// evaluates a cofactor/syzygy over its inputs: sum of s_i * f_i
template <class K>
FreeModuleElement<K> apply_combination(const FreeModuleElement<K>& s,
                                       const std::vector<FreeModuleElement<K>>& inputs) {
    if (inputs.empty()) throw std::invalid_argument("no inputs");
    FreeModuleElement<K> acc = FreeModuleElement<K>::zero(inputs[0].module(), inputs[0].order());
    for (const auto& t : s.terms())
        acc = acc + inputs[t.basis].scaled(t.coeff, t.monomial);
    return acc;
}

/// random nonzero-ish element over a free module, for property tests
template <class K>
FreeModuleElement<K> random_elem(const ModulePtr<K>& m, MonomialOrder o, std::mt19937_64& rng,
                                 int max_terms = 5, unsigned max_exp = 3) {
    std::uniform_int_distribution<int> nterms(0, max_terms);
    std::uniform_int_distribution<unsigned> exp(0, max_exp);
    std::uniform_int_distribution<long> coeff(-4, 4);
    std::uniform_int_distribution<std::uint32_t> pos(0, static_cast<std::uint32_t>(m->rank() - 1));
    std::vector<ModuleTerm<K>> terms;
    int n = nterms(rng);
    for (int i = 0; i < n; ++i) {
        std::vector<unsigned> e(m->r);
        for (auto& x : e) x = exp(rng);
        terms.push_back({m->field.from_long(coeff(rng)), Grade(std::move(e)), pos(rng)});
    }
    return FreeModuleElement<K>::make(m, o, std::move(terms));
}

inline std::vector<Multifiltration> random_corpus(std::size_t count, std::uint64_t seed,
                                                  bool one_critical = false) {
    std::vector<Multifiltration> out;
    std::mt19937_64 rng(seed);
    while (out.size() < count) {
        RandomComplexOptions opts;
        opts.r = (out.size() % 2 == 0) ? 2 : 3;
        opts.max_vertices = 8;
        opts.max_grades = 3;
        opts.max_coord = 2;
        opts.max_step = 2;
        opts.one_critical = one_critical;
        Multifiltration mf = random_multifiltration(opts, rng);
        if (!validate(mf).ok) throw std::runtime_error("generator produced invalid filtration");
        out.push_back(std::move(mf));
    }
    return out;
}

} // namespace mpgb::test
