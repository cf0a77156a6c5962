#include "mpgb/module.hpp"

namespace mpgb {

std::string monomial_str(const Grade& g) {
    std::string out;
    for (std::size_t i = 0; i < g.size(); ++i) {
        if (g[i] == 0) continue;
        if (!out.empty()) out += "*";
        out += "x" + std::to_string(i + 1);
        if (g[i] > 1) out += "^" + std::to_string(g[i]);
    }
    return out;
}

std::string MonomialOrder::name() const {
    std::string s = (scheme == OrderScheme::PositionOverTerm) ? "pot" : "top";
    switch (tiebreak) {
    case MonoTiebreak::GrLex: s += "-grlex"; break;
    case MonoTiebreak::Lex: s += "-lex"; break;
    case MonoTiebreak::GrevLex: s += "-grevlex"; break;
    }
    return s;
}

std::optional<MonomialOrder> MonomialOrder::parse(const std::string& s) {
    MonomialOrder o;
    std::string rest;
    if (s.rfind("pot-", 0) == 0) {
        o.scheme = OrderScheme::PositionOverTerm;
        rest = s.substr(4);
    } else if (s.rfind("top-", 0) == 0) {
        o.scheme = OrderScheme::TermOverPosition;
        rest = s.substr(4);
    } else {
        return std::nullopt;
    }
    if (rest == "grlex") o.tiebreak = MonoTiebreak::GrLex;
    else if (rest == "lex") o.tiebreak = MonoTiebreak::Lex;
    else if (rest == "grevlex") o.tiebreak = MonoTiebreak::GrevLex;
    else return std::nullopt;
    return o;
}

} // namespace mpgb
