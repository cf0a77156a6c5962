#include "mpgb/filtration.hpp"

#include <algorithm>
#include <cctype>
#include <istream>
#include <sstream>

namespace mpgb {

Simplex Simplex::of(std::vector<int> ids) {
    std::sort(ids.begin(), ids.end());
    if (std::adjacent_find(ids.begin(), ids.end()) != ids.end())
        throw std::invalid_argument("simplex with repeated vertex");
    if (ids.empty()) throw std::invalid_argument("empty simplex");
    return Simplex{std::move(ids)};
}

std::vector<std::pair<Simplex, int>> Simplex::boundary_faces() const {
    std::vector<std::pair<Simplex, int>> out;
    if (vertices.size() < 2) return out;
    int sign = 1;
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        std::vector<int> face;
        face.reserve(vertices.size() - 1);
        for (std::size_t j = 0; j < vertices.size(); ++j)
            if (j != i) face.push_back(vertices[j]);
        out.push_back({Simplex{std::move(face)}, sign});
        sign = -sign;
    }
    return out;
}

std::string Simplex::str() const {
    std::string s = "[";
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        if (i) s += " ";
        s += std::to_string(vertices[i]);
    }
    return s + "]";
}

Multifiltration::Multifiltration(std::size_t r,
                                 std::vector<std::pair<Simplex, std::vector<Grade>>> simplices)
    : r_(r) {
    std::map<Simplex, std::vector<Grade>> merged;
    for (auto& [s, grades] : simplices) {
        if (grades.empty())
            throw std::invalid_argument("simplex " + s.str() + " with empty grade set");
        for (const auto& g : grades)
            if (g.size() != r_)
                throw std::invalid_argument("grade " + g.str() + " does not have " +
                                            std::to_string(r_) + " components");
        auto& slot = merged[s];
        slot.insert(slot.end(), grades.begin(), grades.end());
    }
    for (auto& [s, grades] : merged) {
        entries_.push_back({s, minimalize_antichain(std::move(grades))});
        index_[s] = entries_.size() - 1;
    }
}

int Multifiltration::dimension() const {
    int d = -1;
    for (const auto& e : entries_) d = std::max(d, e.simplex.dimension());
    return d;
}

const SimplexEntry* Multifiltration::find(const Simplex& s) const {
    auto it = index_.find(s);
    return it == index_.end() ? nullptr : &entries_[it->second];
}

namespace {

// one line of input, with the comment part stripped
struct Scanner {
    const std::string& s;
    std::size_t i = 0;
    std::size_t line;

    void skip_ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool eof() {
        skip_ws();
        return i >= s.size();
    }
    bool peek(char c) {
        skip_ws();
        return i < s.size() && s[i] == c;
    }
    void expect(char c) {
        skip_ws();
        if (i >= s.size() || s[i] != c)
            throw ParseError(line, std::string("expected '") + c + "'");
        ++i;
    }
    long integer() {
        skip_ws();
        std::size_t start = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (i == start) throw ParseError(line, "expected a nonnegative integer");
        return std::stol(s.substr(start, i - start));
    }
    std::string word() {
        skip_ws();
        std::size_t start = i;
        while (i < s.size() && !std::isspace(static_cast<unsigned char>(s[i]))) ++i;
        return s.substr(start, i - start);
    }
};

Grade parse_grade(Scanner& sc, std::size_t r) {
    sc.expect('(');
    std::vector<unsigned> exps;
    for (std::size_t k = 0; k < r; ++k) {
        if (k) sc.expect(',');
        exps.push_back(static_cast<unsigned>(sc.integer()));
    }
    sc.expect(')');
    return Grade(std::move(exps));
}

} // namespace

Multifiltration parse_multifiltration(std::istream& in) {
    std::string line;
    std::size_t lineno = 0;
    bool have_dim = false;
    std::size_t r = 0;
    std::vector<std::pair<Simplex, std::vector<Grade>>> simplices;

    while (std::getline(in, line)) {
        ++lineno;
        if (auto pos = line.find('#'); pos != std::string::npos) line.resize(pos);
        Scanner sc{line, 0, lineno};
        if (sc.eof()) continue;
        std::string head = sc.word();
        if (head == "dim") {
            if (have_dim) throw ParseError(lineno, "duplicate dim header");
            long v = sc.integer();
            if (v < 1) throw ParseError(lineno, "dim must be at least 1");
            r = static_cast<std::size_t>(v);
            have_dim = true;
            if (!sc.eof()) throw ParseError(lineno, "trailing input after dim header");
        } else if (head == "simplex") {
            if (!have_dim) throw ParseError(lineno, "simplex line before dim header");
            std::vector<int> ids;
            while (!sc.peek('@')) {
                if (sc.eof()) throw ParseError(lineno, "missing '@' grade separator");
                ids.push_back(static_cast<int>(sc.integer()));
            }
            sc.expect('@');
            std::vector<Grade> grades;
            while (!sc.eof()) grades.push_back(parse_grade(sc, r));
            if (grades.empty()) throw ParseError(lineno, "simplex with empty grade set");
            Simplex s;
            try {
                s = Simplex::of(std::move(ids));
            } catch (const std::invalid_argument& e) {
                throw ParseError(lineno, e.what());
            }
            simplices.push_back({std::move(s), std::move(grades)});
        } else {
            throw ParseError(lineno, "unknown directive '" + head + "'");
        }
    }
    if (!have_dim) throw ParseError(lineno, "missing dim header");
    return Multifiltration(r, std::move(simplices));
}

Multifiltration parse_multifiltration(const std::string& text) {
    std::istringstream is(text);
    return parse_multifiltration(is);
}

std::string serialize(const Multifiltration& mf) {
    std::ostringstream os;
    os << "dim " << mf.r() << "\n";
    for (const auto& e : mf.entries()) {
        os << "simplex";
        for (int v : e.simplex.vertices) os << " " << v;
        os << " @";
        for (const auto& g : e.grades) os << " " << g.str();
        os << "\n";
    }
    return os.str();
}

ValidationReport validate(const Multifiltration& mf) {
    ValidationReport rep;
    for (const auto& e : mf.entries()) {
        for (const auto& [face, sign] : e.simplex.boundary_faces()) {
            (void)sign;
            const SimplexEntry* fe = mf.find(face);
            for (const auto& v : e.grades) {
                bool covered = false;
                if (fe) {
                    for (const auto& w : fe->grades)
                        if (divides(w, v)) { covered = true; break; }
                }
                if (!covered) rep.violations.push_back({e.simplex, v, face});
            }
        }
    }
    rep.ok = rep.violations.empty();
    return rep;
}

Grade stabilization_grade(const Multifiltration& mf) {
    Grade v = Grade::zero(mf.r());
    for (const auto& e : mf.entries())
        for (const auto& g : e.grades) v = lcm(v, g);
    return v;
}

bool is_one_critical(const Multifiltration& mf) {
    for (const auto& e : mf.entries())
        if (e.grades.size() != 1) return false;
    return true;
}

std::vector<Simplex> chain_basis_at(const Multifiltration& mf, const Grade& v, int n) {
    std::vector<Simplex> out;
    for (const auto& e : mf.entries()) {
        if (e.simplex.dimension() != n) continue;
        for (const auto& w : e.grades) {
            if (divides(w, v)) {
                out.push_back(e.simplex);
                break;
            }
        }
    }
    return out;
}

} // namespace mpgb
