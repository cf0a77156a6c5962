#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace mpgb {

/// A point of N^r. Doubles as a monomial exponent vector and as a
/// multidegree; the componentwise partial order is the only order
/// assumed on grades themselves.
class Grade {
public:
    Grade() = default;
    explicit Grade(std::vector<unsigned> exps) : e_(std::move(exps)) {}
    Grade(std::initializer_list<unsigned> exps) : e_(exps) {}

    static Grade zero(std::size_t r) { return Grade(std::vector<unsigned>(r, 0)); }

    std::size_t size() const { return e_.size(); }
    unsigned operator[](std::size_t i) const { return e_[i]; }
    unsigned& operator[](std::size_t i) { return e_[i]; }
    const std::vector<unsigned>& exponents() const { return e_; }

    unsigned total() const { return std::accumulate(e_.begin(), e_.end(), 0u); }

    bool operator==(const Grade&) const = default;

    /// Lexicographic comparison (x1 most significant). This is a helper
    /// total order for canonical sorting, not the componentwise order.
    std::strong_ordering operator<=>(const Grade& o) const {
        return e_ <=> o.e_;
    }

    std::string str() const {
        std::ostringstream os;
        os << '(';
        for (std::size_t i = 0; i < e_.size(); ++i) {
            if (i) os << ',';
            os << e_[i];
        }
        os << ')';
        return os.str();
    }

private:
    std::vector<unsigned> e_;
};

inline void check_same_length(const Grade& u, const Grade& v) {
    if (u.size() != v.size())
        throw std::invalid_argument("grade dimension mismatch: " + u.str() + " vs " + v.str());
}

/// Componentwise partial order u <= v.
inline bool divides(const Grade& u, const Grade& v) {
    check_same_length(u, v);
    for (std::size_t i = 0; i < u.size(); ++i)
        if (u[i] > v[i]) return false;
    return true;
}

/// Componentwise maximum.
inline Grade lcm(const Grade& u, const Grade& v) {
    check_same_length(u, v);
    std::vector<unsigned> m(u.size());
    for (std::size_t i = 0; i < u.size(); ++i) m[i] = std::max(u[i], v[i]);
    return Grade(std::move(m));
}

inline Grade operator+(const Grade& u, const Grade& v) {
    check_same_length(u, v);
    std::vector<unsigned> m(u.size());
    for (std::size_t i = 0; i < u.size(); ++i) m[i] = u[i] + v[i];
    return Grade(std::move(m));
}

/// u - v; requires v <= u componentwise.
inline Grade operator-(const Grade& u, const Grade& v) {
    check_same_length(u, v);
    std::vector<unsigned> m(u.size());
    for (std::size_t i = 0; i < u.size(); ++i) {
        if (v[i] > u[i])
            throw std::invalid_argument("grade subtraction underflow: " + u.str() + " - " + v.str());
        m[i] = u[i] - v[i];
    }
    return Grade(std::move(m));
}

/// All grades u with u <= bound componentwise, in lexicographic order.
inline std::vector<Grade> grades_below(const Grade& bound) {
    std::vector<Grade> out;
    Grade cur = Grade::zero(bound.size());
    if (bound.size() == 0) return {cur};
    while (true) {
        out.push_back(cur);
        std::size_t i = bound.size();
        while (i > 0) {
            --i;
            if (cur[i] < bound[i]) {
                ++cur[i];
                for (std::size_t j = i + 1; j < bound.size(); ++j) cur[j] = 0;
                break;
            }
            if (i == 0) return out;
        }
    }
}

/// Keep only the minimal elements under the componentwise order, sorted
/// lexicographically. Duplicates collapse.
inline std::vector<Grade> minimalize_antichain(std::vector<Grade> grades) {
    std::sort(grades.begin(), grades.end());
    grades.erase(std::unique(grades.begin(), grades.end()), grades.end());
    std::vector<Grade> out;
    for (const auto& g : grades) {
        bool dominated = false;
        for (const auto& h : grades) {
            if (h != g && divides(h, g)) { dominated = true; break; }
        }
        if (!dominated) out.push_back(g);
    }
    return out;
}

struct GradeHash {
    std::size_t operator()(const Grade& g) const {
        std::size_t h = 0x9e3779b97f4a7c15ull;
        for (std::size_t i = 0; i < g.size(); ++i)
            h = h * 1099511628211ull + g[i] + 1;
        return h;
    }
};

} // namespace mpgb
