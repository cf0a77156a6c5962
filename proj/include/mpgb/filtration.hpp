#pragma once

#include <iosfwd>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "mpgb/grade.hpp"

namespace mpgb {

/// Finite simplex as a strictly increasing vertex list.
struct Simplex {
    std::vector<int> vertices;

    /// Sorts the ids; repeated vertices are rejected.
    static Simplex of(std::vector<int> ids);

    int dimension() const { return static_cast<int>(vertices.size()) - 1; }

    /// Codimension-1 faces, each with the sign of its position in the
    /// alternating boundary sum: face_i carries (-1)^i.
    std::vector<std::pair<Simplex, int>> boundary_faces() const;

    std::string str() const;

    bool operator==(const Simplex&) const = default;

    /// Canonical order: dimension first, then vertex-lexicographic.
    std::strong_ordering operator<=>(const Simplex& o) const {
        if (auto c = vertices.size() <=> o.vertices.size(); c != 0) return c;
        return vertices <=> o.vertices;
    }
};

struct SimplexEntry {
    Simplex simplex;
    std::vector<Grade> grades; // antichain of entry grades, lex-sorted
};

struct Violation {
    Simplex simplex;
    Grade grade;
    Simplex missing_face;
};

struct ValidationReport {
    bool ok = true;
    std::vector<Violation> violations;
};

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& msg)
        : std::runtime_error("line " + std::to_string(line) + ": " + msg), line_(line) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

/// A finite simplicial complex where each simplex carries an antichain
/// of entry grades. Construction canonicalizes: duplicate simplices
/// merge their grade sets, grade sets are minimalized, and simplices are
/// ordered by dimension then vertex-lex.
class Multifiltration {
public:
    Multifiltration(std::size_t r, std::vector<std::pair<Simplex, std::vector<Grade>>> simplices);

    std::size_t r() const { return r_; }
    const std::vector<SimplexEntry>& entries() const { return entries_; }

    /// Max simplex dimension; -1 when empty.
    int dimension() const;

    const SimplexEntry* find(const Simplex& s) const;

    bool operator==(const Multifiltration& o) const {
        if (r_ != o.r_ || entries_.size() != o.entries_.size()) return false;
        for (std::size_t i = 0; i < entries_.size(); ++i)
            if (entries_[i].simplex != o.entries_[i].simplex ||
                entries_[i].grades != o.entries_[i].grades)
                return false;
        return true;
    }

private:
    std::size_t r_;
    std::vector<SimplexEntry> entries_;
    std::map<Simplex, std::size_t> index_;
};

Multifiltration parse_multifiltration(std::istream& in);
Multifiltration parse_multifiltration(const std::string& text);
std::string serialize(const Multifiltration& mf);

/// Checks that every X_v is a simplicial complex: each face of a listed
/// simplex is listed and enters no later. Violations are data, not errors.
ValidationReport validate(const Multifiltration& mf);

/// v': componentwise max of all entry grades, the least grade whose
/// complex is the whole of X. Zero grade for the empty filtration.
Grade stabilization_grade(const Multifiltration& mf);

/// True when every simplex has exactly one critical coordinate.
bool is_one_critical(const Multifiltration& mf);

/// All n-simplices present at grade v, in canonical order.
std::vector<Simplex> chain_basis_at(const Multifiltration& mf, const Grade& v, int n);

} // namespace mpgb
