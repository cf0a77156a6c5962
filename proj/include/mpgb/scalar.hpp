#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace mpgb {

/// Exact rational scalar. Arithmetic never leaves canonical form, so
/// equality and printing are exact.
class Rational {
public:
    /// Field descriptor; rationals need no runtime data.
    struct Field {
        bool operator==(const Field&) const = default;
        Rational from_long(long n) const { return Rational(n); }
        static std::string name() { return "q"; }
        static std::optional<Rational> parse_scalar(const Field&, const std::string& s);
    };

    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}
    Rational(long num, long den) : v_(num, den) {
        if (den == 0) throw std::invalid_argument("rational with zero denominator");
        v_.canonicalize();
    }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }

    Rational operator-() const { return Rational(-v_); }
    Rational inverse() const {
        if (is_zero()) throw std::domain_error("inverse of zero");
        return Rational(1 / v_);
    }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw std::domain_error("division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    bool operator==(const Rational& o) const { return v_ == o.v_; }

    /// "p" when the denominator is 1, "p/q" otherwise.
    std::string str() const { return v_.get_str(); }

    static std::optional<Rational> parse(const std::string& s) {
        mpq_class v;
        if (v.set_str(s, 10) != 0) return std::nullopt;
        if (v.get_den() == 0) return std::nullopt;
        v.canonicalize();
        Rational r;
        r.v_ = v;
        return r;
    }

private:
    explicit Rational(mpq_class v) : v_(std::move(v)) {}
    mpq_class v_;
};

/// Element of the prime field GF(p). Every value carries its modulus;
/// mixing moduli is a hard error.
class PrimeField {
public:
    struct Field {
        std::uint64_t p = 2;
        bool operator==(const Field&) const = default;
        PrimeField from_long(long n) const {
            long r = n % static_cast<long>(p);
            if (r < 0) r += static_cast<long>(p);
            return PrimeField(static_cast<std::uint64_t>(r), p);
        }
        std::string name() const { return "gf:" + std::to_string(p); }
        static std::optional<PrimeField> parse_scalar(const Field& f, const std::string& s);
    };

    PrimeField() : v_(0), p_(2) {}
    PrimeField(std::uint64_t v, std::uint64_t p) : v_(v % p), p_(p) {
        if (p < 2) throw std::invalid_argument("prime field modulus must be >= 2");
    }

    std::uint64_t value() const { return v_; }
    std::uint64_t modulus() const { return p_; }

    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }

    PrimeField operator-() const { return PrimeField(v_ == 0 ? 0 : p_ - v_, p_); }

    PrimeField inverse() const {
        if (v_ == 0) throw std::domain_error("inverse of zero");
        // extended Euclid on (v, p)
        std::int64_t t = 0, newt = 1;
        std::int64_t r = static_cast<std::int64_t>(p_), newr = static_cast<std::int64_t>(v_);
        while (newr != 0) {
            std::int64_t q = r / newr;
            std::int64_t tmp = t - q * newt; t = newt; newt = tmp;
            tmp = r - q * newr; r = newr; newr = tmp;
        }
        if (r != 1) throw std::domain_error("modulus not prime: gcd != 1");
        if (t < 0) t += static_cast<std::int64_t>(p_);
        return PrimeField(static_cast<std::uint64_t>(t), p_);
    }

    PrimeField& operator+=(const PrimeField& o) {
        check(o);
        v_ += o.v_;
        if (v_ >= p_) v_ -= p_;
        return *this;
    }
    PrimeField& operator-=(const PrimeField& o) {
        check(o);
        v_ = (v_ >= o.v_) ? v_ - o.v_ : v_ + p_ - o.v_;
        return *this;
    }
    PrimeField& operator*=(const PrimeField& o) {
        check(o);
        v_ = static_cast<std::uint64_t>((static_cast<unsigned __int128>(v_) * o.v_) % p_);
        return *this;
    }
    PrimeField& operator/=(const PrimeField& o) { return *this *= o.inverse(); }

    friend PrimeField operator+(PrimeField a, const PrimeField& b) { return a += b; }
    friend PrimeField operator-(PrimeField a, const PrimeField& b) { return a -= b; }
    friend PrimeField operator*(PrimeField a, const PrimeField& b) { return a *= b; }
    friend PrimeField operator/(PrimeField a, const PrimeField& b) { return a /= b; }

    bool operator==(const PrimeField& o) const { return v_ == o.v_ && p_ == o.p_; }

    std::string str() const { return std::to_string(v_); }

private:
    void check(const PrimeField& o) const {
        if (p_ != o.p_) throw std::invalid_argument("mixed prime field moduli");
    }
    std::uint64_t v_;
    std::uint64_t p_;
};

inline bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

inline std::optional<Rational> Rational::Field::parse_scalar(const Field&, const std::string& s) {
    return Rational::parse(s);
}

inline std::optional<PrimeField> PrimeField::Field::parse_scalar(const Field& f,
                                                                 const std::string& s) {
    if (s.empty()) return std::nullopt;
    std::uint64_t v = 0;
    std::size_t i = 0;
    bool neg = s[0] == '-';
    if (neg) i = 1;
    if (i == s.size()) return std::nullopt;
    for (; i < s.size(); ++i) {
        if (s[i] < '0' || s[i] > '9') return std::nullopt;
        v = (v * 10 + static_cast<std::uint64_t>(s[i] - '0')) % f.p;
    }
    PrimeField r(v, f.p);
    return neg ? -r : r;
}

} // namespace mpgb
