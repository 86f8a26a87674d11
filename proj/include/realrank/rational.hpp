#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace realrank {

/// Exact rational scalar. Always canonical: lowest terms, denominator > 0.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}
    Rational(int n) : v_(n) {}
    Rational(long num, long den) : v_(num, den) {
        if (den == 0) throw std::invalid_argument("Rational: zero denominator");
        v_.canonicalize();
    }
    Rational(const mpz_class& num, const mpz_class& den) : v_(num, den) {
        if (den == 0) throw std::invalid_argument("Rational: zero denominator");
        v_.canonicalize();
    }
    explicit Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }

    /// Parses "p", "-p", or "p/q" with arbitrary-precision integers.
    static Rational parse(std::string_view s) {
        if (s.empty()) throw std::invalid_argument("Rational::parse: empty string");
        auto slash = s.find('/');
        try {
            if (slash == std::string_view::npos) {
                mpz_class n(std::string(s), 10);
                return Rational(n, mpz_class(1));
            }
            mpz_class n(std::string(s.substr(0, slash)), 10);
            mpz_class d(std::string(s.substr(slash + 1)), 10);
            if (d == 0) throw std::invalid_argument("zero denominator");
            return Rational(n, d);
        } catch (const std::invalid_argument&) {
            throw std::invalid_argument("Rational::parse: bad literal '" + std::string(s) + "'");
        }
    }

    const mpq_class& raw() const { return v_; }
    mpz_class num() const { return v_.get_num(); }
    mpz_class den() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    int sign() const { return sgn(v_); }
    bool is_integer() const { return v_.get_den() == 1; }

    Rational abs() const { return Rational(::abs(v_)); }

    friend Rational operator+(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ + b.v_)); }
    friend Rational operator-(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ - b.v_)); }
    friend Rational operator*(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ * b.v_)); }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.is_zero()) throw std::domain_error("Rational: division by zero");
        return Rational(mpq_class(a.v_ / b.v_));
    }
    Rational operator-() const { return Rational(mpq_class(-v_)); }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw std::domain_error("Rational: division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) == 0; }
    friend bool operator!=(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) != 0; }
    friend bool operator<(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) < 0; }
    friend bool operator<=(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) <= 0; }
    friend bool operator>(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) > 0; }
    friend bool operator>=(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) >= 0; }

    Rational pow(unsigned e) const {
        Rational r(1), base(*this);
        while (e) {
            if (e & 1u) r *= base;
            base *= base;
            e >>= 1u;
        }
        return r;
    }

    double to_double() const { return v_.get_d(); }

    /// "p" or "p/q".
    std::string str() const {
        if (v_.get_den() == 1) return v_.get_num().get_str();
        return v_.get_num().get_str() + "/" + v_.get_den().get_str();
    }

    /// Deterministic fixed-point decimal, truncated toward zero.
    std::string decimal_str(int digits) const {
        mpz_class scale;
        mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
        mpz_class scaled_num = v_.get_num() * scale;
        mpz_class q = scaled_num / v_.get_den();  // truncates toward zero
        bool neg = q < 0;
        mpz_class aq = ::abs(q);
        std::string body = aq.get_str();
        if (static_cast<int>(body.size()) <= digits) body.insert(0, digits + 1 - body.size(), '0');
        std::string out = body.substr(0, body.size() - digits) + "." + body.substr(body.size() - digits);
        return neg ? "-" + out : out;
    }

private:
    mpq_class v_;
};

inline Rational min(const Rational& a, const Rational& b) { return a <= b ? a : b; }
inline Rational max(const Rational& a, const Rational& b) { return a >= b ? a : b; }

inline mpz_class floor_z(const Rational& q) {
    mpz_class f;
    mpz_fdiv_q(f.get_mpz_t(), q.num().get_mpz_t(), q.den().get_mpz_t());
    return f;
}

inline mpz_class ceil_z(const Rational& q) {
    mpz_class c;
    mpz_cdiv_q(c.get_mpz_t(), q.num().get_mpz_t(), q.den().get_mpz_t());
    return c;
}

/// The rational with the smallest denominator in [lo, hi] (Stern-Brocot
/// descent). Used to snap isolating intervals onto exact rational roots.
inline Rational simplest_rational_in(const Rational& lo, const Rational& hi) {
    if (lo > hi) throw std::invalid_argument("simplest_rational_in: empty interval");
    if (lo.sign() <= 0 && hi.sign() >= 0) return Rational(0);
    if (hi.sign() < 0) return -simplest_rational_in(-hi, -lo);
    // now 0 < lo <= hi
    mpz_class c = ceil_z(lo);
    if (Rational(c, mpz_class(1)) <= hi) return Rational(c, mpz_class(1));
    mpz_class f = floor_z(lo);
    Rational fl(f, mpz_class(1));
    Rational sub = simplest_rational_in(Rational(1) / (hi - fl), Rational(1) / (lo - fl));
    return fl + Rational(1) / sub;
}

inline std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.str(); }

/// C(n, k) as an exact rational (integer-valued).
inline Rational binomial(int n, int k) {
    if (k < 0 || k > n) return Rational(0);
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return Rational(r, mpz_class(1));
}

}  // namespace realrank
