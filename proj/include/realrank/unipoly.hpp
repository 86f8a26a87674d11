#pragma once

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "realrank/interval.hpp"
#include "realrank/rational.hpp"

namespace realrank {

/// Dense univariate polynomial over the rationals, coefficients by ascending
/// power. The zero polynomial has an empty coefficient vector and degree -1.
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { normalize(); }
    UniPoly(std::initializer_list<Rational> coeffs) : c_(coeffs) { normalize(); }

    static UniPoly zero() { return UniPoly(); }
    static UniPoly constant(Rational v) { return UniPoly({std::move(v)}); }
    static UniPoly monomial(Rational scale, int power);
    /// t - r
    static UniPoly linear_root(const Rational& r) { return UniPoly({-r, Rational(1)}); }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    const std::vector<Rational>& coeffs() const { return c_; }
    const Rational& operator[](int i) const { return c_[static_cast<size_t>(i)]; }
    Rational coeff(int i) const {
        return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[static_cast<size_t>(i)] : Rational(0);
    }
    const Rational& lc() const;

    Rational eval(const Rational& x) const;
    Interval eval(const Interval& x) const;

    UniPoly derivative() const;

    friend UniPoly operator+(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator-(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
    UniPoly operator-() const;
    friend UniPoly operator*(const Rational& s, const UniPoly& p);

    friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }

    /// Euclidean division; throws on zero divisor.
    static std::pair<UniPoly, UniPoly> divrem(const UniPoly& a, const UniPoly& b);

    UniPoly monic() const;

    /// Scales to integer coefficients with content 1 and positive leading
    /// coefficient times the original sign. Sign-preserving, used to tame
    /// coefficient growth in remainder sequences.
    UniPoly primitive() const;

    /// q(t) = p(t + shift)
    UniPoly shifted(const Rational& shift) const;
    /// q(t) = p(s * t)
    UniPoly scaled_arg(const Rational& s) const;
    /// q(t) = t^deg * p(1/t)
    UniPoly reversed() const;

    std::string str(const std::string& var = "t") const;

private:
    void normalize();
    std::vector<Rational> c_;
};

/// Monic gcd; throws if both inputs are zero.
UniPoly gcd(const UniPoly& a, const UniPoly& b);

/// Yun's algorithm: p = lc * prod q_i^{m_i}, q_i monic squarefree pairwise
/// coprime, returned in increasing multiplicity order.
std::vector<std::pair<UniPoly, int>> squarefree_decomposition(const UniPoly& p);

/// Squarefree part p / gcd(p, p'), monic.
UniPoly squarefree_part(const UniPoly& p);

/// Sylvester resultant of a and b taken with FORMAL degrees (deg_a, deg_b),
/// which may exceed the actual degrees; padding with zero rows is the
/// convention needed for binary forms with roots at infinity.
Rational resultant(const UniPoly& a, int deg_a, const UniPoly& b, int deg_b);
Rational resultant(const UniPoly& a, const UniPoly& b);

/// disc(p) = (-1)^{n(n-1)/2} res(p, p') / lc(p); degree >= 1 required.
Rational discriminant(const UniPoly& p);

/// Exact Lagrange interpolation through (x_i, y_i) with distinct nodes.
UniPoly interpolate(const std::vector<std::pair<Rational, Rational>>& points);

}  // namespace realrank
