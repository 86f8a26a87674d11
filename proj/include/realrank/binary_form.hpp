#pragma once

#include <string>
#include <utility>
#include <vector>

#include "realrank/roots.hpp"
#include "realrank/unipoly.hpp"

namespace realrank {

/// Homogeneous binary form of degree d in (x, y), plain monomial basis:
/// coeff(i) multiplies x^{d-i} y^i. The zero form of any degree is
/// representable and reports is_zero().
///
/// Projective roots live on P^1; the affine chart is t = x/y via f(t, 1),
/// and the root at infinity is (1:0), present iff coeff(0) == 0, with
/// multiplicity d - deg f(t,1).
class BinaryForm {
public:
    BinaryForm() : d_(0), c_(1, Rational(0)) {}
    BinaryForm(int degree, std::vector<Rational> coeffs);

    static BinaryForm zero(int degree);
    static BinaryForm monomial(int degree, int y_power, Rational scale);
    /// (l0 x + l1 y)^d, exact binomial expansion.
    static BinaryForm linear_power(const Rational& l0, const Rational& l1, int d);
    /// Form of degree d with polynomial part p(t) = f(t,1); roots at infinity
    /// appear as the degree gap.
    static BinaryForm from_unipoly(int degree, const UniPoly& p);

    int degree() const { return d_; }
    bool is_zero() const;
    const Rational& coeff(int i) const { return c_[static_cast<size_t>(i)]; }
    const std::vector<Rational>& coeffs() const { return c_; }

    Rational eval(const Rational& x, const Rational& y) const;
    /// f(t, 1) as a univariate polynomial in t.
    UniPoly dehomogenized() const;

    BinaryForm derivative_x() const;
    BinaryForm derivative_y() const;
    /// v0 * df/dx + v1 * df/dy; throws on v = (0,0).
    BinaryForm directional_derivative(const Rational& v0, const Rational& v1) const;

    friend BinaryForm operator+(const BinaryForm& a, const BinaryForm& b);
    friend BinaryForm operator-(const BinaryForm& a, const BinaryForm& b);
    friend BinaryForm operator*(const BinaryForm& a, const BinaryForm& b);
    friend BinaryForm operator*(const Rational& s, const BinaryForm& f);
    BinaryForm operator-() const;
    friend bool operator==(const BinaryForm& a, const BinaryForm& b) {
        return a.d_ == b.d_ && a.c_ == b.c_;
    }

    BinaryForm pow(int e) const;

    /// Multiplicity of y | f, i.e. of the root (1:0).
    int infinity_multiplicity() const;

    std::string str(const std::string& x = "x", const std::string& y = "y") const;

private:
    int d_;
    std::vector<Rational> c_;
};

/// Monic-normalized gcd of two binary forms (gcd of dehomogenizations plus
/// the shared power of y). Throws if both are zero.
BinaryForm gcd(const BinaryForm& a, const BinaryForm& b);

/// Exact division; throws if b does not divide a.
BinaryForm divide_exact(const BinaryForm& a, const BinaryForm& b);

/// Squarefree over the rationals: no repeated complex root, including (1:0).
bool is_squarefree(const BinaryForm& f);

/// Real projective roots with multiplicities (affine chart + infinity flag).
RootIsolation isolate_real_roots(const BinaryForm& f);

/// Distinct real projective roots; cheaper than full isolation.
int distinct_real_projective_roots(const BinaryForm& f);

/// Discriminant of the coefficient sequence taken with formal degree d (the
/// honest binary-form discriminant: vanishes exactly on forms with a repeated
/// projective root, including repeated roots at infinity).
Rational form_discriminant(const BinaryForm& f);

}  // namespace realrank
