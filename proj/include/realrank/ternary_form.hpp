#pragma once

#include <array>
#include <string>
#include <vector>

#include "realrank/binary_form.hpp"
#include "realrank/interval.hpp"

namespace realrank {

/// Dense homogeneous ternary form in (x0, x1, x2) over the rationals.
/// Coefficients indexed by the exponents (e1, e2) of x1, x2; e0 is implied.
class TernaryForm {
public:
    TernaryForm() : n_(0), c_(1, Rational(0)) {}
    explicit TernaryForm(int degree);

    static TernaryForm monomial(int degree, int e1, int e2, Rational scale);

    int degree() const { return n_; }
    bool is_zero() const;

    const Rational& coeff(int e1, int e2) const { return c_[idx(e1, e2)]; }
    Rational& at(int e1, int e2) { return c_[idx(e1, e2)]; }

    Rational eval(const Rational& x0, const Rational& x1, const Rational& x2) const;
    Interval eval(const Interval& x0, const Interval& x1, const Interval& x2) const;

    TernaryForm derivative(int var) const;  // var in {0, 1, 2}

    friend TernaryForm operator+(const TernaryForm& a, const TernaryForm& b);
    friend TernaryForm operator-(const TernaryForm& a, const TernaryForm& b);
    friend TernaryForm operator*(const TernaryForm& a, const TernaryForm& b);
    friend TernaryForm operator*(const Rational& s, const TernaryForm& f);
    TernaryForm operator-() const;
    friend bool operator==(const TernaryForm& a, const TernaryForm& b) {
        return a.n_ == b.n_ && a.c_ == b.c_;
    }

    /// f(L0(s,t), L1(s,t), L2(s,t)) for linear binary forms L_i: the
    /// restriction of the curve to a parametrized projective line.
    BinaryForm compose_linear(const BinaryForm& L0, const BinaryForm& L1,
                              const BinaryForm& L2) const;

    /// f with x1, x2 substituted by binary forms of equal degree m and x0
    /// kept formal: returns the coefficients of x0^i (binary forms in (s,t)
    /// of degree m * (n - i)). Used for cone sections.
    std::vector<BinaryForm> substitute_x1_x2(const BinaryForm& b1, const BinaryForm& b2) const;

    /// Dehomogenize in the given chart variable (set it to 1), returning a
    /// polynomial in the other two evaluated as a UniPoly in `poly_var` with
    /// the third variable fixed to `value`.
    UniPoly restrict_line_chart(int chart_var, int poly_var, const Rational& value) const;

    std::string str() const;

    /// Parses a sum of rational-coefficient monomials like
    /// "x2^2*x0 - x1^3 + 2*x0*x1*x2" (used by the CLI).
    static TernaryForm parse(const std::string& text);

private:
    size_t idx(int e1, int e2) const;
    int n_;
    std::vector<Rational> c_;
};

/// Hessian determinant (3x3 second partials), degree 3(n-2).
TernaryForm hessian_det(const TernaryForm& f);

/// Discriminant of f in the variable x0, exact, as a binary form in (x1, x2)
/// of degree n(n-1). Requires the coefficient of x0^n to be nonzero (full
/// leading term; the canonical res(f, df/dx0)/lc normalization).
BinaryForm discriminant_in_x0(const TernaryForm& f);

}  // namespace realrank
