#include "realrank/binary_form.hpp"

#include <sstream>
#include <stdexcept>

namespace realrank {

BinaryForm::BinaryForm(int degree, std::vector<Rational> coeffs) : d_(degree), c_(std::move(coeffs)) {
    if (degree < 0) throw std::invalid_argument("BinaryForm: negative degree");
    if (c_.size() != static_cast<size_t>(degree) + 1)
        throw std::invalid_argument("BinaryForm: coefficient count must be degree+1");
}

BinaryForm BinaryForm::zero(int degree) {
    return BinaryForm(degree, std::vector<Rational>(static_cast<size_t>(degree) + 1, Rational(0)));
}

BinaryForm BinaryForm::monomial(int degree, int y_power, Rational scale) {
    BinaryForm f = zero(degree);
    f.c_[static_cast<size_t>(y_power)] = std::move(scale);
    return f;
}

BinaryForm BinaryForm::linear_power(const Rational& l0, const Rational& l1, int d) {
    if (l0.is_zero() && l1.is_zero()) throw std::invalid_argument("linear_power: zero linear form");
    std::vector<Rational> c(static_cast<size_t>(d) + 1);
    for (int i = 0; i <= d; ++i)
        c[static_cast<size_t>(i)] = binomial(d, i) * l0.pow(static_cast<unsigned>(d - i)) * l1.pow(static_cast<unsigned>(i));
    return BinaryForm(d, std::move(c));
}

BinaryForm BinaryForm::from_unipoly(int degree, const UniPoly& p) {
    if (p.degree() > degree) throw std::invalid_argument("from_unipoly: polynomial degree too high");
    std::vector<Rational> c(static_cast<size_t>(degree) + 1, Rational(0));
    for (int i = 0; i <= degree; ++i) c[static_cast<size_t>(i)] = p.coeff(degree - i);
    return BinaryForm(degree, std::move(c));
}

bool BinaryForm::is_zero() const {
    for (const auto& q : c_)
        if (!q.is_zero()) return false;
    return true;
}

Rational BinaryForm::eval(const Rational& x, const Rational& y) const {
    Rational acc(0), xp(1);
    // sum c_i x^{d-i} y^i, evaluated as y-Horner times x powers.
    for (int i = d_; i >= 0; --i) {
        acc = acc * y + c_[static_cast<size_t>(d_ - i)] * xp;
        if (i > 0) xp *= x;
    }
    return acc;
}

UniPoly BinaryForm::dehomogenized() const {
    std::vector<Rational> c(static_cast<size_t>(d_) + 1);
    for (int k = 0; k <= d_; ++k) c[static_cast<size_t>(k)] = c_[static_cast<size_t>(d_ - k)];
    return UniPoly(std::move(c));
}

BinaryForm BinaryForm::derivative_x() const {
    if (d_ == 0) return zero(0);
    std::vector<Rational> c(static_cast<size_t>(d_), Rational(0));
    for (int i = 0; i < d_; ++i) c[static_cast<size_t>(i)] = Rational(d_ - i) * c_[static_cast<size_t>(i)];
    return BinaryForm(d_ - 1, std::move(c));
}

BinaryForm BinaryForm::derivative_y() const {
    if (d_ == 0) return zero(0);
    std::vector<Rational> c(static_cast<size_t>(d_), Rational(0));
    for (int j = 0; j < d_; ++j) c[static_cast<size_t>(j)] = Rational(j + 1) * c_[static_cast<size_t>(j + 1)];
    return BinaryForm(d_ - 1, std::move(c));
}

BinaryForm BinaryForm::directional_derivative(const Rational& v0, const Rational& v1) const {
    if (v0.is_zero() && v1.is_zero())
        throw std::invalid_argument("directional_derivative: zero direction");
    return v0 * derivative_x() + v1 * derivative_y();
}

BinaryForm operator+(const BinaryForm& a, const BinaryForm& b) {
    if (a.d_ != b.d_) throw std::invalid_argument("BinaryForm: degree mismatch in +");
    std::vector<Rational> c(a.c_.size());
    for (size_t i = 0; i < c.size(); ++i) c[i] = a.c_[i] + b.c_[i];
    return BinaryForm(a.d_, std::move(c));
}

BinaryForm operator-(const BinaryForm& a, const BinaryForm& b) {
    if (a.d_ != b.d_) throw std::invalid_argument("BinaryForm: degree mismatch in -");
    std::vector<Rational> c(a.c_.size());
    for (size_t i = 0; i < c.size(); ++i) c[i] = a.c_[i] - b.c_[i];
    return BinaryForm(a.d_, std::move(c));
}

BinaryForm operator*(const BinaryForm& a, const BinaryForm& b) {
    std::vector<Rational> c(static_cast<size_t>(a.d_ + b.d_) + 1, Rational(0));
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    }
    return BinaryForm(a.d_ + b.d_, std::move(c));
}

BinaryForm operator*(const Rational& s, const BinaryForm& f) {
    std::vector<Rational> c(f.c_.size());
    for (size_t i = 0; i < c.size(); ++i) c[i] = s * f.c_[i];
    return BinaryForm(f.d_, std::move(c));
}

BinaryForm BinaryForm::operator-() const { return Rational(-1) * (*this); }

BinaryForm BinaryForm::pow(int e) const {
    if (e < 0) throw std::invalid_argument("BinaryForm::pow: negative exponent");
    BinaryForm r = monomial(0, 0, Rational(1));
    for (int i = 0; i < e; ++i) r = r * (*this);
    return r;
}

int BinaryForm::infinity_multiplicity() const {
    if (is_zero()) return 0;
    return d_ - dehomogenized().degree();
}

std::string BinaryForm::str(const std::string& x, const std::string& y) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i <= d_; ++i) {
        const Rational& q = c_[static_cast<size_t>(i)];
        if (q.is_zero()) continue;
        if (!first) os << (q.sign() > 0 ? " + " : " - ");
        else if (q.sign() < 0) os << "-";
        Rational a = q.abs();
        int ex = d_ - i, ey = i;
        bool coeff_shown = (a != Rational(1)) || (ex == 0 && ey == 0);
        if (coeff_shown) os << a.str();
        bool star = coeff_shown;
        if (ex > 0) {
            if (star) os << "*";
            os << x;
            if (ex > 1) os << "^" << ex;
            star = true;
        }
        if (ey > 0) {
            if (star) os << "*";
            os << y;
            if (ey > 1) os << "^" << ey;
        }
        first = false;
    }
    return os.str();
}

BinaryForm gcd(const BinaryForm& a, const BinaryForm& b) {
    if (a.is_zero() && b.is_zero()) throw std::domain_error("gcd: both forms zero");
    if (a.is_zero() || b.is_zero()) {
        const BinaryForm& n = a.is_zero() ? b : a;
        return BinaryForm::from_unipoly(n.degree(), n.dehomogenized().monic());
    }
    int m = std::min(a.infinity_multiplicity(), b.infinity_multiplicity());
    UniPoly g = gcd(a.dehomogenized(), b.dehomogenized());
    return BinaryForm::from_unipoly(g.degree() + m, g);
}

BinaryForm divide_exact(const BinaryForm& a, const BinaryForm& b) {
    if (b.is_zero()) throw std::domain_error("divide_exact: division by zero form");
    if (a.is_zero()) return BinaryForm::zero(std::max(0, a.degree() - b.degree()));
    if (a.degree() < b.degree()) throw std::domain_error("divide_exact: degree of divisor too high");
    auto [q, r] = UniPoly::divrem(a.dehomogenized(), b.dehomogenized());
    if (!r.is_zero()) throw std::domain_error("divide_exact: not divisible");
    BinaryForm quo = BinaryForm::from_unipoly(a.degree() - b.degree(), q);
    if (!(quo * b == a)) throw std::domain_error("divide_exact: not divisible (infinity mismatch)");
    return quo;
}

bool is_squarefree(const BinaryForm& f) {
    if (f.is_zero()) return false;
    if (f.infinity_multiplicity() > 1) return false;
    UniPoly p = f.dehomogenized();
    if (p.degree() < 1) return true;
    return gcd(p, p.derivative()).degree() == 0;
}

RootIsolation isolate_real_roots(const BinaryForm& f) {
    if (f.is_zero()) throw std::domain_error("isolate_real_roots: zero form");
    UniPoly p = f.dehomogenized();
    RootIsolation iso;
    if (p.degree() >= 1) iso = isolate_real_roots(p);
    iso.infinity_multiplicity = f.degree() - p.degree();
    return iso;
}

int distinct_real_projective_roots(const BinaryForm& f) {
    if (f.is_zero()) throw std::domain_error("distinct_real_projective_roots: zero form");
    UniPoly p = f.dehomogenized();
    int affine = p.degree() >= 1 ? sturm_count(p) : 0;
    return affine + (p.degree() < f.degree() ? 1 : 0);
}

namespace {

/// F(x, mu*x + y): unimodular shear moving the root (1:0) to (1:-mu).
BinaryForm shear(const BinaryForm& f, const Rational& mu) {
    int d = f.degree();
    BinaryForm out = BinaryForm::zero(d);
    for (int i = 0; i <= d; ++i) {
        if (f.coeff(i).is_zero()) continue;
        // x^{d-i} (mu x + y)^i
        BinaryForm term = BinaryForm::linear_power(mu, Rational(1), i);
        std::vector<Rational> padded(static_cast<size_t>(d) + 1, Rational(0));
        for (int j = 0; j <= i; ++j) padded[static_cast<size_t>(j)] = term.coeff(j);
        out = out + f.coeff(i) * BinaryForm(d, std::move(padded));
    }
    return out;
}

}  // namespace

Rational form_discriminant(const BinaryForm& f) {
    if (f.is_zero()) throw std::domain_error("form_discriminant: zero form");
    int d = f.degree();
    if (d <= 1) return Rational(1);
    // Shear until no root at infinity; a unimodular change of coordinates
    // leaves the discriminant invariant.
    BinaryForm g = f;
    long mu = 0;
    while (g.coeff(0).is_zero()) {
        ++mu;
        g = shear(f, Rational(mu));
        if (mu > d + 1) throw std::logic_error("form_discriminant: shear search failed");
    }
    return discriminant(g.dehomogenized());
}

}  // namespace realrank
