#include "realrank/unipoly.hpp"

#include <sstream>
#include <stdexcept>

#include "realrank/linalg.hpp"

namespace realrank {

void UniPoly::normalize() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

UniPoly UniPoly::monomial(Rational scale, int power) {
    if (scale.is_zero()) return UniPoly();
    std::vector<Rational> c(static_cast<size_t>(power) + 1, Rational(0));
    c.back() = std::move(scale);
    return UniPoly(std::move(c));
}

const Rational& UniPoly::lc() const {
    if (is_zero()) throw std::domain_error("UniPoly::lc: zero polynomial");
    return c_.back();
}

Rational UniPoly::eval(const Rational& x) const {
    Rational acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Interval UniPoly::eval(const Interval& x) const {
    Interval acc{Rational(0)};
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + Interval(*it);
    return acc;
}

UniPoly UniPoly::derivative() const {
    if (c_.size() <= 1) return UniPoly();
    std::vector<Rational> d(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) d[i - 1] = Rational(static_cast<long>(i)) * c_[i];
    return UniPoly(std::move(d));
}

UniPoly operator+(const UniPoly& a, const UniPoly& b) {
    std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()), Rational(0));
    for (size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
    return UniPoly(std::move(c));
}

UniPoly operator-(const UniPoly& a, const UniPoly& b) {
    std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()), Rational(0));
    for (size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) c[i] -= b.c_[i];
    return UniPoly(std::move(c));
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return UniPoly();
    std::vector<Rational> c(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    }
    return UniPoly(std::move(c));
}

UniPoly UniPoly::operator-() const {
    std::vector<Rational> c(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) c[i] = -c_[i];
    return UniPoly(std::move(c));
}

UniPoly operator*(const Rational& s, const UniPoly& p) {
    if (s.is_zero()) return UniPoly();
    std::vector<Rational> c(p.c_.size());
    for (size_t i = 0; i < p.c_.size(); ++i) c[i] = s * p.c_[i];
    return UniPoly(std::move(c));
}

std::pair<UniPoly, UniPoly> UniPoly::divrem(const UniPoly& a, const UniPoly& b) {
    if (b.is_zero()) throw std::domain_error("UniPoly::divrem: division by zero polynomial");
    if (a.degree() < b.degree()) return {UniPoly(), a};
    std::vector<Rational> rem = a.c_;
    std::vector<Rational> quot(static_cast<size_t>(a.degree() - b.degree()) + 1, Rational(0));
    const Rational& blc = b.lc();
    for (int k = a.degree() - b.degree(); k >= 0; --k) {
        Rational q = rem[static_cast<size_t>(k + b.degree())] / blc;
        quot[static_cast<size_t>(k)] = q;
        if (q.is_zero()) continue;
        for (int i = 0; i <= b.degree(); ++i)
            rem[static_cast<size_t>(k + i)] -= q * b.c_[static_cast<size_t>(i)];
    }
    return {UniPoly(std::move(quot)), UniPoly(std::move(rem))};
}

UniPoly UniPoly::monic() const {
    if (is_zero()) return UniPoly();
    return (Rational(1) / lc()) * (*this);
}

UniPoly UniPoly::primitive() const {
    if (is_zero()) return UniPoly();
    mpz_class den_lcm(1), num_gcd(0);
    for (const auto& q : c_) {
        mpz_class d = q.den();
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), den_lcm.get_mpz_t(), d.get_mpz_t());
        den_lcm = den_lcm / g * d;
    }
    for (const auto& q : c_) {
        mpz_class n = q.num() * (den_lcm / q.den());
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), n.get_mpz_t());
    }
    Rational scale(den_lcm, num_gcd);  // positive: num_gcd > 0, den_lcm > 0
    return scale * (*this);
}

UniPoly UniPoly::shifted(const Rational& shift) const {
    // Horner in (t + shift).
    UniPoly acc;
    UniPoly lin({shift, Rational(1)});
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * lin + UniPoly::constant(*it);
    return acc;
}

UniPoly UniPoly::scaled_arg(const Rational& s) const {
    std::vector<Rational> c(c_.size());
    Rational p(1);
    for (size_t i = 0; i < c_.size(); ++i) {
        c[i] = c_[i] * p;
        p *= s;
    }
    return UniPoly(std::move(c));
}

UniPoly UniPoly::reversed() const {
    std::vector<Rational> c(c_.rbegin(), c_.rend());
    return UniPoly(std::move(c));
}

std::string UniPoly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const Rational& q = c_[static_cast<size_t>(i)];
        if (q.is_zero()) continue;
        if (!first) os << (q.sign() > 0 ? " + " : " - ");
        else if (q.sign() < 0) os << "-";
        Rational a = q.abs();
        if (a != Rational(1) || i == 0) os << a.str();
        if (i > 0) {
            if (a != Rational(1)) os << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
        first = false;
    }
    return os.str();
}

UniPoly gcd(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() && b.is_zero()) throw std::domain_error("gcd: both polynomials zero");
    UniPoly f = a.primitive(), g = b.primitive();
    while (!g.is_zero()) {
        UniPoly r = UniPoly::divrem(f, g).second.primitive();
        f = std::move(g);
        g = std::move(r);
    }
    return f.monic();
}

std::vector<std::pair<UniPoly, int>> squarefree_decomposition(const UniPoly& p) {
    if (p.is_zero()) throw std::domain_error("squarefree_decomposition: zero polynomial");
    std::vector<std::pair<UniPoly, int>> out;
    if (p.degree() == 0) return out;
    UniPoly f = p.monic();
    UniPoly df = f.derivative();
    UniPoly a = gcd(f, df);
    UniPoly b = UniPoly::divrem(f, a).first;
    UniPoly c = UniPoly::divrem(df, a).first;
    UniPoly d = c - b.derivative();
    int mult = 1;
    while (b.degree() > 0) {
        UniPoly q = gcd(b, d);
        if (q.degree() > 0) out.emplace_back(q, mult);
        b = UniPoly::divrem(b, q).first;
        c = UniPoly::divrem(d, q).first;
        d = c - b.derivative();
        ++mult;
    }
    return out;
}

UniPoly squarefree_part(const UniPoly& p) {
    if (p.is_zero()) throw std::domain_error("squarefree_part: zero polynomial");
    if (p.degree() == 0) return UniPoly::constant(Rational(1));
    UniPoly g = gcd(p, p.derivative());
    return UniPoly::divrem(p, g).first.monic();
}

Rational resultant(const UniPoly& a, int deg_a, const UniPoly& b, int deg_b) {
    if (deg_a < a.degree() || deg_b < b.degree())
        throw std::invalid_argument("resultant: formal degree below actual degree");
    if (deg_a < 0 || deg_b < 0) throw std::invalid_argument("resultant: negative formal degree");
    int n = deg_a + deg_b;
    if (n == 0) return Rational(1);
    MatQ m(static_cast<size_t>(n), std::vector<Rational>(static_cast<size_t>(n), Rational(0)));
    // deg_b rows of a's coefficients (descending), then deg_a rows of b's.
    for (int r = 0; r < deg_b; ++r)
        for (int i = 0; i <= deg_a; ++i) m[static_cast<size_t>(r)][static_cast<size_t>(r + i)] = a.coeff(deg_a - i);
    for (int r = 0; r < deg_a; ++r)
        for (int i = 0; i <= deg_b; ++i)
            m[static_cast<size_t>(deg_b + r)][static_cast<size_t>(r + i)] = b.coeff(deg_b - i);
    return determinant(std::move(m));
}

Rational resultant(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return Rational(0);
    return resultant(a, a.degree(), b, b.degree());
}

Rational discriminant(const UniPoly& p) {
    if (p.degree() < 1) throw std::domain_error("discriminant: degree must be >= 1");
    int n = p.degree();
    Rational r = resultant(p, n, p.derivative(), n - 1);
    Rational d = r / p.lc();
    return (n * (n - 1) / 2) % 2 == 0 ? d : -d;
}

UniPoly interpolate(const std::vector<std::pair<Rational, Rational>>& points) {
    UniPoly acc;
    for (size_t i = 0; i < points.size(); ++i) {
        UniPoly li = UniPoly::constant(Rational(1));
        Rational denom(1);
        for (size_t j = 0; j < points.size(); ++j) {
            if (i == j) continue;
            li = li * UniPoly::linear_root(points[j].first);
            denom *= points[i].first - points[j].first;
        }
        acc = acc + (points[i].second / denom) * li;
    }
    return acc;
}

}  // namespace realrank
