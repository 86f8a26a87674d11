#include "realrank/ternary_form.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace realrank {

TernaryForm::TernaryForm(int degree) : n_(degree) {
    if (degree < 0) throw std::invalid_argument("TernaryForm: negative degree");
    c_.assign(static_cast<size_t>((degree + 1) * (degree + 2) / 2), Rational(0));
}

size_t TernaryForm::idx(int e1, int e2) const {
    if (e1 < 0 || e2 < 0 || e1 + e2 > n_) throw std::out_of_range("TernaryForm: bad exponents");
    int offset = e1 * (n_ + 1) - e1 * (e1 - 1) / 2;
    return static_cast<size_t>(offset + e2);
}

TernaryForm TernaryForm::monomial(int degree, int e1, int e2, Rational scale) {
    TernaryForm f(degree);
    f.at(e1, e2) = std::move(scale);
    return f;
}

bool TernaryForm::is_zero() const {
    for (const auto& q : c_)
        if (!q.is_zero()) return false;
    return true;
}

Rational TernaryForm::eval(const Rational& x0, const Rational& x1, const Rational& x2) const {
    Rational acc(0);
    for (int e1 = 0; e1 <= n_; ++e1)
        for (int e2 = 0; e2 <= n_ - e1; ++e2) {
            const Rational& q = c_[idx(e1, e2)];
            if (q.is_zero()) continue;
            acc += q * x0.pow(static_cast<unsigned>(n_ - e1 - e2)) * x1.pow(static_cast<unsigned>(e1)) *
                   x2.pow(static_cast<unsigned>(e2));
        }
    return acc;
}

Interval TernaryForm::eval(const Interval& x0, const Interval& x1, const Interval& x2) const {
    Interval acc{Rational(0)};
    for (int e1 = 0; e1 <= n_; ++e1)
        for (int e2 = 0; e2 <= n_ - e1; ++e2) {
            const Rational& q = c_[idx(e1, e2)];
            if (q.is_zero()) continue;
            acc = acc + Interval(q) * ipow(x0, static_cast<unsigned>(n_ - e1 - e2)) *
                            ipow(x1, static_cast<unsigned>(e1)) * ipow(x2, static_cast<unsigned>(e2));
        }
    return acc;
}

TernaryForm TernaryForm::derivative(int var) const {
    if (n_ == 0) return TernaryForm(0);
    TernaryForm d(n_ - 1);
    for (int e1 = 0; e1 <= n_; ++e1)
        for (int e2 = 0; e2 <= n_ - e1; ++e2) {
            const Rational& q = c_[idx(e1, e2)];
            if (q.is_zero()) continue;
            int e0 = n_ - e1 - e2;
            if (var == 0 && e0 > 0) d.at(e1, e2) += Rational(e0) * q;
            if (var == 1 && e1 > 0) d.at(e1 - 1, e2) += Rational(e1) * q;
            if (var == 2 && e2 > 0) d.at(e1, e2 - 1) += Rational(e2) * q;
        }
    return d;
}

TernaryForm operator+(const TernaryForm& a, const TernaryForm& b) {
    if (a.n_ != b.n_) throw std::invalid_argument("TernaryForm: degree mismatch in +");
    TernaryForm r(a.n_);
    for (size_t i = 0; i < a.c_.size(); ++i) r.c_[i] = a.c_[i] + b.c_[i];
    return r;
}

TernaryForm operator-(const TernaryForm& a, const TernaryForm& b) {
    if (a.n_ != b.n_) throw std::invalid_argument("TernaryForm: degree mismatch in -");
    TernaryForm r(a.n_);
    for (size_t i = 0; i < a.c_.size(); ++i) r.c_[i] = a.c_[i] - b.c_[i];
    return r;
}

TernaryForm operator*(const TernaryForm& a, const TernaryForm& b) {
    TernaryForm r(a.n_ + b.n_);
    for (int a1 = 0; a1 <= a.n_; ++a1)
        for (int a2 = 0; a2 <= a.n_ - a1; ++a2) {
            const Rational& qa = a.c_[a.idx(a1, a2)];
            if (qa.is_zero()) continue;
            for (int b1 = 0; b1 <= b.n_; ++b1)
                for (int b2 = 0; b2 <= b.n_ - b1; ++b2) {
                    const Rational& qb = b.c_[b.idx(b1, b2)];
                    if (qb.is_zero()) continue;
                    r.at(a1 + b1, a2 + b2) += qa * qb;
                }
        }
    return r;
}

TernaryForm operator*(const Rational& s, const TernaryForm& f) {
    TernaryForm r(f.n_);
    for (size_t i = 0; i < f.c_.size(); ++i) r.c_[i] = s * f.c_[i];
    return r;
}

TernaryForm TernaryForm::operator-() const { return Rational(-1) * (*this); }

BinaryForm TernaryForm::compose_linear(const BinaryForm& L0, const BinaryForm& L1,
                                       const BinaryForm& L2) const {
    if (L0.degree() != 1 || L1.degree() != 1 || L2.degree() != 1)
        throw std::invalid_argument("compose_linear: substitutions must be linear");
    // Precompute powers.
    std::vector<BinaryForm> p0(static_cast<size_t>(n_) + 1), p1 = p0, p2 = p0;
    p0[0] = p1[0] = p2[0] = BinaryForm::monomial(0, 0, Rational(1));
    for (int e = 1; e <= n_; ++e) {
        p0[static_cast<size_t>(e)] = p0[static_cast<size_t>(e - 1)] * L0;
        p1[static_cast<size_t>(e)] = p1[static_cast<size_t>(e - 1)] * L1;
        p2[static_cast<size_t>(e)] = p2[static_cast<size_t>(e - 1)] * L2;
    }
    BinaryForm acc = BinaryForm::zero(n_);
    for (int e1 = 0; e1 <= n_; ++e1)
        for (int e2 = 0; e2 <= n_ - e1; ++e2) {
            const Rational& q = c_[idx(e1, e2)];
            if (q.is_zero()) continue;
            acc = acc + q * (p0[static_cast<size_t>(n_ - e1 - e2)] * p1[static_cast<size_t>(e1)] *
                             p2[static_cast<size_t>(e2)]);
        }
    return acc;
}

std::vector<BinaryForm> TernaryForm::substitute_x1_x2(const BinaryForm& b1,
                                                      const BinaryForm& b2) const {
    int m = b1.degree();
    if (b2.degree() != m) throw std::invalid_argument("substitute_x1_x2: degree mismatch");
    std::vector<BinaryForm> out;
    for (int i = 0; i <= n_; ++i) out.push_back(BinaryForm::zero(m * (n_ - i)));
    std::vector<BinaryForm> p1(static_cast<size_t>(n_) + 1), p2 = p1;
    p1[0] = p2[0] = BinaryForm::monomial(0, 0, Rational(1));
    for (int e = 1; e <= n_; ++e) {
        p1[static_cast<size_t>(e)] = p1[static_cast<size_t>(e - 1)] * b1;
        p2[static_cast<size_t>(e)] = p2[static_cast<size_t>(e - 1)] * b2;
    }
    for (int e1 = 0; e1 <= n_; ++e1)
        for (int e2 = 0; e2 <= n_ - e1; ++e2) {
            const Rational& q = c_[idx(e1, e2)];
            if (q.is_zero()) continue;
            int e0 = n_ - e1 - e2;  // power of x0
            BinaryForm term = q * (p1[static_cast<size_t>(e1)] * p2[static_cast<size_t>(e2)]);
            out[static_cast<size_t>(e0)] = out[static_cast<size_t>(e0)] + term;
        }
    return out;
}

UniPoly TernaryForm::restrict_line_chart(int chart_var, int poly_var, const Rational& value) const {
    if (chart_var == poly_var) throw std::invalid_argument("restrict_line_chart: variables collide");
    std::vector<Rational> coeffs(static_cast<size_t>(n_) + 1, Rational(0));
    for (int e1 = 0; e1 <= n_; ++e1)
        for (int e2 = 0; e2 <= n_ - e1; ++e2) {
            const Rational& q = c_[idx(e1, e2)];
            if (q.is_zero()) continue;
            int e[3] = {n_ - e1 - e2, e1, e2};
            int other = 3 - chart_var - poly_var;
            coeffs[static_cast<size_t>(e[poly_var])] += q * value.pow(static_cast<unsigned>(e[other]));
        }
    return UniPoly(std::move(coeffs));
}

std::string TernaryForm::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int e1 = 0; e1 <= n_; ++e1)
        for (int e2 = 0; e2 <= n_ - e1; ++e2) {
            const Rational& q = c_[idx(e1, e2)];
            if (q.is_zero()) continue;
            if (!first) os << (q.sign() > 0 ? " + " : " - ");
            else if (q.sign() < 0) os << "-";
            Rational a = q.abs();
            int e0 = n_ - e1 - e2;
            bool shown = (a != Rational(1)) || (e0 == 0 && e1 == 0 && e2 == 0);
            if (shown) os << a.str();
            bool star = shown;
            auto put = [&](const char* v, int e) {
                if (e == 0) return;
                if (star) os << "*";
                os << v;
                if (e > 1) os << "^" << e;
                star = true;
            };
            put("x0", e0);
            put("x1", e1);
            put("x2", e2);
            first = false;
        }
    return os.str();
}

TernaryForm hessian_det(const TernaryForm& f) {
    if (f.degree() < 3) throw std::invalid_argument("hessian_det: degree must be >= 3");
    TernaryForm h[3][3];
    for (int i = 0; i < 3; ++i) {
        TernaryForm di = f.derivative(i);
        for (int j = 0; j < 3; ++j) h[i][j] = di.derivative(j);
    }
    TernaryForm det = h[0][0] * (h[1][1] * h[2][2] - h[1][2] * h[2][1]) -
                      h[0][1] * (h[1][0] * h[2][2] - h[1][2] * h[2][0]) +
                      h[0][2] * (h[1][0] * h[2][1] - h[1][1] * h[2][0]);
    return det;
}

BinaryForm discriminant_in_x0(const TernaryForm& f) {
    int n = f.degree();
    if (n < 1) throw std::invalid_argument("discriminant_in_x0: degree must be >= 1");
    if (f.coeff(0, 0).is_zero())
        throw std::invalid_argument("discriminant_in_x0: needs a full x0^n leading term");
    int N = n * (n - 1);
    // disc of f(x0, 1, m) as a polynomial in m, then homogenize.
    std::vector<std::pair<Rational, Rational>> nodes;
    for (int i = 0; i <= N; ++i) {
        Rational m(i);
        UniPoly p = f.restrict_line_chart(1, 0, m);  // x1 = 1, poly in x0, x2 = m
        nodes.emplace_back(m, n >= 2 ? discriminant(p) : Rational(1));
    }
    UniPoly dm = interpolate(nodes);
    if (dm.degree() > N) throw std::logic_error("discriminant_in_x0: degree bound exceeded");
    std::vector<Rational> c(static_cast<size_t>(N) + 1, Rational(0));
    for (int j = 0; j <= N; ++j) c[static_cast<size_t>(j)] = dm.coeff(j);
    return BinaryForm(N, std::move(c));
}

namespace {

struct Parser {
    std::string s;
    size_t pos = 0;

    void skip() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eat(char c) {
        skip();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    [[noreturn]] void fail(const std::string& why) {
        throw std::invalid_argument("TernaryForm::parse: " + why + " at position " +
                                    std::to_string(pos));
    }

    Rational number() {
        skip();
        size_t start = pos;
        while (pos < s.size() && (std::isdigit(static_cast<unsigned char>(s[pos])) || s[pos] == '/'))
            ++pos;
        if (start == pos) fail("expected a number");
        return Rational::parse(s.substr(start, pos - start));
    }

    // term := [number] {'*'? var ['^' int]}*
    struct Term {
        Rational coeff{1};
        int e[3] = {0, 0, 0};
    };

    Term term() {
        Term t;
        skip();
        bool any = false;
        if (pos < s.size() && (std::isdigit(static_cast<unsigned char>(s[pos])))) {
            t.coeff = number();
            any = true;
        }
        while (true) {
            skip();
            if (pos < s.size() && s[pos] == '*') ++pos;
            skip();
            if (pos + 1 < s.size() && s[pos] == 'x' &&
                (s[pos + 1] == '0' || s[pos + 1] == '1' || s[pos + 1] == '2')) {
                int var = s[pos + 1] - '0';
                pos += 2;
                int e = 1;
                if (eat('^')) {
                    skip();
                    size_t st = pos;
                    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
                    if (st == pos) fail("expected an exponent");
                    e = std::stoi(s.substr(st, pos - st));
                }
                t.e[var] += e;
                any = true;
            } else {
                break;
            }
        }
        if (!any) fail("expected a term");
        return t;
    }
};

}  // namespace

TernaryForm TernaryForm::parse(const std::string& text) {
    Parser p{text};
    std::vector<std::pair<Rational, std::array<int, 3>>> terms;
    int degree = -1;
    bool neg = p.eat('-');
    while (true) {
        Parser::Term t = p.term();
        if (neg) t.coeff = -t.coeff;
        int total = t.e[0] + t.e[1] + t.e[2];
        if (degree < 0) degree = total;
        if (total != degree)
            throw std::invalid_argument("TernaryForm::parse: non-homogeneous input");
        terms.push_back({t.coeff, {t.e[0], t.e[1], t.e[2]}});
        p.skip();
        if (p.pos >= p.s.size()) break;
        if (p.eat('+')) neg = false;
        else if (p.eat('-')) neg = true;
        else p.fail("expected '+' or '-'");
    }
    TernaryForm f(degree);
    for (auto& [c, e] : terms) f.at(e[1], e[2]) += c;
    return f;
}

}  // namespace realrank
