#include "realrank/apolarity.hpp"

#include <stdexcept>

namespace realrank {

WeightedCoords to_weighted(const BinaryForm& f) {
    WeightedCoords w;
    w.d = f.degree();
    w.a.resize(static_cast<size_t>(w.d) + 1);
    for (int i = 0; i <= w.d; ++i) w.a[static_cast<size_t>(i)] = f.coeff(i) / binomial(w.d, i);
    return w;
}

BinaryForm from_weighted(const WeightedCoords& w) {
    std::vector<Rational> c(static_cast<size_t>(w.d) + 1);
    for (int i = 0; i <= w.d; ++i) c[static_cast<size_t>(i)] = binomial(w.d, i) * w.a[static_cast<size_t>(i)];
    return BinaryForm(w.d, std::move(c));
}

Catalecticant catalecticant(const BinaryForm& f, int k) {
    int d = f.degree();
    if (k < 0 || k > d) throw std::invalid_argument("catalecticant: k out of range");
    WeightedCoords w = to_weighted(f);
    Catalecticant cat;
    cat.k = k;
    cat.m.assign(static_cast<size_t>(d - k) + 1, VecQ(static_cast<size_t>(k) + 1));
    for (int i = 0; i <= d - k; ++i)
        for (int j = 0; j <= k; ++j) cat.m[static_cast<size_t>(i)][static_cast<size_t>(j)] = w.a[static_cast<size_t>(i + j)];
    return cat;
}

BinaryForm apolar_apply(const BinaryForm& g, const BinaryForm& f) {
    int k = g.degree(), d = f.degree();
    if (k > d) return BinaryForm::zero(0);
    BinaryForm acc = BinaryForm::zero(d - k);
    for (int j = 0; j <= k; ++j) {
        if (g.coeff(j).is_zero()) continue;
        BinaryForm t = f;
        for (int s = 0; s < k - j; ++s) t = t.derivative_x();
        for (int s = 0; s < j; ++s) t = t.derivative_y();
        acc = acc + g.coeff(j) * t;
    }
    return acc;
}

std::vector<BinaryForm> apolar_component(const BinaryForm& f, int k) {
    if (k < 0) throw std::invalid_argument("apolar_component: negative degree");
    int d = f.degree();
    std::vector<BinaryForm> basis;
    if (k > d) {
        for (int j = 0; j <= k; ++j) basis.push_back(BinaryForm::monomial(k, j, Rational(1)));
        return basis;
    }
    Catalecticant cat = catalecticant(f, k);
    for (const VecQ& v : kernel_basis(cat.m, k + 1)) basis.emplace_back(k, v);
    return basis;
}

namespace {

/// Is v in the column span of basis? (exact, via rref of the stacked matrix)
bool in_span(const std::vector<VecQ>& basis, const VecQ& v) {
    if (basis.empty()) return false;
    size_t n = v.size();
    MatQ m;
    for (const auto& b : basis) m.push_back(b);
    int r0 = rank(m);
    m.push_back(v);
    (void)n;
    return rank(m) == r0;
}

VecQ form_coeffs(const BinaryForm& g, int k) {
    VecQ v(static_cast<size_t>(k) + 1);
    for (int j = 0; j <= k; ++j) v[static_cast<size_t>(j)] = g.coeff(j);
    return v;
}

}  // namespace

std::pair<BinaryForm, BinaryForm> apolar_generators(const BinaryForm& f) {
    if (f.is_zero()) throw std::invalid_argument("apolar_generators: zero form");
    int d = f.degree();
    BinaryForm r1 = BinaryForm::zero(0);
    int k1 = -1;
    for (int k = 1; k <= d + 1; ++k) {
        auto basis = apolar_component(f, k);
        if (!basis.empty()) {
            r1 = basis.front();
            k1 = k;
            break;
        }
    }
    if (k1 < 0) throw std::logic_error("apolar_generators: no generator found");
    int k2 = d + 2 - k1;
    // r2: first kernel basis vector at degree k2 independent of r1 * R[u,v]_{k2-k1}.
    std::vector<VecQ> multiples;
    for (int j = 0; j <= k2 - k1; ++j) {
        BinaryForm mono = BinaryForm::monomial(k2 - k1, j, Rational(1));
        multiples.push_back(form_coeffs(mono * r1, k2));
    }
    for (const BinaryForm& cand : apolar_component(f, k2)) {
        if (!in_span(multiples, form_coeffs(cand, k2))) return {r1, cand};
    }
    throw std::logic_error("apolar_generators: structure theorem violated");
}

ApolarIdeal make_apolar_ideal(const BinaryForm& f) {
    ApolarIdeal ideal;
    ideal.f = f;
    auto [r1, r2] = apolar_generators(f);
    ideal.r1 = r1;
    ideal.r2 = r2;
    int d = f.degree();
    ideal.components.resize(static_cast<size_t>(d) + 1);
    for (int k = 0; k <= d; ++k) ideal.components[static_cast<size_t>(k)] = apolar_component(f, k);
    return ideal;
}

ComplexRankResult complex_rank(const BinaryForm& f) {
    if (f.is_zero()) throw std::invalid_argument("complex_rank: zero form");
    if (f.degree() < 1) throw std::invalid_argument("complex_rank: degree must be >= 1");
    auto [r1, r2] = apolar_generators(f);
    ComplexRankResult out;
    if (is_squarefree(r1)) {
        out.rank = r1.degree();
        out.witness = r1;
        return out;
    }
    // Sylvester's dichotomy: a non-reduced minimal generator forces the rank
    // to the complementary degree d + 2 - deg r1.
    int k = f.degree() + 2 - r1.degree();
    out.rank = k;
    // A squarefree witness exists in (f^perp)_k (any length-k decomposition
    // with distinct points provides one); search small kernel combinations.
    auto basis = apolar_component(f, k);
    for (long height = 1; height <= 8; ++height) {
        std::vector<long> idx(basis.size(), -height);
        while (true) {
            BinaryForm cand = BinaryForm::zero(k);
            for (size_t i = 0; i < basis.size(); ++i)
                cand = cand + Rational(idx[i]) * basis[i];
            if (!cand.is_zero() && is_squarefree(cand)) {
                out.witness = cand;
                return out;
            }
            size_t pos = 0;
            while (pos < idx.size() && idx[pos] == height) idx[pos++] = -height;
            if (pos == idx.size()) break;
            ++idx[pos];
        }
    }
    return out;  // rank is still correct; witness search exhausted (not expected)
}

BinaryForm Decomposition::reconstruct() const {
    BinaryForm acc = BinaryForm::zero(d);
    for (const auto& t : terms) acc = acc + t.c * BinaryForm::linear_power(t.l0, t.l1, d);
    return acc;
}

namespace {

Rational residual_default() {
    Rational r(1);
    for (int i = 0; i < 40; ++i) r = r / Rational(10);
    return r;
}

}  // namespace

DecompositionResult recover_decomposition(const BinaryForm& f, const BinaryForm& q) {
    return recover_decomposition(f, q, isolate_real_roots(q), residual_default());
}

DecompositionResult recover_decomposition(const BinaryForm& f, const BinaryForm& q,
                                          RootIsolation roots, const Rational& residual_target) {
    int d = f.degree(), k = q.degree();
    if (!apolar_apply(q, f).is_zero())
        throw std::invalid_argument("recover_decomposition: q is not apolar to f");
    if (!is_squarefree(q)) throw std::invalid_argument("recover_decomposition: q is not squarefree");
    if (roots.total_multiplicity() != k)
        throw std::invalid_argument("recover_decomposition: q has a non-real root");

    DecompositionResult out;
    out.apolar_witness = q;

    bool all_exact = true;
    for (auto& r : roots.roots) all_exact = r.try_snap_rational() && all_exact;

    // Root (s:t) of q corresponds to the linear form s x + t y.
    if (all_exact) {
        std::vector<std::pair<Rational, Rational>> lin;
        if (roots.infinity_multiplicity > 0) lin.emplace_back(Rational(1), Rational(0));
        for (const auto& r : roots.roots) lin.emplace_back(r.value, Rational(1));
        size_t n = lin.size();
        // Solve sum c_i (l_i)^d = f exactly: (d+1) x n system, consistent by
        // the Apolarity Lemma.
        MatQ m(static_cast<size_t>(d) + 1, VecQ(n + 1));
        for (size_t col = 0; col < n; ++col) {
            BinaryForm p = BinaryForm::linear_power(lin[col].first, lin[col].second, d);
            for (int row = 0; row <= d; ++row) m[static_cast<size_t>(row)][col] = p.coeff(row);
        }
        for (int row = 0; row <= d; ++row) m[static_cast<size_t>(row)][n] = f.coeff(row);
        std::vector<int> pivots = rref(m);
        VecQ c(n, Rational(0));
        for (size_t r = 0; r < pivots.size(); ++r) {
            if (pivots[r] == static_cast<int>(n))
                throw std::logic_error("recover_decomposition: inconsistent system");
            c[static_cast<size_t>(pivots[r])] = m[r][n];
        }
        Decomposition dec;
        dec.d = d;
        for (size_t i = 0; i < n; ++i)
            dec.terms.push_back({c[i], lin[i].first, lin[i].second});
        if (!(dec.reconstruct() == f))
            throw std::logic_error("recover_decomposition: exact reconstruction failed");
        out.exact = true;
        out.decomposition = std::move(dec);
        return out;
    }

    // Interval path: refine the root enclosures until the interval linear
    // system solves and the residual is certified below the target width.
    Rational width(1, 16);
    for (int attempt = 0; attempt < 200; ++attempt) {
        roots.refine_all(width);
        std::vector<std::pair<Interval, Interval>> lin;
        if (roots.infinity_multiplicity > 0) lin.emplace_back(Interval(Rational(1)), Interval(Rational(0)));
        for (const auto& r : roots.roots) lin.emplace_back(r.enclosure(), Interval(Rational(1)));
        size_t n = lin.size();

        // Columns of the system in the weighted (Hankel) coordinates:
        // a_m(l^d) = s^{d-m} t^m, a plain Vandermonde structure.
        std::vector<std::vector<Interval>> cols(n);
        for (size_t i = 0; i < n; ++i) {
            cols[i].resize(static_cast<size_t>(d) + 1);
            for (int mth = 0; mth <= d; ++mth)
                cols[i][static_cast<size_t>(mth)] =
                    ipow(lin[i].first, static_cast<unsigned>(d - mth)) * ipow(lin[i].second, static_cast<unsigned>(mth));
        }
        WeightedCoords w = to_weighted(f);

        // Square subsystem: rows d-n+1 .. d give a Vandermonde in the affine
        // roots (plus the infinity column which is supported on row 0), so
        // instead pick rows by midpoint-matrix pivoting.
        MatQ mid(static_cast<size_t>(d) + 1, VecQ(n));
        for (int row = 0; row <= d; ++row)
            for (size_t i = 0; i < n; ++i) mid[static_cast<size_t>(row)][i] = cols[i][static_cast<size_t>(row)].mid();
        // Greedy row selection via rref on the transpose.
        std::vector<size_t> chosen;
        {
            MatQ acc;
            for (int row = 0; row <= d && chosen.size() < n; ++row) {
                acc.push_back(mid[static_cast<size_t>(row)]);
                if (rank(acc) == static_cast<int>(acc.size())) chosen.push_back(static_cast<size_t>(row));
                else acc.pop_back();
            }
        }
        if (chosen.size() == n) {
            std::vector<std::vector<Interval>> sys(n, std::vector<Interval>(n));
            std::vector<Interval> rhs(n);
            for (size_t r = 0; r < n; ++r) {
                for (size_t i = 0; i < n; ++i) sys[r][i] = cols[i][chosen[r]];
                rhs[r] = Interval(w.a[chosen[r]]);
            }
            auto sol = interval_solve(sys, rhs);
            if (sol) {
                // Residual on all d+1 weighted coordinates.
                bool ok = true;
                Rational worst(0);
                for (int row = 0; row <= d && ok; ++row) {
                    Interval acc{-w.a[static_cast<size_t>(row)]};
                    for (size_t i = 0; i < n; ++i) acc = acc + (*sol)[i] * cols[i][static_cast<size_t>(row)];
                    ok = ok && acc.contains_zero() && acc.width() <= residual_target;
                    worst = max(worst, acc.width());
                }
                if (ok) {
                    IntervalDecomposition enc;
                    enc.d = d;
                    enc.residual_width = worst;
                    for (size_t i = 0; i < n; ++i) enc.terms.push_back({(*sol)[i], lin[i].first, lin[i].second});
                    out.exact = false;
                    out.enclosure = std::move(enc);
                    return out;
                }
            }
        }
        width = width * Rational(1, 4096);
    }
    throw std::runtime_error("recover_decomposition: interval certification did not converge");
}

}  // namespace realrank
