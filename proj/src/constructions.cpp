#include "realrank/constructions.hpp"

#include <algorithm>
#include <stdexcept>

#include "realrank/rng.hpp"

namespace realrank {

BinaryForm veronese_power(const Rational& l0, const Rational& l1, int d) {
    if (l0.is_zero() && l1.is_zero()) throw std::invalid_argument("veronese_power: zero linear form");
    return BinaryForm::linear_power(l0, l1, d);
}

namespace {

bool proportional_forms(const BinaryForm& a, const BinaryForm& b) {
    MatQ m(2, VecQ(static_cast<size_t>(a.degree()) + 1));
    for (int i = 0; i <= a.degree(); ++i) {
        m[0][static_cast<size_t>(i)] = a.coeff(i);
        m[1][static_cast<size_t>(i)] = b.coeff(i);
    }
    return rank(m) <= 1;
}

MatQ cat_matrix(const BinaryForm& f, int k) { return catalecticant(f, k).m; }

void combinations(int n, int k, std::vector<std::vector<int>>& out) {
    std::vector<int> idx(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i) idx[static_cast<size_t>(i)] = i;
    while (true) {
        out.push_back(idx);
        int i = k - 1;
        while (i >= 0 && idx[static_cast<size_t>(i)] == n - k + i) --i;
        if (i < 0) break;
        ++idx[static_cast<size_t>(i)];
        for (int j = i + 1; j < k; ++j) idx[static_cast<size_t>(j)] = idx[static_cast<size_t>(j - 1)] + 1;
    }
}

/// det of the (rows x cols) submatrix of A + t B, exact, by interpolation.
UniPoly pencil_minor_det(const MatQ& A, const MatQ& B, const std::vector<int>& rows,
                         const std::vector<int>& cols) {
    int s = static_cast<int>(rows.size());
    std::vector<std::pair<Rational, Rational>> nodes;
    for (int node = 0; node <= s; ++node) {
        Rational t(node);
        MatQ m(static_cast<size_t>(s), VecQ(static_cast<size_t>(s)));
        for (int i = 0; i < s; ++i)
            for (int j = 0; j < s; ++j) {
                size_t r = static_cast<size_t>(rows[static_cast<size_t>(i)]);
                size_t c = static_cast<size_t>(cols[static_cast<size_t>(j)]);
                m[static_cast<size_t>(i)][static_cast<size_t>(j)] = A[r][c] + t * B[r][c];
            }
        nodes.emplace_back(t, determinant(std::move(m)));
    }
    return interpolate(nodes);
}

struct FiberCandidates {
    std::vector<Rational> rational_ts;
    // degree-k kernel drops at irrational t, as flank pairs
    std::vector<std::pair<Rational, Rational>> irrational_flanks;
    bool rank_one_at_real_t = false;
    Rational rank_one_t_lo, rank_one_t_hi;
};

/// Candidate t where some catalecticant of q + t p drops rank: real roots of
/// the maximal-minor determinants (per degree; their gcd gives the common
/// drop locus).
FiberCandidates fiber_candidates(const BinaryForm& q, const BinaryForm& p) {
    int d = q.degree();
    FiberCandidates out;
    for (int k = 1; k <= d - 1; ++k) {
        MatQ A = cat_matrix(q, k), B = cat_matrix(p, k);
        int nrows = static_cast<int>(A.size()), ncols = static_cast<int>(A[0].size());
        int s = std::min(nrows, ncols);
        std::vector<std::vector<int>> row_sets, col_sets;
        combinations(nrows, s, row_sets);
        combinations(ncols, s, col_sets);
        UniPoly common;  // gcd of the nonzero minors
        bool have_common = false;
        for (const auto& rs : row_sets)
            for (const auto& cs : col_sets) {
                UniPoly det = pencil_minor_det(A, B, rs, cs);
                if (det.is_zero()) continue;
                // Rational roots of individual minors are cheap, harmless
                // extra candidates.
                if (det.degree() >= 1) {
                    RootIsolation iso = isolate_real_roots(det);
                    for (auto& r : iso.roots)
                        if (r.try_snap_rational()) out.rational_ts.push_back(r.value);
                }
                common = have_common ? gcd(common, det) : det.monic();
                have_common = true;
            }
        if (!have_common || common.degree() < 1) continue;
        // Common real roots: the catalecticant rank genuinely drops there.
        RootIsolation iso = isolate_real_roots(common);
        for (auto& r : iso.roots) {
            if (r.try_snap_rational()) {
                out.rational_ts.push_back(r.value);
            } else {
                r.refine_to(Rational(1, 1024));
                if (k == 1) {
                    // Rank-1 Hankel at a real t: the fiber member is a real
                    // d-th power even though t is irrational.
                    out.rank_one_at_real_t = true;
                    out.rank_one_t_lo = r.lo;
                    out.rank_one_t_hi = r.hi;
                } else {
                    out.irrational_flanks.emplace_back(r.lo, r.hi);
                }
            }
        }
    }
    std::sort(out.rational_ts.begin(), out.rational_ts.end());
    out.rational_ts.erase(std::unique(out.rational_ts.begin(), out.rational_ts.end()),
                          out.rational_ts.end());
    return out;
}

}  // namespace

ProjectedRealRank projected_real_rank(const PencilPoint& pt, const std::vector<Rational>& extra_ts) {
    const BinaryForm& p = pt.center;
    const BinaryForm& q = pt.rep;
    if (p.is_zero() || q.is_zero()) throw std::invalid_argument("projected_real_rank: zero form");
    if (p.degree() != q.degree()) throw std::invalid_argument("projected_real_rank: degree mismatch");
    if (proportional_forms(p, q))
        throw std::invalid_argument("projected_real_rank: q proportional to p");
    int d = p.degree();

    ProjectedRealRank out;
    FiberCandidates cand = fiber_candidates(q, p);

    // Whole-fiber certificate: if q interlaces p, every member of the pencil
    // is hyperbolic, and none is a d-th power (a rank-1 drop would show up as
    // a real root of the degree-1 minor gcd), so the rank is d on the entire
    // real fiber.
    if (is_hyperbolic(p).hyperbolic && is_hyperbolic(q).hyperbolic && interlaces(q, p).interlaces) {
        bool rank1_possible = cand.rank_one_at_real_t;
        for (const Rational& t : cand.rational_ts)
            rank1_possible = rank1_possible || !apolar_component(q + t * p, 1).empty();
        if (!rank1_possible) {
            out.rank = d;
            out.argmin_t = Rational(0);
            out.pencil_hyperbolic_certificate = true;
            return out;
        }
    }
    std::vector<Rational> ts = cand.rational_ts;
    for (const auto& t : extra_ts) ts.push_back(t);
    // One generic sample per gap between consecutive candidates, plus a small
    // fixed net (the minimum is attained either at a drop point or on an open
    // interval, where any interior sample gives the interval's value).
    std::vector<Rational> sorted = cand.rational_ts;
    for (const auto& fl : cand.irrational_flanks) {
        sorted.push_back(fl.first);
        sorted.push_back(fl.second);
        ts.push_back(fl.first);
        ts.push_back(fl.second);
        ++out.irrational_candidates;
    }
    std::sort(sorted.begin(), sorted.end());
    if (sorted.empty()) {
        ts.push_back(Rational(0));
    } else {
        ts.push_back(sorted.front() - Rational(1));
        for (size_t i = 0; i + 1 < sorted.size(); ++i)
            ts.push_back((sorted[i] + sorted[i + 1]) / Rational(2));
        ts.push_back(sorted.back() + Rational(1));
    }
    for (long fixed : {-2, -1, 0, 1, 2}) ts.push_back(Rational(fixed));
    std::sort(ts.begin(), ts.end());
    ts.erase(std::unique(ts.begin(), ts.end()), ts.end());

    if (cand.rank_one_at_real_t) {
        out.rank = 1;
        out.rank_one_in_fiber = true;
        out.argmin_t = (cand.rank_one_t_lo + cand.rank_one_t_hi) / Rational(2);
        out.evaluated_ts = ts;
        return out;
    }

    int best = d + 1;
    Rational best_t(0);
    for (const Rational& t : ts) {
        BinaryForm member = q + t * p;
        if (member.is_zero()) continue;
        RankCertificate cert = real_rank(member);
        if (cert.rank < best) {
            best = cert.rank;
            best_t = t;
        }
    }
    out.rank = best;
    out.argmin_t = best_t;
    out.evaluated_ts = std::move(ts);
    return out;
}

ProjectedComplexRank projected_complex_rank(const PencilPoint& pt) {
    const BinaryForm& p = pt.center;
    const BinaryForm& q = pt.rep;
    if (p.is_zero() || q.is_zero()) throw std::invalid_argument("projected_complex_rank: zero form");
    if (p.degree() != q.degree())
        throw std::invalid_argument("projected_complex_rank: degree mismatch");
    if (proportional_forms(p, q))
        throw std::invalid_argument("projected_complex_rank: q proportional to p");
    int d = p.degree();

    FiberCandidates cand = fiber_candidates(q, p);
    std::vector<Rational> ts = cand.rational_ts;
    std::vector<Rational> sorted = ts;
    std::sort(sorted.begin(), sorted.end());
    if (sorted.empty()) {
        ts.push_back(Rational(0));
    } else {
        ts.push_back(sorted.front() - Rational(1));
        for (size_t i = 0; i + 1 < sorted.size(); ++i)
            ts.push_back((sorted[i] + sorted[i + 1]) / Rational(2));
        ts.push_back(sorted.back() + Rational(1));
    }
    for (long fixed : {-1, 0, 1}) ts.push_back(Rational(fixed));
    for (const auto& fl : cand.irrational_flanks) {
        ts.push_back(fl.first);
        ts.push_back(fl.second);
    }
    std::sort(ts.begin(), ts.end());
    ts.erase(std::unique(ts.begin(), ts.end()), ts.end());

    ProjectedComplexRank out;
    int best = d + 1;
    for (const Rational& t : ts) {
        BinaryForm member = q + t * p;
        if (member.is_zero()) continue;
        int rk = complex_rank(member).rank;
        if (rk < best) {
            best = rk;
            out.argmin_t = t;
        }
    }
    if (cand.rank_one_at_real_t && 1 < best) {
        best = 1;
        out.exact = true;  // rank-1 Hankel drop detected exactly
        out.argmin_t = (cand.rank_one_t_lo + cand.rank_one_t_hi) / Rational(2);
    }
    out.rank = best;
    // Drops at non-real (or non-evaluated algebraic) t can only lower the
    // value; flag the result as an upper bound when such candidates remain.
    if (!cand.irrational_flanks.empty()) out.exact = false;
    return out;
}

int join_rank(int rx, int ry) {
    if (rx < 0 || ry < 0) throw std::invalid_argument("join_rank: negative rank");
    if (rx == 0 && ry == 0) throw std::invalid_argument("join_rank: both components zero");
    return std::max(rx, ry);
}

GenericityFlag is_generic_projection_center(const BinaryForm& p) {
    if (p.is_zero()) throw std::invalid_argument("is_generic_projection_center: zero form");
    int d = p.degree();
    if (d % 2 == 1) return GenericityFlag::undecided_odd_degree;
    MatQ mid = cat_matrix(p, d / 2);
    return determinant(std::move(mid)) != Rational(0) ? GenericityFlag::generic
                                                      : GenericityFlag::not_generic;
}

SpaceCurveP3 SpaceCurveP3::standard() {
    // S = x2^2 x0 - (x1^2 + x0^2)(x1 - x0)
    TernaryForm x0 = TernaryForm::monomial(1, 0, 0, Rational(1));
    TernaryForm x1 = TernaryForm::monomial(1, 1, 0, Rational(1));
    TernaryForm x2 = TernaryForm::monomial(1, 0, 1, Rational(1));
    SpaceCurveP3 curve;
    curve.cubic = x2 * x2 * x0 - (x1 * x1 + x0 * x0) * (x1 - x0);
    return curve;
}

UniPoly SpaceCurveP3::x0_slice(const Rational& x1, const Rational& x2) const {
    int n = cubic.degree();
    std::vector<Rational> coeffs(static_cast<size_t>(n) + 1, Rational(0));
    for (int e1 = 0; e1 <= n; ++e1)
        for (int e2 = 0; e2 <= n - e1; ++e2) {
            const Rational& q = cubic.coeff(e1, e2);
            if (q.is_zero()) continue;
            coeffs[static_cast<size_t>(n - e1 - e2)] +=
                q * x1.pow(static_cast<unsigned>(e1)) * x2.pow(static_cast<unsigned>(e2));
        }
    return UniPoly(std::move(coeffs));
}

bool verify_sos_discriminant(std::string* diagnostics) {
    SpaceCurveP3 curve = SpaceCurveP3::standard();
    BinaryForm disc = discriminant_in_x0(curve.cubic);

    // -16 x1^6 + 8 x1^4 x2^2 - 11 x1^2 x2^4 - 4 x2^6
    BinaryForm printed(6, {Rational(-16), Rational(0), Rational(8), Rational(0), Rational(-11),
                           Rational(0), Rational(-4)});

    // -( (2 x2^3)^2 + 11 (x2^2 x1 - 4/11 x1^3)^2 + 160/11 x1^6 )
    BinaryForm a = BinaryForm::monomial(3, 3, Rational(2));
    BinaryForm b(3, {Rational(-4, 11), Rational(0), Rational(1), Rational(0)});
    BinaryForm sos = -(a * a + Rational(11) * (b * b) +
                       BinaryForm::monomial(6, 0, Rational(160, 11)));

    bool identity = printed == sos;
    bool matches_disc = disc == printed;
    if ((!identity || !matches_disc) && diagnostics) {
        *diagnostics = "sos - printed: " + (sos - printed).str() +
                       "; disc - printed: " + (disc - printed).str();
    }
    return identity && matches_disc;
}

int fiber_real_root_count(const SpaceCurveP3& curve, const Rational& x1, const Rational& x2) {
    UniPoly slice = curve.x0_slice(x1, x2);
    if (slice.is_zero()) throw std::domain_error("fiber_real_root_count: zero slice");
    if (slice.degree() < 1) return 0;
    return sturm_count(slice);
}

bool real_fiber_bijectivity_check(const SpaceCurveP3& curve, int samples, std::uint64_t seed) {
    if (samples < 1) throw std::invalid_argument("real_fiber_bijectivity_check: samples must be >= 1");
    for (int i = 0; i < samples; ++i) {
        SplitMix64 rng = SplitMix64::stream(seed, static_cast<std::uint64_t>(i));
        Rational x1(rng.nonzero_int(1000));  // x1 != 0 keeps x3 = x2^2/x1 real
        Rational x2(rng.int_in(-1000, 1000));
        if (fiber_real_root_count(curve, x1, x2) != 1) return false;
    }
    return true;
}

MaxRankEvidence sample_max_rank_evidence(const SpaceCurveP3& curve, int trials, std::uint64_t seed) {
    if (trials < 1) throw std::invalid_argument("sample_max_rank_evidence: trials must be >= 1");
    MaxRankEvidence ev;
    ev.trials = trials;
    ev.seed = seed;
    for (int trial = 0; trial < trials; ++trial) {
        SplitMix64 rng = SplitMix64::stream(seed, static_cast<std::uint64_t>(trial));
        // Plane through P = (1:0:0:0): b x1 + c x2 + e x3 = 0. Planes through
        // (0:0:0:1) (e = 0) are excluded from the lattice draw: that point
        // carries two non-real local branches of X, so the scheme-length
        // multiplicity there over-counts the real picture (set-theoretically
        // the bound still holds).
        long b = rng.int_in(-50, 50), c = rng.int_in(-50, 50), e = rng.nonzero_int(50);
        BinaryForm conic(2, {Rational(b), Rational(c), Rational(e)});  // b s^2 + c st + e t^2
        if (conic.is_zero()) {
            ++ev.resamples;
            --trial;
            continue;
        }
        // Plane cap cone = rulings with multiplicity; each real ruling meets
        // X in exactly one real point (single simple real x0 root: the
        // discriminant of the x0-cubic is negative by the certified SOS
        // identity, since x1 = s^2 > 0 on these rulings).
        RootIsolation iso = isolate_real_roots(conic);
        int count = 0;
        for (const auto& r : iso.roots) {
            count += r.multiplicity;
            // Exact spot check when the ruling is rational.
            IsolatedRoot root = r;
            if (root.try_snap_rational(2)) {
                Rational tau = root.value;
                int roots_x0 = fiber_real_root_count(curve, tau * tau, tau);
                if (roots_x0 != 1) count += 1000;  // cannot happen; poison the max
            }
        }
        if (iso.infinity_multiplicity > 0) {
            // ruling (s:t) = (1:0): base point (x1, x2) = (1, 0)
            int roots_x0 = fiber_real_root_count(curve, Rational(1), Rational(0));
            count += iso.infinity_multiplicity * roots_x0;
        }
        ev.max_real_intersections = std::max(ev.max_real_intersections, count);
    }
    return ev;
}

}  // namespace realrank
