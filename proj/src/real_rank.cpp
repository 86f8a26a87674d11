#include "realrank/real_rank.hpp"

#include <algorithm>
#include <deque>

#include "realrank/rng.hpp"

namespace realrank {

HyperbolicityResult is_hyperbolic(const BinaryForm& f) {
    if (f.is_zero()) throw std::invalid_argument("is_hyperbolic: zero form");
    HyperbolicityResult res;
    res.roots = isolate_real_roots(f);
    res.hyperbolic = res.roots.total_multiplicity() == f.degree();
    return res;
}

namespace {

/// Is every projective root real and simple? (k distinct roots for degree k)
bool all_real_distinct(const BinaryForm& q) {
    if (q.is_zero()) return false;
    if (q.degree() == 0) return false;
    return distinct_real_projective_roots(q) == q.degree();
}

struct CircularRoot {
    int label;  // 0 = first form, 1 = second form
    bool at_infinity;
    IsolatedRoot root;  // affine roots only
};

}  // namespace

InterlacingReport interlaces(const BinaryForm& f, const BinaryForm& g) {
    if (f.degree() != g.degree()) throw std::invalid_argument("interlaces: degree mismatch");
    if (f.is_zero() || g.is_zero()) throw std::invalid_argument("interlaces: zero form");
    InterlacingReport rep;
    rep.common_factor = gcd(f, g);
    BinaryForm fr = divide_exact(f, rep.common_factor);
    BinaryForm gr = divide_exact(g, rep.common_factor);
    int r = fr.degree();
    if (r == 0) {
        rep.degenerate = true;
        rep.interlaces = true;  // the pencil is {f} up to scale
        return rep;
    }
    // The reduced parts must be hyperbolic with simple roots; a repeated root
    // in one of them (never shared with the other) breaks pencil
    // hyperbolicity under perturbation.
    RootIsolation fiso = isolate_real_roots(fr);
    RootIsolation giso = isolate_real_roots(gr);
    if (fiso.total_multiplicity() != r || giso.total_multiplicity() != r) return rep;
    if (static_cast<int>(fiso.roots.size()) + (fiso.infinity_multiplicity > 0 ? 1 : 0) != r) return rep;
    if (static_cast<int>(giso.roots.size()) + (giso.infinity_multiplicity > 0 ? 1 : 0) != r) return rep;
    if (fiso.infinity_multiplicity > 0 && giso.infinity_multiplicity > 0) return rep;  // common root

    // Refine all affine enclosures until pairwise disjoint across both sets;
    // the root sets are disjoint, so this terminates.
    bool again = true;
    Rational w(1, 16);
    while (again) {
        again = false;
        for (auto* iso : {&fiso, &giso}) iso->refine_all(w);
        for (const auto& a : fiso.roots)
            for (const auto& b : giso.roots)
                if (!a.enclosure().disjoint_from(b.enclosure())) again = true;
        w = w * Rational(1, 1024);
    }

    std::vector<CircularRoot> circle;
    for (const auto& rt : fiso.roots) circle.push_back({0, false, rt});
    for (const auto& rt : giso.roots) circle.push_back({1, false, rt});
    std::sort(circle.begin(), circle.end(), [](const CircularRoot& a, const CircularRoot& b) {
        return a.root.approx() < b.root.approx();
    });
    if (fiso.infinity_multiplicity > 0) circle.push_back({0, true, {}});
    if (giso.infinity_multiplicity > 0) circle.push_back({1, true, {}});

    rep.circular_order.clear();
    for (const auto& c : circle) rep.circular_order.push_back(c.label);
    bool alternating = true;
    for (size_t i = 0; i < circle.size(); ++i)
        alternating = alternating && circle[i].label != circle[(i + 1) % circle.size()].label;
    rep.interlaces = alternating;
    return rep;
}

bool pencil_hyperbolic(const BinaryForm& f, const BinaryForm& g) {
    return interlaces(f, g).interlaces;
}

PencilProbe probe_pencil_hyperbolic(const BinaryForm& f, const BinaryForm& g, int samples,
                                    std::uint64_t seed) {
    PencilProbe probe;
    for (int i = 0; i < samples; ++i) {
        SplitMix64 rng = SplitMix64::stream(seed, static_cast<std::uint64_t>(i));
        Rational a(rng.int_in(-999, 999)), b(rng.int_in(-999, 999));
        BinaryForm h = a * f + b * g;
        if (h.is_zero()) continue;
        if (!is_hyperbolic(h).hyperbolic) {
            probe.all_hyperbolic = false;
            probe.counterexample = std::make_pair(a, b);
            return probe;
        }
    }
    return probe;
}

bool all_directional_derivatives_hyperbolic(const BinaryForm& f) {
    if (f.degree() < 3)
        throw std::invalid_argument("all_directional_derivatives_hyperbolic: degree must be >= 3");
    BinaryForm fx = f.derivative_x(), fy = f.derivative_y();
    if (fx.is_zero()) return is_hyperbolic(fy).hyperbolic;
    if (fy.is_zero()) return is_hyperbolic(fx).hyperbolic;
    if (!is_hyperbolic(fx).hyperbolic || !is_hyperbolic(fy).hyperbolic) return false;
    // The directional derivatives are exactly the pencil spanned by the two
    // partials, so one interlacing check decides the universal statement.
    return interlaces(fx, fy).interlaces;
}

namespace {

/// Pencil q1 + m q2: exact decision whether some member (including q2 at
/// m = infinity) has all roots real and distinct. The discriminant of the
/// pencil member is a polynomial in m; between consecutive real roots the
/// projective root configuration is constant.
std::optional<BinaryForm> pencil_witness(const BinaryForm& q1, const BinaryForm& q2) {
    if (all_real_distinct(q2)) return q2;
    int k = q1.degree();
    std::vector<std::pair<Rational, Rational>> nodes;
    for (int i = 0; i <= 2 * k - 2; ++i) {
        Rational m(i);
        nodes.emplace_back(m, form_discriminant(q1 + m * q2));
    }
    UniPoly disc = interpolate(nodes);
    auto test = [&](const Rational& m) -> std::optional<BinaryForm> {
        BinaryForm cand = q1 + m * q2;
        if (all_real_distinct(cand)) return cand;
        return std::nullopt;
    };
    if (disc.is_zero()) return std::nullopt;  // every member has a repeated root
    std::vector<Rational> samples;
    if (disc.degree() < 1) {
        samples.push_back(Rational(0));
    } else {
        RootIsolation iso = isolate_real_roots(disc);
        iso.refine_all(Rational(1, 4));
        if (iso.roots.empty()) {
            samples.push_back(Rational(0));
        } else {
            samples.push_back(iso.roots.front().enclosure().lo - Rational(1));
            for (size_t i = 0; i + 1 < iso.roots.size(); ++i)
                samples.push_back((iso.roots[i].enclosure().hi + iso.roots[i + 1].enclosure().lo) /
                                  Rational(2));
            samples.push_back(iso.roots.back().enclosure().hi + Rational(1));
        }
    }
    for (const Rational& m : samples)
        if (auto w = test(m)) return w;
    // Members at discriminant roots have repeated roots and cannot witness.
    return std::nullopt;
}

/// Maximum Descartes sign variations over all sign resolutions of the
/// interval coefficients; a bound valid for every member of the box.
/// With negate_odd, bounds the variations of p(-t) instead.
int max_variations(const std::vector<Interval>& coeffs, bool negate_odd) {
    constexpr int kNegInf = -1000000;
    // DP over the last committed nonzero sign: none / minus / plus.
    int none = 0, minus = kNegInf, plus = kNegInf;
    for (size_t j = 0; j < coeffs.size(); ++j) {
        Interval iv = coeffs[j];
        if (negate_odd && (j % 2 == 1)) iv = -iv;
        IntervalSign s = iv.sign();
        bool can_pos = s == IntervalSign::positive || s == IntervalSign::mixed;
        bool can_neg = s == IntervalSign::negative || s == IntervalSign::mixed;
        bool can_zero = s == IntervalSign::zero || s == IntervalSign::mixed;
        int n_none = kNegInf, n_minus = kNegInf, n_plus = kNegInf;
        if (can_zero) {
            n_none = none;
            n_minus = minus;
            n_plus = plus;
        }
        if (can_pos) n_plus = std::max({n_plus, plus, none, minus == kNegInf ? kNegInf : minus + 1});
        if (can_neg) n_minus = std::max({n_minus, minus, none, plus == kNegInf ? kNegInf : plus + 1});
        none = n_none;
        minus = n_minus;
        plus = n_plus;
    }
    return std::max({none, minus, plus, 0});
}

}  // namespace

KernelSearch search_all_real_distinct(const std::vector<BinaryForm>& basis, int k, int depth_cap) {
    KernelSearch out;
    out.dim = static_cast<int>(basis.size());
    if (basis.empty()) {
        out.status = SearchStatus::empty;
        return out;
    }
    if (basis.size() == 1) {
        if (all_real_distinct(basis[0])) {
            out.status = SearchStatus::witness;
            out.witness = basis[0];
        } else {
            out.status = SearchStatus::empty;
        }
        return out;
    }
    if (basis.size() == 2) {
        if (auto w = pencil_witness(basis[0], basis[1])) {
            out.status = SearchStatus::witness;
            out.witness = *w;
        } else {
            out.status = SearchStatus::empty;
        }
        return out;
    }

    // dim >= 3: subdivision over the charts c_i = 1, |c_j| <= 1 of P^{dim-1}.
    size_t dim = basis.size();
    bool any_inconclusive = false;
    struct Cell {
        std::vector<Interval> box;
        int depth;
    };
    auto form_from_params = [&](const std::vector<Rational>& c) {
        BinaryForm acc = BinaryForm::zero(k);
        for (size_t i = 0; i < dim; ++i) acc = acc + c[i] * basis[i];
        return acc;
    };
    auto coeff_intervals = [&](const std::vector<Interval>& box) {
        std::vector<Interval> c(static_cast<size_t>(k) + 1, Interval(Rational(0)));
        for (size_t i = 0; i < dim; ++i)
            for (int j = 0; j <= k; ++j)
                c[static_cast<size_t>(j)] = c[static_cast<size_t>(j)] + box[i] * Interval(basis[i].coeff(j));
        return c;
    };

    for (size_t chart = 0; chart < dim && out.status != SearchStatus::witness; ++chart) {
        std::deque<Cell> work;
        Cell root;
        root.depth = 0;
        root.box.assign(dim, Interval(Rational(-1), Rational(1)));
        root.box[chart] = Interval(Rational(1));
        work.push_back(std::move(root));
        while (!work.empty()) {
            Cell cell = std::move(work.front());
            work.pop_front();
            ++out.cells_examined;
            if (out.cells_examined > 500000) {
                any_inconclusive = true;
                break;
            }
            // Witness probe at the cell center.
            std::vector<Rational> center(dim);
            for (size_t i = 0; i < dim; ++i) center[i] = cell.box[i].mid();
            BinaryForm probe = form_from_params(center);
            if (!probe.is_zero() && all_real_distinct(probe)) {
                out.status = SearchStatus::witness;
                out.witness = probe;
                break;
            }
            // Discard test: Descartes-type bound on distinct projective roots
            // valid for every member over the cell.
            std::vector<Interval> fc = coeff_intervals(cell.box);
            std::vector<Interval> tau(static_cast<size_t>(k) + 1);
            for (int j = 0; j <= k; ++j) tau[static_cast<size_t>(j)] = fc[static_cast<size_t>(k - j)];
            int vpos = max_variations(tau, false);
            int vneg = max_variations(tau, true);
            int bound = vpos + vneg + (tau[0].contains_zero() ? 1 : 0) +
                        (tau[static_cast<size_t>(k)].contains_zero() ? 1 : 0);
            if (bound < k) continue;  // no member can have k distinct real roots
            if (cell.depth >= depth_cap) {
                any_inconclusive = true;
                continue;
            }
            // Split the widest non-chart coordinate.
            size_t widest = chart == 0 ? 1 : 0;
            for (size_t i = 0; i < dim; ++i)
                if (i != chart && cell.box[i].width() > cell.box[widest].width()) widest = i;
            Rational mid = cell.box[widest].mid();
            Cell left = cell, right = cell;
            left.depth = right.depth = cell.depth + 1;
            left.box[widest] = Interval(cell.box[widest].lo, mid);
            right.box[widest] = Interval(mid, cell.box[widest].hi);
            work.push_back(std::move(left));
            work.push_back(std::move(right));
        }
    }
    if (out.status != SearchStatus::witness)
        out.status = any_inconclusive ? SearchStatus::inconclusive : SearchStatus::empty;
    return out;
}

RankCertificate real_rank(const BinaryForm& f) {
    if (f.is_zero()) throw std::invalid_argument("real_rank: zero form");
    int d = f.degree();
    if (d < 1) throw std::invalid_argument("real_rank: degree must be >= 1");

    RankCertificate cert;

    // Rank 1 first: d-th powers are hyperbolic but have rank 1.
    auto comp1 = apolar_component(f, 1);
    cert.searched.push_back({1, static_cast<int>(comp1.size()),
                             comp1.empty() ? SearchStatus::empty : SearchStatus::witness});
    if (!comp1.empty()) {
        cert.rank = 1;
        cert.kind = WitnessKind::decomposition;
        cert.witness_form = comp1.front();
        cert.decomposition = recover_decomposition(f, comp1.front());
        return cert;
    }

    HyperbolicityResult hyp = is_hyperbolic(f);
    if (hyp.hyperbolic && d >= 3) {
        // Hyperbolic non-powers have maximal rank d.
        cert.rank = d;
        cert.kind = WitnessKind::hyperbolicity;
        cert.hyperbolic_roots = hyp.roots;
        return cert;
    }

    // Non-hyperbolic forms of degree >= 3 have rank at most d-1; the final
    // k = d round only runs for d = 2 (where rank 2 is witnessed directly).
    for (int k = 2; k <= d; ++k) {
        auto basis = apolar_component(f, k);
        KernelSearch search = search_all_real_distinct(basis, k);
        cert.searched.push_back({k, search.dim, search.status});
        if (search.status == SearchStatus::witness) {
            cert.rank = k;
            cert.kind = WitnessKind::decomposition;
            cert.witness_form = search.witness;
            cert.decomposition = recover_decomposition(f, *search.witness);
            return cert;
        }
        if (search.status == SearchStatus::inconclusive)
            throw inconclusive_error("real_rank: kernel search inconclusive at degree " +
                                     std::to_string(k));
    }
    throw std::logic_error("real_rank: exhausted all degrees without a witness");
}

LemmaShapeResult check_lemma_apolar_shape(const BinaryForm& h) {
    if (h.is_zero()) throw std::invalid_argument("check_lemma_apolar_shape: zero form");
    if (h.degree() < 2)
        throw std::invalid_argument("check_lemma_apolar_shape: degree must be >= 2");
    LemmaShapeResult out;
    auto [r1, r2] = apolar_generators(h);
    out.r1 = r1;
    if (r1.degree() == 1) {
        out.kind = LemmaShapeResult::Kind::monomial;
        out.data = recover_decomposition(h, r1);
        return out;
    }
    if (r1.degree() == 2 && distinct_real_projective_roots(r1) == 2) {
        out.kind = LemmaShapeResult::Kind::binomial;
        out.data = recover_decomposition(h, r1);
        return out;
    }
    out.kind = LemmaShapeResult::Kind::not_shape;
    return out;
}

}  // namespace realrank
