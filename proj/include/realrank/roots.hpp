#pragma once

#include <optional>
#include <vector>

#include "realrank/interval.hpp"
#include "realrank/unipoly.hpp"

namespace realrank {

/// Canonical Sturm chain: p, p', then negated remainders, each scaled to a
/// primitive integer representative (positive scaling preserves all signs).
/// Counts DISTINCT real roots, also for non-squarefree p.
class SturmChain {
public:
    explicit SturmChain(const UniPoly& p);

    int variations_at(const Rational& x) const;
    int variations_at_neg_inf() const;
    int variations_at_pos_inf() const;

    /// Distinct real roots in the open interval (a, b); requires p(a), p(b) != 0.
    int count_open(const Rational& a, const Rational& b) const;
    int count_full_line() const;

    const std::vector<UniPoly>& chain() const { return seq_; }

private:
    std::vector<UniPoly> seq_;
};

/// Distinct real roots of p in the closed interval [a, b] (roots at the
/// endpoints are counted). Throws on the zero polynomial.
int sturm_count(const UniPoly& p, const Rational& a, const Rational& b);
/// Distinct real roots on the whole line.
int sturm_count(const UniPoly& p);

/// One real root of a squarefree polynomial: either an exact rational point
/// or an open interval (lo, hi) on which `factor` changes sign exactly once.
struct IsolatedRoot {
    bool exact = false;
    Rational value;
    Rational lo, hi;
    int multiplicity = 1;
    UniPoly factor;  // monic squarefree factor owning this root

    Interval enclosure() const { return exact ? Interval(value) : Interval(lo, hi); }
    Rational approx() const { return exact ? value : (lo + hi) / Rational(2); }
    Rational width() const { return exact ? Rational(0) : hi - lo; }

    /// Bisects until the enclosure width is at most w (exact roots are fixed
    /// points). May collapse to an exact root when a bisection point hits it.
    void refine_to(const Rational& w);

    /// Tries to identify the root as an exact rational: refines and tests the
    /// simplest rational in the enclosure. Converts to exact on success.
    bool try_snap_rational(int max_refinements = 6);
};

/// All real roots with multiplicities; `infinity_multiplicity` is used by the
/// binary-form wrapper for the projective root (1:0), zero for affine input.
struct RootIsolation {
    std::vector<IsolatedRoot> roots;  // sorted increasing, pairwise disjoint enclosures
    int infinity_multiplicity = 0;

    int total_multiplicity() const {
        int s = infinity_multiplicity;
        for (const auto& r : roots) s += r.multiplicity;
        return s;
    }
    int distinct_count() const {
        return static_cast<int>(roots.size()) + (infinity_multiplicity > 0 ? 1 : 0);
    }
    /// Refine all enclosures to width at most w, keeping them pairwise disjoint.
    void refine_all(const Rational& w);
};

/// Squarefree decomposition + Sturm bisection. Throws on zero input.
RootIsolation isolate_real_roots(const UniPoly& p);

/// Roots of a squarefree polynomial only (internal building block).
std::vector<IsolatedRoot> isolate_squarefree(const UniPoly& q);

}  // namespace realrank
