#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "realrank/real_rank.hpp"
#include "realrank/ternary_form.hpp"

namespace realrank {

/// (s x + t y)^d for a nonzero rational linear form: a point of the rational
/// normal curve in the binary-form identification.
BinaryForm veronese_power(const Rational& l0, const Rational& l1, int d);

/// A point of the projection of the rational normal curve from the center p:
/// the coset q + R p in P(R[x,y]_d / <p>).
struct PencilPoint {
    BinaryForm center;  // p
    BinaryForm rep;     // q, not proportional to p
};

/// Evidence record for the fiber minimization behind the projected rank.
struct ProjectedRealRank {
    int rank = 0;
    Rational argmin_t;
    bool pencil_hyperbolic_certificate = false;  // q interlaces p: entire fiber has rank d
    std::vector<Rational> evaluated_ts;          // rational candidates + gap samples
    int irrational_candidates = 0;               // rank drops at irrational t, flank-sampled
    bool rank_one_in_fiber = false;              // detected exactly (also at irrational t)
};

/// min over real t of real_rank(q + t p): exact real roots of the
/// catalecticant minor determinants are the candidate drop points, plus one
/// sample per gap. Rank-1 drops are detected exactly even at irrational t;
/// deeper drops at irrational t are flank-sampled and flagged.
ProjectedRealRank projected_real_rank(const PencilPoint& pt,
                                      const std::vector<Rational>& extra_ts = {});

struct ProjectedComplexRank {
    int rank = 0;       // exact when `exact`, else a certified upper bound
    bool exact = true;
    Rational argmin_t;
};

/// min over complex t of complex_rank(q + t p); drops live at roots of the
/// catalecticant minor gcds. Real roots are evaluated exactly; non-real ones
/// only lower the value, so the result is flagged as an upper bound.
ProjectedComplexRank projected_complex_rank(const PencilPoint& pt);

/// Join rank: max of the component ranks (0 means the point lies inside the
/// complementary factor).
int join_rank(int rx, int ry);

enum class GenericityFlag { generic, not_generic, undecided_odd_degree };

/// Middle-catalecticant nonsingularity test; decided only for even degree.
GenericityFlag is_generic_projection_center(const BinaryForm& p);

/// The explicit curve in P^3: X = V(x1 x3 - x2^2) cut by the cubic cone
/// S = V(x2^2 x0 - (x1^2 + x0^2)(x1 - x0)), with distinguished point
/// P = (1:0:0:0). The quadric is carried implicitly through its cone
/// parametrization (x1, x2, x3) = (s^2, s t, t^2).
struct SpaceCurveP3 {
    TernaryForm cubic;  // S(x0, x1, x2); x3 does not occur

    static SpaceCurveP3 standard();

    /// The x0-slice over a point of the base conic: S(x0, x1, x2) as a cubic
    /// polynomial in x0.
    UniPoly x0_slice(const Rational& x1, const Rational& x2) const;
};

/// Exact check of the sum-of-squares identity for the discriminant of the
/// x0-cubic, and that the discriminant of the defining cubic reproduces the
/// certified sextic. Returns false (with a diff in *diagnostics) on failure.
bool verify_sos_discriminant(std::string* diagnostics = nullptr);

struct MaxRankEvidence {
    int trials = 0;
    int max_real_intersections = 0;  // with multiplicity
    int resamples = 0;
    std::uint64_t seed = 0;
};

/// Samples random rational planes through P and counts real intersection
/// points with X exactly (with multiplicity). max <= codim(X) = 2 supports
/// rank(P) = 4. Statistical evidence only, never a proof.
MaxRankEvidence sample_max_rank_evidence(const SpaceCurveP3& curve, int trials,
                                         std::uint64_t seed);

/// For random real base points, the x0-cubic has exactly one real root (the
/// mechanism behind the 1-1 correspondence of real points under the
/// projection from P). Returns false as soon as a count differs from 1.
bool real_fiber_bijectivity_check(const SpaceCurveP3& curve, int samples, std::uint64_t seed);

/// Distinct real roots of the x0-slice at one base point (exposed for tests;
/// the (0,0) ray degenerates to x0^3 and reports 1).
int fiber_real_root_count(const SpaceCurveP3& curve, const Rational& x1, const Rational& x2);

}  // namespace realrank
