#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "realrank/binary_form.hpp"
#include "realrank/linalg.hpp"

namespace realrank {

/// Coordinates (a_0 : ... : a_d) with f = sum C(d,i) a_i x^{d-i} y^i. This is
/// the identification under which d-th powers of linear forms sweep out the
/// rational normal curve, and catalecticants are literal Hankel matrices.
struct WeightedCoords {
    int d = 0;
    VecQ a;
};

WeightedCoords to_weighted(const BinaryForm& f);
BinaryForm from_weighted(const WeightedCoords& w);

/// Hankel matrix of size (d-k+1) x (k+1) with entry (i, j) = a_{i+j}. Kernel
/// vectors, read as coefficient vectors of degree-k forms in the dual
/// variables (u, v) (plain basis, component j on u^{k-j} v^j), span (f^perp)_k.
struct Catalecticant {
    int k = 0;
    MatQ m;
};

Catalecticant catalecticant(const BinaryForm& f, int k);

/// g(dx, dy) applied to f; the dual pairing. Result degree d - k (zero form
/// when k > d).
BinaryForm apolar_apply(const BinaryForm& g, const BinaryForm& f);

/// Exact kernel basis of catalecticant(f, k); for k > d the full monomial
/// basis of the degree-k dual forms (everything annihilates f).
std::vector<BinaryForm> apolar_component(const BinaryForm& f, int k);

/// The two structure-theorem generators, deg r1 <= deg r2,
/// deg r1 + deg r2 = d + 2, no common projective root. Deterministic:
/// reduced-echelon kernel bases, first basis vector.
std::pair<BinaryForm, BinaryForm> apolar_generators(const BinaryForm& f);

/// Graded data of f^perp with eagerly built kernel bases (immutable after
/// construction, safe to share).
struct ApolarIdeal {
    BinaryForm f;
    BinaryForm r1, r2;
    std::vector<std::vector<BinaryForm>> components;  // index k, 0..d
};

ApolarIdeal make_apolar_ideal(const BinaryForm& f);

/// Sylvester / Comas-Seiguer: the complex Waring rank, with a squarefree
/// apolar witness when one exists at the rank degree.
struct ComplexRankResult {
    int rank = 0;
    std::optional<BinaryForm> witness;
};

ComplexRankResult complex_rank(const BinaryForm& f);

/// Exact decomposition f = sum c_i (l0_i x + l1_i y)^d.
struct Decomposition {
    struct Term {
        Rational c, l0, l1;
    };
    int d = 0;
    std::vector<Term> terms;

    BinaryForm reconstruct() const;
};

/// Interval enclosure of a decomposition whose linear forms have algebraic
/// (non-rational) coefficients, plus the achieved residual width bound.
struct IntervalDecomposition {
    struct Term {
        Interval c, l0, l1;
    };
    int d = 0;
    std::vector<Term> terms;
    Rational residual_width;
};

struct DecompositionResult {
    bool exact = false;
    Decomposition decomposition;          // when exact
    IntervalDecomposition enclosure;      // when !exact
    BinaryForm apolar_witness;
};

/// Apolarity-lemma recovery: q must lie in f^perp, be squarefree, and have
/// all roots real. Rational roots give an exact verified decomposition;
/// otherwise an interval certificate with residual width at most
/// `residual_target`.
DecompositionResult recover_decomposition(const BinaryForm& f, const BinaryForm& q,
                                          RootIsolation roots, const Rational& residual_target);
/// Isolates the roots of q itself and certifies at width 10^-40.
DecompositionResult recover_decomposition(const BinaryForm& f, const BinaryForm& q);

}  // namespace realrank
