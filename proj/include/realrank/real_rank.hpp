#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "realrank/apolarity.hpp"
#include "realrank/binary_form.hpp"

namespace realrank {

/// Raised when a certified search hits its depth/budget cap without reaching
/// a conclusive answer. Callers surface this as an explicit failure (CLI exit
/// code 4), never as a silent guess.
struct inconclusive_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct HyperbolicityResult {
    bool hyperbolic = false;
    RootIsolation roots;  // real projective roots with multiplicities
};

/// All d roots real (counted with multiplicity, including (1:0)).
HyperbolicityResult is_hyperbolic(const BinaryForm& f);

struct InterlacingReport {
    bool interlaces = false;
    bool degenerate = false;      // reduced pair constant (f, g proportional)
    BinaryForm common_factor;     // gcd(f, g), monic-normalized
    /// Reduced-pair root labels in circular order on P^1(R): 0 for a root of
    /// the reduced f, 1 for a root of the reduced g. Empty when not computed
    /// (non-hyperbolic or repeated-root reduced parts).
    std::vector<int> circular_order;
};

/// Strict circular alternation of the reduced root sets (common factor
/// removed first). Degenerate pairs (constant quotients) interlace by
/// convention, matching the pencil characterization.
InterlacingReport interlaces(const BinaryForm& f, const BinaryForm& g);

/// Prop.-style pencil test: alpha f + beta g hyperbolic for all real
/// (alpha, beta). Implemented as the interlacing equivalence.
bool pencil_hyperbolic(const BinaryForm& f, const BinaryForm& g);

/// Randomized direct pencil probe used by property tests: samples pencil
/// members and hands back a non-hyperbolic witness when one is found.
struct PencilProbe {
    bool all_hyperbolic = true;
    std::optional<std::pair<Rational, Rational>> counterexample;
};
PencilProbe probe_pencil_hyperbolic(const BinaryForm& f, const BinaryForm& g, int samples,
                                    std::uint64_t seed);

/// Both partials hyperbolic and interlacing; equals is_hyperbolic(f) for
/// degree >= 3. Throws below degree 3.
bool all_directional_derivatives_hyperbolic(const BinaryForm& f);

enum class SearchStatus { witness, empty, inconclusive };

/// Search of (f^perp)_k for an element with k distinct real projective roots.
/// dim <= 2 kernels are decided exactly (pencil discriminant analysis);
/// larger kernels run a certified subdivision with a Descartes-type interval
/// bound discarding cells that provably keep a complex pair.
struct KernelSearch {
    SearchStatus status = SearchStatus::empty;
    std::optional<BinaryForm> witness;
    int dim = 0;
    int cells_examined = 0;
};
KernelSearch search_all_real_distinct(const std::vector<BinaryForm>& basis, int k,
                                      int depth_cap = 20);

enum class WitnessKind { decomposition, hyperbolicity, exhaustion };

struct RankCertificate {
    int rank = 0;
    WitnessKind kind = WitnessKind::exhaustion;
    std::optional<DecompositionResult> decomposition;  // kind == decomposition
    RootIsolation hyperbolic_roots;                    // kind == hyperbolicity
    std::optional<BinaryForm> witness_form;            // apolar element at the rank degree

    struct DegreeEvidence {
        int k = 0;
        int dim = 0;
        SearchStatus status = SearchStatus::empty;
    };
    std::vector<DegreeEvidence> searched;  // evidence for every degree below rank
};

/// Real Waring rank with certificate. Fast path: hyperbolic non-d-th-powers
/// have rank d. Otherwise the smallest k with an all-real distinct-rooted
/// element of (f^perp)_k, which exists at k <= d-1 for non-hyperbolic forms.
RankCertificate real_rank(const BinaryForm& f);

/// Normal-form test behind the degree-(d-1) apolarity lemma: h equals a
/// single d-1st power, a binomial a l0^{d-1} + b l1^{d-1}, or neither.
struct LemmaShapeResult {
    enum class Kind { monomial, binomial, not_shape };
    Kind kind = Kind::not_shape;
    BinaryForm r1;
    std::optional<DecompositionResult> data;  // recovered (a, b, l) when in family
};
LemmaShapeResult check_lemma_apolar_shape(const BinaryForm& h);

}  // namespace realrank
