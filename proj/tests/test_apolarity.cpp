#include <doctest.h>

#include "realrank/apolarity.hpp"
#include "realrank/rng.hpp"

using namespace realrank;

namespace {

Rational Q(long n, long d = 1) { return Rational(n, d); }

BinaryForm form(int d, std::initializer_list<long> coeffs) {
    std::vector<Rational> c;
    for (long v : coeffs) c.emplace_back(v);
    return BinaryForm(d, std::move(c));
}

BinaryForm random_form(SplitMix64& rng, int d, long lattice = 9) {
    std::vector<Rational> c(static_cast<size_t>(d) + 1);
    bool nonzero = false;
    for (auto& q : c) {
        q = rng.lattice_rational(lattice);
        nonzero = nonzero || !q.is_zero();
    }
    if (!nonzero) c[0] = Rational(1);
    return BinaryForm(d, std::move(c));
}

bool proportional(const BinaryForm& a, const BinaryForm& b) {
    if (a.degree() != b.degree()) return false;
    int lead = -1;
    for (int i = 0; i <= a.degree(); ++i)
        if (!a.coeff(i).is_zero() || !b.coeff(i).is_zero()) {
            lead = i;
            break;
        }
    if (lead < 0) return true;
    if (a.coeff(lead).is_zero() || b.coeff(lead).is_zero()) return false;
    Rational s = b.coeff(lead) / a.coeff(lead);
    return s * a == b;
}

}  // namespace

TEST_CASE("weighted coordinates round trip") {
    BinaryForm x3 = form(3, {1, 0, 0, 0});
    CHECK(to_weighted(x3).a == VecQ{Q(1), Q(0), Q(0), Q(0)});

    BinaryForm cube = form(3, {1, 3, 3, 1});  // (x+y)^3
    CHECK(to_weighted(cube).a == VecQ{Q(1), Q(1), Q(1), Q(1)});

    BinaryForm m = form(3, {0, 3, 0, 0});  // 3 x^2 y
    CHECK(to_weighted(m).a == VecQ{Q(0), Q(1), Q(0), Q(0)});

    SplitMix64 rng(5);
    for (int i = 0; i < 50; ++i) {
        BinaryForm f = random_form(rng, 2 + static_cast<int>(rng.int_in(0, 6)));
        CHECK(from_weighted(to_weighted(f)) == f);
    }
}

TEST_CASE("catalecticant structure and kernels") {
    BinaryForm x3 = form(3, {1, 0, 0, 0});
    Catalecticant c1 = catalecticant(x3, 1);
    REQUIRE(c1.m.size() == 3);
    CHECK(c1.m[0] == VecQ{Q(1), Q(0)});
    CHECK(c1.m[1] == VecQ{Q(0), Q(0)});
    CHECK(c1.m[2] == VecQ{Q(0), Q(0)});
    auto comp1 = apolar_component(x3, 1);
    REQUIRE(comp1.size() == 1);
    CHECK(proportional(comp1[0], form(1, {0, 1})));  // the dual variable v

    // x^3 + y^3: kernel of Cat_2 contains u*v
    BinaryForm f = form(3, {1, 0, 0, 1});
    auto comp2 = apolar_component(f, 2);
    REQUIRE(comp2.size() == 1);
    CHECK(proportional(comp2[0], form(2, {0, 1, 0})));
    CHECK(apolar_apply(comp2[0], f).is_zero());

    CHECK_THROWS(catalecticant(f, 5));
    CHECK_THROWS(catalecticant(f, -1));
}

TEST_CASE("middle catalecticant of a generic even form is nonsingular") {
    SplitMix64 rng(31);
    for (int trial = 0; trial < 25; ++trial) {
        int d = 4 + 2 * static_cast<int>(rng.int_in(0, 2));
        BinaryForm f = random_form(rng, d);
        Catalecticant mid = catalecticant(f, d / 2);
        REQUIRE(mid.m.size() == mid.m[0].size());
        CHECK(determinant(mid.m) != Q(0));
    }
}

TEST_CASE("apolar component dimensions") {
    SplitMix64 rng(17);
    for (int trial = 0; trial < 40; ++trial) {
        int d = 2 + static_cast<int>(rng.int_in(0, 5));
        BinaryForm f = random_form(rng, d);
        for (int k = 0; k <= d; ++k) {
            Catalecticant cat = catalecticant(f, k);
            int rk = rank(cat.m);
            auto basis = apolar_component(f, k);
            CHECK(static_cast<int>(basis.size()) == std::max(0, k + 1 - rk));
            for (const auto& g : basis) CHECK(apolar_apply(g, f).is_zero());
        }
    }
    // x^d has a 1-dimensional degree-1 component
    BinaryForm xd = form(5, {1, 0, 0, 0, 0, 0});
    CHECK(apolar_component(xd, 1).size() == 1);
    // y^{d-1}: the annihilator of degree 1 is u
    BinaryForm yd = form(4, {0, 0, 0, 0, 1});
    auto comp = apolar_component(yd, 1);
    REQUIRE(comp.size() == 1);
    CHECK(proportional(comp[0], form(1, {1, 0})));
}

TEST_CASE("apolar generators: powers and the worked example") {
    BinaryForm x5 = form(5, {1, 0, 0, 0, 0, 0});
    auto [r1, r2] = apolar_generators(x5);
    CHECK(r1.degree() == 1);
    CHECK(r2.degree() == 6);

    // f = x y^4 + (x+y)^5: minimal generator u^2 (u - v) of degree 3.
    BinaryForm f = form(5, {0, 0, 0, 0, 1, 0}) + BinaryForm::linear_power(Q(1), Q(1), 5);
    auto [g1, g2] = apolar_generators(f);
    CHECK(g1.degree() == 3);
    CHECK(g2.degree() == 4);
    CHECK(proportional(g1, form(3, {1, -1, 0, 0})));  // u^3 - u^2 v
    CHECK(apolar_apply(g1, f).is_zero());
    CHECK(apolar_apply(g2, f).is_zero());
}

TEST_CASE("generic even-degree generators split evenly") {
    SplitMix64 rng(23);
    for (int trial = 0; trial < 20; ++trial) {
        int d = 4 + 2 * static_cast<int>(rng.int_in(0, 1));
        BinaryForm f = random_form(rng, d);
        auto [r1, r2] = apolar_generators(f);
        CHECK(r1.degree() == d / 2 + 1);
        CHECK(r2.degree() == d / 2 + 1);
    }
}

TEST_CASE("structure theorem invariants on random forms") {
    SplitMix64 rng(20240811);
    for (int trial = 0; trial < 500; ++trial) {
        int d = 2 + static_cast<int>(rng.int_in(0, 6));
        BinaryForm f = random_form(rng, d);
        auto [r1, r2] = apolar_generators(f);
        CHECK(r1.degree() + r2.degree() == d + 2);
        CHECK(gcd(r1, r2).degree() == 0);  // no common projective root
        CHECK(apolar_apply(r1, f).is_zero());
        CHECK(apolar_apply(r2, f).is_zero());
    }
}

TEST_CASE("complex rank") {
    CHECK(complex_rank(form(4, {1, 0, 0, 0, 0})).rank == 1);
    auto r = complex_rank(form(3, {1, 0, 0, 1}));  // x^3 + y^3
    CHECK(r.rank == 2);
    REQUIRE(r.witness.has_value());
    CHECK(is_squarefree(*r.witness));

    // x^2 y: the minimal generator v^2 is not squarefree; Sylvester gives 3.
    auto s = complex_rank(form(3, {0, 1, 0, 0}));
    CHECK(s.rank == 3);
    REQUIRE(s.witness.has_value());
    CHECK(is_squarefree(*s.witness));
    CHECK(apolar_apply(*s.witness, form(3, {0, 1, 0, 0})).is_zero());
}

TEST_CASE("generic complex rank is ceil((d+1)/2)") {
    SplitMix64 rng(8);
    int hits = 0, total = 0;
    for (int trial = 0; trial < 200; ++trial) {
        int d = 3 + static_cast<int>(rng.int_in(0, 5));
        BinaryForm f = random_form(rng, d);
        int rk = complex_rank(f).rank;
        CHECK(rk <= d);
        ++total;
        if (rk == (d + 2) / 2) ++hits;
    }
    CHECK(hits == total);  // lattice samples essentially never hit the discriminant
}

TEST_CASE("recover decomposition: exact cases") {
    // x^3 + y^3 from q = uv
    BinaryForm f = form(3, {1, 0, 0, 1});
    BinaryForm q = form(2, {0, 1, 0});
    auto res = recover_decomposition(f, q);
    REQUIRE(res.exact);
    CHECK(res.decomposition.terms.size() == 2);
    CHECK(res.decomposition.reconstruct() == f);

    // (x+y)^3 + (x-y)^3 from q = u^2 - v^2
    BinaryForm g = BinaryForm::linear_power(Q(1), Q(1), 3) + BinaryForm::linear_power(Q(1), Q(-1), 3);
    BinaryForm q2 = form(2, {1, 0, -1});
    auto res2 = recover_decomposition(g, q2);
    REQUIRE(res2.exact);
    CHECK(res2.decomposition.terms.size() == 2);
    CHECK(res2.decomposition.reconstruct() == g);

    // planted: 2 x^3 + 3 (x+2y)^3 - (x-y)^3
    BinaryForm h = Q(2) * BinaryForm::linear_power(Q(1), Q(0), 3) +
                   Q(3) * BinaryForm::linear_power(Q(1), Q(2), 3) +
                   Q(-1) * BinaryForm::linear_power(Q(1), Q(-1), 3);
    // q = v (2u - v) (u + v), duals of x, x+2y, x-y
    BinaryForm q3 = form(1, {0, 1}) * form(1, {2, -1}) * form(1, {1, 1});
    CHECK(apolar_apply(q3, h).is_zero());
    auto res3 = recover_decomposition(h, q3);
    REQUIRE(res3.exact);
    CHECK(res3.decomposition.terms.size() == 3);
    CHECK(res3.decomposition.reconstruct() == h);

    CHECK_THROWS(recover_decomposition(f, form(2, {1, 0, 1})));   // not apolar
}

TEST_CASE("plant-and-recover round trip, 200 instances") {
    SplitMix64 rng(616);
    int done = 0;
    while (done < 200) {
        int d = 3 + static_cast<int>(rng.int_in(0, 3));
        int r = 2 + static_cast<int>(rng.int_in(0, d - 2));
        // distinct rational slopes, one optional pure power x^d
        std::vector<std::pair<Rational, Rational>> lin;
        std::vector<long> used;
        bool use_inf = rng.int_in(0, 3) == 0;
        if (use_inf) lin.emplace_back(Q(1), Q(0));
        while (static_cast<int>(lin.size()) < r) {
            long s = rng.int_in(-6, 6);
            bool fresh = true;
            for (long u : used) fresh = fresh && u != s;
            if (!fresh) continue;
            used.push_back(s);
            lin.emplace_back(Q(s), Q(1));
        }
        BinaryForm f = BinaryForm::zero(d);
        BinaryForm q = form(0, {1});
        for (auto& [s, t] : lin) {
            f = f + Q(rng.nonzero_int(5)) * BinaryForm::linear_power(s, t, d);
            q = q * BinaryForm(1, {t, -s});  // dual linear form t*u - s*v
        }
        if (f.is_zero()) continue;
        if (!apolar_apply(q, f).is_zero()) continue;  // cannot happen; belt and braces
        auto res = recover_decomposition(f, q);
        REQUIRE(res.exact);
        CHECK(res.decomposition.reconstruct() == f);
        ++done;
    }
}

TEST_CASE("recover decomposition with irrational roots: interval certificate") {
    // f = (x + sqrt2 y)^4 + (x - sqrt2 y)^4 expands rationally:
    // 2x^4 + 12*2 x^2 y^2 /  ... compute: 2 x^4 + 12*2 x^2 y^2? use exact:
    // (x+ay)^4+(x-ay)^4 = 2x^4 + 12 a^2 x^2 y^2 + 2 a^4 y^4 with a^2 = 2.
    BinaryForm f(4, {Q(2), Q(0), Q(24), Q(0), Q(8)});
    // q = 2u^2 - v^2 annihilates it; roots (1 : +-sqrt2) give l = x +- sqrt2 y.
    BinaryForm q = form(2, {2, 0, -1});
    CHECK(apolar_apply(q, f).is_zero());
    auto res = recover_decomposition(f, q);
    CHECK_FALSE(res.exact);
    REQUIRE(res.enclosure.terms.size() == 2);
    Rational target = Rational(1);
    for (int i = 0; i < 40; ++i) target = target / Q(10);
    CHECK(res.enclosure.residual_width <= target);
    // In the affine root chart the terms are 4 (tau x + y)^d with tau = +-1/sqrt2.
    for (auto& t : res.enclosure.terms) {
        CHECK(t.c.contains(Q(4)));
        CHECK(ipow(t.l0, 2).contains(Q(1, 2)));
    }
}
