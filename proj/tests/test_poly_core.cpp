#include <doctest.h>

#include "realrank/binary_form.hpp"
#include "realrank/rng.hpp"
#include "realrank/roots.hpp"
#include "realrank/unipoly.hpp"

using namespace realrank;

namespace {

Rational Q(long n, long d = 1) { return Rational(n, d); }

UniPoly poly(std::initializer_list<long> asc) {
    std::vector<Rational> c;
    for (long v : asc) c.emplace_back(v);
    return UniPoly(std::move(c));
}

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

// Independent oracle: count sign changes of p on a fine rational grid.
int grid_sign_changes(const UniPoly& p, const Rational& lo, const Rational& hi, long steps) {
    int changes = 0;
    int last = 0;
    for (long i = 0; i <= steps; ++i) {
        Rational x = lo + (hi - lo) * Rational(i, steps);
        int s = p.eval(x).sign();
        if (s == 0) continue;
        if (last != 0 && s != last) ++changes;
        last = s;
    }
    return changes;
}

}  // namespace

TEST_CASE("rational canonical form and parsing") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(1, -2) == Rational(-1, 2));
    CHECK(Rational(1, -2).den() == 2);
    CHECK(Rational::parse("-3/6") == Q(-1, 2));
    CHECK(Rational::parse("7") == Q(7));
    CHECK(Rational::parse("22/7").str() == "22/7");
    CHECK_THROWS(Rational::parse("1/0"));
    CHECK_THROWS(Rational::parse("x"));
    CHECK(Q(1, 3) + Q(1, 6) == Q(1, 2));
    CHECK(Q(-3, 4).decimal_str(3) == "-0.750");
}

TEST_CASE("binary form derivatives") {
    BinaryForm x3 = form(3, {1, 0, 0, 0});
    CHECK(x3.derivative_x() == form(2, {3, 0, 0}));

    BinaryForm y4 = form(4, {0, 0, 0, 0, 1});
    CHECK(y4.derivative_x().is_zero());

    // Euler relation on x^2 y, exactly.
    BinaryForm f = form(3, {0, 1, 0, 0});
    BinaryForm x = form(1, {1, 0}), y = form(1, {0, 1});
    CHECK(x * f.derivative_x() + y * f.derivative_y() == Rational(3) * f);
}

TEST_CASE("euler relation holds for random forms up to degree 10") {
    SplitMix64 rng(20240811);
    BinaryForm x = form(1, {1, 0}), y = form(1, {0, 1});
    for (int trial = 0; trial < 1000; ++trial) {
        int d = 1 + static_cast<int>(rng.int_in(0, 9));
        BinaryForm f = random_form(rng, d);
        CHECK(x * f.derivative_x() + y * f.derivative_y() == Rational(d) * f);
    }
}

TEST_CASE("directional derivatives") {
    SplitMix64 rng(7);
    BinaryForm f = random_form(rng, 5);
    CHECK(f.directional_derivative(Q(1), Q(0)) == f.derivative_x());

    BinaryForm g = form(2, {1, 0, 1});  // x^2 + y^2
    CHECK(g.directional_derivative(Q(1), Q(1)) == form(1, {2, 2}));

    BinaryForm h = form(3, {1, 0, -3, 0});  // x^3 - 3 x y^2
    CHECK(h.directional_derivative(Q(0), Q(1)) == form(2, {0, -6, 0}));
    CHECK_THROWS(h.directional_derivative(Q(0), Q(0)));
}

TEST_CASE("sturm counts") {
    CHECK(sturm_count(poly({0, -1, 0, 1})) == 3);   // t^3 - t
    CHECK(sturm_count(poly({1, 0, 1})) == 0);       // t^2 + 1
    CHECK(sturm_count(poly({0, 0, 1})) == 1);       // t^2, distinct count
    CHECK_THROWS(sturm_count(UniPoly::zero()));
    // closed-interval semantics: roots at endpoints are counted
    CHECK(sturm_count(poly({0, -1, 0, 1}), Q(-1), Q(1)) == 3);
    CHECK(sturm_count(poly({0, -1, 0, 1}), Q(0), Q(2)) == 2);
    CHECK(sturm_count(poly({0, -1, 0, 1}), Q(-2), Q(-1)) == 1);
    CHECK(sturm_count(poly({0, -1, 0, 1}), Q(2), Q(5)) == 0);
}

TEST_CASE("squarefree decomposition") {
    // (t-1)^2 (t+2)
    UniPoly p = poly({-1, 1}) * poly({-1, 1}) * poly({2, 1});
    auto dec = squarefree_decomposition(p);
    REQUIRE(dec.size() == 2);
    CHECK(dec[0].first == poly({2, 1}));
    CHECK(dec[0].second == 1);
    CHECK(dec[1].first == poly({-1, 1}));
    CHECK(dec[1].second == 2);

    UniPoly sf = poly({-2, 0, 1});  // t^2 - 2, squarefree
    auto dec2 = squarefree_decomposition(sf);
    REQUIRE(dec2.size() == 1);
    CHECK(dec2[0].first == sf.monic());
    CHECK(dec2[0].second == 1);

    UniPoly cube = poly({1, 0, 1}) * poly({1, 0, 1}) * poly({1, 0, 1});
    auto dec3 = squarefree_decomposition(cube);
    REQUIRE(dec3.size() == 1);
    CHECK(dec3[0].first == poly({1, 0, 1}));
    CHECK(dec3[0].second == 3);

    // reconstruction is exact
    UniPoly rec = UniPoly::constant(p.lc());
    for (auto& [q, m] : dec)
        for (int i = 0; i < m; ++i) rec = rec * q;
    CHECK(rec == p);
}

TEST_CASE("gcd") {
    CHECK(gcd(poly({-1, 0, 1}), poly({-1, 1})) == poly({-1, 1}));
    CHECK(gcd(poly({1, 0, 1}), poly({-1, 1})) == poly({1}));
    CHECK(gcd(poly({1, -2, 1}), poly({-2, 2})) == poly({-1, 1}));
    CHECK_THROWS(gcd(UniPoly::zero(), UniPoly::zero()));
}

TEST_CASE("discriminant") {
    // a t^2 + b t + c -> b^2 - 4ac on a sample sweep
    for (long a = 1; a <= 3; ++a)
        for (long b = -2; b <= 2; ++b)
            for (long c = -2; c <= 2; ++c)
                CHECK(discriminant(poly({c, b, a})) == Q(b * b - 4 * a * c));

    // disc((t-r)(t-s)) = (r-s)^2
    for (long r = -3; r <= 3; ++r)
        for (long s = -3; s <= 3; ++s)
            CHECK(discriminant(poly({-r, 1}) * poly({-s, 1})) == Q((r - s) * (r - s)));

    CHECK_THROWS(discriminant(poly({5})));
}

TEST_CASE("discriminant vanishes exactly on repeated roots") {
    SplitMix64 rng(99);
    for (int trial = 0; trial < 200; ++trial) {
        int deg = 2 + static_cast<int>(rng.int_in(0, 4));
        UniPoly p = UniPoly::constant(Rational(rng.nonzero_int(5)));
        long planted = rng.int_in(-5, 5);
        bool plant_double = trial % 2 == 0;
        if (plant_double) p = p * poly({-planted, 1}) * poly({-planted, 1});
        for (int i = p.degree(); i < deg; ++i) p = p * poly({rng.int_in(-6, 6), 1});
        bool disc_zero = discriminant(p).is_zero();
        bool gcd_nonconst = gcd(p, p.derivative()).degree() > 0;
        CHECK(disc_zero == gcd_nonconst);
        if (plant_double) CHECK(disc_zero);
    }
}

TEST_CASE("root isolation with multiplicities") {
    UniPoly p = poly({-1, 1}) * poly({-1, 1}) * poly({2, 1});
    RootIsolation iso = isolate_real_roots(p);
    REQUIRE(iso.roots.size() == 2);
    CHECK(iso.roots[0].multiplicity == 1);
    CHECK(iso.roots[0].enclosure().contains(Q(-2)));
    CHECK(iso.roots[1].multiplicity == 2);
    CHECK(iso.roots[1].enclosure().contains(Q(1)));
    CHECK(iso.total_multiplicity() == 3);
}

TEST_CASE("projective roots of x^2 y") {
    BinaryForm f = form(3, {0, 1, 0, 0});
    RootIsolation iso = isolate_real_roots(f);
    REQUIRE(iso.roots.size() == 1);
    CHECK(iso.roots[0].enclosure().contains(Q(0)));
    CHECK(iso.roots[0].multiplicity == 2);        // root (0:1), i.e. x = 0
    CHECK(iso.infinity_multiplicity == 1);        // root (1:0), y | f once
    CHECK(iso.total_multiplicity() == 3);
    CHECK(distinct_real_projective_roots(f) == 2);
}

TEST_CASE("t^5 - t - 1 has exactly one real root, in (1,2)") {
    UniPoly p = poly({-1, -1, 0, 0, 0, 1});
    // independent oracle: sign changes on a fine grid
    CHECK(grid_sign_changes(p, Q(-4), Q(4), 800) == 1);
    CHECK(sturm_count(p) == 1);
    RootIsolation iso = isolate_real_roots(p);
    REQUIRE(iso.roots.size() == 1);
    auto& r = iso.roots[0];
    r.refine_to(Q(1, 1000));
    CHECK(r.enclosure().lo > Q(1));
    CHECK(r.enclosure().hi < Q(2));
}

TEST_CASE("sturm plus multiplicity accounting matches planted construction") {
    SplitMix64 rng(424242);
    for (int trial = 0; trial < 120; ++trial) {
        // plant rational roots with known multiplicities, optionally a complex pair
        int n_roots = 1 + static_cast<int>(rng.int_in(0, 3));
        UniPoly p = UniPoly::constant(Rational(rng.nonzero_int(4)));
        int with_mult = 0;
        std::vector<long> used;
        for (int i = 0; i < n_roots; ++i) {
            long r;
            bool fresh;
            do {
                r = rng.int_in(-8, 8);
                fresh = true;
                for (long u : used) fresh = fresh && u != r;
            } while (!fresh);
            used.push_back(r);
            int m = 1 + static_cast<int>(rng.int_in(0, 2));
            for (int j = 0; j < m; ++j) p = p * poly({-r, 1});
            with_mult += m;
        }
        if (rng.int_in(0, 1) == 0) {
            p = p * poly({1, 0, 1});  // t^2 + 1, no real roots
        }
        if (p.degree() > 8) continue;
        RootIsolation iso = isolate_real_roots(p);
        CHECK(static_cast<int>(iso.roots.size()) == n_roots);
        CHECK(iso.total_multiplicity() == with_mult);
        CHECK(sturm_count(p) == n_roots);
    }
}

TEST_CASE("refined isolating intervals contain a sign change of the squarefree part") {
    SplitMix64 rng(777);
    for (int trial = 0; trial < 40; ++trial) {
        UniPoly p = UniPoly::constant(Rational(1));
        for (int i = 0; i < 4; ++i) p = p * poly({rng.int_in(-9, 9), rng.nonzero_int(3)});
        RootIsolation iso = isolate_real_roots(p);
        iso.refine_all(Q(1, 1000000));
        UniPoly sf = squarefree_part(p);
        for (const auto& r : iso.roots) {
            if (r.exact) {
                CHECK(sf.eval(r.value).is_zero());
            } else {
                CHECK(sf.eval(r.lo).sign() * sf.eval(r.hi).sign() < 0);
                CHECK(r.width() <= Q(1, 1000000));
            }
        }
    }
}

TEST_CASE("form discriminant detects repeated projective roots including infinity") {
    CHECK(form_discriminant(form(2, {1, 0, -1})) != Q(0));        // x^2 - y^2
    CHECK(form_discriminant(form(2, {0, 1, 0})) != Q(0));         // xy: roots 0 and inf, distinct
    CHECK(form_discriminant(form(2, {0, 0, 1})) == Q(0));         // y^2: double root at (1:0)
    CHECK(form_discriminant(form(3, {0, 0, 1, 0})) == Q(0));      // x y^2
    CHECK(form_discriminant(form(3, {1, 0, 0, 1})) != Q(0));      // x^3 + y^3
    BinaryForm sq = form(2, {1, 2, 1});                            // (x+y)^2
    CHECK(form_discriminant(sq) == Q(0));
    CHECK(is_squarefree(form(2, {0, 1, 0})));
    CHECK_FALSE(is_squarefree(form(2, {0, 0, 1})));
}
