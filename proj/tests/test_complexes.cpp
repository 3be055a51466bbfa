#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "exalg/complexes.hpp"
#include "support/gen.hpp"

using namespace exalg;
using testgen::Rng;

namespace {

// Three-dimensional example: a (even, reduced), x (even), y (odd), Q x = y,
// h y = x.
Sdr three_dim_sdr(const RingPtr& ring) {
    SpacePtr v = GradedSpace::make({"a", "x", "y"}, {0, 0, 1});
    SpacePtr vr = GradedSpace::make({"a"}, {0});
    GradedMap q = GradedMap::zero(v, v, 1, ring);
    q.set(2, 1, Series(ring, Scalar(1)));
    GradedMap h = GradedMap::zero(v, v, 1, ring);
    h.set(1, 2, Series(ring, Scalar(1)));
    GradedMap i = GradedMap::zero(vr, v, 0, ring);
    i.set(0, 0, Series(ring, Scalar(1)));
    GradedMap p = GradedMap::zero(v, vr, 0, ring);
    p.set(0, 0, Series(ring, Scalar(1)));
    return Sdr{Complex{v, q}, Complex{vr, GradedMap::zero(vr, vr, 1, ring)}, i, p, h};
}

} // namespace

TEST_CASE("validate_sdr on the trivial and three-dimensional examples") {
    auto ring = SeriesRing::trivial();
    SUBCASE("V = V_r, zero homotopy") {
        SpacePtr v = GradedSpace::make({"a", "b"}, {0, 1});
        GradedMap q = GradedMap::zero(v, v, 1, ring);
        q.set(1, 0, Series(ring, Scalar(1)));
        Sdr s{Complex{v, q}, Complex{v, q}, GradedMap::identity(v, ring),
              GradedMap::identity(v, ring), GradedMap::zero(v, v, 1, ring)};
        CHECK(validate_sdr(s).ok());
    }
    SUBCASE("three-dimensional example passes") {
        CHECK(validate_sdr(three_dim_sdr(ring)).ok());
    }
    SUBCASE("h y = 2x fails with the {Q,h} residual") {
        Sdr s = three_dim_sdr(ring);
        s.h.set(1, 2, Series(ring, Scalar(2)));
        CheckReport r = validate_sdr(s);
        CHECK_FALSE(r.ok());
        for (const auto& item : r.items)
            if (!item.ok) CHECK(item.check == "{Q,h} = id - i pi");
    }
}

TEST_CASE("validate_sdr flags each targeted perturbation") {
    auto ring = SeriesRing::trivial();
    Rng rng(31);
    for (int inst = 0; inst < 5; ++inst) {
        Sdr s = testgen::random_sdr(rng, 1, 1, 0, 2, ring);
        REQUIRE(validate_sdr(s).ok());
        SUBCASE("") {}
        // scale h
        Sdr bad = s;
        bad.h = bad.h.scaled(Scalar(2));
        CHECK_FALSE(validate_sdr(bad).ok());
        // break pi i = id
        bad = s;
        bad.proj = bad.proj.scaled(Scalar(3, 2));
        CHECK_FALSE(validate_sdr(bad).ok());
        // break Q^2 = 0
        bad = s;
        {
            bool broke = false;
            for (std::size_t r = 0; r < bad.total.space->dim() && !broke; ++r)
                for (std::size_t c = 0; c < bad.total.space->dim() && !broke; ++c)
                    if ((bad.total.space->parity(r) + bad.total.space->parity(c)) % 2 == 1) {
                        GradedMap q2 = bad.total.Q;
                        q2.add_to(r, c, Series(ring, Scalar(1)));
                        if (!compose(q2, q2).is_zero()) {
                            bad.total.Q = q2;
                            broke = true;
                        }
                    }
            if (broke) CHECK_FALSE(validate_sdr(bad).ok());
        }
    }
}

TEST_CASE("evolution form in closed form") {
    auto ring = SeriesRing::make({{"u", VarKind::Free}}, 0);
    Sdr s3 = three_dim_sdr(ring);
    GradedMap H = s3.proj_contractible();
    EvolutionForm ev = evolution_form_idempotent(H, s3.h, "u");

    SUBCASE("H = 0, G = 0 gives the identity with no form part") {
        SpacePtr v = s3.total.space;
        GradedMap z0 = GradedMap::zero(v, v, 0, ring);
        GradedMap z1 = GradedMap::zero(v, v, 1, ring);
        EvolutionForm triv = evolution_form_idempotent(z0, z1, "u");
        CHECK(triv.body == GradedMap::identity(v, ring));
        CHECK(triv.one_form.is_zero());
    }
    SUBCASE("body and one-form of the contraction evolution") {
        GradedMap id = GradedMap::identity(s3.total.space, ring);
        Series omu = Series(ring, Scalar(1)) - Series::var(ring, "u");
        CHECK(ev.body == id - H.scaled(omu));
        CHECK(ev.one_form == -compose(s3.h, ev.body)); // h and the body commute
        CHECK(ev.one_form == -compose(ev.body, s3.h));
    }
    SUBCASE("(d+Q)-closeness in the u-representation") {
        CHECK(closure_residual(ev, s3.total.Q).is_zero());
    }
    SUBCASE("non-idempotent H is rejected") {
        GradedMap notp = H.scaled(Scalar(2));
        CHECK_THROWS_AS(evolution_form_idempotent(notp, s3.h, "u"), StructuralError);
    }
    SUBCASE("odd H is rejected") {
        CHECK_THROWS_AS(evolution_form_idempotent(s3.h, s3.h, "u"), ParityError);
    }
}

TEST_CASE("semigroup law of the closed-form body") {
    auto ring = SeriesRing::make({{"u1", VarKind::Free}, {"u2", VarKind::Free}}, 0);
    Rng rng(17);
    for (int inst = 0; inst < 6; ++inst) {
        Sdr s = testgen::random_sdr(rng, 1, 0, 1, 2, ring);
        GradedMap H = s.proj_contractible();
        GradedMap b1 = evolution_form_idempotent(H, s.h, "u1").body;
        GradedMap b2 = evolution_form_idempotent(H, s.h, "u2").body;
        // body(u1) body(u2) = body at u = u1 u2
        GradedMap id = GradedMap::identity(s.total.space, ring);
        Series u1u2 = Series::var(ring, "u1") * Series::var(ring, "u2");
        GradedMap expected = id - H.scaled(Series(ring, Scalar(1)) - u1u2);
        CHECK(compose(b1, b2) == expected);
    }
}

TEST_CASE("truncated evolution closeness holds at every retained order") {
    auto ring = SeriesRing::bounded({"t"}, 6);
    Rng rng(19);
    Sdr s = testgen::random_sdr(rng, 1, 1, 1, 2, ring);
    // Generic supersymmetric pair: H = {Q, G} for a random odd G.
    GradedMap G = GradedMap::zero(s.total.space, s.total.space, 1, ring);
    for (std::size_t r = 0; r < s.total.space->dim(); ++r)
        for (std::size_t c = 0; c < s.total.space->dim(); ++c)
            if ((s.total.space->parity(r) + s.total.space->parity(c)) % 2 == 1)
                G.set(r, c, Series(ring, rng.small_or_zero()));
    GradedMap H = supercommutator(s.total.Q, G);
    EvolutionForm ev = evolution_form_truncated(H, G, "t", 6);
    CHECK(closure_residual(ev, s.total.Q).is_zero());
    // Semigroup to the truncation order: exp(-t1 H) exp(-t2 H) = exp(-(t1+t2) H)
    auto ring2 = SeriesRing::bounded({"t1", "t2", "x"}, 4);
    GradedMap H2 = reringed(H, ring2);
    GradedMap e1 = exp_truncated(H2, "t1", 4);
    GradedMap e2 = exp_truncated(H2, "t2", 4);
    GradedMap prod = compose(e1, e2).transform([](const Series& v) { return v.truncated(4); });
    GradedMap esum = exp_truncated(H2, "x", 4).transform([&](const Series& v) {
        return v
            .substitute_series("x", Series::var(ring2, "t1") + Series::var(ring2, "t2"))
            .truncated(4);
    });
    CHECK(prod == esum);
}

TEST_CASE("edge integral returns minus the homotopy") {
    auto ring = SeriesRing::trivial();
    SUBCASE("zero homotopy") {
        SpacePtr v = GradedSpace::make({"a"}, {0});
        Sdr s{Complex{v, GradedMap::zero(v, v, 1, ring)},
              Complex{v, GradedMap::zero(v, v, 1, ring)}, GradedMap::identity(v, ring),
              GradedMap::identity(v, ring), GradedMap::zero(v, v, 1, ring)};
        CHECK(edge_integral(s).is_zero());
    }
    SUBCASE("three-dimensional example: y -> -x") {
        Sdr s = three_dim_sdr(ring);
        GradedMap e = edge_integral(s);
        CHECK(e == -s.h);
        CHECK(e.at(1, 2) == Series(ring, Scalar(-1)));
    }
    SUBCASE("scaled homotopy") {
        Sdr s = three_dim_sdr(ring);
        // h' = c h with Q' = (1/c) Q keeps the side conditions.
        Scalar c(5, 3);
        s.h = s.h.scaled(c);
        s.total.Q = s.total.Q.scaled(Scalar(1) / c);
        REQUIRE(validate_sdr(s).ok());
        CHECK(edge_integral(s) == -s.h);
    }
    SUBCASE("random instances") {
        Rng rng(41);
        for (int inst = 0; inst < 10; ++inst) {
            Sdr s = testgen::random_sdr(rng, rng.uniform(0, 2), rng.uniform(0, 1), 0,
                                        rng.uniform(1, 3), ring);
            GradedMap e = edge_integral(s);
            CHECK(e == -s.h);
            // {Q, -h} = i pi - id and the integral squares to zero
            CHECK(compose(e, e).is_zero());
            CHECK(supercommutator(s.total.Q, e) ==
                  compose(s.incl, s.proj) - GradedMap::identity(s.total.space, ring));
        }
    }
}

TEST_CASE("limit at infinite length is the residual projector") {
    auto ring = SeriesRing::trivial();
    SUBCASE("V = V_r gives the identity") {
        SpacePtr v = GradedSpace::make({"a"}, {0});
        Sdr s{Complex{v, GradedMap::zero(v, v, 1, ring)},
              Complex{v, GradedMap::zero(v, v, 1, ring)}, GradedMap::identity(v, ring),
              GradedMap::identity(v, ring), GradedMap::zero(v, v, 1, ring)};
        CHECK(limit_at_infinity(s) == GradedMap::identity(v, ring));
    }
    SUBCASE("three-dimensional example: rank-one projector") {
        Sdr s = three_dim_sdr(ring);
        GradedMap lim = limit_at_infinity(s);
        CHECK(lim == compose(s.incl, s.proj));
        CHECK(compose(lim, lim) == lim);
        CHECK(compose(lim, s.h).is_zero());
        CHECK(compose(s.h, lim).is_zero());
        // agreement with the u -> 0 substitution of the closed-form body
        auto ringu = SeriesRing::make({{"u", VarKind::Free}}, 0);
        Sdr su = three_dim_sdr(ringu);
        EvolutionForm ev = evolution_form_idempotent(su.proj_contractible(), su.h, "u");
        GradedMap at0 = ev.body.transform(
            [&](const Series& v) { return v.substitute("u", Scalar(0)); });
        CHECK(reringed(at0, ring) == lim);
    }
}

TEST_CASE("generic splitting produces valid SDRs") {
    auto ring = SeriesRing::trivial();
    Rng rng(53);
    for (int inst = 0; inst < 8; ++inst) {
        // Random square-zero Q: conjugate a block Q.
        Sdr seed = testgen::random_sdr(rng, rng.uniform(0, 2), rng.uniform(0, 2), 0,
                                       rng.uniform(1, 3), ring);
        Sdr split = testgen::sdr_from_complex(seed.total);
        CHECK(validate_sdr(split).ok());
        CHECK(split.reduced.space->dim() == seed.reduced.space->dim());
    }
}
