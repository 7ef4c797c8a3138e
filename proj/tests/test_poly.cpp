#include <doctest.h>

#include "pidisc/central_ring.hpp"
#include "pidisc/ideal.hpp"
#include "pidisc/polymatrix.hpp"
#include "pidisc/rng.hpp"

using namespace pidisc;

namespace {

MultiPoly rand_poly(Rng& rng, const FieldSpec& f, std::size_t nvars, int terms, std::uint32_t maxdeg) {
    MultiPoly p(f, nvars);
    for (int t = 0; t < terms; ++t) {
        ExpVec e(nvars);
        for (auto& x : e) x = static_cast<std::uint32_t>(rng.below(maxdeg + 1));
        p.add_term(e, Scalar::from_int(f, rng.range(-3, 3)));
    }
    return p;
}

} // namespace

TEST_CASE("poly evaluation examples") {
    FieldSpec q = FieldSpec::rationals();
    std::vector<std::string> names = {"X", "Y"};
    MultiPoly f = MultiPoly::parse(q, names, "X^2 - Y");
    CHECK(f.eval({Scalar::from_int(q, 2), Scalar::from_int(q, 1)}) == Scalar::from_int(q, 3));

    MultiPoly z(q, 2);
    CHECK(z.eval({Scalar::from_int(q, 7), Scalar::from_int(q, -1)}).is_zero());

    FieldSpec f5 = FieldSpec::prime(5);
    MultiPoly g = MultiPoly::parse(f5, names, "1 - 4*X*Y");
    CHECK(g.eval({Scalar::from_int(f5, 1), Scalar::from_int(f5, 4)}).is_zero());
    CHECK_THROWS_AS(g.eval({Scalar::from_int(f5, 1)}), shape_error);
}

TEST_CASE("poly eval is a ring homomorphism") {
    Rng rng(1);
    FieldSpec f13 = FieldSpec::prime(13);
    for (int trial = 0; trial < 100; ++trial) {
        MultiPoly a = rand_poly(rng, f13, 3, 4, 2);
        MultiPoly b = rand_poly(rng, f13, 3, 4, 2);
        std::vector<Scalar> pt;
        for (int i = 0; i < 3; ++i) pt.push_back(Scalar::from_residue(f13, rng.below(13)));
        CHECK((a * b).eval(pt) == a.eval(pt) * b.eval(pt));
        CHECK((a + b).eval(pt) == a.eval(pt) + b.eval(pt));
    }
}

TEST_CASE("printing and parsing round-trip") {
    FieldSpec q = FieldSpec::rationals();
    std::vector<std::string> names = {"X1", "Y2"};
    MultiPoly p = MultiPoly::parse(q, names, "3*X1^2*Y2 + 4");
    CHECK(p.str(names) == "3*X1^2*Y2 + 4");
    MultiPoly back = MultiPoly::parse(q, names, p.str(names));
    CHECK(back == p);
    MultiPoly neg = MultiPoly::parse(q, names, "-X1 + 1/2*Y2");
    CHECK(MultiPoly::parse(q, names, neg.str(names)) == neg);
    CHECK_THROWS_AS(MultiPoly::parse(q, names, "3*Z"), parse_error);
    CHECK_THROWS_AS(MultiPoly::parse(q, names, "3**X1"), parse_error);
}

TEST_CASE("bareiss determinant small cases") {
    FieldSpec q = FieldSpec::rationals();
    std::vector<std::string> names = {"X", "Y"};
    PolyMatrix m(q, 2, 2, 2);
    m.at(0, 0) = MultiPoly::parse(q, names, "X");
    m.at(0, 1) = MultiPoly::parse(q, names, "Y");
    m.at(1, 0) = MultiPoly::parse(q, names, "Y");
    m.at(1, 1) = MultiPoly::parse(q, names, "X");
    CHECK(bareiss_det(m) == MultiPoly::parse(q, names, "X^2 - Y^2"));

    PolyMatrix id3(q, 2, 3, 3);
    for (int i = 0; i < 3; ++i) id3.at(i, i) = MultiPoly::from_int(q, 2, 1);
    CHECK(bareiss_det(id3) == MultiPoly::from_int(q, 2, 1));

    PolyMatrix ns(q, 2, 2, 3);
    CHECK_THROWS_AS(bareiss_det(ns), shape_error);
}

TEST_CASE("bareiss agrees with cofactor expansion on random sparse matrices") {
    Rng rng(7);
    FieldSpec f13 = FieldSpec::prime(13);
    for (int trial = 0; trial < 200; ++trial) {
        std::size_t n = 1 + rng.below(5);
        PolyMatrix m(f13, 2, n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (rng.below(3) != 0) m.at(i, j) = rand_poly(rng, f13, 2, 2, 1);
        CHECK(bareiss_det(m) == cofactor_det(m));
    }
}

TEST_CASE("determinant row operations") {
    Rng rng(11);
    FieldSpec q = FieldSpec::rationals();
    for (int trial = 0; trial < 50; ++trial) {
        std::size_t n = 2 + rng.below(3);
        PolyMatrix m(q, 2, n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) m.at(i, j) = rand_poly(rng, q, 2, 2, 1);
        MultiPoly d = bareiss_det(m);

        // swap two rows: sign flip
        PolyMatrix sw = m;
        std::size_t r1 = rng.below(n), r2 = (r1 + 1 + rng.below(n - 1)) % n;
        for (std::size_t j = 0; j < n; ++j) std::swap(sw.at(r1, j), sw.at(r2, j));
        CHECK(bareiss_det(sw) == -d);

        // add a multiple of one row to another: invariant
        PolyMatrix ad = m;
        MultiPoly c = rand_poly(rng, q, 2, 1, 1);
        for (std::size_t j = 0; j < n; ++j) ad.at(r1, j) += c * ad.at(r2, j);
        CHECK(bareiss_det(ad) == d);
    }
}

TEST_CASE("minor determinants") {
    FieldSpec q = FieldSpec::rationals();
    std::vector<std::string> names = {"X", "Y"};
    // trace pairing matrix of the 2x2-Clifford style example
    PolyMatrix g(q, 2, 4, 4);
    auto P = [&](const char* s) { return MultiPoly::parse(q, names, s); };
    g.at(0, 0) = P("4");
    g.at(0, 3) = P("2");
    g.at(1, 1) = P("4*X");
    g.at(1, 2) = P("2");
    g.at(2, 1) = P("2");
    g.at(2, 2) = P("4*Y");
    g.at(3, 0) = P("2");
    g.at(3, 3) = P("2 - 4*X*Y");

    CHECK(bareiss_det(g) == P("-16 + 128*X*Y - 256*X^2*Y^2"));
    CHECK(bareiss_det(g) == -P("1 - 4*X*Y").pow(2).scaled(Scalar::from_int(q, 16)));
    CHECK(cofactor_det(g) == bareiss_det(g));

    std::vector<std::size_t> all = {0, 1, 2, 3};
    CHECK(minor_det(g, all, all) == bareiss_det(g));
    CHECK(minor_det(g, {1}, {1}) == P("4*X"));
    CHECK(minor_det(g, {0, 1}, {0, 1}) == P("16*X"));
    CHECK_THROWS_AS(minor_det(g, {0, 9}, {0, 1}), shape_error);
}

TEST_CASE("exact division") {
    FieldSpec q = FieldSpec::rationals();
    std::vector<std::string> names = {"X", "Y"};
    MultiPoly a = MultiPoly::parse(q, names, "X^2 - Y^2");
    MultiPoly b = MultiPoly::parse(q, names, "X - Y");
    auto quot = a.exact_div(b);
    REQUIRE(quot.has_value());
    CHECK(*quot == MultiPoly::parse(q, names, "X + Y"));
    CHECK_FALSE(a.exact_div(MultiPoly::parse(q, names, "X - 1")).has_value());
}

TEST_CASE("monomial ideal comparisons") {
    FieldSpec q = FieldSpec::rationals();
    std::vector<std::string> names = {"X", "Y"};
    auto P = [&](const char* s) { return MultiPoly::parse(q, names, s); };
    IdealGens a = IdealGens::make({P("X^2*Y"), P("X^3")});
    IdealGens b = IdealGens::make({P("X^3"), P("X^2*Y"), P("X^3*Y")});
    CHECK(monomial_ideal_equal(a, b));
    IdealGens c = IdealGens::make({P("X")});
    IdealGens d = IdealGens::make({P("X^2")});
    CHECK_FALSE(monomial_ideal_equal(c, d));
    IdealGens e = IdealGens::make({P("X + Y")});
    CHECK_THROWS_AS(monomial_ideal_equal(a, e), unsupported_error);
    // scalar multiples of monomials qualify
    IdealGens f = IdealGens::make({P("7*X^2*Y"), P("3*X^3")});
    CHECK(monomial_ideal_equal(a, f));
}

TEST_CASE("bounded-degree linear membership") {
    FieldSpec q = FieldSpec::rationals();
    std::vector<std::string> names = {"x", "y"};
    auto P = [&](const char* s) { return MultiPoly::parse(q, names, s); };
    IdealGens xy = IdealGens::make({P("x"), P("y")});
    CHECK(linear_membership(P("x + y"), xy, 1));
    CHECK_FALSE(linear_membership(P("1"), xy, 3));
    CHECK(linear_membership(P("x^2*y - 3*y^2"), xy, 3));
    IdealGens sq = IdealGens::make({P("x^2"), P("x*y"), P("y^2")});
    CHECK_FALSE(linear_membership(P("x"), sq, 6));
    CHECK(linear_membership(P("x^3 - x*y^2"), sq, 6));
}

TEST_CASE("central ring rewriting D^2 -> B*C") {
    FieldSpec q = FieldSpec::rationals();
    MultiPoly rhs(q, 4);
    rhs.add_term(ExpVec{0, 1, 1, 0}, Scalar::one(q));
    CentralRing ring = CentralRing::with_rules(
        q, {"A", "B", "C", "D"}, {RewriteRule{ExpVec{0, 0, 0, 2}, rhs}},
        {ExpVec{2, 0, 0}, ExpVec{0, 2, 0}, ExpVec{0, 0, 2}, ExpVec{0, 1, 1}}, 3, {"X1", "X2", "X3"});

    MultiPoly d = ring.var(3);
    CHECK(ring.reduce(d * d) == ring.var(1) * ring.var(2));
    CHECK(ring.reduce(d * d * d) == ring.var(1) * ring.var(2) * ring.var(3));
    CHECK(ring.is_zero(d * d - ring.var(1) * ring.var(2)));

    // joinability: normal form is independent of multiplication grouping
    Rng rng(3);
    for (int trial = 0; trial < 100; ++trial) {
        MultiPoly a = rand_poly(rng, q, 4, 3, 2);
        MultiPoly b = rand_poly(rng, q, 4, 3, 2);
        MultiPoly c = rand_poly(rng, q, 4, 3, 2);
        MultiPoly left = ring.mul(ring.mul(a, b), c);
        MultiPoly right = ring.mul(a, ring.mul(b, c));
        CHECK(left == right);
    }

    // point validity: D^2 = B*C
    FieldSpec f5 = FieldSpec::prime(5);
    MultiPoly rhs5(f5, 4);
    rhs5.add_term(ExpVec{0, 1, 1, 0}, Scalar::one(f5));
    CentralRing r5 = CentralRing::with_rules(
        f5, {"A", "B", "C", "D"}, {RewriteRule{ExpVec{0, 0, 0, 2}, rhs5}},
        {ExpVec{2, 0, 0}, ExpVec{0, 2, 0}, ExpVec{0, 0, 2}, ExpVec{0, 1, 1}}, 3, {"X1", "X2", "X3"});
    auto s = [&](long long v) { return Scalar::from_int(f5, v); };
    CHECK(r5.point_valid({s(1), s(1), s(4), s(2)}));
    CHECK_FALSE(r5.point_valid({s(1), s(1), s(1), s(2)}));

    // ambient embedding: A^2*B^2 corresponds to X1^4 X2^4
    auto amb = r5.ambient_map();
    CHECK(amb(ExpVec{2, 2, 0, 0}) == ExpVec{4, 4, 0});
    CHECK(amb(ExpVec{0, 1, 1, 1}) == ExpVec{0, 3, 3});
}

TEST_CASE("poly_rank with quotient-ring normalization") {
    FieldSpec q = FieldSpec::rationals();
    MultiPoly rhs(q, 4);
    rhs.add_term(ExpVec{0, 1, 1, 0}, Scalar::one(q));
    CentralRing ring = CentralRing::with_rules(q, {"A", "B", "C", "D"},
                                               {RewriteRule{ExpVec{0, 0, 0, 2}, rhs}}, {}, 0, {});
    // rows (D, -B) and (C, -D) are proportional over Frac of K[A..D]/(D^2 - BC)
    PolyMatrix m(q, 4, 2, 2);
    m.at(0, 0) = ring.var(3);
    m.at(0, 1) = -ring.var(1);
    m.at(1, 0) = ring.var(2);
    m.at(1, 1) = -ring.var(3);
    auto nf = [&](const MultiPoly& p) { return ring.reduce(p); };
    CHECK(poly_rank(m, nf) == 1);
    // without the relation the rank is 2
    auto idn = [](const MultiPoly& p) { return p; };
    CHECK(poly_rank(m, idn) == 2);
}
