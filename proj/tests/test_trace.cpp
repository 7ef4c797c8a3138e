#include <doctest.h>

#include "pidisc/trace.hpp"
#include "pidisc/weyl.hpp"

using namespace pidisc;

namespace {

WeylAlgebra weyl_a1(const FieldSpec& f) {
    WeylParams p;
    p.field = f;
    p.lambda = {1};
    p.epsilon = {Scalar::from_int(f, -1)};
    p.chi = {{Scalar::one(f)}};
    return build_weyl(p);
}

} // namespace

TEST_CASE("regular trace on the rank-1 Weyl algebra") {
    FieldSpec q = FieldSpec::rationals();
    WeylAlgebra w = weyl_a1(q);
    TraceMap tr = TraceMap::regular(w.alg);
    std::vector<std::string> names = {"X1", "Y1"};

    CHECK(tr.value(w.alg.one()) == MultiPoly::parse(q, names, "4"));
    CHECK(tr.value(w.gen_x(0)).is_zero());
    CHECK(tr.value(w.gen_y(0)).is_zero());
    AlgElement xy = w.alg.multiply(w.gen_x(0), w.gen_y(0));
    CHECK(tr.value(xy) == MultiPoly::parse(q, names, "2"));
    // left multiplication by 1 is the identity matrix
    PolyMatrix m1 = w.alg.left_mult_matrix(w.alg.one());
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j)
            CHECK(m1.at(i, j) == (i == j ? MultiPoly::from_int(q, 2, 1) : MultiPoly(q, 2)));

    // left multiplication by x in basis (1, x, y, xy): columns x, X*1, xy, X*y
    PolyMatrix mx = w.alg.left_mult_matrix(w.gen_x(0));
    std::size_t i1 = w.index_of(ExpVec{0, 0}), ix = w.index_of(ExpVec{1, 0});
    std::size_t iy = w.index_of(ExpVec{0, 1}), ixy = w.index_of(ExpVec{1, 1});
    CHECK(mx.at(ix, i1) == MultiPoly::parse(q, names, "1"));
    CHECK(mx.at(i1, ix) == MultiPoly::parse(q, names, "X1"));
    CHECK(mx.at(ixy, iy) == MultiPoly::parse(q, names, "1"));
    CHECK(mx.at(iy, ixy) == MultiPoly::parse(q, names, "X1"));
}

TEST_CASE("standard trace on the matrix order") {
    FieldSpec q = FieldSpec::rationals();
    PresentedAlgebra A = build_matrix_order(q);
    TraceMap tr = TraceMap::standard(A);
    std::vector<std::string> names = {"x", "y"};

    CHECK(tr.value(A.from_label("e11")) == MultiPoly::parse(q, names, "2"));
    CHECK(tr.value(A.from_label("e21")).is_zero());
    CHECK(tr.value(A.from_label("e22")) == MultiPoly::parse(q, names, "2"));
    CHECK(tr.value(A.from_label("x_e12")).is_zero());
    CHECK(tr.value(A.from_label("y_e12")).is_zero());
    CHECK(tr.value(A.one()) == MultiPoly::parse(q, names, "4"));
    // pairings used by the Gram matrix
    CHECK(tr.pair(A.from_label("e21"), A.from_label("x_e12")) == MultiPoly::parse(q, names, "2*x"));
    CHECK(tr.pair(A.from_label("y_e12"), A.from_label("e21")) == MultiPoly::parse(q, names, "2*y"));
}

TEST_CASE("reduced trace and the standard/reduced identity") {
    FieldSpec q = FieldSpec::rationals();
    PresentedAlgebra A = build_matrix_order(q);
    TraceMap tst = TraceMap::standard(A);
    TraceMap tred = TraceMap::reduced(A, 2);
    std::vector<std::string> names = {"x", "y"};

    CHECK(tred.value(A.one()) == MultiPoly::parse(q, names, "2"));
    CHECK(tred.value(A.from_label("e11")) == MultiPoly::parse(q, names, "1"));
    // tr_st = n * tr_red identically on the spanning set
    for (std::size_t k = 0; k < A.size(); ++k)
        CHECK(tst.basis_value(k) == tred.basis_value(k).scaled(Scalar::from_int(q, 2)));

    // char guard: n = 2 is not invertible... p = 5 is fine, but reduced mod p | n fails
    FieldSpec f5 = FieldSpec::prime(5);
    PresentedAlgebra A5 = build_matrix_order(f5);
    CHECK_NOTHROW(TraceMap::reduced(A5, 2));
    CHECK_THROWS_AS(TraceMap::reduced(A5, 5), char_guard_error);
}

TEST_CASE("standard trace equals regular trace on free algebras") {
    FieldSpec q = FieldSpec::rationals();
    WeylAlgebra w = weyl_a1(q);
    TraceMap treg = TraceMap::regular(w.alg);
    TraceMap tstd = TraceMap::standard(w.alg);
    TraceMap tred = TraceMap::reduced(w.alg, 2);
    for (std::size_t k = 0; k < w.alg.size(); ++k) {
        CHECK(treg.basis_value(k) == tstd.basis_value(k));
        CHECK(tstd.basis_value(k) == tred.basis_value(k).scaled(Scalar::from_int(q, 2)));
    }
    // weyl reduced trace example: tr_red(xy) = 1
    AlgElement xy = w.alg.multiply(w.gen_x(0), w.gen_y(0));
    CHECK(tred.value(xy) == MultiPoly::from_int(q, 2, 1));
}

TEST_CASE("trace cyclicity and linearity properties") {
    Rng rng(21);
    FieldSpec f13 = FieldSpec::prime(13);
    Scalar one = Scalar::one(f13), m = Scalar::from_int(f13, -1);

    PresentedAlgebra mo = build_matrix_order(f13);
    PresentedAlgebra qa = build_quantum_affine(f13, {{one, m, m}, {m, one, one}, {m, one, one}});

    auto check_properties = [&](const PresentedAlgebra& alg, const TraceMap& tr) {
        for (int trial = 0; trial < 500; ++trial) {
            AlgElement a = alg.random_element(rng);
            AlgElement b = alg.random_element(rng);
            CHECK(tr.pair(a, b) == tr.pair(b, a));
        }
        for (int trial = 0; trial < 100; ++trial) {
            AlgElement a = alg.random_element(rng);
            AlgElement b = alg.random_element(rng);
            MultiPoly z(alg.center.field(), alg.center.nvars());
            MultiPoly wc(alg.center.field(), alg.center.nvars());
            ExpVec ze(alg.center.nvars(), 0);
            ze[0] = 1;
            z.add_term(ze, Scalar::from_int(f13, 3));
            wc.add_term(ExpVec(alg.center.nvars(), 0), Scalar::from_int(f13, 2));
            MultiPoly lhs = tr.value(alg.add(alg.scale(a, z), alg.scale(b, wc)));
            MultiPoly rhs =
                alg.center.reduce(alg.center.mul(z, tr.value(a)) + alg.center.mul(wc, tr.value(b)));
            CHECK(lhs == rhs);
        }
    };

    check_properties(mo, TraceMap::standard(mo));
    check_properties(mo, TraceMap::reduced(mo, 2));
    check_properties(qa, TraceMap::standard(qa));
    check_properties(qa, TraceMap::reduced(qa, 2));

    WeylAlgebra w = weyl_a1(f13);
    check_properties(w.alg, TraceMap::regular(w.alg));
}

TEST_CASE("newton characteristic polynomials") {
    FieldSpec q = FieldSpec::rationals();
    WeylAlgebra w = weyl_a1(q);
    TraceMap tred = TraceMap::reduced(w.alg, 2);
    std::vector<std::string> names = {"X1", "Y1"};

    // a = 1: chi = x^2 - 2x + 1
    CharPoly cp1 = newton_char_poly(w.alg, w.alg.one(), 2, tred);
    CHECK(cp1.coeffs[0] == MultiPoly::parse(q, names, "2"));
    CHECK(cp1.coeffs[1] == MultiPoly::parse(q, names, "1"));

    // a = x: tr_red(x) = 0, tr_red(x^2) = 2 X1, so chi = t^2 - X1
    CharPoly cpx = newton_char_poly(w.alg, w.gen_x(0), 2, tred);
    CHECK(cpx.coeffs[0].is_zero());
    CHECK(cpx.coeffs[1] == MultiPoly::parse(q, names, "-X1"));
    CHECK(cayley_hamilton_check(w.alg, w.gen_x(0), 2, tred));

    // central elements: chi degenerates correctly
    AlgElement central = w.alg.scale(w.alg.one(), w.alg.center.var(0));
    CHECK(cayley_hamilton_check(w.alg, central, 2, tred));

    // characteristic guard
    FieldSpec f5 = FieldSpec::prime(5);
    WeylAlgebra w5 = weyl_a1(f5);
    TraceMap tred5 = TraceMap::reduced(w5.alg, 2);
    CHECK_NOTHROW(newton_char_poly(w5.alg, w5.gen_x(0), 2, tred5));
    FieldSpec f3 = FieldSpec::prime(3);
    WeylAlgebra w3 = weyl_a1(f3);
    TraceMap tst3 = TraceMap::standard(w3.alg);
    CHECK_THROWS_AS(newton_char_poly(w3.alg, w3.gen_x(0), 3, tst3), char_guard_error);
}

TEST_CASE("Cayley-Hamilton holds for random elements") {
    Rng rng(31);
    FieldSpec f13 = FieldSpec::prime(13);
    WeylAlgebra w = weyl_a1(f13);
    TraceMap tred = TraceMap::reduced(w.alg, 2);
    for (int trial = 0; trial < 100; ++trial) {
        AlgElement a = w.alg.random_element(rng);
        CHECK(cayley_hamilton_check(w.alg, a, 2, tred));
    }
    PresentedAlgebra mo = build_matrix_order(f13);
    TraceMap mred = TraceMap::reduced(mo, 2);
    for (int trial = 0; trial < 100; ++trial) {
        AlgElement a = mo.random_element(rng);
        CHECK(cayley_hamilton_check(mo, a, 2, mred));
    }
}

TEST_CASE("scaled traces") {
    FieldSpec q = FieldSpec::rationals();
    WeylAlgebra w = weyl_a1(q);
    TraceMap tred = TraceMap::reduced(w.alg, 2);
    TraceMap tz = TraceMap::scaled(tred, w.alg.center.var(0));
    CHECK(tz.kind() == TraceKind::scaled);
    std::vector<std::string> names = {"X1", "Y1"};
    CHECK(tz.value(w.alg.one()) == MultiPoly::parse(q, names, "2*X1"));
}
