#include <doctest.h>

#include "pidisc/discriminant.hpp"
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

PresentedAlgebra qa(const FieldSpec& f) {
    Scalar one = Scalar::one(f), m = Scalar::from_int(f, -1);
    return build_quantum_affine(f, {{one, m, m}, {m, one, one}, {m, one, one}});
}

} // namespace

TEST_CASE("gram matrix of the rank-1 Weyl algebra") {
    FieldSpec q = FieldSpec::rationals();
    WeylAlgebra w = weyl_a1(q);
    TraceMap tr = TraceMap::regular(w.alg);
    GramMatrix g = gram(w.alg, tr);
    std::vector<std::string> names = {"X1", "Y1"};
    auto P = [&](const char* s) { return MultiPoly::parse(q, names, s); };
    std::size_t i1 = w.index_of(ExpVec{0, 0}), ix = w.index_of(ExpVec{1, 0});
    std::size_t iy = w.index_of(ExpVec{0, 1}), ixy = w.index_of(ExpVec{1, 1});
    CHECK(g.mat.at(i1, i1) == P("4"));
    CHECK(g.mat.at(i1, ixy) == P("2"));
    CHECK(g.mat.at(ix, ix) == P("4*X1"));
    CHECK(g.mat.at(ix, iy) == P("2"));
    CHECK(g.mat.at(iy, iy) == P("4*Y1"));
    CHECK(g.mat.at(ixy, ixy) == P("2 - 4*X1*Y1"));
    CHECK(g.mat.at(ix, ixy).is_zero());

    MultiPoly disc = free_discriminant(w.alg, tr);
    CHECK(disc == -P("1 - 4*X1*Y1").pow(2).scaled(Scalar::from_int(q, 16)));
    // associate to the predicted closed form
    MultiPoly predicted = predicted_discriminant(w);
    auto ratio = disc.exact_div(predicted);
    REQUIRE(ratio.has_value());
    CHECK(ratio->is_constant());
    CHECK_FALSE(ratio->constant_value().is_zero());
}

TEST_CASE("gram of the trivial rank-1 free module") {
    // the center viewed as a free module over itself with the identity trace
    FieldSpec q = FieldSpec::rationals();
    PresentedAlgebra A;
    A.center = CentralRing::polynomial(q, {"t"});
    A.basis_labels = {"1"};
    A.table = {LinComb{{0, A.center.one()}}};
    A.identity = LinComb{{0, A.center.one()}};
    A.is_free = true;
    A.qbasis = {0};
    TraceMap tr = TraceMap::regular(A);
    GramMatrix g = gram(A, tr);
    CHECK(g.mat.at(0, 0) == A.center.one());
    CHECK(free_discriminant(A, tr) == A.center.one());
}

TEST_CASE("matrix order gram and vanishing top level") {
    FieldSpec q = FieldSpec::rationals();
    PresentedAlgebra A = build_matrix_order(q);
    TraceMap tr = TraceMap::standard(A);
    GramMatrix g = gram(A, tr);
    std::vector<std::string> names = {"x", "y"};
    auto P = [&](const char* s) { return MultiPoly::parse(q, names, s); };
    // last two rows/cols lie in <x, y>
    for (std::size_t k = 0; k < 5; ++k) {
        IdealGens xy = IdealGens::make({P("x"), P("y")});
        if (!g.mat.at(3, k).is_zero()) CHECK(linear_membership(g.mat.at(3, k), xy, 2));
        if (!g.mat.at(4, k).is_zero()) CHECK(linear_membership(g.mat.at(4, k), xy, 2));
    }
    // MD_5 = D_5 = 0
    DiscriminantResult md5 = md_generators(A, tr, 5);
    CHECK(md5.ideal.is_zero_ideal());
    DiscriminantResult d5 = d_generators_restricted(A, tr, 5);
    CHECK(d5.ideal.is_zero_ideal());
    // levels above |L| are zero outright
    CHECK(md_generators(A, tr, 6).ideal.is_zero_ideal());

    // level 1 generators span tr(R) up to units: the unit ideal here
    DiscriminantResult md1 = md_generators(A, tr, 1);
    bool has_unit = false;
    for (const auto& gpoly : md1.ideal.generators)
        if (gpoly.is_constant()) has_unit = true;
    CHECK(has_unit);
}

TEST_CASE("matrix order level-4 generators") {
    FieldSpec q = FieldSpec::rationals();
    PresentedAlgebra A = build_matrix_order(q);
    TraceMap tr = TraceMap::standard(A);
    std::vector<std::string> names = {"x", "y"};
    auto P = [&](const char* s) { return MultiPoly::parse(q, names, s); };

    DiscriminantResult d4 = d_generators_restricted(A, tr, 4);
    // the two surviving symmetric determinants are x^2 and y^2 up to scalars
    REQUIRE(d4.ideal.generators.size() == 2);
    CHECK(d4.ideal.generators[0] == P("y^2"));
    CHECK(d4.ideal.generators[1] == P("x^2"));

    DiscriminantResult md4 = md_generators(A, tr, 4);
    // mixed subsets add the xy generator
    REQUIRE(md4.ideal.generators.size() == 3);
    CHECK(md4.ideal.generators[0] == P("y^2"));
    CHECK(md4.ideal.generators[1] == P("x*y"));
    CHECK(md4.ideal.generators[2] == P("x^2"));

    // every generator lies in <x, y>; the inclusion of D-restricted in MD holds
    IdealGens xy = IdealGens::make({P("x"), P("y")});
    for (const auto& gp : md4.ideal.generators) CHECK(linear_membership(gp, xy, 6));
    for (const auto& gp : d4.ideal.generators) {
        bool found = false;
        for (const auto& mp : md4.ideal.generators)
            if (mp == gp) found = true;
        CHECK(found);
    }
}

TEST_CASE("quantum affine MD ideals match the known monomial ideals") {
    FieldSpec q = FieldSpec::rationals();
    PresentedAlgebra A = qa(q);
    TraceMap tr = TraceMap::standard(A);
    auto amb = A.center.ambient_map();

    // MD_3 = <A*B, A*C, A*D> i.e. <X1^2X2^2, X1^2X3^2, X1^2X2X3>
    DiscriminantResult md3 = md_generators(A, tr, 3);
    IdealGens small = IdealGens::make({A.center.parse("A*B"), A.center.parse("A*C"), A.center.parse("A*D")});
    CHECK(monomial_ideal_equal(md3.ideal, small, amb));

    // MD_4 = <A^2*B^2, A^2*B*D, A^2*B*C, A^2*C*D, A^2*C^2> = <X1^4 X2^i X3^(4-i)>
    DiscriminantResult md4 = md_generators(A, tr, 4);
    IdealGens mixed = IdealGens::make({A.center.parse("A^2*B^2"), A.center.parse("A^2*B*D"),
                                       A.center.parse("A^2*B*C"), A.center.parse("A^2*C*D"),
                                       A.center.parse("A^2*C^2")});
    CHECK(monomial_ideal_equal(md4.ideal, mixed, amb));
    // and it differs from MD_3
    CHECK_FALSE(monomial_ideal_equal(md4.ideal, small, amb));

    // levels above n^2 = 4 vanish
    CHECK(md_generators(A, tr, 5).ideal.is_zero_ideal());
    CHECK(md_generators(A, tr, 6).ideal.is_zero_ideal());
}

TEST_CASE("point gram ranks and zero-set membership") {
    FieldSpec q = FieldSpec::rationals();
    WeylAlgebra w = weyl_a1(q);
    TraceMap tr = TraceMap::regular(w.alg);
    auto s = [&](long long v) { return Scalar::from_int(q, v); };
    CHECK(point_gram_rank(w.alg, tr, {s(1), s(0)}) == 4);

    FieldSpec f5 = FieldSpec::prime(5);
    WeylAlgebra w5 = weyl_a1(f5);
    TraceMap tr5 = TraceMap::regular(w5.alg);
    auto s5 = [&](long long v) { return Scalar::from_int(f5, v); };
    CHECK(point_gram_rank(w5.alg, tr5, {s5(1), s5(4)}) == 2);

    PresentedAlgebra mo = build_matrix_order(q);
    TraceMap mtr = TraceMap::standard(mo);
    CHECK(point_gram_rank(mo, mtr, {s(0), s(0)}) == 2);
    CHECK(zero_set_membership(mo, mtr, 4, {s(0), s(0)}));
    CHECK_FALSE(zero_set_membership(mo, mtr, 4, {s(1), s(0)}));
    CHECK_FALSE(zero_set_membership(mo, mtr, 1, {s(1), s(0)}));

    // invalid quantum affine point
    PresentedAlgebra A = qa(q);
    TraceMap qtr = TraceMap::standard(A);
    CHECK_THROWS_AS(point_gram_rank(A, qtr, {s(1), s(1), s(1), s(2)}), invalid_point_error);
}

TEST_CASE("free presentations have a principal top-level ideal") {
    FieldSpec f5 = FieldSpec::prime(5);
    WeylAlgebra w = weyl_a1(f5);
    TraceMap tr = TraceMap::regular(w.alg);
    GramMatrix g = gram(w.alg, tr);
    MultiPoly disc = free_discriminant(w.alg, tr);

    // the restricted symmetric generators at the top level are exactly {disc}
    DiscriminantResult d4 = d_generators_restricted(w.alg, g, 4);
    REQUIRE(d4.ideal.generators.size() == 1);
    CHECK(d4.ideal.generators[0] == disc.monic());

    // the full MD generator set has the same zero set as {disc} across the grid
    DiscriminantResult md4 = md_generators(w.alg, g, 4);
    for (std::uint64_t a = 0; a < 5; ++a) {
        for (std::uint64_t b = 0; b < 5; ++b) {
            std::vector<Scalar> pt = {Scalar::from_residue(f5, a), Scalar::from_residue(f5, b)};
            bool disc_zero = disc.eval(pt).is_zero();
            bool all_zero = true;
            for (const auto& gen : md4.ideal.generators) all_zero = all_zero && gen.eval(pt).is_zero();
            CHECK(disc_zero == all_zero);
        }
    }

    // every restricted generator appears among the modified generators
    for (const auto& dg : d4.ideal.generators) {
        bool found = false;
        for (const auto& mg : md4.ideal.generators) found = found || mg == dg;
        CHECK(found);
    }
}

TEST_CASE("parallel determinant enumeration is deterministic") {
    FieldSpec f13 = FieldSpec::prime(13);
    WeylParams p;
    p.field = f13;
    p.lambda = {1};
    p.epsilon = {root_of_unity(std::uint64_t{13}, 3)};
    p.chi = {{Scalar::one(f13)}};
    WeylAlgebra w = build_weyl(p); // |L| = 9
    TraceMap tr = TraceMap::regular(w.alg);
    GramMatrix g = gram(w.alg, tr);
    // C(9,2)^2 = 1296 parallel jobs; repeated runs must agree generator by generator
    DiscriminantResult a = md_generators(w.alg, g, 2);
    DiscriminantResult b = md_generators(w.alg, g, 2);
    REQUIRE(a.ideal.generators.size() == b.ideal.generators.size());
    for (std::size_t i = 0; i < a.ideal.generators.size(); ++i)
        CHECK(a.ideal.generators[i] == b.ideal.generators[i]);
    CHECK(a.determinants_evaluated == 1296);
}

TEST_CASE("determinant budget guard") {
    FieldSpec f13 = FieldSpec::prime(13);
    WeylParams p;
    p.field = f13;
    p.lambda = {1, 1};
    p.epsilon = {Scalar::from_int(f13, -1), Scalar::from_int(f13, -1)};
    p.chi.assign(2, {Scalar::one(f13), Scalar::one(f13)});
    WeylAlgebra w = build_weyl(p);
    TraceMap tr = TraceMap::regular(w.alg);
    // C(16, 8)^2 pairs blow the default budget
    CHECK_THROWS_AS(md_generators(w.alg, tr, 8), budget_error);
}

TEST_CASE("monotonicity of zero-set membership in the level") {
    FieldSpec f5 = FieldSpec::prime(5);
    WeylAlgebra w = weyl_a1(f5);
    TraceMap tr = TraceMap::regular(w.alg);
    GramMatrix g = gram(w.alg, tr);
    for (std::uint64_t a = 0; a < 5; ++a) {
        for (std::uint64_t b = 0; b < 5; ++b) {
            std::vector<Scalar> pt = {Scalar::from_residue(f5, a), Scalar::from_residue(f5, b)};
            unsigned rank = point_gram_rank(w.alg, g, pt);
            for (unsigned l = 1; l <= 5; ++l) {
                bool member = rank < l;
                if (member)
                    for (unsigned l2 = l; l2 <= 5; ++l2) CHECK(rank < l2);
            }
        }
    }
}

TEST_CASE("free discriminant is basis independent up to scalars") {
    Rng rng(17);
    FieldSpec f13 = FieldSpec::prime(13);
    WeylAlgebra w = weyl_a1(f13);
    TraceMap tr = TraceMap::regular(w.alg);
    MultiPoly disc = free_discriminant(w.alg, tr);

    for (int trial = 0; trial < 5; ++trial) {
        // random unimodular integer change of basis: a few elementary operations
        std::size_t L = w.alg.size();
        std::vector<AlgElement> basis;
        for (std::size_t i = 0; i < L; ++i) basis.push_back(w.alg.basis_element(i));
        for (int step = 0; step < 6; ++step) {
            std::size_t i = rng.below(L), j = rng.below(L);
            if (i == j) continue;
            long long c = rng.range(-2, 2);
            basis[i] = w.alg.add(basis[i], w.alg.scale(basis[j], Scalar::from_int(f13, c)));
        }
        PolyMatrix gm(f13, w.alg.center.nvars(), L, L);
        for (std::size_t i = 0; i < L; ++i)
            for (std::size_t j = 0; j < L; ++j) gm.at(i, j) = tr.pair(basis[i], basis[j]);
        MultiPoly d2 = bareiss_det(gm);
        if (d2.is_zero()) continue; // degenerate transform (not unimodular), skip
        auto ratio = d2.exact_div(disc);
        REQUIRE(ratio.has_value());
        CHECK(ratio->is_constant());
    }
}

TEST_CASE("tuple-change identity for gram determinants") {
    // det of a transformed Gram equals the double sum of minor products
    Rng rng(23);
    FieldSpec f13 = FieldSpec::prime(13);
    for (int trial = 0; trial < 40; ++trial) {
        std::size_t l = 2 + rng.below(3); // ambient tuple size
        std::size_t m = 1 + rng.below(l); // transformed tuple size
        PolyMatrix H(f13, 2, l, l);
        for (std::size_t i = 0; i < l; ++i)
            for (std::size_t j = 0; j < l; ++j) {
                ExpVec e = {static_cast<std::uint32_t>(rng.below(2)), static_cast<std::uint32_t>(rng.below(2))};
                H.at(i, j) = MultiPoly::monomial(f13, e, Scalar::from_int(f13, rng.range(-2, 2)));
            }
        // integer matrices z, z' of shape l x m
        std::vector<std::vector<long long>> z(l, std::vector<long long>(m));
        std::vector<std::vector<long long>> zp(l, std::vector<long long>(m));
        for (auto& row : z)
            for (auto& v : row) v = rng.range(-2, 2);
        for (auto& row : zp)
            for (auto& v : row) v = rng.range(-2, 2);

        // transformed Gram: G~ = z^T H z'
        PolyMatrix G(f13, 2, m, m);
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j) {
                MultiPoly acc(f13, 2);
                for (std::size_t s = 0; s < l; ++s)
                    for (std::size_t t = 0; t < l; ++t)
                        acc += H.at(s, t).scaled(Scalar::from_int(f13, z[s][i] * zp[t][j]));
                G.at(i, j) = acc;
            }
        MultiPoly lhs = bareiss_det(G);

        // sum over index subsets I, J of minors det(z_I) det(z'_J) det(H[I, J])
        std::vector<std::vector<std::size_t>> subs;
        {
            std::vector<std::size_t> cur(m);
            for (std::size_t i = 0; i < m; ++i) cur[i] = i;
            while (true) {
                subs.push_back(cur);
                std::size_t i = m;
                bool done = false;
                while (i > 0) {
                    --i;
                    if (cur[i] != i + l - m) break;
                    if (i == 0) done = true;
                }
                if (done) break;
                ++cur[i];
                for (std::size_t j = i + 1; j < m; ++j) cur[j] = cur[j - 1] + 1;
            }
        }
        auto int_minor = [&](const std::vector<std::vector<long long>>& mat,
                             const std::vector<std::size_t>& rows) {
            PolyMatrix s(f13, 2, m, m);
            for (std::size_t i = 0; i < m; ++i)
                for (std::size_t j = 0; j < m; ++j)
                    s.at(i, j) = MultiPoly::from_int(f13, 2, mat[rows[i]][j]);
            return bareiss_det(s);
        };
        MultiPoly rhs(f13, 2);
        for (const auto& I : subs)
            for (const auto& J : subs) {
                MultiPoly term = int_minor(z, I) * int_minor(zp, J) * minor_det(H, I, J);
                rhs += term;
            }
        CHECK(lhs == rhs);
    }
}
