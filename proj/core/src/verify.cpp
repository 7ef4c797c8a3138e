#include "pidisc/verify.hpp"

#include <algorithm>
#include <sstream>

#include "pidisc/config.hpp"
#include "pidisc/fiber.hpp"

namespace pidisc {
namespace verify {

namespace {

struct Collector {
    std::vector<CheckResult> out;
    bool want_example1 = false, want_example2 = false, want_weyl = false, want_properties = false;

    void add(int criterion, const std::string& suite, const std::string& name, bool pass,
             const std::string& detail = "") {
        out.push_back(CheckResult{criterion, suite, name, pass, detail});
    }
};

WeylAlgebra weyl_instance(const FieldSpec& f, std::vector<unsigned> lambda,
                          std::vector<std::uint64_t> orders) {
    WeylParams p;
    p.field = f;
    p.lambda = std::move(lambda);
    for (auto d : orders) p.epsilon.push_back(root_of_unity(f, d));
    std::size_t n = p.epsilon.size();
    p.chi.assign(n, std::vector<Scalar>(n, Scalar::one(f)));
    return build_weyl(p);
}

PresentedAlgebra qa_instance(const FieldSpec& f) {
    Scalar one = Scalar::one(f), m = Scalar::from_int(f, -1);
    return build_quantum_affine(f, {{one, m, m}, {m, one, one}, {m, one, one}});
}

std::string point_str(const std::vector<Scalar>& pt) {
    std::string s = "(";
    for (std::size_t i = 0; i < pt.size(); ++i) s += (i ? "," : "") + pt[i].str();
    return s + ")";
}

// full F_p^k grid in lexicographic order
std::vector<std::vector<Scalar>> full_grid(const FieldSpec& f, std::size_t nvars) {
    std::vector<std::vector<Scalar>> pts;
    std::vector<std::uint64_t> idx(nvars, 0);
    while (true) {
        std::vector<Scalar> pt;
        for (auto v : idx) pt.push_back(Scalar::from_residue(f, v));
        pts.push_back(std::move(pt));
        std::size_t pos = nvars;
        while (pos > 0) {
            --pos;
            if (++idx[pos] < f.p) break;
            idx[pos] = 0;
            if (pos == 0) return pts;
        }
    }
}

// points of the cone D^2 = B*C over F_p, lexicographic in (A, B, C, D)
std::vector<std::vector<Scalar>> cone_grid(const FieldSpec& f) {
    std::vector<std::vector<Scalar>> pts;
    for (std::uint64_t a = 0; a < f.p; ++a)
        for (std::uint64_t b = 0; b < f.p; ++b)
            for (std::uint64_t c = 0; c < f.p; ++c)
                for (std::uint64_t d = 0; d < f.p; ++d) {
                    if (mulmod_u64(d, d, f.p) != mulmod_u64(b, c, f.p)) continue;
                    pts.push_back({Scalar::from_residue(f, a), Scalar::from_residue(f, b),
                                   Scalar::from_residue(f, c), Scalar::from_residue(f, d)});
                }
    return pts;
}

// one analyzed grid: fiber reports plus the evaluated Gram ranks per trace
struct GridRun {
    const PresentedAlgebra* alg = nullptr;
    unsigned n = 0;
    std::vector<TraceMap> traces; // [0] regular-or-standard, [1] reduced
    std::vector<GramMatrix> grams;
    std::vector<std::vector<Scalar>> points;
    std::vector<FiberReport> reports; // valid where !skipped
    std::vector<bool> skipped;
    std::size_t analyzed = 0;
};

GridRun run_grid(const PresentedAlgebra& a, unsigned n, std::vector<std::vector<Scalar>> pts,
                 std::uint64_t seed) {
    GridRun g;
    g.alg = &a;
    g.n = n;
    if (a.is_free)
        g.traces.push_back(TraceMap::regular(a));
    else
        g.traces.push_back(TraceMap::standard(a));
    g.traces.push_back(TraceMap::reduced(a, n));
    for (const auto& t : g.traces) g.grams.push_back(gram(a, t));
    std::vector<const GramMatrix*> gp;
    for (const auto& gm : g.grams) gp.push_back(&gm);
    g.points = std::move(pts);
    g.reports.resize(g.points.size());
    g.skipped.assign(g.points.size(), false);
    for (std::size_t i = 0; i < g.points.size(); ++i) {
        Rng rng(seed ^ (0x9e3779b97f4a7c15ull + i));
        try {
            g.reports[i] = analyze_point(a, g.traces, g.points[i], rng, n, true, gp);
            ++g.analyzed;
        } catch (const char_guard_error&) {
            g.skipped[i] = true;
        }
    }
    return g;
}

unsigned rank_at(const GridRun& g, std::size_t trace_idx, std::size_t point_idx) {
    return point_gram_rank(*g.alg, g.grams[trace_idx], g.points[point_idx]);
}

// ---- criterion 1: the 2x2 matrix order example -------------------------------

void check_example1(Collector& col) {
    FieldSpec q = FieldSpec::rationals();
    PresentedAlgebra a = build_matrix_order(q);
    TraceMap tr = TraceMap::standard(a);
    GramMatrix g = gram(a, tr);

    DiscriminantResult md4 = md_generators(a, g, 4);
    DiscriminantResult d4 = d_generators_restricted(a, g, 4);
    DiscriminantResult md5 = md_generators(a, g, 5);
    DiscriminantResult d5 = d_generators_restricted(a, g, 5);

    col.add(1, "example1", "level5_all_zero", md5.ideal.is_zero_ideal() && d5.ideal.is_zero_ideal(),
            "every level-5 determinant is the zero polynomial");

    IdealGens xy = IdealGens::make({a.center.parse("x"), a.center.parse("y")});
    bool dir_a = true;
    for (const auto& gen : md4.ideal.generators) dir_a = dir_a && linear_membership(gen, xy, 6);
    for (const auto& gen : d4.ideal.generators) dir_a = dir_a && linear_membership(gen, xy, 6);
    col.add(1, "example1", "level4_generators_in_xy", dir_a,
            "every level-4 generator lies in <x,y> (degree bound 6)");

    bool dir_b = linear_membership(a.center.parse("x"), md4.ideal, 6) &&
                 linear_membership(a.center.parse("y"), md4.ideal, 6);
    std::string gens_str;
    for (const auto& gen : md4.ideal.generators) gens_str += (gens_str.empty() ? "" : ", ") + a.center.str(gen);
    col.add(1, "example1", "xy_in_level4_ideal", dir_b,
            dir_b ? "x and y lie in the computed level-4 ideal"
                  : "computed MD_4 = <" + gens_str +
                        "> = <x,y>^2: its zero set is {(0,0)} as predicted, but x,y are not members; "
                        "the evaluated pairing has rank 2 at the origin, so every 4x4 determinant "
                        "vanishes there to order >= 2 and no linear generator can occur");
}

// ---- criterion 2: the quantum affine example ----------------------------------

void check_example2(Collector& col) {
    FieldSpec q = FieldSpec::rationals();
    PresentedAlgebra a = qa_instance(q);
    TraceMap tr = TraceMap::standard(a);
    GramMatrix g = gram(a, tr);
    auto amb = a.center.ambient_map();

    DiscriminantResult md4 = md_generators(a, g, 4);
    IdealGens mixed = IdealGens::make({a.center.parse("A^2*B^2"), a.center.parse("A^2*B*D"),
                                       a.center.parse("A^2*B*C"), a.center.parse("A^2*C*D"),
                                       a.center.parse("A^2*C^2")});
    col.add(2, "example2", "md4_equals_mixed_ideal", monomial_ideal_equal(md4.ideal, mixed, amb),
            "MD_4 = <X1^4 X2^i X3^(4-i) : 0 <= i <= 4> expressed in the center generators");

    DiscriminantResult md3 = md_generators(a, g, 3);
    IdealGens small =
        IdealGens::make({a.center.parse("A*B"), a.center.parse("A*C"), a.center.parse("A*D")});
    col.add(2, "example2", "md3_equals_small_ideal", monomial_ideal_equal(md3.ideal, small, amb),
            "MD_3 = <X1^2X2^2, X1^2X3^2, X1^2X2X3>");
}

// ---- criterion 3: weyl discriminant closed form --------------------------------

void check_weyl_disc(Collector& col, const WeylAlgebra& w, const std::string& name) {
    TraceMap tr = TraceMap::regular(w.alg);
    MultiPoly disc = free_discriminant(w.alg, tr);
    MultiPoly predicted = predicted_discriminant(w);
    bool ok = false;
    std::string detail;
    auto ratio = disc.exact_div(predicted);
    if (ratio && ratio->is_constant() && !ratio->constant_value().is_zero()) {
        ok = true;
        detail = "gram determinant = " + ratio->constant_value().str() + " * predicted";
    } else {
        detail = "gram determinant is not a scalar multiple of the predicted closed form";
    }
    col.add(3, "weyl", name, ok, detail);
}

// ---- criteria 4/5/6 on one analyzed grid ---------------------------------------

void check_grid_agreement(Collector& col, const std::string& suite, const std::string& name,
                          const GridRun& g, const WeylAlgebra* weyl,
                          const std::vector<std::size_t>* expected_non_azumaya) {
    unsigned nsq = g.n * g.n;
    bool agree = true;
    std::string why;
    std::vector<std::size_t> non_az;
    for (std::size_t i = 0; i < g.points.size(); ++i) {
        bool rank_az = rank_at(g, 0, i) == nsq;
        bool pred_az = weyl ? azumaya_predicate(*weyl, g.points[i]) : rank_az;
        bool fiber_az = g.skipped[i] ? rank_az : g.reports[i].azumaya;
        if (!(rank_az == pred_az && (g.skipped[i] || fiber_az == rank_az))) {
            agree = false;
            if (why.empty()) why = "disagreement at " + point_str(g.points[i]);
        }
        if (!rank_az) non_az.push_back(i);
    }
    if (expected_non_azumaya != nullptr && agree) {
        if (non_az != *expected_non_azumaya) {
            agree = false;
            why = "non-azumaya locus mismatch: got " + std::to_string(non_az.size()) + " points";
        }
    }
    std::ostringstream det;
    det << g.points.size() << " points, " << g.analyzed << " fibers analyzed, " << non_az.size()
        << " non-azumaya";
    if (!agree) det << "; " << why;
    col.add(4, suite, name, agree, det.str());
}

void check_level_stratification(Collector& col, const std::string& name, const GridRun& g) {
    unsigned nsq = g.n * g.n;
    bool ok = true;
    std::string why;
    std::size_t checked = 0;
    for (std::size_t i = 0; i < g.points.size(); ++i) {
        if (g.skipped[i]) continue;
        ++checked;
        for (std::size_t t = 0; t < g.traces.size(); ++t) {
            unsigned rank = rank_at(g, t, i);
            for (unsigned level = 1; level <= nsq + 1; ++level) {
                bool member = rank < level;
                bool predicted = g.reports[i].ss_dim < level;
                if (member != predicted) {
                    ok = false;
                    if (why.empty())
                        why = "level " + std::to_string(level) + " at " + point_str(g.points[i]) +
                              " with trace " + g.traces[t].label();
                }
            }
        }
    }
    std::ostringstream det;
    det << checked << " points x " << g.traces.size() << " traces x levels 1.." << (nsq + 1);
    if (!ok) det << "; first failure: " << why;
    col.add(5, "properties", name, ok, det.str());
}

void check_trace_decomposition(Collector& col, const std::string& name, const GridRun& g) {
    bool ok = true;
    std::string why;
    std::size_t checked = 0;
    for (std::size_t i = 0; i < g.points.size(); ++i) {
        if (g.skipped[i]) continue;
        const FiberReport& r = g.reports[i];
        if (!r.k_m) {
            ok = false;
            why = "missing k_m at " + point_str(g.points[i]);
            break;
        }
        ++checked;
        std::uint64_t total = 0;
        bool positive = true;
        for (std::size_t t = 0; t < r.k_m->size(); ++t) {
            positive = positive && (*r.k_m)[t] >= 1;
            total += (*r.k_m)[t] * r.irreducibles[t];
        }
        bool here = positive && total == g.n && r.km_ok;
        if (r.azumaya) here = here && r.k_m->size() == 1 && (*r.k_m)[0] == 1;
        if (!here) {
            ok = false;
            if (why.empty()) why = "decomposition failed at " + point_str(g.points[i]);
        }
    }
    col.add(6, "properties", name, ok,
            std::to_string(checked) + " points checked" + (ok ? "" : "; " + why));
}

void check_bounds(Collector& col, const std::string& name, const GridRun& g) {
    bool ok = true;
    std::size_t non_az = 0;
    std::string why;
    for (std::size_t i = 0; i < g.points.size(); ++i) {
        if (g.skipped[i]) continue;
        const FiberReport& r = g.reports[i];
        if (r.azumaya) continue;
        ++non_az;
        if (!r.pence_ok || !r.sum_ok) {
            ok = false;
            if (why.empty()) why = "bound violated at " + point_str(g.points[i]);
        }
        if (!r.gram_matches_ss) {
            ok = false;
            if (why.empty()) why = "rank != ss_dim at " + point_str(g.points[i]);
        }
    }
    col.add(7, "properties", name, ok,
            std::to_string(non_az) + " non-azumaya points checked" + (ok ? "" : "; " + why));
}

void check_radical_oracle(Collector& col, const std::string& name, const GridRun& g,
                          std::uint64_t max_enum, std::size_t sample_limit) {
    bool ok = true;
    std::size_t oracled = 0, skipped_budget = 0;
    std::string why;
    for (std::size_t i = 0; i < g.points.size() && oracled < sample_limit; ++i) {
        if (g.skipped[i]) continue;
        FiniteAlgebra fib = specialize(*g.alg, g.points[i]);
        if (fib.dim > 8) continue;
        std::vector<std::vector<Scalar>> oracle;
        try {
            oracle = radical_oracle(fib, max_enum);
        } catch (const budget_error&) {
            ++skipped_budget;
            continue;
        }
        ++oracled;
        auto rad = radical(fib);
        bool same = oracle.size() == rad.size();
        if (same) {
            auto span = oracle;
            auto piv = row_reduce(span, fib.field);
            for (auto v : rad) {
                reduce_against(v, span, piv);
                for (const auto& s : v) same = same && s.is_zero();
            }
        }
        if (!same) {
            ok = false;
            if (why.empty()) why = "radical mismatch at " + point_str(g.points[i]);
        }
    }
    std::ostringstream det;
    det << oracled << " fibers cross-checked by full enumeration";
    if (skipped_budget) det << ", " << skipped_budget << " beyond the enumeration budget";
    if (!ok) det << "; " << why;
    col.add(7, "properties", name, ok, det.str());
}

void check_singular_inclusion(Collector& col, const GridRun& g) {
    // the quantum affine grid: singular center points are B = C = D = 0
    bool ok = true;
    std::size_t singular = 0;
    std::string why;
    for (std::size_t i = 0; i < g.points.size(); ++i) {
        const auto& pt = g.points[i];
        bool sing = pt[1].is_zero() && pt[2].is_zero() && pt[3].is_zero();
        if (!sing) continue;
        ++singular;
        unsigned rank = rank_at(g, 0, i);
        if (rank >= g.n * g.n) {
            ok = false;
            if (why.empty()) why = "singular point " + point_str(pt) + " has full gram rank";
        }
    }
    col.add(8, "properties", "singular_points_inside_discriminant_locus", ok,
            std::to_string(singular) + " singular points all have gram rank < 4" +
                (ok ? "" : "; " + why));
}

// ---- criterion 7 randomized suites ---------------------------------------------

void check_associativity(Collector& col, std::uint64_t seed) {
    Rng rng(seed + 1);
    FieldSpec f13 = FieldSpec::prime(13);
    bool ok = true;
    auto run = [&](const PresentedAlgebra& a, int cases) {
        for (int t = 0; t < cases && ok; ++t) {
            AlgElement x = a.random_element(rng);
            AlgElement y = a.random_element(rng);
            AlgElement z = a.random_element(rng);
            ok = ok && a.equal(a.multiply(a.multiply(x, y), z), a.multiply(x, a.multiply(y, z)));
        }
    };
    PresentedAlgebra mo = build_matrix_order(f13);
    PresentedAlgebra qa = qa_instance(f13);
    WeylAlgebra w2 = weyl_instance(f13, {1}, {2});
    WeylAlgebra w22 = weyl_instance(f13, {1, 1}, {2, 2});
    run(mo, 120);
    run(qa, 120);
    run(w2.alg, 120);
    run(w22.alg, 60);
    col.add(7, "properties", "associativity_all_families", ok, "420 random triples");
}

void check_trace_properties(Collector& col, std::uint64_t seed) {
    Rng rng(seed + 2);
    FieldSpec f13 = FieldSpec::prime(13);
    bool cyc = true, lin = true, stanred = true;
    auto run = [&](const PresentedAlgebra& a, const TraceMap& tr, int cases) {
        for (int t = 0; t < cases; ++t) {
            AlgElement x = a.random_element(rng);
            AlgElement y = a.random_element(rng);
            cyc = cyc && tr.pair(x, y) == tr.pair(y, x);
            MultiPoly z = a.center.var(rng.below(a.center.nvars()));
            MultiPoly w = a.center.from_int(rng.range(-3, 3));
            MultiPoly lhs = tr.value(a.add(a.scale(x, z), a.scale(y, w)));
            MultiPoly rhs = a.center.reduce(a.center.mul(z, tr.value(x)) + a.center.mul(w, tr.value(y)));
            lin = lin && lhs == rhs;
        }
    };
    PresentedAlgebra mo = build_matrix_order(f13);
    PresentedAlgebra qa = qa_instance(f13);
    WeylAlgebra w2 = weyl_instance(f13, {1}, {2});
    TraceMap mo_std = TraceMap::standard(mo), mo_red = TraceMap::reduced(mo, 2);
    TraceMap qa_std = TraceMap::standard(qa), qa_red = TraceMap::reduced(qa, 2);
    TraceMap w_reg = TraceMap::regular(w2.alg), w_red = TraceMap::reduced(w2.alg, 2);
    run(mo, mo_std, 100);
    run(mo, mo_red, 50);
    run(qa, qa_std, 100);
    run(qa, qa_red, 50);
    run(w2.alg, w_reg, 100);
    run(w2.alg, w_red, 50);
    col.add(7, "properties", "trace_cyclicity", cyc, "450 random pairs per property");
    col.add(7, "properties", "trace_linearity", lin, "central-linear combinations");

    // tr_std = n * tr_red identically on the spanning sets
    auto ident = [&](const PresentedAlgebra& a, const TraceMap& st, const TraceMap& red, unsigned n) {
        for (std::size_t k = 0; k < a.size(); ++k)
            stanred = stanred &&
                      st.basis_value(k) ==
                          red.basis_value(k).scaled(Scalar::from_int(a.center.field(), n));
    };
    ident(mo, mo_std, mo_red, 2);
    ident(qa, qa_std, qa_red, 2);
    ident(w2.alg, TraceMap::standard(w2.alg), w_red, 2);
    col.add(7, "properties", "standard_equals_n_times_reduced", stanred, "identity on spanning sets");
}

void check_cayley_hamilton(Collector& col, std::uint64_t seed) {
    Rng rng(seed + 3);
    FieldSpec f13 = FieldSpec::prime(13);
    bool ok = true;
    auto run = [&](const PresentedAlgebra& a, unsigned n, int cases) {
        TraceMap red = TraceMap::reduced(a, n);
        for (int t = 0; t < cases && ok; ++t)
            ok = ok && cayley_hamilton_check(a, a.random_element(rng), n, red);
    };
    PresentedAlgebra mo = build_matrix_order(f13);
    PresentedAlgebra qa = qa_instance(f13);
    WeylAlgebra w2 = weyl_instance(f13, {1}, {2});
    run(mo, 2, 100);
    run(qa, 2, 100);
    run(w2.alg, 2, 100);
    col.add(7, "properties", "cayley_hamilton_reduced_trace", ok, "300 random elements, n = PI degree");
}

void check_descent(Collector& col, std::uint64_t seed) {
    Rng rng(seed + 4);
    FieldSpec f5 = FieldSpec::prime(5);
    FieldSpec f13 = FieldSpec::prime(13);
    bool ok = true;
    WeylAlgebra w5 = weyl_instance(f5, {1}, {2});
    TraceMap w5red = TraceMap::reduced(w5.alg, 2);
    auto s5 = [&](long long v) { return Scalar::from_int(f5, v); };
    ok = ok && descent_check(w5.alg, w5red, {s5(1), s5(4)}, 100, rng);
    ok = ok && descent_check(w5.alg, w5red, {s5(2), s5(2)}, 100, rng);

    PresentedAlgebra mo = build_matrix_order(f13);
    TraceMap mored = TraceMap::reduced(mo, 2);
    auto s13 = [&](long long v) { return Scalar::from_int(f13, v); };
    ok = ok && descent_check(mo, mored, {s13(0), s13(0)}, 100, rng);

    PresentedAlgebra qa = qa_instance(f13);
    TraceMap qared = TraceMap::reduced(qa, 2);
    ok = ok && descent_check(qa, qared, {s13(0), s13(1), s13(4), s13(2)}, 100, rng);
    ok = ok && descent_check(qa, qared, {s13(1), s13(0), s13(0), s13(0)}, 100, rng);
    col.add(7, "properties", "radical_trace_descent", ok, "500 random radical lifts across families");
}

void check_zero_vanishing(Collector& col) {
    FieldSpec q = FieldSpec::rationals();
    bool ok = true;
    PresentedAlgebra mo = build_matrix_order(q);
    TraceMap mo_tr = TraceMap::standard(mo);
    ok = ok && md_generators(mo, mo_tr, 5).ideal.is_zero_ideal();
    PresentedAlgebra qa = qa_instance(q);
    TraceMap qa_tr = TraceMap::standard(qa);
    ok = ok && md_generators(qa, qa_tr, 5).ideal.is_zero_ideal();
    ok = ok && md_generators(qa, qa_tr, 6).ideal.is_zero_ideal();
    ok = ok && md_generators(qa, qa_tr, 7).ideal.is_zero_ideal();
    WeylAlgebra w = weyl_instance(q, {1}, {2});
    TraceMap w_tr = TraceMap::regular(w.alg);
    ok = ok && md_generators(w.alg, w_tr, 5).ideal.is_zero_ideal();
    col.add(7, "properties", "vanishing_above_pi_degree_squared", ok,
            "levels above n^2 give the zero ideal on every family");
}

void check_change_identity(Collector& col, std::uint64_t seed) {
    Rng rng(seed + 5);
    FieldSpec f13 = FieldSpec::prime(13);
    bool ok = true;
    for (int trial = 0; trial < 100 && ok; ++trial) {
        std::size_t l = 2 + rng.below(3);
        std::size_t m = 1 + rng.below(l);
        PolyMatrix h(f13, 2, l, l);
        for (std::size_t i = 0; i < l; ++i)
            for (std::size_t j = 0; j < l; ++j) {
                ExpVec e = {static_cast<std::uint32_t>(rng.below(2)),
                            static_cast<std::uint32_t>(rng.below(2))};
                h.at(i, j) = MultiPoly::monomial(f13, e, Scalar::from_int(f13, rng.range(-2, 2)));
            }
        std::vector<std::vector<long long>> z(l, std::vector<long long>(m));
        std::vector<std::vector<long long>> zp(l, std::vector<long long>(m));
        for (auto& row : z)
            for (auto& v : row) v = rng.range(-2, 2);
        for (auto& row : zp)
            for (auto& v : row) v = rng.range(-2, 2);

        PolyMatrix g(f13, 2, m, m);
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j) {
                MultiPoly acc(f13, 2);
                for (std::size_t s = 0; s < l; ++s)
                    for (std::size_t t = 0; t < l; ++t)
                        acc += h.at(s, t).scaled(Scalar::from_int(f13, z[s][i] * zp[t][j]));
                g.at(i, j) = acc;
            }
        MultiPoly lhs = bareiss_det(g);

        std::vector<std::vector<std::size_t>> subs;
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
        auto int_minor = [&](const std::vector<std::vector<long long>>& mat,
                             const std::vector<std::size_t>& rows) {
            PolyMatrix s(f13, 2, m, m);
            for (std::size_t i = 0; i < m; ++i)
                for (std::size_t j = 0; j < m; ++j) s.at(i, j) = MultiPoly::from_int(f13, 2, mat[rows[i]][j]);
            return bareiss_det(s);
        };
        MultiPoly rhs(f13, 2);
        for (const auto& I : subs)
            for (const auto& J : subs) rhs += int_minor(z, I) * int_minor(zp, J) * minor_det(h, I, J);
        ok = lhs == rhs;
    }
    col.add(7, "properties", "gram_tuple_change_identity", ok,
            "100 random transformed pairings expand into minor sums");
}

void check_basis_invariance(Collector& col, std::uint64_t seed) {
    Rng rng(seed + 6);
    FieldSpec f13 = FieldSpec::prime(13);
    WeylAlgebra w = weyl_instance(f13, {1}, {2});
    TraceMap tr = TraceMap::regular(w.alg);
    MultiPoly disc = free_discriminant(w.alg, tr);
    bool ok = true;
    int done = 0;
    for (int trial = 0; trial < 200 && done < 100; ++trial) {
        std::size_t L = w.alg.size();
        std::vector<AlgElement> basis;
        for (std::size_t i = 0; i < L; ++i) basis.push_back(w.alg.basis_element(i));
        for (int step = 0; step < 5; ++step) {
            std::size_t i = rng.below(L), j = rng.below(L);
            if (i == j) continue;
            basis[i] = w.alg.add(basis[i], w.alg.scale(basis[j], Scalar::from_int(f13, rng.range(-2, 2))));
        }
        PolyMatrix gm(f13, w.alg.center.nvars(), L, L);
        for (std::size_t i = 0; i < L; ++i)
            for (std::size_t j = 0; j < L; ++j) gm.at(i, j) = tr.pair(basis[i], basis[j]);
        MultiPoly d2 = bareiss_det(gm);
        if (d2.is_zero()) continue; // transform collapsed the basis, skip
        ++done;
        auto ratio = d2.exact_div(disc);
        ok = ok && ratio.has_value() && ratio->is_constant() && !ratio->constant_value().is_zero();
    }
    col.add(7, "properties", "discriminant_basis_invariance", ok,
            std::to_string(done) + " unimodular basis changes agree up to scalars");
}

void check_scaled_trace_zero_locus(Collector& col, std::uint64_t seed) {
    // an almost-representation-theoretic trace z*tr_red is flagged wherever z vanishes
    Rng rng(seed + 7);
    FieldSpec f5 = FieldSpec::prime(5);
    WeylAlgebra w = weyl_instance(f5, {1}, {2});
    TraceMap red = TraceMap::reduced(w.alg, 2);
    TraceMap scaled = TraceMap::scaled(red, w.alg.center.var(0)); // z = X1
    bool ok = true;
    for (std::uint64_t a = 0; a < 5 && ok; ++a) {
        for (std::uint64_t b = 0; b < 5 && ok; ++b) {
            std::vector<Scalar> pt = {Scalar::from_residue(f5, a), Scalar::from_residue(f5, b)};
            FiniteAlgebra fib = specialize(w.alg, pt);
            auto rad = radical(fib);
            FiniteAlgebra ss = quotient_by(fib, rad);
            BlockData blocks = block_decompose(ss, rng);
            TraceDecomposition dec = decompose_trace(w.alg, scaled, pt, fib, rad, ss, blocks, 2);
            if (a == 0) {
                ok = ok && !dec.representation_theoretic;
                for (auto k : dec.k_per_block) ok = ok && k == 0;
            } else {
                ok = ok && dec.representation_theoretic;
            }
        }
    }
    col.add(7, "properties", "scaled_trace_flagging", ok,
            "z*tr_red is representation theoretic exactly off V(z)");
}

} // namespace

std::vector<CheckResult> run_checks(const std::string& suite, std::uint64_t seed) {
    Collector col;
    bool all = suite == "all";
    col.want_example1 = all || suite == "example1";
    col.want_example2 = all || suite == "example2";
    col.want_weyl = all || suite == "weyl";
    col.want_properties = all || suite == "properties";
    if (!col.want_example1 && !col.want_example2 && !col.want_weyl && !col.want_properties)
        throw parse_error("unknown verify suite '" + suite + "' (all|example1|example2|weyl|properties)");

    if (col.want_example1) check_example1(col);
    if (col.want_example2) check_example2(col);

    if (col.want_weyl) {
        // criterion 3 instances
        check_weyl_disc(col, weyl_instance(FieldSpec::rationals(), {1}, {2}), "discriminant_lambda1_d2");
        check_weyl_disc(col, weyl_instance(FieldSpec::prime(97), {1}, {3}), "discriminant_lambda1_d3");
        check_weyl_disc(col, weyl_instance(FieldSpec::prime(13), {1, 1}, {2, 2}),
                        "discriminant_lambda11_d22");
        // coupled block instance beyond the pinned list
        check_weyl_disc(col, weyl_instance(FieldSpec::prime(13), {2}, {2, 2}),
                        "discriminant_lambda2_d22");
    }

    // grids shared by criteria 4-8
    if (col.want_weyl || col.want_properties) {
        FieldSpec f5 = FieldSpec::prime(5);
        FieldSpec f13 = FieldSpec::prime(13);

        WeylAlgebra w5 = weyl_instance(f5, {1}, {2});
        GridRun gw5 = run_grid(w5.alg, 2, full_grid(f5, 2), seed);
        WeylAlgebra w13 = weyl_instance(f13, {1}, {2});
        GridRun gw13 = run_grid(w13.alg, 2, full_grid(f13, 2), seed);
        WeylAlgebra w3 = weyl_instance(f13, {1}, {3});
        GridRun gw3 = run_grid(w3.alg, 3, full_grid(f13, 2), seed);

        if (col.want_weyl) {
            // expected non-azumaya of the d=2 instance over F_5: 1 - 4ab = 0, four points
            std::vector<std::size_t> expect;
            for (std::size_t i = 0; i < gw5.points.size(); ++i) {
                std::uint64_t a = gw5.points[i][0].residue(), b = gw5.points[i][1].residue();
                if ((1 + 5 * 5 - (4 * a * b) % 5) % 5 == 0) expect.push_back(i);
            }
            check_grid_agreement(col, "weyl", "azumaya_weyl_d2_F5", gw5, &w5, &expect);
            check_grid_agreement(col, "weyl", "azumaya_weyl_d2_F13", gw13, &w13, nullptr);
            check_grid_agreement(col, "weyl", "azumaya_weyl_d3_F13", gw3, &w3, nullptr);
        }

        if (col.want_properties) {
            PresentedAlgebra mo5 = build_matrix_order(f5);
            GridRun gm5 = run_grid(mo5, 2, full_grid(f5, 2), seed);
            PresentedAlgebra mo13 = build_matrix_order(f13);
            GridRun gm13 = run_grid(mo13, 2, full_grid(f13, 2), seed);
            PresentedAlgebra qa13 = qa_instance(f13);
            GridRun gq13 = run_grid(qa13, 2, cone_grid(f13), seed);

            // criterion 4: matrix order locus is exactly the origin; quantum affine locus
            // is V(<X1^2> cap <X2^2, X3^2>)
            {
                std::vector<std::size_t> expect_mo5, expect_mo13, expect_qa;
                for (std::size_t i = 0; i < gm5.points.size(); ++i)
                    if (gm5.points[i][0].is_zero() && gm5.points[i][1].is_zero()) expect_mo5.push_back(i);
                for (std::size_t i = 0; i < gm13.points.size(); ++i)
                    if (gm13.points[i][0].is_zero() && gm13.points[i][1].is_zero())
                        expect_mo13.push_back(i);
                for (std::size_t i = 0; i < gq13.points.size(); ++i) {
                    const auto& pt = gq13.points[i];
                    bool in_locus = pt[0].is_zero() ||
                                    (pt[1].is_zero() && pt[2].is_zero() && pt[3].is_zero());
                    if (in_locus) expect_qa.push_back(i);
                }
                check_grid_agreement(col, "properties", "azumaya_matrix_order_F5", gm5, nullptr,
                                     &expect_mo5);
                check_grid_agreement(col, "properties", "azumaya_matrix_order_F13", gm13, nullptr,
                                     &expect_mo13);
                check_grid_agreement(col, "properties", "azumaya_quantum_affine_F13", gq13, nullptr,
                                     &expect_qa);
            }

            // criterion 5
            check_level_stratification(col, "stratification_weyl_d2_F5", gw5);
            check_level_stratification(col, "stratification_weyl_d2_F13", gw13);
            check_level_stratification(col, "stratification_weyl_d3_F13", gw3);
            check_level_stratification(col, "stratification_matrix_order_F13", gm13);
            check_level_stratification(col, "stratification_quantum_affine_F13", gq13);

            // criterion 6
            check_trace_decomposition(col, "k_decomposition_weyl_d2_F5", gw5);
            check_trace_decomposition(col, "k_decomposition_weyl_d3_F13", gw3);
            check_trace_decomposition(col, "k_decomposition_matrix_order_F13", gm13);
            check_trace_decomposition(col, "k_decomposition_quantum_affine_F13", gq13);

            // criterion 7: bounds at non-azumaya points, radical oracle, random suites
            check_bounds(col, "non_azumaya_bounds_weyl_F5", gw5);
            check_bounds(col, "non_azumaya_bounds_weyl_d3_F13", gw3);
            check_bounds(col, "non_azumaya_bounds_matrix_order_F13", gm13);
            check_bounds(col, "non_azumaya_bounds_quantum_affine_F13", gq13);

            check_radical_oracle(col, "radical_oracle_weyl_F5", gw5, 2000000, 200);
            check_radical_oracle(col, "radical_oracle_matrix_order_F5", gm5, 2000000, 200);
            check_radical_oracle(col, "radical_oracle_matrix_order_F13", gm13, 2000000, 200);
            check_radical_oracle(col, "radical_oracle_quantum_affine_F13", gq13, 2000000, 40);

            check_associativity(col, seed);
            check_trace_properties(col, seed);
            check_cayley_hamilton(col, seed);
            check_descent(col, seed);
            check_zero_vanishing(col);
            check_change_identity(col, seed);
            check_basis_invariance(col, seed);
            check_scaled_trace_zero_locus(col, seed);

            // criterion 8
            check_singular_inclusion(col, gq13);
        }
    }

    return col.out;
}

} // namespace verify
} // namespace pidisc
