#include "pidisc/algebra.hpp"

#include <algorithm>

namespace pidisc {

AlgElement PresentedAlgebra::basis_element(std::size_t i) const {
    if (i >= size()) throw shape_error("basis index out of range");
    AlgElement a;
    a.coeffs.emplace(i, center.one());
    return a;
}

std::size_t PresentedAlgebra::label_index(const std::string& label) const {
    for (std::size_t i = 0; i < basis_labels.size(); ++i)
        if (basis_labels[i] == label) return i;
    throw shape_error("unknown basis label '" + label + "'");
}

AlgElement PresentedAlgebra::from_label(const std::string& label) const {
    return basis_element(label_index(label));
}

AlgElement PresentedAlgebra::add(const AlgElement& a, const AlgElement& b) const {
    AlgElement r = a;
    for (const auto& [k, c] : b.coeffs) {
        auto [it, inserted] = r.coeffs.emplace(k, c);
        if (!inserted) {
            it->second += c;
            if (center.reduce(it->second).is_zero()) r.coeffs.erase(it);
        }
    }
    canonicalize(r);
    return r;
}

AlgElement PresentedAlgebra::sub(const AlgElement& a, const AlgElement& b) const {
    return add(a, scale(b, Scalar::from_int(center.field(), -1)));
}

AlgElement PresentedAlgebra::scale(const AlgElement& a, const MultiPoly& c) const {
    AlgElement r;
    MultiPoly cr = center.reduce(c);
    if (cr.is_zero()) return r;
    for (const auto& [k, v] : a.coeffs) {
        MultiPoly prod = center.mul(v, cr);
        if (!prod.is_zero()) r.coeffs.emplace(k, prod);
    }
    canonicalize(r);
    return r;
}

AlgElement PresentedAlgebra::scale(const AlgElement& a, const Scalar& c) const {
    return scale(a, MultiPoly::constant(center.field(), center.nvars(), c));
}

AlgElement PresentedAlgebra::multiply(const AlgElement& a, const AlgElement& b) const {
    AlgElement r;
    for (const auto& [i, ci] : a.coeffs) {
        for (const auto& [j, cj] : b.coeffs) {
            MultiPoly cc = center.mul(ci, cj);
            if (cc.is_zero()) continue;
            for (const auto& [k, ck] : entry(i, j)) {
                MultiPoly add = center.mul(cc, ck);
                if (add.is_zero()) continue;
                auto [it, inserted] = r.coeffs.emplace(k, add);
                if (!inserted) {
                    it->second += add;
                    it->second = center.reduce(it->second);
                    if (it->second.is_zero()) r.coeffs.erase(it);
                }
            }
        }
    }
    canonicalize(r);
    return r;
}

AlgElement PresentedAlgebra::power(const AlgElement& a, unsigned e) const {
    AlgElement r = one();
    for (unsigned i = 0; i < e; ++i) r = multiply(r, a);
    return r;
}

namespace detail {

// spanning monomials of the quantum affine instance, in builder order
const std::vector<ExpVec>& qa_labels() {
    static const std::vector<ExpVec> labels = {{0, 0, 0}, {1, 0, 0}, {0, 1, 0},
                                               {0, 0, 1}, {1, 1, 0}, {1, 0, 1}};
    return labels;
}

// canonical split of an ambient monomial into central part (A,B,C,D exponents) and label
std::pair<ExpVec, std::size_t> qa_decompose(const ExpVec& g) {
    std::uint32_t m = std::min(g[1], g[2]);
    std::uint32_t s = g[1] - m, t = g[2] - m;
    ExpVec cexp = {g[0] / 2, s / 2 + m / 2, t / 2 + m / 2, m % 2};
    ExpVec lab = {g[0] % 2, s % 2, t % 2};
    const auto& labels = qa_labels();
    for (std::size_t k = 0; k < labels.size(); ++k)
        if (labels[k] == lab) return {cexp, k};
    throw inconsistency_error("ambient monomial left the quantum affine spanning set");
}

} // namespace detail

void PresentedAlgebra::canonicalize(AlgElement& a) const {
    for (auto it = a.coeffs.begin(); it != a.coeffs.end();) {
        it->second = center.reduce(it->second);
        if (it->second.is_zero())
            it = a.coeffs.erase(it);
        else
            ++it;
    }
    if (canon == CanonKind::quantum_affine) {
        // central coefficients commute across the spanning monomials without signs
        // (their ambient degrees are even in X1 and in X2+X3), so coordinates are
        // canonicalized by splitting each ambient monomial afresh
        const auto& labels = detail::qa_labels();
        LinComb out;
        for (const auto& [k, c] : a.coeffs) {
            for (const auto& [e, s] : c.terms()) {
                ExpVec g = {2 * e[0] + labels[k][0], 2 * e[1] + e[3] + labels[k][1],
                            2 * e[2] + e[3] + labels[k][2]};
                auto [cexp, lab] = detail::qa_decompose(g);
                MultiPoly mono = MultiPoly::monomial(center.field(), cexp, s);
                auto [it, inserted] = out.emplace(lab, mono);
                if (!inserted) {
                    it->second += mono;
                    if (it->second.is_zero()) out.erase(it);
                }
            }
        }
        a.coeffs = std::move(out);
        return;
    }
    if (canon == CanonKind::matrix_order_e12) {
        // slots: |L|-2 = x*e12, |L|-1 = y*e12; variables (x, y) = (0, 1) of the center
        std::size_t xs = size() - 2, ys = size() - 1;
        auto it = a.coeffs.find(xs);
        if (it == a.coeffs.end()) return;
        MultiPoly alpha = it->second;
        // split alpha into y-free part and the rest
        MultiPoly afree(center.field(), center.nvars());
        MultiPoly carry(center.field(), center.nvars()); // (alpha - afree)/y
        for (const auto& [e, c] : alpha.terms()) {
            if (e[1] == 0) {
                afree.add_term(e, c);
            } else {
                ExpVec d = e;
                d[1] -= 1;
                carry.add_term(d, c);
            }
        }
        if (carry.is_zero()) return;
        // alpha*x + beta*y = afree*x + (beta + carry*x)*y
        if (afree.is_zero())
            a.coeffs.erase(it);
        else
            it->second = afree;
        MultiPoly shift = carry * center.var(0);
        auto [jt, inserted] = a.coeffs.emplace(ys, shift);
        if (!inserted) {
            jt->second += shift;
            if (jt->second.is_zero()) a.coeffs.erase(jt);
        }
    }
}

bool PresentedAlgebra::equal(const AlgElement& a, const AlgElement& b) const {
    return sub(a, b).is_zero();
}

PolyMatrix PresentedAlgebra::left_mult_matrix(const AlgElement& a) const {
    if (!is_free)
        throw unsupported_error("left_mult_matrix needs a free presentation; use the standard trace instead");
    PolyMatrix m(center.field(), center.nvars(), size(), size());
    for (std::size_t j = 0; j < size(); ++j) {
        AlgElement col = multiply(a, basis_element(j));
        for (const auto& [i, c] : col.coeffs) m.at(i, j) = c;
    }
    return m;
}

unsigned PresentedAlgebra::generic_rank(Rng& rng) const {
    if (syzygies.empty()) return static_cast<unsigned>(size());
    PolyMatrix syz(center.field(), center.nvars(), syzygies.size(), size());
    for (std::size_t r = 0; r < syzygies.size(); ++r)
        for (const auto& [k, c] : syzygies[r]) syz.at(r, k) = c;

    // random evaluations; the rank of the relation matrix is generically maximal
    std::size_t best = 0;
    for (int trial = 0; trial < 5; ++trial) {
        std::vector<Scalar> pt = random_point(rng);
        best = std::max(best, scalar_rank(syz.eval(pt)));
    }
    if (size() <= 8 || center.has_relations()) {
        auto normalize = [this](const MultiPoly& p) { return center.reduce(p); };
        std::size_t symbolic = poly_rank(syz, normalize);
        if (symbolic < best) throw inconsistency_error("symbolic syzygy rank below sampled rank");
        best = symbolic;
    }
    return static_cast<unsigned>(size() - best);
}

unsigned PresentedAlgebra::pi_degree(Rng& rng) const {
    if (pi_degree_hint) return *pi_degree_hint;
    return static_cast<unsigned>(exact_isqrt(generic_rank(rng), "generic rank"));
}

std::string PresentedAlgebra::str(const AlgElement& a) const {
    if (a.coeffs.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [k, c] : a.coeffs) {
        if (!first) out += " + ";
        first = false;
        out += "(" + center.str(c) + ")*" + basis_labels[k];
    }
    return out;
}

AlgElement PresentedAlgebra::random_element(Rng& rng, int max_terms, std::uint32_t max_deg,
                                            long long coeff_range) const {
    AlgElement a;
    int nterms = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(std::max(1, max_terms))));
    for (int t = 0; t < nterms; ++t) {
        std::size_t k = rng.below(size());
        ExpVec e(center.nvars(), 0);
        for (std::size_t v = 0; v < center.nvars(); ++v)
            e[v] = static_cast<std::uint32_t>(rng.below(max_deg + 1));
        long long c = rng.range(-coeff_range, coeff_range);
        MultiPoly coeff = MultiPoly::monomial(center.field(), e, Scalar::from_int(center.field(), c));
        auto [it, inserted] = a.coeffs.emplace(k, coeff);
        if (!inserted) it->second += coeff;
    }
    canonicalize(a);
    return a;
}

std::vector<Scalar> PresentedAlgebra::random_point(Rng& rng) const {
    if (point_sampler) return point_sampler(rng);
    const FieldSpec& f = center.field();
    for (int attempt = 0; attempt < 4096; ++attempt) {
        std::vector<Scalar> pt;
        pt.reserve(center.nvars());
        for (std::size_t i = 0; i < center.nvars(); ++i) {
            if (f.is_prime_mode())
                pt.push_back(Scalar::from_residue(f, rng.below(f.p)));
            else
                pt.push_back(Scalar::from_int(f, rng.range(-20, 20)));
        }
        if (!center.has_relations() || center.point_valid(pt)) return pt;
    }
    throw inconsistency_error("could not sample a relation-satisfying central point");
}

void PresentedAlgebra::validate() const {
    if (table.size() != size() * size()) throw shape_error("structure table has wrong size");
    AlgElement e{identity};
    for (std::size_t i = 0; i < size(); ++i) {
        AlgElement b = basis_element(i);
        if (!equal(multiply(e, b), b) || !equal(multiply(b, e), b))
            throw inconsistency_error("identity element is not a two-sided unit");
    }
}

PresentedAlgebra build_matrix_order(const FieldSpec& f) {
    if (f.characteristic() == 2) throw unsupported_error("matrix order requires char K != 2");
    PresentedAlgebra A;
    A.center = CentralRing::polynomial(f, {"x", "y"});
    A.basis_labels = {"e11", "e21", "e22", "x_e12", "y_e12"};
    const std::size_t L = 5;
    A.table.assign(L * L, LinComb{});
    MultiPoly one = A.center.one();
    MultiPoly x = A.center.var(0);
    MultiPoly y = A.center.var(1);

    auto set = [&](std::size_t i, std::size_t j, std::initializer_list<std::pair<std::size_t, MultiPoly>> out) {
        LinComb lc;
        for (const auto& [k, c] : out)
            if (!c.is_zero()) lc.emplace(k, c);
        A.table[i * L + j] = std::move(lc);
    };

    // labels: 0 e11, 1 e21, 2 e22, 3 x*e12, 4 y*e12
    set(0, 0, {{0ul, one}});
    set(0, 3, {{3ul, one}});
    set(0, 4, {{4ul, one}});
    set(1, 0, {{1ul, one}});
    set(1, 3, {{2ul, x}});
    set(1, 4, {{2ul, y}});
    set(2, 1, {{1ul, one}});
    set(2, 2, {{2ul, one}});
    set(3, 1, {{0ul, x}});
    set(3, 2, {{3ul, one}});
    set(4, 1, {{0ul, y}});
    set(4, 2, {{4ul, one}});

    A.identity = LinComb{{0, one}, {2, one}};
    A.is_free = false;
    A.pi_degree_hint = 2;
    // y*(x e12) - x*(y e12) = 0
    A.syzygies = {LinComb{{3, y}, {4, -x}}};
    A.qbasis = {0, 1, 2, 3};
    A.qexpansion[4] = {{3, PolyFraction(y, x)}};
    A.canon = CanonKind::matrix_order_e12;
    A.validate();
    return A;
}

PresentedAlgebra build_quantum_affine(const FieldSpec& f, const std::vector<std::vector<Scalar>>& pij) {
    if (f.characteristic() == 2 || f.characteristic() == 3)
        throw unsupported_error("quantum affine instance requires char K not in {2,3}");
    if (pij.size() != 3) throw shape_error("pij must be a 3x3 matrix");
    Scalar one = Scalar::one(f), minus = Scalar::from_int(f, -1);
    for (std::size_t i = 0; i < 3; ++i) {
        if (pij[i].size() != 3) throw shape_error("pij must be a 3x3 matrix");
        if (pij[i][i] != one) throw inconsistency_error("pij must satisfy p_ii = 1");
        for (std::size_t j = 0; j < 3; ++j)
            if (pij[i][j] * pij[j][i] != one)
                throw inconsistency_error("pij must satisfy p_ij * p_ji = 1");
    }
    if (!(pij[0][1] == minus && pij[0][2] == minus && pij[1][2] == one))
        throw unsupported_error(
            "center presentation is built in only for p12 = p13 = -1, p23 = 1");

    // center variables A = X1^2, B = X2^2, C = X3^2, D = X2X3 with D^2 -> B*C
    ExpVec dlhs = {0, 0, 0, 2};
    CentralRing center = CentralRing::with_rules(
        f, {"A", "B", "C", "D"},
        {RewriteRule{dlhs, [&] {
                         MultiPoly r(f, 4);
                         r.add_term(ExpVec{0, 1, 1, 0}, one);
                         return r;
                     }()}},
        {ExpVec{2, 0, 0}, ExpVec{0, 2, 0}, ExpVec{0, 0, 2}, ExpVec{0, 1, 1}}, 3, {"X1", "X2", "X3"});

    PresentedAlgebra A;
    A.center = center;
    // spanning monomials X1^a X2^b X3^c, exponents in {0,1}, not both X2,X3
    const std::vector<ExpVec>& labels = detail::qa_labels();
    auto label_name = [](const ExpVec& e) {
        std::string s;
        const char* names[3] = {"X1", "X2", "X3"};
        for (int i = 0; i < 3; ++i)
            if (e[i]) s += (s.empty() ? "" : "*") + std::string(names[i]);
        return s.empty() ? std::string("1") : s;
    };
    for (const auto& e : labels) A.basis_labels.push_back(label_name(e));

    // X^alpha * X^beta = sign * X^(alpha+beta), sign from the commutation matrix
    auto twist = [&](const ExpVec& a, const ExpVec& b) {
        Scalar s = one;
        // move each X_i of b left past the X_j of a with j > i
        for (int i = 0; i < 3; ++i)
            for (int j = i + 1; j < 3; ++j) {
                std::uint64_t crossings = static_cast<std::uint64_t>(a[j]) * b[i];
                if (crossings) s = s * pij[j][i].pow(static_cast<long long>(crossings));
            }
        return s;
    };
    const std::size_t L = labels.size();
    A.table.assign(L * L, LinComb{});
    for (std::size_t i = 0; i < L; ++i) {
        for (std::size_t j = 0; j < L; ++j) {
            ExpVec g = {labels[i][0] + labels[j][0], labels[i][1] + labels[j][1],
                        labels[i][2] + labels[j][2]};
            auto [cexp, lab] = detail::qa_decompose(g);
            A.table[i * L + j] =
                LinComb{{lab, MultiPoly::monomial(f, cexp, twist(labels[i], labels[j]))}};
        }
    }

    A.identity = LinComb{{0, center.one()}};
    A.is_free = false;
    A.pi_degree_hint = 2;
    MultiPoly B = center.var(1), C = center.var(2), D = center.var(3);
    // D*X2 = B*X3, C*X2 = D*X3 and the X1-shifted pair
    A.syzygies = {LinComb{{2, D}, {3, -B}}, LinComb{{2, C}, {3, -D}}, LinComb{{4, D}, {5, -B}},
                  LinComb{{4, C}, {5, -D}}};
    A.canon = CanonKind::quantum_affine;
    A.qbasis = {0, 1, 2, 4};
    A.qexpansion[3] = {{2, PolyFraction(D, B)}};
    A.qexpansion[5] = {{4, PolyFraction(D, B)}};
    // points on the cone D^2 = B*C: pick (A, B != 0, D) and solve for C
    A.point_sampler = [f](Rng& rng) {
        auto draw = [&](bool nonzero) {
            if (f.is_prime_mode()) {
                std::uint64_t r = nonzero ? 1 + rng.below(f.p - 1) : rng.below(f.p);
                return Scalar::from_residue(f, r);
            }
            long long v = rng.range(-20, 20);
            if (nonzero && v == 0) v = 1;
            return Scalar::from_int(f, v);
        };
        Scalar a = draw(false), b = draw(true), d = draw(false);
        Scalar c = d * d / b;
        return std::vector<Scalar>{a, b, c, d};
    };
    A.validate();
    return A;
}

} // namespace pidisc
