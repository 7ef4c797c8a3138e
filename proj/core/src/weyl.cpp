#include "pidisc/weyl.hpp"

#include <algorithm>

namespace pidisc {

void validate_weyl_params(const WeylParams& p) {
    if (p.lambda.empty()) throw shape_error("lambda must be a nonempty partition");
    std::size_t total = 0;
    for (std::size_t b = 0; b < p.lambda.size(); ++b) {
        if (p.lambda[b] == 0) throw shape_error("partition parts must be positive");
        if (b > 0 && p.lambda[b] > p.lambda[b - 1])
            throw shape_error("partition parts must be non-increasing");
        total += p.lambda[b];
    }
    if (total != p.epsilon.size()) throw shape_error("partition does not sum to the number of epsilons");
    std::size_t n = p.epsilon.size();
    for (const auto& e : p.epsilon) {
        if (e.field() != p.field) throw invalid_field_error("epsilon over the wrong field");
        if (e.is_zero() || e.is_one()) throw inconsistency_error("epsilon_i must be a root of unity != 1");
        mult_order(e); // throws when not a root of unity (rational mode)
    }
    if (p.chi.size() != n) throw shape_error("chi must be an N x N matrix");
    for (std::size_t i = 0; i < n; ++i) {
        if (p.chi[i].size() != n) throw shape_error("chi must be an N x N matrix");
        for (std::size_t j = 0; j < n; ++j) {
            if (p.chi[i][j].is_zero()) throw inconsistency_error("chi values must be nonzero");
            if (!(p.chi[i][j] * p.chi[j][i]).is_one())
                throw inconsistency_error("chi must satisfy chi(f,g) * chi(g,f) = 1");
        }
        if (!p.chi[i][i].is_one()) throw inconsistency_error("chi must satisfy chi(f,f) = 1");
    }
}

namespace {

std::vector<std::size_t> blocks_of(const std::vector<unsigned>& lambda) {
    std::vector<std::size_t> bo;
    for (std::size_t b = 0; b < lambda.size(); ++b)
        for (unsigned t = 0; t < lambda[b]; ++t) bo.push_back(b);
    return bo;
}

} // namespace

bool check_center_condition(const WeylParams& p) {
    validate_weyl_params(p);
    std::size_t n = p.n_coords();
    auto bo = blocks_of(p.lambda);
    std::vector<std::uint64_t> d(n);
    for (std::size_t i = 0; i < n; ++i) d[i] = mult_order(p.epsilon[i]);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t l = i; l < n; ++l) {
            if (bo[i] != bo[l]) continue;
            if (d[l] % d[i] != 0) return false;
            for (std::size_t j = 0; j < n; ++j)
                if (d[l] % mult_order(p.chi[i][j]) != 0) return false;
        }
    }
    return true;
}

namespace {

// Normal-form engine for the untwisted tensor product: monomials are exponent
// vectors (a_1, b_1, ..., a_N, b_N) for x_1^{a_1} y_1^{b_1} ... , coefficients in
// the center K[X_i, Y_i]. Generators are applied one at a time on the right;
// the slot-local rewrite y_k^b x_k -> eps^{-1}(y^{b-1} x y - y^{b-1} - ...)
// recurses on (slot, y-exponent) in strictly decreasing lexicographic order
// (the correction terms move to slots j < k with bounded exponents), so every
// reduction terminates. The finished structure table memoizes all reduced
// monomial pairs.
struct Engine {
    const FieldSpec& field;
    std::size_t n;
    const std::vector<std::uint64_t>& d;
    const std::vector<Scalar>& eps;
    const std::vector<std::size_t>& block;

    using Combo = std::map<ExpVec, MultiPoly>;

    std::size_t xvar(std::size_t k) const { return 2 * k; }
    std::size_t yvar(std::size_t k) const { return 2 * k + 1; }
    std::uint32_t& xa(ExpVec& e, std::size_t k) const { return e[2 * k]; }
    std::uint32_t& yb(ExpVec& e, std::size_t k) const { return e[2 * k + 1]; }

    void accumulate(Combo& out, const ExpVec& e, const MultiPoly& c) const {
        if (c.is_zero()) return;
        auto [it, inserted] = out.emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) out.erase(it);
        }
    }

    MultiPoly central_var(std::size_t v) const { return MultiPoly::variable(field, 2 * n, v); }

    // slot-local x_k multiplication: ... x_k^{a} y_k^{b} x_k ... , suffix untouched
    void slot_x(const ExpVec& e, const MultiPoly& c, std::size_t k, Combo& out) const {
        ExpVec cur = e;
        if (cur[2 * k + 1] == 0) {
            if (cur[2 * k] + 1 == d[k]) {
                cur[2 * k] = 0;
                accumulate(out, cur, c * central_var(2 * k));
            } else {
                cur[2 * k] += 1;
                accumulate(out, cur, c);
            }
            return;
        }
        // y^b x = eps^{-1} ( y^{b-1} x y - y^{b-1} - sum_{j < k in block} (eps_j - 1) y_j x_j y^{b-1} )
        ExpVec e1 = e;
        e1[2 * k + 1] -= 1;
        Scalar inv = eps[k].inverse();

        Combo t1;
        slot_x(e1, c, k, t1);
        for (const auto& [te, tc] : t1) {
            ExpVec b = te;
            MultiPoly bc = tc.scaled(inv);
            if (b[2 * k + 1] + 1 == d[k]) {
                b[2 * k + 1] = 0;
                accumulate(out, b, bc * central_var(2 * k + 1));
            } else {
                b[2 * k + 1] += 1;
                accumulate(out, b, bc);
            }
        }

        accumulate(out, e1, c.scaled(-inv));

        for (std::size_t j = 0; j < k; ++j) {
            if (block[j] != block[k]) continue;
            Scalar factor = (eps[j] - Scalar::one(field)) * (-inv);
            // insert y_j x_j at slot j of e1
            ExpVec ej = e1;
            MultiPoly cj = c.scaled(factor);
            if (ej[2 * j + 1] + 1 == d[j]) {
                ej[2 * j + 1] = 0;
                cj = cj * central_var(2 * j + 1);
            } else {
                ej[2 * j + 1] += 1;
            }
            slot_x(ej, cj, j, out);
        }
    }

    // full right multiplication by x_k including crossings of slots > k
    void mul_x(const ExpVec& e, const MultiPoly& c, std::size_t k, Combo& out) const {
        Scalar sigma = Scalar::one(field);
        for (std::size_t i = k + 1; i < n; ++i)
            if (block[i] == block[k] && e[2 * i] != 0)
                sigma = sigma * eps[k].pow(-static_cast<long long>(e[2 * i]));
        slot_x(e, c.scaled(sigma), k, out);
    }

    void mul_y(const ExpVec& e, const MultiPoly& c, std::size_t k, Combo& out) const {
        Scalar sigma = Scalar::one(field);
        for (std::size_t i = k + 1; i < n; ++i)
            if (block[i] == block[k] && e[2 * i] != 0)
                sigma = sigma * eps[k].pow(static_cast<long long>(e[2 * i]));
        ExpVec cur = e;
        MultiPoly cc = c.scaled(sigma);
        if (cur[2 * k + 1] + 1 == d[k]) {
            cur[2 * k + 1] = 0;
            accumulate(out, cur, cc * central_var(2 * k + 1));
        } else {
            cur[2 * k + 1] += 1;
            accumulate(out, cur, cc);
        }
    }

    // untwisted product of two normal monomials
    Combo mul_monomials(const ExpVec& lhs, const ExpVec& rhs) const {
        Combo cur;
        cur.emplace(lhs, MultiPoly::from_int(field, 2 * n, 1));
        for (std::size_t k = 0; k < n; ++k) {
            for (std::uint32_t t = 0; t < rhs[2 * k]; ++t) {
                Combo next;
                for (const auto& [e, c] : cur) mul_x(e, c, k, next);
                cur = std::move(next);
            }
            for (std::uint32_t t = 0; t < rhs[2 * k + 1]; ++t) {
                Combo next;
                for (const auto& [e, c] : cur) mul_y(e, c, k, next);
                cur = std::move(next);
            }
        }
        return cur;
    }
};

} // namespace

std::size_t WeylAlgebra::index_of(const ExpVec& e) const {
    std::size_t idx = 0;
    for (std::size_t i = 0; i < e.size(); ++i) {
        std::size_t di = d[i / 2];
        idx = idx * di + e[i];
    }
    return idx;
}

AlgElement WeylAlgebra::gen_x(std::size_t i) const {
    ExpVec e(2 * n_coords(), 0);
    e[2 * i] = 1;
    return alg.basis_element(index_of(e));
}

AlgElement WeylAlgebra::gen_y(std::size_t i) const {
    ExpVec e(2 * n_coords(), 0);
    e[2 * i + 1] = 1;
    return alg.basis_element(index_of(e));
}

WeylAlgebra build_weyl(const WeylParams& p) {
    validate_weyl_params(p);
    if (!check_center_condition(p))
        throw unsupported_error("center condition fails: orders must divide upward within blocks");

    WeylAlgebra w;
    w.params = p;
    std::size_t n = p.n_coords();
    w.block_of = blocks_of(p.lambda);
    w.d.resize(n);
    for (std::size_t i = 0; i < n; ++i) w.d[i] = mult_order(p.epsilon[i]);
    w.r = 1;
    for (auto di : w.d) w.r *= di;
    if (w.r * w.r > 100)
        throw budget_error("Weyl instance too large: r^2 = " + std::to_string(w.r * w.r) + " > 100");
    w.nprime.resize(n);
    for (std::size_t i = 0; i < n; ++i)
        w.nprime[i] = (i > 0 && w.block_of[i - 1] == w.block_of[i]) ? w.nprime[i - 1] : i;

    const FieldSpec& f = p.field;
    if (f.is_prime_mode() && f.p % 2 == 0) throw invalid_field_error("char 2 excluded");

    // center K[X_1, Y_1, ..., X_N, Y_N]
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i) {
        names.push_back("X" + std::to_string(i + 1));
        names.push_back("Y" + std::to_string(i + 1));
    }
    w.alg.center = CentralRing::polynomial(f, names);

    // basis monomials, all exponents in [0, d_i), enumerated with rightmost slot fastest
    std::size_t L = static_cast<std::size_t>(w.r * w.r);
    w.basis_exps_.reserve(L);
    ExpVec cur(2 * n, 0);
    for (std::size_t cnt = 0; cnt < L; ++cnt) {
        w.basis_exps_.push_back(cur);
        std::size_t pos = 2 * n;
        while (pos > 0) {
            --pos;
            if (cur[pos] + 1 < w.d[pos / 2]) {
                cur[pos] += 1;
                break;
            }
            cur[pos] = 0;
        }
    }
    for (std::size_t i = 0; i < L; ++i)
        if (w.index_of(w.basis_exps_[i]) != i) throw inconsistency_error("basis enumeration mismatch");

    auto label_of = [&](const ExpVec& e) {
        std::string s;
        for (std::size_t i = 0; i < n; ++i) {
            auto app = [&](const std::string& g, std::uint32_t a) {
                if (!a) return;
                if (!s.empty()) s += "*";
                s += g;
                if (a > 1) s += "^" + std::to_string(a);
            };
            app("x" + std::to_string(i + 1), e[2 * i]);
            app("y" + std::to_string(i + 1), e[2 * i + 1]);
        }
        return s.empty() ? std::string("1") : s;
    };
    for (const auto& e : w.basis_exps_) w.alg.basis_labels.push_back(label_of(e));

    Engine eng{f, n, w.d, p.epsilon, w.block_of};

    // cocycle twist factor chi(deg u, deg v) on the Z^N grading deg x_i = -deg y_i = e_i
    auto deg = [&](const ExpVec& e) {
        std::vector<long long> g(n);
        for (std::size_t i = 0; i < n; ++i)
            g[i] = static_cast<long long>(e[2 * i]) - static_cast<long long>(e[2 * i + 1]);
        return g;
    };
    auto twist = [&](const ExpVec& u, const ExpVec& v) {
        auto du = deg(u), dv = deg(v);
        Scalar s = Scalar::one(f);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                long long exp = du[i] * dv[j];
                if (exp != 0 && !p.chi[i][j].is_one()) s = s * p.chi[i][j].pow(exp);
            }
        return s;
    };

    w.alg.table.assign(L * L, LinComb{});
    for (std::size_t i = 0; i < L; ++i) {
        for (std::size_t j = 0; j < L; ++j) {
            Engine::Combo prod = eng.mul_monomials(w.basis_exps_[i], w.basis_exps_[j]);
            Scalar tw = twist(w.basis_exps_[i], w.basis_exps_[j]);
            LinComb lc;
            for (const auto& [e, c] : prod) {
                MultiPoly cc = c.scaled(tw);
                if (!cc.is_zero()) lc.emplace(w.index_of(e), cc);
            }
            w.alg.table[i * L + j] = std::move(lc);
        }
    }

    w.alg.identity = LinComb{{0, w.alg.center.one()}};
    w.alg.is_free = true;
    w.alg.pi_degree_hint = static_cast<unsigned>(w.r);
    w.alg.qbasis.resize(L);
    for (std::size_t i = 0; i < L; ++i) w.alg.qbasis[i] = i;
    w.alg.validate();

    // z_i = [x_i, y_i] = 1 + sum_{n' <= j <= i} (eps_j - 1) y_j x_j, normal by (z-normal)
    for (std::size_t i = 0; i < n; ++i) {
        AlgElement z = w.alg.one();
        for (std::size_t j = w.nprime[i]; j <= i; ++j) {
            AlgElement yx = w.alg.multiply(w.gen_y(j), w.gen_x(j));
            z = w.alg.add(z, w.alg.scale(yx, p.epsilon[j] - Scalar::one(f)));
        }
        AlgElement comm = w.alg.sub(w.alg.multiply(w.gen_x(i), w.gen_y(i)),
                                    w.alg.multiply(w.gen_y(i), w.gen_x(i)));
        if (!w.alg.equal(z, comm)) throw inconsistency_error("z_i != [x_i, y_i]: builder bug");
        w.z_elems_.push_back(z);
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t l = 0; l < n; ++l) {
            bool rel = w.block_of[l] == w.block_of[i] && l <= i;
            Scalar ex = rel ? p.epsilon[l].inverse() : Scalar::one(f);
            Scalar ey = rel ? p.epsilon[l] : Scalar::one(f);
            AlgElement lhsx = w.alg.multiply(w.z_elems_[i], w.gen_x(l));
            AlgElement rhsx = w.alg.scale(w.alg.multiply(w.gen_x(l), w.z_elems_[i]), ex);
            AlgElement lhsy = w.alg.multiply(w.z_elems_[i], w.gen_y(l));
            AlgElement rhsy = w.alg.scale(w.alg.multiply(w.gen_y(l), w.z_elems_[i]), ey);
            if (!w.alg.equal(lhsx, rhsx) || !w.alg.equal(lhsy, rhsy))
                throw inconsistency_error("z-normality verification failed: builder bug");
        }
    }

    // Z_i = -(1-eps_i)^{d_i} Y_i X_i + (Z_{i-1}^{d_i/d_{i-1}} above the block start, else 1)
    for (std::size_t i = 0; i < n; ++i) {
        MultiPoly yx = w.alg.center.var(2 * i + 1) * w.alg.center.var(2 * i);
        Scalar c = (Scalar::one(f) - p.epsilon[i]).pow(static_cast<long long>(w.d[i]));
        MultiPoly zi = yx.scaled(-c);
        if (i > w.nprime[i]) {
            if (w.d[i] % w.d[i - 1] != 0) throw inconsistency_error("order divisibility violated");
            zi += w.Z_polys_[i - 1].pow(w.d[i] / w.d[i - 1]);
        } else {
            zi += w.alg.center.one();
        }
        w.Z_polys_.push_back(zi);
        AlgElement lhs = w.alg.power(w.z_elems_[i], static_cast<unsigned>(w.d[i]));
        if (!w.alg.equal(lhs, w.alg.scale(w.alg.one(), zi)))
            throw inconsistency_error("z_i^{d_i} != Z_i: builder bug");
    }

    return w;
}

std::vector<AlgElement> z_elements(const WeylAlgebra& w) { return w.z_elems(); }

std::vector<MultiPoly> Z_centrals(const WeylAlgebra& w) { return w.Z_polys(); }

MultiPoly predicted_discriminant(const WeylAlgebra& w) {
    const FieldSpec& f = w.params.field;
    if (f.is_prime_mode() && w.r % f.p == 0)
        throw char_guard_error("discriminant formula needs char K not dividing r = " + std::to_string(w.r));
    MultiPoly out = MultiPoly::from_int(f, 2 * w.n_coords(), static_cast<long long>(w.r));
    for (std::size_t i = 0; i < w.n_coords(); ++i) {
        std::uint64_t num = w.r * w.r * (w.d[i] - 1);
        if (num % w.d[i] != 0) throw inconsistency_error("non-integral discriminant exponent");
        out = out * w.Z_polys()[i].pow(num / w.d[i]);
    }
    return out;
}

bool azumaya_predicate(const WeylAlgebra& w, const std::vector<Scalar>& point) {
    w.alg.center.require_point(point);
    for (const auto& z : w.Z_polys())
        if (z.eval(point).is_zero()) return false;
    return true;
}

} // namespace pidisc
