#include "pidisc/fiber.hpp"

#include <algorithm>
#include <array>

#include "pidisc/fpunipoly.hpp"

namespace pidisc {

std::vector<Scalar> FiniteAlgebra::mul(const std::vector<Scalar>& a, const std::vector<Scalar>& b) const {
    std::vector<Scalar> out = zero_vec();
    for (std::size_t i = 0; i < dim; ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < dim; ++j) {
            if (b[j].is_zero()) continue;
            Scalar c = a[i] * b[j];
            const auto& prod = table[i][j];
            for (std::size_t t = 0; t < dim; ++t)
                if (!prod[t].is_zero()) out[t] += c * prod[t];
        }
    }
    return out;
}

std::vector<std::vector<Scalar>> FiniteAlgebra::left_matrix(const std::vector<Scalar>& a) const {
    std::vector<std::vector<Scalar>> m(dim, zero_vec());
    for (std::size_t j = 0; j < dim; ++j) {
        std::vector<Scalar> ej = zero_vec();
        ej[j] = Scalar::one(field);
        std::vector<Scalar> col = mul(a, ej);
        for (std::size_t i = 0; i < dim; ++i) m[i][j] = col[i];
    }
    return m;
}

Scalar FiniteAlgebra::left_trace(const std::vector<Scalar>& a) const {
    Scalar acc = Scalar::zero(field);
    for (std::size_t j = 0; j < dim; ++j) {
        // diagonal of left multiplication without forming the matrix
        std::vector<Scalar> ej = zero_vec();
        ej[j] = Scalar::one(field);
        acc += mul(a, ej)[j];
    }
    return acc;
}

FiniteAlgebra specialize(const PresentedAlgebra& a, const std::vector<Scalar>& point) {
    a.center.require_point(point);
    const FieldSpec& f = a.center.field();
    std::size_t L = a.size();

    // specialized module relations
    std::vector<std::vector<Scalar>> rel;
    for (const auto& syz : a.syzygies) {
        std::vector<Scalar> row(L, Scalar::zero(f));
        bool nonzero = false;
        for (const auto& [k, c] : syz) {
            row[k] = c.eval(point);
            nonzero = nonzero || !row[k].is_zero();
        }
        if (nonzero) rel.push_back(std::move(row));
    }
    auto pivots = row_reduce(rel, f);
    std::vector<bool> is_pivot(L, false);
    for (auto p : pivots) is_pivot[p] = true;

    std::vector<std::size_t> keep;
    for (std::size_t k = 0; k < L; ++k)
        if (!is_pivot[k]) keep.push_back(k);

    FiniteAlgebra out;
    out.field = f;
    out.dim = keep.size();
    if (f.is_prime_mode() && f.p <= out.dim)
        throw char_guard_error("fiber of dimension " + std::to_string(out.dim) + " needs p > " +
                               std::to_string(out.dim) + ", have p = " + std::to_string(f.p));

    auto project = [&](std::vector<Scalar> full) {
        reduce_against(full, rel, pivots);
        std::vector<Scalar> v;
        v.reserve(keep.size());
        for (std::size_t k : keep) v.push_back(full[k]);
        return v;
    };
    auto eval_comb = [&](const LinComb& lc) {
        std::vector<Scalar> full(L, Scalar::zero(f));
        for (const auto& [k, c] : lc) full[k] = c.eval(point);
        return full;
    };

    out.table.assign(out.dim, std::vector<std::vector<Scalar>>(out.dim));
    for (std::size_t i = 0; i < out.dim; ++i)
        for (std::size_t j = 0; j < out.dim; ++j)
            out.table[i][j] = project(eval_comb(a.entry(keep[i], keep[j])));
    out.identity = project(eval_comb(a.identity));
    out.lift_L.assign(out.dim, std::vector<Scalar>(L, Scalar::zero(f)));
    for (std::size_t i = 0; i < out.dim; ++i) out.lift_L[i][keep[i]] = Scalar::one(f);
    return out;
}

std::vector<std::vector<Scalar>> radical(const FiniteAlgebra& f) {
    if (f.field.is_prime_mode() && f.field.p <= f.dim)
        throw char_guard_error("trace-form radical needs p > dim");
    // Gram of the left-regular trace form
    std::vector<std::vector<std::vector<Scalar>>> lm;
    lm.reserve(f.dim);
    for (std::size_t i = 0; i < f.dim; ++i) {
        std::vector<Scalar> ei = f.zero_vec();
        ei[i] = Scalar::one(f.field);
        lm.push_back(f.left_matrix(ei));
    }
    std::vector<std::vector<Scalar>> g(f.dim, f.zero_vec());
    for (std::size_t i = 0; i < f.dim; ++i)
        for (std::size_t j = 0; j < f.dim; ++j) {
            Scalar acc = Scalar::zero(f.field);
            for (std::size_t s = 0; s < f.dim; ++s)
                for (std::size_t t = 0; t < f.dim; ++t) acc += lm[i][s][t] * lm[j][t][s];
            g[i][j] = acc;
        }
    return scalar_kernel(std::move(g), f.field);
}

FiniteAlgebra quotient_by(const FiniteAlgebra& f, const std::vector<std::vector<Scalar>>& ideal_basis) {
    std::vector<std::vector<Scalar>> rel = ideal_basis;
    auto pivots = row_reduce(rel, f.field);
    std::vector<bool> is_pivot(f.dim, false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<std::size_t> keep;
    for (std::size_t k = 0; k < f.dim; ++k)
        if (!is_pivot[k]) keep.push_back(k);

    auto project = [&](std::vector<Scalar> full) {
        reduce_against(full, rel, pivots);
        std::vector<Scalar> v;
        v.reserve(keep.size());
        for (std::size_t k : keep) v.push_back(full[k]);
        return v;
    };

    FiniteAlgebra out;
    out.field = f.field;
    out.dim = keep.size();
    out.table.assign(out.dim, std::vector<std::vector<Scalar>>(out.dim));
    for (std::size_t i = 0; i < out.dim; ++i) {
        for (std::size_t j = 0; j < out.dim; ++j) {
            std::vector<Scalar> ei = f.zero_vec(), ej = f.zero_vec();
            ei[keep[i]] = Scalar::one(f.field);
            ej[keep[j]] = Scalar::one(f.field);
            out.table[i][j] = project(f.mul(ei, ej));
        }
    }
    out.identity = project(f.identity);
    out.lift_L.reserve(out.dim);
    for (std::size_t i = 0; i < out.dim; ++i) out.lift_L.push_back(f.lift_L[keep[i]]);
    out.parent_keep = keep;
    return out;
}

std::vector<std::vector<Scalar>> radical_oracle(const FiniteAlgebra& f, std::uint64_t max_enum) {
    if (!f.field.is_prime_mode()) throw unsupported_error("radical oracle runs over prime fields");
    std::uint64_t p = f.field.p;

    // enumeration over projective representatives, raw residues for speed
    auto nil_span = [p](const FiniteAlgebra& q) {
        std::size_t d = q.dim;
        std::vector<std::vector<std::uint64_t>> cube(d, std::vector<std::uint64_t>(d * d));
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j)
                for (std::size_t t = 0; t < d; ++t) cube[i][j * d + t] = q.table[i][j][t].residue();

        std::vector<std::vector<Scalar>> found;
        std::vector<std::uint64_t> x(d, 0);
        std::vector<std::uint64_t> rmat(d * d), u(d), w(d);
        while (true) {
            // next vector (rightmost digit fastest)
            std::size_t pos = d;
            while (pos > 0) {
                --pos;
                if (x[pos] + 1 < p) {
                    x[pos] += 1;
                    break;
                }
                x[pos] = 0;
                if (pos == 0) return found;
            }
            // projective representative: leading nonzero coordinate equals 1
            std::size_t lead = 0;
            while (lead < d && x[lead] == 0) ++lead;
            if (x[lead] != 1) continue;
            // rmat[j][t] = (b_j * x)[t]
            std::fill(rmat.begin(), rmat.end(), 0);
            for (std::size_t j = 0; j < d; ++j)
                for (std::size_t k = 0; k < d; ++k) {
                    if (x[k] == 0) continue;
                    const std::uint64_t* row = &cube[j][k * d];
                    for (std::size_t t = 0; t < d; ++t)
                        rmat[j * d + t] = (rmat[j * d + t] + mulmod_u64(x[k], row[t], p)) % p;
                }
            bool nil = true;
            for (std::size_t i = 0; i < d && nil; ++i) {
                // u = x * b_i, then w = u * x via rmat
                std::fill(u.begin(), u.end(), 0);
                for (std::size_t k = 0; k < d; ++k) {
                    if (x[k] == 0) continue;
                    const std::uint64_t* row = &cube[k][i * d];
                    for (std::size_t t = 0; t < d; ++t) u[t] = (u[t] + mulmod_u64(x[k], row[t], p)) % p;
                }
                std::fill(w.begin(), w.end(), 0);
                for (std::size_t j = 0; j < d; ++j) {
                    if (u[j] == 0) continue;
                    for (std::size_t t = 0; t < d; ++t)
                        w[t] = (w[t] + mulmod_u64(u[j], rmat[j * d + t], p)) % p;
                }
                for (std::size_t t = 0; t < d; ++t)
                    if (w[t] != 0) nil = false;
            }
            if (nil) {
                std::vector<Scalar> v;
                v.reserve(d);
                for (std::size_t t = 0; t < d; ++t) v.push_back(Scalar::from_residue(q.field, x[t]));
                found.push_back(std::move(v));
            }
        }
    };

    {
        unsigned __int128 count = 1;
        for (std::size_t i = 0; i < f.dim; ++i) count *= p;
        if (count > max_enum) throw budget_error("radical oracle enumeration over budget");
    }

    // close a spanning set into the two-sided ideal it generates
    auto ideal_closure = [&f](std::vector<std::vector<Scalar>>& vecs) {
        row_reduce(vecs, f.field);
        while (true) {
            std::vector<std::vector<Scalar>> grown = vecs;
            for (const auto& v : vecs) {
                for (std::size_t i = 0; i < f.dim; ++i) {
                    std::vector<Scalar> ei = f.zero_vec();
                    ei[i] = Scalar::one(f.field);
                    grown.push_back(f.mul(ei, v));
                    grown.push_back(f.mul(v, ei));
                }
            }
            row_reduce(grown, f.field);
            if (grown.size() == vecs.size()) break;
            vecs = std::move(grown);
        }
    };

    // each round, every nilpotent generator of the quotient lifts into the radical;
    // the accumulated ideal grows strictly, so this stops within dim rounds
    std::vector<std::vector<Scalar>> acc;
    while (true) {
        FiniteAlgebra cur = quotient_by(f, acc);
        if (cur.dim == 0) break;
        auto gens = nil_span(cur);
        if (gens.empty()) break;
        for (const auto& g : gens) {
            std::vector<Scalar> full = f.zero_vec();
            for (std::size_t i = 0; i < cur.dim; ++i) full[cur.parent_keep[i]] = g[i];
            acc.push_back(std::move(full));
        }
        ideal_closure(acc);
    }
    return acc;
}

namespace {

std::vector<std::vector<Scalar>> center_basis(const FiniteAlgebra& s) {
    // solve z b_j - b_j z = 0 for all j
    std::vector<std::vector<Scalar>> rows; // one row per (j, t), columns indexed by i
    for (std::size_t j = 0; j < s.dim; ++j) {
        for (std::size_t t = 0; t < s.dim; ++t) {
            std::vector<Scalar> row(s.dim, Scalar::zero(s.field));
            bool nz = false;
            for (std::size_t i = 0; i < s.dim; ++i) {
                row[i] = s.table[i][j][t] - s.table[j][i][t];
                nz = nz || !row[i].is_zero();
            }
            if (nz) rows.push_back(std::move(row));
        }
    }
    if (rows.empty()) {
        std::vector<std::vector<Scalar>> all;
        for (std::size_t i = 0; i < s.dim; ++i) {
            auto v = s.zero_vec();
            v[i] = Scalar::one(s.field);
            all.push_back(v);
        }
        return all;
    }
    return scalar_kernel(std::move(rows), s.field);
}

// minimal polynomial of z via incremental echelon with combination tracking
fpuni::Poly minimal_polynomial(const FiniteAlgebra& s, const std::vector<Scalar>& z) {
    const FieldSpec& f = s.field;
    std::vector<std::vector<Scalar>> ech;      // echelon rows
    std::vector<std::vector<Scalar>> combos;   // same rows over the power basis
    std::vector<std::size_t> pivots;
    std::vector<Scalar> cur = s.identity;
    for (std::size_t k = 0;; ++k) {
        std::vector<Scalar> vec = cur;
        std::vector<Scalar> combo(s.dim + 2, Scalar::zero(f));
        combo[k] = Scalar::one(f);
        for (std::size_t r = 0; r < ech.size(); ++r) {
            Scalar factor = vec[pivots[r]];
            if (factor.is_zero()) continue;
            for (std::size_t t = 0; t < s.dim; ++t) vec[t] -= factor * ech[r][t];
            for (std::size_t t = 0; t < combo.size(); ++t) combo[t] -= factor * combos[r][t];
        }
        std::size_t piv = s.dim;
        for (std::size_t t = 0; t < s.dim; ++t)
            if (!vec[t].is_zero()) {
                piv = t;
                break;
            }
        if (piv == s.dim) {
            // dependency found: monic by construction (combo[k] = 1 survives reductions)
            fpuni::Poly mp(k + 1, 0);
            for (std::size_t t = 0; t <= k; ++t) mp[t] = combo[t].residue();
            return fpuni::trim(mp);
        }
        Scalar inv = vec[piv].inverse();
        for (auto& v : vec) v *= inv;
        for (auto& v : combo) v *= inv;
        ech.push_back(vec);
        combos.push_back(combo);
        pivots.push_back(piv);
        if (k > s.dim + 1) throw inconsistency_error("minimal polynomial search overran the dimension");
        cur = s.mul(cur, z);
    }
}

std::vector<Scalar> eval_poly_at(const FiniteAlgebra& s, const fpuni::Poly& h,
                                 const std::vector<Scalar>& z) {
    std::vector<Scalar> acc = s.zero_vec();
    for (std::size_t i = h.size(); i-- > 0;) {
        acc = s.mul(acc, z);
        if (h[i] != 0)
            for (std::size_t t = 0; t < s.dim; ++t)
                if (!s.identity[t].is_zero())
                    acc[t] += Scalar::from_residue(s.field, h[i]) * s.identity[t];
    }
    return acc;
}

} // namespace

BlockData block_decompose(const FiniteAlgebra& s, Rng& rng) {
    if (!s.field.is_prime_mode())
        throw unsupported_error("block decomposition is implemented over prime fields");
    std::uint64_t p = s.field.p;
    auto zb = center_basis(s);
    std::size_t c = zb.size();

    // find a central element generating the center as an algebra: its minimal
    // polynomial is then squarefree of degree c with one factor per block
    fpuni::Poly minpoly;
    std::vector<Scalar> z;
    bool found = false;
    for (int attempt = 0; attempt < 64 && !found; ++attempt) {
        z = s.zero_vec();
        for (const auto& row : zb) {
            Scalar coef = Scalar::from_residue(s.field, rng.below(p));
            for (std::size_t t = 0; t < s.dim; ++t) z[t] += coef * row[t];
        }
        minpoly = minimal_polynomial(s, z);
        if (fpuni::degree(minpoly) == static_cast<long long>(c) && fpuni::is_squarefree(minpoly, p))
            found = true;
    }
    if (!found)
        throw inconsistency_error(
            "no separable central generator found; is the input semisimple over F_p?");

    auto factors = fpuni::factor_squarefree(minpoly, p, rng);

    BlockData out;
    std::vector<Scalar> idsum = s.zero_vec();
    for (const auto& ft : factors) {
        auto [cof, remchk] = fpuni::divmod(minpoly, ft, p);
        if (!fpuni::is_zero(remchk)) throw inconsistency_error("factor does not divide the minimal polynomial");
        // inverse of cof modulo the irreducible ft, via the residue field's unit group
        unsigned __int128 q = 1;
        for (long long i = 0; i < fpuni::degree(ft); ++i) q *= p;
        fpuni::Poly inv = fpuni::powmod(fpuni::mod(cof, ft, p), q - 2, ft, p);
        fpuni::Poly h = fpuni::mul(cof, inv, p);

        BlockInfo b;
        b.unit = eval_poly_at(s, h, z);
        // idempotency sanity
        if (s.mul(b.unit, b.unit) != b.unit) throw inconsistency_error("central idempotent is not idempotent");
        for (std::size_t t = 0; t < s.dim; ++t) idsum[t] += b.unit[t];

        // block subspace e S e (= S e for the central idempotent)
        std::vector<std::vector<Scalar>> span;
        for (std::size_t i = 0; i < s.dim; ++i) {
            std::vector<Scalar> ei = s.zero_vec();
            ei[i] = Scalar::one(s.field);
            span.push_back(s.mul(ei, b.unit));
        }
        b.pivots = row_reduce(span, s.field);
        b.basis = std::move(span);
        b.dim = b.basis.size();
        b.e = static_cast<std::size_t>(fpuni::degree(ft));
        if (b.dim % b.e != 0) throw inconsistency_error("block dimension not divisible by its center degree");
        b.n = static_cast<std::size_t>(exact_isqrt(b.dim / b.e, "block matrix size"));
        out.blocks.push_back(std::move(b));
    }
    if (idsum != s.identity) throw inconsistency_error("central idempotents do not sum to 1");

    std::size_t total = 0;
    for (const auto& b : out.blocks) total += b.dim;
    if (total != s.dim) throw inconsistency_error("block dimensions do not sum to dim");

    for (const auto& b : out.blocks)
        for (std::size_t t = 0; t < b.e; ++t) out.irreducibles.push_back(b.n);
    std::sort(out.irreducibles.begin(), out.irreducibles.end());
    return out;
}

namespace {

// trace functional induced by tr at the point, on coordinates of the fiber;
// well defined because traces kill the specialized module relations
struct PointTrace {
    FieldSpec field;
    std::vector<Scalar> values; // per fiber basis vector

    static PointTrace make(const PresentedAlgebra& a, const TraceMap& tr,
                           const std::vector<Scalar>& point, const FiniteAlgebra& fiber) {
        std::vector<Scalar> trL;
        trL.reserve(a.size());
        for (std::size_t k = 0; k < a.size(); ++k) trL.push_back(tr.basis_value(k).eval(point));
        PointTrace out;
        out.field = fiber.field;
        out.values.reserve(fiber.dim);
        for (std::size_t i = 0; i < fiber.dim; ++i) {
            Scalar acc = Scalar::zero(fiber.field);
            for (std::size_t k = 0; k < a.size(); ++k)
                if (!fiber.lift_L[i][k].is_zero()) acc += fiber.lift_L[i][k] * trL[k];
            out.values.push_back(acc);
        }
        return out;
    }

    Scalar operator()(const std::vector<Scalar>& v) const {
        Scalar acc = Scalar::zero(field);
        for (std::size_t i = 0; i < v.size(); ++i)
            if (!v[i].is_zero()) acc = acc + v[i] * values[i];
        return acc;
    }
};

// trace of left multiplication by u restricted to a block (u must lie in the block)
Scalar block_left_trace(const FiniteAlgebra& s, const BlockInfo& b, const std::vector<Scalar>& u) {
    Scalar acc = Scalar::zero(s.field);
    for (std::size_t r = 0; r < b.basis.size(); ++r) {
        std::vector<Scalar> w = s.mul(u, b.basis[r]);
        // block coordinates via the echelon pivots
        for (std::size_t t = 0; t < b.basis.size(); ++t) {
            Scalar coef = w[b.pivots[t]];
            if (coef.is_zero()) continue;
            for (std::size_t q = 0; q < s.dim; ++q) w[q] -= coef * b.basis[t][q];
            if (t == r) acc += coef;
        }
    }
    return acc;
}

} // namespace

TraceDecomposition decompose_trace(const PresentedAlgebra& a, const TraceMap& tr,
                                   const std::vector<Scalar>& point, const FiniteAlgebra& fiber,
                                   const std::vector<std::vector<Scalar>>& rad, const FiniteAlgebra& ss,
                                   const BlockData& blocks, unsigned n) {
    const FieldSpec& f = fiber.field;
    if (!f.is_prime_mode()) throw unsupported_error("trace decomposition runs over prime fields");
    std::uint64_t p = f.p;
    PointTrace trF = PointTrace::make(a, tr, point, fiber);
    PointTrace trS = PointTrace::make(a, tr, point, ss);

    TraceDecomposition out;
    // the functional must kill the radical, else no representation decomposition exists
    for (const auto& rv : rad)
        if (!trF(rv).is_zero()) return out;

    // coefficients from block identities: tr_m(1_B) = s_B * e_B * n_B
    std::vector<Scalar> sB;
    for (const auto& b : blocks.blocks) {
        Scalar denom = Scalar::from_int(f, static_cast<long long>(b.e * b.n));
        if (denom.is_zero()) throw char_guard_error("block size not invertible mod p");
        sB.push_back(trS(b.unit) / denom);
    }

    // verify the functional on a full basis of the semisimple quotient
    for (std::size_t i = 0; i < ss.dim; ++i) {
        std::vector<Scalar> ei = ss.zero_vec();
        ei[i] = Scalar::one(f);
        Scalar lhs = trS(ei);
        Scalar rhs = Scalar::zero(f);
        for (std::size_t t = 0; t < blocks.blocks.size(); ++t) {
            const auto& b = blocks.blocks[t];
            std::vector<Scalar> proj = ss.mul(ei, b.unit);
            Scalar ninv = Scalar::from_int(f, static_cast<long long>(b.n)).inverse();
            rhs += sB[t] * block_left_trace(ss, b, proj) * ninv;
        }
        if (lhs != rhs) return out; // not expressible through the irreducible characters
    }

    out.k_per_block.reserve(sB.size());
    bool all_nonzero = true;
    for (const auto& s : sB) {
        out.k_per_block.push_back(s.residue());
        all_nonzero = all_nonzero && !s.is_zero();
    }
    out.representation_theoretic = all_nonzero;

    if (tr.kind() == TraceKind::reduced) {
        // eq: n = sum k_B e_B n_B with positive integer lifts below p
        std::uint64_t total = 0;
        for (std::size_t t = 0; t < blocks.blocks.size(); ++t) {
            if (out.k_per_block[t] == 0 || out.k_per_block[t] >= p)
                throw inconsistency_error("reduced trace block coefficient not a positive lift");
            total += out.k_per_block[t] * blocks.blocks[t].e * blocks.blocks[t].n;
        }
        if (total != n)
            throw inconsistency_error("reduced-trace coefficients fail the dimension equation");
    }

    // align per-irreducible list with the sorted irreducible multiset
    std::vector<std::pair<std::size_t, std::uint64_t>> tagged;
    for (std::size_t t = 0; t < blocks.blocks.size(); ++t)
        for (std::size_t q = 0; q < blocks.blocks[t].e; ++q)
            tagged.emplace_back(blocks.blocks[t].n, out.k_per_block[t]);
    std::stable_sort(tagged.begin(), tagged.end(),
                     [](const auto& x, const auto& y) { return x.first < y.first; });
    for (const auto& [nn, k] : tagged) out.k_per_irreducible.push_back(k);
    return out;
}

FiberReport analyze_point(const PresentedAlgebra& a, const std::vector<TraceMap>& traces,
                          const std::vector<Scalar>& point, Rng& rng, unsigned pi_degree,
                          bool want_km, const std::vector<const GramMatrix*>& grams) {
    FiberReport r;
    r.point = point;
    FiniteAlgebra fiber = specialize(a, point);
    r.dim = fiber.dim;
    auto rad = radical(fiber);
    r.radical_dim = rad.size();
    FiniteAlgebra ss = quotient_by(fiber, rad);
    r.ss_dim = ss.dim;
    BlockData blocks = block_decompose(ss, rng);
    for (const auto& b : blocks.blocks) r.blocks.push_back({b.dim, b.e, b.n});
    r.irreducibles = blocks.irreducibles;

    std::size_t nsq = static_cast<std::size_t>(pi_degree) * pi_degree;
    if (r.ss_dim > nsq) throw inconsistency_error("semisimple quotient exceeds the PI bound");
    r.azumaya = r.ss_dim == nsq;

    for (std::size_t t = 0; t < traces.size(); ++t) {
        unsigned rank = grams.size() == traces.size() && grams[t] != nullptr
                            ? point_gram_rank(a, *grams[t], point)
                            : point_gram_rank(a, traces[t], point);
        r.gram_ranks.emplace_back(traces[t].label(), rank);
        if (traces[t].kind() != TraceKind::scaled && rank != r.ss_dim) r.gram_matches_ss = false;
    }

    if (!r.azumaya) {
        std::size_t sum_mi = 0;
        for (auto m : r.irreducibles) sum_mi += m;
        r.pence_ok = r.ss_dim + std::max<std::size_t>(sum_mi, 2) <= nsq;
        r.sum_ok = sum_mi <= pi_degree;
    }

    if (want_km) {
        for (const auto& tr : traces) {
            if (tr.kind() != TraceKind::reduced) continue;
            TraceDecomposition dec = decompose_trace(a, tr, point, fiber, rad, ss, blocks, pi_degree);
            r.km_ok = dec.representation_theoretic;
            r.k_m = dec.k_per_irreducible;
            break;
        }
    }
    return r;
}

bool descent_check(const PresentedAlgebra& a, const TraceMap& tr, const std::vector<Scalar>& point,
                   unsigned samples, Rng& rng) {
    FiniteAlgebra fiber = specialize(a, point);
    auto rad = radical(fiber);
    if (rad.empty()) return true;
    const FieldSpec& f = a.center.field();

    for (unsigned s = 0; s < samples; ++s) {
        // random radical element
        std::vector<Scalar> v = fiber.zero_vec();
        for (const auto& row : rad) {
            Scalar c = f.is_prime_mode() ? Scalar::from_residue(f, rng.below(f.p))
                                         : Scalar::from_int(f, rng.range(-5, 5));
            for (std::size_t t = 0; t < fiber.dim; ++t) v[t] += c * row[t];
        }
        // lift to the algebra through the coset representatives
        AlgElement lift;
        for (std::size_t i = 0; i < fiber.dim; ++i) {
            if (v[i].is_zero()) continue;
            for (std::size_t k = 0; k < a.size(); ++k) {
                if (fiber.lift_L[i][k].is_zero()) continue;
                MultiPoly c = MultiPoly::constant(f, a.center.nvars(), v[i] * fiber.lift_L[i][k]);
                auto [it, ins] = lift.coeffs.emplace(k, c);
                if (!ins) it->second += c;
            }
        }
        // plus noise from mR: (z_v - point_v) * random basis element
        for (int t = 0; t < 2; ++t) {
            std::size_t var = rng.below(a.center.nvars());
            std::size_t lbl = rng.below(a.size());
            MultiPoly noise = a.center.var(var) - MultiPoly::constant(f, a.center.nvars(), point[var]);
            long long c = rng.range(-3, 3);
            noise = noise.scaled(Scalar::from_int(f, c));
            auto [it, ins] = lift.coeffs.emplace(lbl, noise);
            if (!ins) it->second += noise;
        }
        a.canonicalize(lift);
        if (!tr.value(lift).eval(point).is_zero()) return false;
    }
    return true;
}

nlohmann::json fiber_report_json(const FiberReport& r) {
    nlohmann::json j;
    nlohmann::json pt = nlohmann::json::array();
    for (const auto& s : r.point) {
        if (s.field().is_prime_mode())
            pt.push_back(s.residue());
        else
            pt.push_back(s.str());
    }
    j["point"] = pt;
    j["dim"] = r.dim;
    j["radical_dim"] = r.radical_dim;
    j["ss_dim"] = r.ss_dim;
    nlohmann::json blocks = nlohmann::json::array();
    for (const auto& b : r.blocks) blocks.push_back({b[0], b[1], b[2]});
    j["blocks"] = blocks;
    j["irreducibles"] = r.irreducibles;
    nlohmann::json ranks;
    for (const auto& [label, rank] : r.gram_ranks) ranks[label] = rank;
    j["gram_ranks"] = ranks;
    j["azumaya"] = r.azumaya;
    if (r.k_m) j["k_m"] = *r.k_m;
    j["bounds"] = {{"pence_ok", r.pence_ok}, {"sum_ok", r.sum_ok}};
    return j;
}

} // namespace pidisc
