#include "pidisc/trace.hpp"

namespace pidisc {

std::string trace_kind_name(TraceKind k) {
    switch (k) {
        case TraceKind::regular: return "reg";
        case TraceKind::standard: return "std";
        case TraceKind::reduced: return "red";
        case TraceKind::scaled: return "scaled";
    }
    return "?";
}

TraceMap TraceMap::regular(const PresentedAlgebra& a) {
    if (!a.is_free) throw unsupported_error("regular trace needs a free presentation; use the standard trace");
    TraceMap t;
    t.kind_ = TraceKind::regular;
    t.alg_ = &a;
    t.label_ = "reg";
    t.values_.reserve(a.size());
    for (std::size_t k = 0; k < a.size(); ++k) {
        MultiPoly acc = a.center.zero();
        AlgElement yk = a.basis_element(k);
        for (std::size_t j = 0; j < a.size(); ++j) {
            AlgElement prod = a.multiply(yk, a.basis_element(j));
            auto it = prod.coeffs.find(j);
            if (it != prod.coeffs.end()) acc += it->second;
        }
        t.values_.push_back(a.center.reduce(acc));
    }
    return t;
}

TraceMap TraceMap::standard(const PresentedAlgebra& a) {
    if (!a.qbasis.empty()) return standard(a, a.qbasis);
    if (a.is_free) {
        std::vector<std::size_t> all(a.size());
        for (std::size_t i = 0; i < a.size(); ++i) all[i] = i;
        return standard(a, all);
    }
    throw unsupported_error("standard trace needs a designated fraction-field basis");
}

TraceMap TraceMap::standard(const PresentedAlgebra& a, const std::vector<std::size_t>& qbasis) {
    TraceMap t;
    t.kind_ = TraceKind::standard;
    t.alg_ = &a;
    t.label_ = "std";

    // qbasis coordinates of a product vector over L, through the fraction expansions
    auto diag_coeff = [&](const AlgElement& prod, std::size_t target) -> PolyFraction {
        PolyFraction acc = PolyFraction::of(a.center.zero());
        for (const auto& [k, c] : prod.coeffs) {
            if (k == target) {
                acc = acc + PolyFraction::of(c);
                continue;
            }
            bool in_qbasis = false;
            for (std::size_t b : qbasis)
                if (b == k) in_qbasis = true;
            if (in_qbasis) continue;
            auto it = a.qexpansion.find(k);
            if (it == a.qexpansion.end())
                throw unsupported_error("no fraction-field expansion for spanning element '" +
                                        a.basis_labels[k] + "'");
            for (const auto& [b, frac] : it->second)
                if (b == target) acc = acc + frac.scaled_poly(c);
        }
        return acc;
    };

    t.values_.reserve(a.size());
    for (std::size_t k = 0; k < a.size(); ++k) {
        AlgElement yk = a.basis_element(k);
        PolyFraction acc = PolyFraction::of(a.center.zero());
        for (std::size_t j : qbasis) acc = acc + diag_coeff(a.multiply(yk, a.basis_element(j)), j);
        // the trace of an order element lies in the center: denominators must clear
        PolyFraction red(a.center.reduce(acc.num), a.center.reduce(acc.den));
        if (red.den.is_zero()) throw inconsistency_error("trace denominator reduced to zero");
        auto poly = red.as_polynomial();
        if (!poly)
            throw inconsistency_error("standard trace of '" + a.basis_labels[k] +
                                      "' is not polynomial; presentation inconsistent");
        t.values_.push_back(a.center.reduce(*poly));
    }
    return t;
}

TraceMap TraceMap::reduced(const PresentedAlgebra& a, unsigned n) {
    std::uint64_t p = a.center.field().characteristic();
    if (n == 0) throw shape_error("reduced trace needs n >= 1");
    if (p != 0 && n % p == 0)
        throw char_guard_error("reduced trace tr_st/n needs char K not dividing n = " + std::to_string(n));
    TraceMap t = standard(a);
    t.kind_ = TraceKind::reduced;
    t.label_ = "red";
    Scalar inv_n = Scalar::from_int(a.center.field(), static_cast<long long>(n)).inverse();
    for (auto& v : t.values_) v = v.scaled(inv_n);
    return t;
}

TraceMap TraceMap::scaled(const TraceMap& base, const MultiPoly& z) {
    TraceMap t = base;
    t.kind_ = TraceKind::scaled;
    t.label_ = "scaled(" + base.alg_->center.str(z) + ")*" + base.label_;
    for (auto& v : t.values_) v = base.alg_->center.mul(v, z);
    return t;
}

MultiPoly TraceMap::value(const AlgElement& a) const {
    MultiPoly acc = alg_->center.zero();
    for (const auto& [k, c] : a.coeffs) acc += alg_->center.mul(c, values_[k]);
    return alg_->center.reduce(acc);
}

MultiPoly TraceMap::pair(const AlgElement& a, const AlgElement& b) const {
    return value(alg_->multiply(a, b));
}

CharPoly newton_char_poly(const PresentedAlgebra& a, const AlgElement& elem, unsigned n,
                          const TraceMap& tr) {
    std::uint64_t p = a.center.field().characteristic();
    if (p != 0 && p <= n)
        throw char_guard_error("Newton identities need char K outside [1, n]; have p = " +
                               std::to_string(p));
    // power sums psi_i = tr(elem^i)
    std::vector<MultiPoly> psi(n + 1, a.center.zero());
    AlgElement pw = a.one();
    for (unsigned i = 1; i <= n; ++i) {
        pw = a.multiply(pw, elem);
        psi[i] = tr.value(pw);
    }
    // i*sigma_i = sum_{j=1..i} (-1)^{j-1} sigma_{i-j} psi_j
    std::vector<MultiPoly> sigma(n + 1, a.center.zero());
    sigma[0] = a.center.one();
    for (unsigned i = 1; i <= n; ++i) {
        MultiPoly acc = a.center.zero();
        for (unsigned j = 1; j <= i; ++j) {
            MultiPoly term = a.center.mul(sigma[i - j], psi[j]);
            acc += (j % 2 == 1) ? term : -term;
        }
        Scalar inv_i = Scalar::from_int(a.center.field(), static_cast<long long>(i)).inverse();
        sigma[i] = a.center.reduce(acc.scaled(inv_i));
    }
    CharPoly cp;
    cp.degree = n;
    cp.coeffs.assign(sigma.begin() + 1, sigma.end());
    return cp;
}

bool cayley_hamilton_check(const PresentedAlgebra& a, const AlgElement& elem, unsigned n,
                           const TraceMap& tr) {
    CharPoly cp = newton_char_poly(a, elem, n, tr);
    AlgElement acc = a.power(elem, n);
    for (unsigned i = 1; i <= n; ++i) {
        AlgElement term = a.scale(a.power(elem, n - i), cp.coeffs[i - 1]);
        acc = (i % 2 == 1) ? a.sub(acc, term) : a.add(acc, term);
    }
    return acc.is_zero();
}

} // namespace pidisc
