#include "pidisc/ideal.hpp"

#include <algorithm>

#include "pidisc/polymatrix.hpp"

namespace pidisc {

IdealGens IdealGens::make(std::vector<MultiPoly> gens) {
    IdealGens out;
    for (auto& g : gens) {
        if (g.is_zero()) continue;
        out.generators.push_back(g.monic());
    }
    std::sort(out.generators.begin(), out.generators.end(), MultiPoly::order_less);
    out.generators.erase(std::unique(out.generators.begin(), out.generators.end(),
                                     [](const MultiPoly& a, const MultiPoly& b) { return a == b; }),
                         out.generators.end());
    out.monomial_flag = std::all_of(out.generators.begin(), out.generators.end(),
                                    [](const MultiPoly& g) { return g.is_monomial(); });
    return out;
}

AmbientMap identity_ambient_map() {
    return [](const ExpVec& e) { return e; };
}

namespace {

bool monomial_in_ideal(const ExpVec& m, const std::vector<ExpVec>& gens) {
    for (const auto& g : gens)
        if (expvec_divides(g, m)) return true;
    return false;
}

} // namespace

bool monomial_ideal_equal(const IdealGens& a, const IdealGens& b, const AmbientMap& ambient) {
    if (!a.monomial_flag || !b.monomial_flag)
        throw unsupported_error("monomial_ideal_equal requires monomial generators");
    std::vector<ExpVec> ea, eb;
    for (const auto& g : a.generators) ea.push_back(ambient(g.leading_term().first));
    for (const auto& g : b.generators) eb.push_back(ambient(g.leading_term().first));
    for (const auto& m : ea)
        if (!monomial_in_ideal(m, eb)) return false;
    for (const auto& m : eb)
        if (!monomial_in_ideal(m, ea)) return false;
    return true;
}

bool monomial_ideal_equal(const IdealGens& a, const IdealGens& b) {
    return monomial_ideal_equal(a, b, identity_ambient_map());
}

namespace {

void enumerate_monomials(std::size_t nvars, std::uint32_t max_deg, ExpVec& cur, std::size_t pos,
                         std::uint32_t used, std::vector<ExpVec>& out) {
    if (pos == nvars) {
        out.push_back(cur);
        return;
    }
    for (std::uint32_t e = 0; e + used <= max_deg; ++e) {
        cur[pos] = e;
        enumerate_monomials(nvars, max_deg, cur, pos + 1, used + e, out);
    }
    cur[pos] = 0;
}

} // namespace

bool linear_membership(const MultiPoly& f, const IdealGens& gens, long long degree_bound) {
    if (f.is_zero()) return true;
    if (degree_bound < f.degree()) throw shape_error("degree bound below deg f");
    const FieldSpec& field = f.field();
    std::size_t nvars = f.nvars();

    // columns: monomials of degree <= degree_bound
    std::vector<ExpVec> cols;
    {
        ExpVec cur(nvars, 0);
        enumerate_monomials(nvars, static_cast<std::uint32_t>(degree_bound), cur, 0, 0, cols);
    }
    std::map<ExpVec, std::size_t, GrlexLess> col_index;
    for (std::size_t i = 0; i < cols.size(); ++i) col_index.emplace(cols[i], i);

    auto to_row = [&](const MultiPoly& p) {
        std::vector<Scalar> row(cols.size(), Scalar::zero(field));
        for (const auto& [e, c] : p.terms()) {
            auto it = col_index.find(e);
            if (it == col_index.end()) throw shape_error("term exceeds degree bound");
            row[it->second] = c;
        }
        return row;
    };

    // rows: m * g for every generator g and monomial m with deg(m*g) <= bound
    std::vector<std::vector<Scalar>> rows;
    for (const auto& g : gens.generators) {
        long long room = degree_bound - g.degree();
        if (room < 0) continue;
        std::vector<ExpVec> mults;
        ExpVec cur(nvars, 0);
        enumerate_monomials(nvars, static_cast<std::uint32_t>(room), cur, 0, 0, mults);
        for (const auto& m : mults) rows.push_back(to_row(g.times_monomial(m, Scalar::one(field))));
    }
    if (rows.empty()) return false;

    auto pivots = row_reduce(rows, field);
    std::vector<Scalar> v = to_row(f);
    reduce_against(v, rows, pivots);
    return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); });
}

} // namespace pidisc
