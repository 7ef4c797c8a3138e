#include "pidisc/central_ring.hpp"

namespace pidisc {

CentralRing CentralRing::polynomial(const FieldSpec& f, std::vector<std::string> names) {
    CentralRing r;
    r.field_ = f;
    r.names_ = std::move(names);
    return r;
}

CentralRing CentralRing::with_rules(const FieldSpec& f, std::vector<std::string> names,
                                    std::vector<RewriteRule> rules, std::vector<ExpVec> variable_embedding,
                                    std::size_t ambient_dim, std::vector<std::string> ambient_names) {
    CentralRing r;
    r.field_ = f;
    r.names_ = std::move(names);
    r.rules_ = std::move(rules);
    r.var_embed_ = std::move(variable_embedding);
    r.ambient_dim_ = ambient_dim;
    r.ambient_names_ = std::move(ambient_names);
    if (!r.var_embed_.empty() && r.var_embed_.size() != r.names_.size())
        throw shape_error("ambient embedding must cover every central variable");
    for (const auto& rule : r.rules_) {
        if (rule.lhs.size() != r.names_.size() || rule.rhs.nvars() != r.names_.size())
            throw shape_error("rewrite rule arity mismatch");
    }
    return r;
}

MultiPoly CentralRing::reduce(const MultiPoly& p) const {
    if (rules_.empty()) return p;
    MultiPoly cur = p;
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& [e, c] : cur.terms()) {
            for (const auto& rule : rules_) {
                if (!expvec_divides(rule.lhs, e)) continue;
                ExpVec rest(e.size());
                for (std::size_t i = 0; i < e.size(); ++i) rest[i] = e[i] - rule.lhs[i];
                MultiPoly replacement = rule.rhs.times_monomial(rest, c);
                cur -= MultiPoly::monomial(field_, e, c);
                cur += replacement;
                changed = true;
                break;
            }
            if (changed) break;
        }
    }
    return cur;
}

bool CentralRing::point_valid(const std::vector<Scalar>& point) const {
    if (point.size() != nvars()) return false;
    for (const auto& rule : rules_) {
        Scalar lhs = MultiPoly::monomial(field_, rule.lhs, Scalar::one(field_)).eval(point);
        if (lhs != rule.rhs.eval(point)) return false;
    }
    return true;
}

void CentralRing::require_point(const std::vector<Scalar>& point) const {
    if (point.size() != nvars())
        throw invalid_point_error("point has " + std::to_string(point.size()) + " coordinates, expected " +
                                  std::to_string(nvars()));
    if (!point_valid(point)) throw invalid_point_error("point violates a central relation");
}

AmbientMap CentralRing::ambient_map() const {
    if (var_embed_.empty()) return identity_ambient_map();
    auto embed = var_embed_;
    auto dim = ambient_dim_;
    return [embed, dim](const ExpVec& e) {
        ExpVec out(dim, 0);
        for (std::size_t i = 0; i < e.size(); ++i)
            for (std::size_t j = 0; j < dim; ++j) out[j] += e[i] * embed[i][j];
        return out;
    };
}

} // namespace pidisc
