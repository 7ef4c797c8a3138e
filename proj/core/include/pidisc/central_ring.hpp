#pragma once

#include <string>
#include <vector>

#include "pidisc/ideal.hpp"
#include "pidisc/poly.hpp"

namespace pidisc {

// monomial -> polynomial rewrite, e.g. D^2 -> B*C
struct RewriteRule {
    ExpVec lhs;
    MultiPoly rhs;
};

// The center Z(R) (or a central subalgebra C): named variables over a field, with an
// optional confluent rewrite system and an optional embedding of its monomials into
// an ambient polynomial ring (used for monomial-ideal comparisons).
class CentralRing {
public:
    CentralRing() = default;

    static CentralRing polynomial(const FieldSpec& f, std::vector<std::string> names);
    static CentralRing with_rules(const FieldSpec& f, std::vector<std::string> names,
                                  std::vector<RewriteRule> rules,
                                  std::vector<ExpVec> variable_embedding, std::size_t ambient_dim,
                                  std::vector<std::string> ambient_names);

    const FieldSpec& field() const { return field_; }
    std::size_t nvars() const { return names_.size(); }
    const std::vector<std::string>& names() const { return names_; }
    bool has_relations() const { return !rules_.empty(); }
    const std::vector<RewriteRule>& rules() const { return rules_; }

    MultiPoly zero() const { return MultiPoly(field_, nvars()); }
    MultiPoly one() const { return MultiPoly::from_int(field_, nvars(), 1); }
    MultiPoly from_int(long long v) const { return MultiPoly::from_int(field_, nvars(), v); }
    MultiPoly var(std::size_t i) const { return MultiPoly::variable(field_, nvars(), i); }

    // normal form under the rewrite rules
    MultiPoly reduce(const MultiPoly& p) const;
    MultiPoly mul(const MultiPoly& a, const MultiPoly& b) const { return reduce(a * b); }
    bool is_zero(const MultiPoly& p) const { return reduce(p).is_zero(); }

    // a maxspec point must satisfy every relation
    bool point_valid(const std::vector<Scalar>& point) const;
    void require_point(const std::vector<Scalar>& point) const;

    AmbientMap ambient_map() const;
    bool has_ambient() const { return !var_embed_.empty(); }
    const std::vector<std::string>& ambient_names() const { return ambient_names_; }

    MultiPoly parse(const std::string& text) const { return MultiPoly::parse(field_, names_, text); }
    std::string str(const MultiPoly& p) const { return p.str(names_); }

private:
    FieldSpec field_{};
    std::vector<std::string> names_;
    std::vector<RewriteRule> rules_;
    std::vector<ExpVec> var_embed_; // empty = identity embedding
    std::size_t ambient_dim_ = 0;
    std::vector<std::string> ambient_names_;
};

} // namespace pidisc
