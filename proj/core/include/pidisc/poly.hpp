#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pidisc/scalar.hpp"

namespace pidisc {

// one monomial: exponent per ambient variable
using ExpVec = std::vector<std::uint32_t>;

std::uint64_t expvec_degree(const ExpVec& e);
bool expvec_divides(const ExpVec& a, const ExpVec& b); // a | b componentwise

// graded lexicographic: degree first, then lex
struct GrlexLess {
    bool operator()(const ExpVec& a, const ExpVec& b) const;
};

// Sparse multivariate polynomial over an exact field. Terms are kept normalized:
// no zero coefficients are ever stored.
class MultiPoly {
public:
    MultiPoly() = default;
    MultiPoly(const FieldSpec& f, std::size_t nvars);

    static MultiPoly constant(const FieldSpec& f, std::size_t nvars, const Scalar& c);
    static MultiPoly from_int(const FieldSpec& f, std::size_t nvars, long long v);
    static MultiPoly variable(const FieldSpec& f, std::size_t nvars, std::size_t idx);
    static MultiPoly monomial(const FieldSpec& f, const ExpVec& e, const Scalar& c);

    const FieldSpec& field() const { return field_; }
    std::size_t nvars() const { return nvars_; }
    const std::map<ExpVec, Scalar, GrlexLess>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    bool is_monomial() const { return terms_.size() == 1; }
    // total degree; -1 for the zero polynomial
    long long degree() const;

    Scalar constant_value() const; // value when is_constant()
    // leading term under grlex
    std::pair<ExpVec, Scalar> leading_term() const;

    MultiPoly operator-() const;
    MultiPoly operator+(const MultiPoly& o) const;
    MultiPoly operator-(const MultiPoly& o) const;
    MultiPoly operator*(const MultiPoly& o) const;
    MultiPoly& operator+=(const MultiPoly& o) { return *this = *this + o; }
    MultiPoly& operator-=(const MultiPoly& o) { return *this = *this - o; }
    MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }

    MultiPoly scaled(const Scalar& c) const;
    MultiPoly times_monomial(const ExpVec& e, const Scalar& c) const;
    MultiPoly pow(std::uint64_t e) const;

    Scalar eval(const std::vector<Scalar>& point) const;
    // substitute each variable by a polynomial over another variable set
    MultiPoly substitute(const std::vector<MultiPoly>& images) const;
    MultiPoly derivative(std::size_t var) const;

    // quotient when the division is exact, nullopt otherwise
    std::optional<MultiPoly> exact_div(const MultiPoly& divisor) const;

    // divide by the leading coefficient
    MultiPoly monic() const;
    // true when *this = c * o for some nonzero scalar c
    bool is_scalar_multiple_of(const MultiPoly& o) const;

    bool operator==(const MultiPoly& o) const;
    bool operator!=(const MultiPoly& o) const { return !(*this == o); }
    // total order for deterministic sorting of generator lists
    static bool order_less(const MultiPoly& a, const MultiPoly& b);

    std::string str(const std::vector<std::string>& names) const;
    static MultiPoly parse(const FieldSpec& f, const std::vector<std::string>& names, const std::string& text);

    void add_term(const ExpVec& e, const Scalar& c); // accumulate, dropping zeros

private:
    FieldSpec field_{};
    std::size_t nvars_ = 0;
    std::map<ExpVec, Scalar, GrlexLess> terms_;

    void check_compatible(const MultiPoly& o) const;
};

// Fraction num/den of polynomials over an integral central ring. Kept unreduced;
// reduce_exact() simplifies only when the division happens to be exact.
struct PolyFraction {
    MultiPoly num;
    MultiPoly den;

    PolyFraction() = default;
    PolyFraction(MultiPoly n, MultiPoly d);
    static PolyFraction of(const MultiPoly& p);

    bool is_zero() const { return num.is_zero(); }
    PolyFraction operator+(const PolyFraction& o) const;
    PolyFraction operator*(const PolyFraction& o) const;
    PolyFraction scaled_poly(const MultiPoly& p) const;

    // polynomial value if den | num exactly
    std::optional<MultiPoly> as_polynomial() const;
};

} // namespace pidisc
