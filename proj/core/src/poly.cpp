#include "pidisc/poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace pidisc {

std::uint64_t expvec_degree(const ExpVec& e) {
    std::uint64_t d = 0;
    for (auto x : e) d += x;
    return d;
}

bool expvec_divides(const ExpVec& a, const ExpVec& b) {
    if (a.size() != b.size()) throw shape_error("exponent length mismatch");
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

bool GrlexLess::operator()(const ExpVec& a, const ExpVec& b) const {
    std::uint64_t da = expvec_degree(a), db = expvec_degree(b);
    if (da != db) return da < db;
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

MultiPoly::MultiPoly(const FieldSpec& f, std::size_t nvars) : field_(f), nvars_(nvars) {}

MultiPoly MultiPoly::constant(const FieldSpec& f, std::size_t nvars, const Scalar& c) {
    MultiPoly p(f, nvars);
    if (!c.is_zero()) p.terms_.emplace(ExpVec(nvars, 0), c);
    return p;
}

MultiPoly MultiPoly::from_int(const FieldSpec& f, std::size_t nvars, long long v) {
    return constant(f, nvars, Scalar::from_int(f, v));
}

MultiPoly MultiPoly::variable(const FieldSpec& f, std::size_t nvars, std::size_t idx) {
    if (idx >= nvars) throw shape_error("variable index out of range");
    ExpVec e(nvars, 0);
    e[idx] = 1;
    return monomial(f, e, Scalar::one(f));
}

MultiPoly MultiPoly::monomial(const FieldSpec& f, const ExpVec& e, const Scalar& c) {
    MultiPoly p(f, e.size());
    if (!c.is_zero()) p.terms_.emplace(e, c);
    return p;
}

bool MultiPoly::is_constant() const {
    if (terms_.empty()) return true;
    return terms_.size() == 1 && expvec_degree(terms_.begin()->first) == 0;
}

long long MultiPoly::degree() const {
    if (terms_.empty()) return -1;
    return static_cast<long long>(expvec_degree(terms_.rbegin()->first));
}

Scalar MultiPoly::constant_value() const {
    if (terms_.empty()) return Scalar::zero(field_);
    if (!is_constant()) throw shape_error("constant_value of non-constant polynomial");
    return terms_.begin()->second;
}

std::pair<ExpVec, Scalar> MultiPoly::leading_term() const {
    if (terms_.empty()) throw shape_error("leading term of zero polynomial");
    auto it = terms_.rbegin();
    return {it->first, it->second};
}

void MultiPoly::check_compatible(const MultiPoly& o) const {
    if (field_ != o.field_ || nvars_ != o.nvars_) throw shape_error("polynomial ring mismatch");
}

void MultiPoly::add_term(const ExpVec& e, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r(field_, nvars_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
    check_compatible(o);
    MultiPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const { return *this + (-o); }

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
    check_compatible(o);
    MultiPoly r(field_, nvars_);
    ExpVec e(nvars_);
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : o.terms_) {
            for (std::size_t i = 0; i < nvars_; ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

MultiPoly MultiPoly::scaled(const Scalar& c) const {
    MultiPoly r(field_, nvars_);
    if (c.is_zero()) return r;
    for (const auto& [e, t] : terms_) r.terms_.emplace(e, t * c);
    return r;
}

MultiPoly MultiPoly::times_monomial(const ExpVec& e, const Scalar& c) const {
    MultiPoly r(field_, nvars_);
    if (c.is_zero()) return r;
    ExpVec s(nvars_);
    for (const auto& [ea, ca] : terms_) {
        for (std::size_t i = 0; i < nvars_; ++i) s[i] = ea[i] + e[i];
        r.terms_.emplace(s, ca * c);
    }
    return r;
}

MultiPoly MultiPoly::pow(std::uint64_t e) const {
    MultiPoly r = from_int(field_, nvars_, 1);
    MultiPoly b = *this;
    while (e) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

Scalar MultiPoly::eval(const std::vector<Scalar>& point) const {
    if (point.size() != nvars_) throw shape_error("evaluation point has wrong length");
    Scalar acc = Scalar::zero(field_);
    for (const auto& [e, c] : terms_) {
        Scalar t = c;
        for (std::size_t i = 0; i < nvars_; ++i)
            if (e[i]) t = t * point[i].pow(static_cast<long long>(e[i]));
        acc += t;
    }
    return acc;
}

MultiPoly MultiPoly::substitute(const std::vector<MultiPoly>& images) const {
    if (images.size() != nvars_) throw shape_error("substitution image count mismatch");
    if (images.empty()) {
        MultiPoly r(field_, 0);
        for (const auto& [e, c] : terms_) r.add_term(e, c);
        return r;
    }
    std::size_t tvars = images[0].nvars();
    MultiPoly acc(field_, tvars);
    for (const auto& [e, c] : terms_) {
        MultiPoly t = MultiPoly::constant(field_, tvars, c);
        for (std::size_t i = 0; i < nvars_; ++i)
            if (e[i]) t = t * images[i].pow(e[i]);
        acc += t;
    }
    return acc;
}

MultiPoly MultiPoly::derivative(std::size_t var) const {
    if (var >= nvars_) throw shape_error("derivative variable out of range");
    MultiPoly r(field_, nvars_);
    for (const auto& [e, c] : terms_) {
        if (e[var] == 0) continue;
        ExpVec d = e;
        d[var] -= 1;
        r.add_term(d, c * Scalar::from_int(field_, static_cast<long long>(e[var])));
    }
    return r;
}

std::optional<MultiPoly> MultiPoly::exact_div(const MultiPoly& divisor) const {
    check_compatible(divisor);
    if (divisor.is_zero()) throw error("division by zero polynomial");
    MultiPoly rem = *this;
    MultiPoly quot(field_, nvars_);
    auto [lde, ldc] = divisor.leading_term();
    while (!rem.is_zero()) {
        auto [re, rc] = rem.leading_term();
        if (!expvec_divides(lde, re)) return std::nullopt;
        ExpVec q(nvars_);
        for (std::size_t i = 0; i < nvars_; ++i) q[i] = re[i] - lde[i];
        Scalar qc = rc / ldc;
        quot.add_term(q, qc);
        rem -= divisor.times_monomial(q, qc);
    }
    return quot;
}

MultiPoly MultiPoly::monic() const {
    if (is_zero()) return *this;
    return scaled(leading_term().second.inverse());
}

bool MultiPoly::is_scalar_multiple_of(const MultiPoly& o) const {
    if (is_zero() || o.is_zero()) return is_zero() && o.is_zero();
    if (terms_.size() != o.terms_.size()) return false;
    auto it = terms_.begin();
    auto jt = o.terms_.begin();
    Scalar ratio = it->second / jt->second;
    for (; it != terms_.end(); ++it, ++jt) {
        if (it->first != jt->first) return false;
        if (it->second != jt->second * ratio) return false;
    }
    return true;
}

bool MultiPoly::operator==(const MultiPoly& o) const {
    check_compatible(o);
    return terms_ == o.terms_;
}

bool MultiPoly::order_less(const MultiPoly& a, const MultiPoly& b) {
    long long da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    auto it = a.terms_.rbegin();
    auto jt = b.terms_.rbegin();
    GrlexLess less;
    for (; it != a.terms_.rend() && jt != b.terms_.rend(); ++it, ++jt) {
        if (it->first != jt->first) return less(it->first, jt->first);
        if (it->second != jt->second) return it->second.less(jt->second);
    }
    return it == a.terms_.rend() && jt != b.terms_.rend();
}

std::string MultiPoly::str(const std::vector<std::string>& names) const {
    if (names.size() != nvars_) throw shape_error("variable name count mismatch");
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    // leading term first
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        std::string cs = c.str();
        bool neg = !cs.empty() && cs[0] == '-';
        if (neg) cs = cs.substr(1);
        if (first) {
            if (neg) out << "-";
            first = false;
        } else {
            out << (neg ? " - " : " + ");
        }
        std::vector<std::string> factors;
        for (std::size_t i = 0; i < nvars_; ++i) {
            if (e[i] == 0) continue;
            factors.push_back(e[i] == 1 ? names[i] : names[i] + "^" + std::to_string(e[i]));
        }
        bool coeff_is_one = (cs == "1");
        if (factors.empty()) {
            out << cs;
        } else {
            bool started = false;
            if (!coeff_is_one) {
                out << cs;
                started = true;
            }
            for (const auto& fct : factors) {
                if (started) out << "*";
                out << fct;
                started = true;
            }
        }
    }
    return out.str();
}

namespace {

struct Parser {
    const FieldSpec& field;
    const std::vector<std::string>& names;
    const std::string& text;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }

    bool eat(char c) {
        skip_ws();
        if (pos < text.size() && text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    [[noreturn]] void fail(const std::string& what) {
        throw parse_error("polynomial syntax error at offset " + std::to_string(pos) + ": " + what);
    }

    mpz_class parse_integer() {
        skip_ws();
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) fail("expected integer");
        return mpz_class(text.substr(start, pos - start));
    }

    std::uint32_t parse_exponent() {
        mpz_class e = parse_integer();
        if (e < 0 || e > 1000000) fail("exponent out of range");
        return static_cast<std::uint32_t>(e.get_ui());
    }

    std::optional<std::size_t> try_variable() {
        skip_ws();
        if (pos >= text.size()) return std::nullopt;
        if (!std::isalpha(static_cast<unsigned char>(text[pos])) && text[pos] != '_') return std::nullopt;
        std::size_t start = pos;
        while (pos < text.size() &&
               (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
            ++pos;
        std::string name = text.substr(start, pos - start);
        for (std::size_t i = 0; i < names.size(); ++i)
            if (names[i] == name) return i;
        pos = start;
        fail("unknown variable '" + name + "'");
    }

    // term := factor ('*' factor)*, factor := number['/'number] | var['^'exp]
    MultiPoly parse_term() {
        Scalar coeff = Scalar::one(field);
        ExpVec exps(names.size(), 0);
        bool any = false;
        while (true) {
            skip_ws();
            if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
                mpz_class num = parse_integer();
                mpq_class q(num);
                skip_ws();
                if (pos < text.size() && text[pos] == '/') {
                    ++pos;
                    mpz_class den = parse_integer();
                    if (den == 0) fail("zero denominator");
                    q = mpq_class(num) / mpq_class(den);
                }
                coeff = coeff * Scalar::from_mpq(field, q);
                any = true;
            } else if (auto var = try_variable()) {
                std::uint32_t e = 1;
                if (eat('^')) e = parse_exponent();
                exps[*var] += e;
                any = true;
            } else {
                fail("expected coefficient or variable");
            }
            if (!eat('*')) break;
        }
        if (!any) fail("empty term");
        return MultiPoly::monomial(field, exps, coeff);
    }

    MultiPoly parse_poly() {
        MultiPoly acc(field, names.size());
        skip_ws();
        bool neg = false;
        if (eat('-'))
            neg = true;
        else
            eat('+');
        while (true) {
            MultiPoly t = parse_term();
            acc += neg ? -t : t;
            skip_ws();
            if (eat('+')) {
                neg = false;
            } else if (eat('-')) {
                neg = true;
            } else {
                break;
            }
        }
        skip_ws();
        if (pos != text.size()) fail("trailing input");
        return acc;
    }
};

} // namespace

MultiPoly MultiPoly::parse(const FieldSpec& f, const std::vector<std::string>& names, const std::string& text) {
    Parser p{f, names, text};
    return p.parse_poly();
}

PolyFraction::PolyFraction(MultiPoly n, MultiPoly d) : num(std::move(n)), den(std::move(d)) {
    if (den.is_zero()) throw error("fraction with zero denominator");
}

PolyFraction PolyFraction::of(const MultiPoly& p) {
    return PolyFraction(p, MultiPoly::from_int(p.field(), p.nvars(), 1));
}

PolyFraction PolyFraction::operator+(const PolyFraction& o) const {
    if (den == o.den) return PolyFraction(num + o.num, den);
    return PolyFraction(num * o.den + o.num * den, den * o.den);
}

PolyFraction PolyFraction::operator*(const PolyFraction& o) const {
    return PolyFraction(num * o.num, den * o.den);
}

PolyFraction PolyFraction::scaled_poly(const MultiPoly& p) const {
    return PolyFraction(num * p, den);
}

std::optional<MultiPoly> PolyFraction::as_polynomial() const {
    if (num.is_zero()) return MultiPoly(num.field(), num.nvars());
    return num.exact_div(den);
}

} // namespace pidisc
