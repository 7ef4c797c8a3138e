#include "pidisc/scalar.hpp"

#include <cmath>
#include <vector>

namespace pidisc {

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod_u64(r, a, m);
        a = mulmod_u64(a, a, m);
        e >>= 1;
    }
    return r;
}

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % q == 0) return n == q;
    }
    // deterministic Miller-Rabin for 64-bit inputs
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = powmod_u64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

FieldSpec FieldSpec::prime(std::uint64_t p) {
    if (!is_prime_u64(p)) throw invalid_field_error("modulus " + std::to_string(p) + " is not prime");
    if (p < 3) throw invalid_field_error("prime fields require p >= 3 (char 2 is excluded)");
    return FieldSpec{FieldMode::prime, p};
}

Scalar Scalar::from_int(const FieldSpec& f, long long v) {
    Scalar s;
    s.field_ = f;
    if (f.is_prime_mode()) {
        long long m = v % static_cast<long long>(f.p);
        if (m < 0) m += static_cast<long long>(f.p);
        s.res_ = static_cast<std::uint64_t>(m);
    } else {
        s.rat_ = mpq_class(static_cast<long>(v));
    }
    return s;
}

Scalar Scalar::from_mpq(const FieldSpec& f, const mpq_class& q) {
    Scalar s;
    s.field_ = f;
    if (f.is_prime_mode()) {
        mpz_class num = q.get_num(), den = q.get_den();
        mpz_class p(static_cast<unsigned long>(f.p));
        mpz_class nm = num % p;
        if (nm < 0) nm += p;
        mpz_class dm = den % p;
        if (dm < 0) dm += p;
        if (dm == 0) throw invalid_field_error("denominator divisible by p");
        std::uint64_t n64 = nm.get_ui(), d64 = dm.get_ui();
        s.res_ = mulmod_u64(n64, powmod_u64(d64, f.p - 2, f.p), f.p);
    } else {
        s.rat_ = q;
        s.rat_.canonicalize();
    }
    return s;
}

Scalar Scalar::from_residue(const FieldSpec& f, std::uint64_t r) {
    if (!f.is_prime_mode()) throw invalid_field_error("residue construction needs a prime field");
    Scalar s;
    s.field_ = f;
    s.res_ = r % f.p;
    return s;
}

bool Scalar::is_zero() const {
    return field_.is_prime_mode() ? res_ == 0 : rat_ == 0;
}

bool Scalar::is_one() const {
    return field_.is_prime_mode() ? res_ == 1 : rat_ == 1;
}

void Scalar::check_same_field(const Scalar& o) const {
    if (field_ != o.field_) throw invalid_field_error("scalar field mismatch");
}

Scalar Scalar::operator-() const {
    Scalar s = *this;
    if (field_.is_prime_mode()) {
        s.res_ = res_ == 0 ? 0 : field_.p - res_;
    } else {
        s.rat_ = -rat_;
    }
    return s;
}

Scalar Scalar::operator+(const Scalar& o) const {
    check_same_field(o);
    Scalar s = *this;
    if (field_.is_prime_mode()) {
        s.res_ = res_ + o.res_;
        if (s.res_ >= field_.p) s.res_ -= field_.p;
    } else {
        s.rat_ = rat_ + o.rat_;
    }
    return s;
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
    check_same_field(o);
    Scalar s = *this;
    if (field_.is_prime_mode()) {
        s.res_ = mulmod_u64(res_, o.res_, field_.p);
    } else {
        s.rat_ = rat_ * o.rat_;
    }
    return s;
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inverse(); }

Scalar Scalar::inverse() const {
    if (is_zero()) throw error("division by zero");
    Scalar s = *this;
    if (field_.is_prime_mode()) {
        s.res_ = powmod_u64(res_, field_.p - 2, field_.p);
    } else {
        s.rat_ = 1 / rat_;
    }
    return s;
}

Scalar Scalar::pow(long long e) const {
    if (e < 0) return inverse().pow(-e);
    Scalar r = Scalar::one(field_);
    Scalar b = *this;
    std::uint64_t exp = static_cast<std::uint64_t>(e);
    while (exp) {
        if (exp & 1) r = r * b;
        b = b * b;
        exp >>= 1;
    }
    return r;
}

bool Scalar::operator==(const Scalar& o) const {
    check_same_field(o);
    return field_.is_prime_mode() ? res_ == o.res_ : rat_ == o.rat_;
}

bool Scalar::less(const Scalar& o) const {
    check_same_field(o);
    return field_.is_prime_mode() ? res_ < o.res_ : rat_ < o.rat_;
}

std::uint64_t Scalar::residue() const {
    if (!field_.is_prime_mode()) throw invalid_field_error("residue() on a rational scalar");
    return res_;
}

const mpq_class& Scalar::rational() const {
    if (field_.is_prime_mode()) throw invalid_field_error("rational() on a prime-field scalar");
    return rat_;
}

std::string Scalar::str() const {
    return field_.is_prime_mode() ? std::to_string(res_) : rat_.get_str();
}

namespace {

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> fs;
    for (std::uint64_t q = 2; q * q <= n; ++q) {
        if (n % q == 0) {
            fs.push_back(q);
            while (n % q == 0) n /= q;
        }
    }
    if (n > 1) fs.push_back(n);
    return fs;
}

} // namespace

Scalar primitive_root(std::uint64_t p) {
    FieldSpec f = FieldSpec::prime(p);
    auto qs = prime_factors(p - 1);
    for (std::uint64_t g = 2; g < p; ++g) {
        bool ok = true;
        for (std::uint64_t q : qs) {
            if (powmod_u64(g, (p - 1) / q, p) == 1) {
                ok = false;
                break;
            }
        }
        if (ok) return Scalar::from_residue(f, g);
    }
    throw invalid_field_error("no primitive root found (is p prime?)");
}

Scalar root_of_unity(std::uint64_t p, std::uint64_t d) {
    FieldSpec::prime(p); // primality validation
    if (d == 0 || (p - 1) % d != 0)
        throw invalid_field_error("F_" + std::to_string(p) + " has no element of order " + std::to_string(d));
    Scalar g = primitive_root(p);
    return g.pow(static_cast<long long>((p - 1) / d));
}

Scalar root_of_unity(const FieldSpec& f, std::uint64_t d) {
    if (f.is_prime_mode()) return root_of_unity(f.p, d);
    if (d == 1) return Scalar::one(f);
    if (d == 2) return Scalar::from_int(f, -1);
    throw unsupported_error("rational mode supports only roots of unity of order <= 2");
}

std::uint64_t mult_order(const Scalar& a) {
    if (a.is_zero()) throw error("mult_order of zero");
    if (!a.field().is_prime_mode()) {
        if (a.is_one()) return 1;
        if (a.rational() == -1) return 2;
        throw unsupported_error("rational scalar of infinite multiplicative order");
    }
    std::uint64_t p = a.field().p;
    std::uint64_t ord = p - 1;
    for (std::uint64_t q : prime_factors(p - 1)) {
        while (ord % q == 0 && powmod_u64(a.residue(), ord / q, p) == 1) ord /= q;
    }
    return ord;
}

std::uint64_t exact_isqrt(std::uint64_t n, const char* what) {
    std::uint64_t r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
    while (r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    if (r * r != n) throw inconsistency_error(std::string(what) + ": " + std::to_string(n) + " is not a perfect square");
    return r;
}

} // namespace pidisc
