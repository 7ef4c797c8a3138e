#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

#include "pidisc/errors.hpp"

namespace pidisc {

enum class FieldMode { rational, prime };

// The coefficient field: Q, or F_p for an odd prime p >= 3.
struct FieldSpec {
    FieldMode mode = FieldMode::rational;
    std::uint64_t p = 0;

    static FieldSpec rationals() { return FieldSpec{FieldMode::rational, 0}; }
    static FieldSpec prime(std::uint64_t p);

    bool is_prime_mode() const { return mode == FieldMode::prime; }
    // characteristic as an integer; 0 in rational mode
    std::uint64_t characteristic() const { return is_prime_mode() ? p : 0; }

    friend bool operator==(const FieldSpec& a, const FieldSpec& b) {
        return a.mode == b.mode && a.p == b.p;
    }
    friend bool operator!=(const FieldSpec& a, const FieldSpec& b) { return !(a == b); }
};

// An exact field element: arbitrary-precision rational, or a canonical residue in [0, p).
class Scalar {
public:
    Scalar() = default;

    static Scalar zero(const FieldSpec& f) { return from_int(f, 0); }
    static Scalar one(const FieldSpec& f) { return from_int(f, 1); }
    static Scalar from_int(const FieldSpec& f, long long v);
    static Scalar from_mpq(const FieldSpec& f, const mpq_class& q);
    static Scalar from_residue(const FieldSpec& f, std::uint64_t r);

    const FieldSpec& field() const { return field_; }
    bool is_zero() const;
    bool is_one() const;

    Scalar operator-() const;
    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

    Scalar inverse() const;
    // integer power, negative exponents via inverse
    Scalar pow(long long e) const;

    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }
    // total order used only for canonical printing/sorting
    bool less(const Scalar& o) const;

    std::uint64_t residue() const; // prime mode only
    const mpq_class& rational() const; // rational mode only

    std::string str() const;

private:
    FieldSpec field_{};
    std::uint64_t res_ = 0;
    mpq_class rat_{0};

    void check_same_field(const Scalar& o) const;
};

bool is_prime_u64(std::uint64_t n);

// smallest positive generator of F_p^*
Scalar primitive_root(std::uint64_t p);

// canonical root of unity of exact multiplicative order d: g^((p-1)/d) with g smallest.
// In rational mode only d = 1, 2 are available (1 and -1).
Scalar root_of_unity(std::uint64_t p, std::uint64_t d);
Scalar root_of_unity(const FieldSpec& f, std::uint64_t d);

// smallest m >= 1 with a^m = 1; a must be nonzero
std::uint64_t mult_order(const Scalar& a);

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t m);

// exact integer square root; throws inconsistency_error if n is not a perfect square
std::uint64_t exact_isqrt(std::uint64_t n, const char* what);

} // namespace pidisc
