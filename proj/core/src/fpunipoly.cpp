#include "pidisc/fpunipoly.hpp"

#include <algorithm>

#include "pidisc/errors.hpp"

namespace pidisc {
namespace fpuni {

Poly trim(Poly a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
    return a;
}

bool is_zero(const Poly& a) { return trim(a).empty(); }

long long degree(const Poly& a) {
    Poly t = trim(a);
    return static_cast<long long>(t.size()) - 1;
}

Poly add(const Poly& a, const Poly& b, std::uint64_t p) {
    Poly r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) {
        std::uint64_t v = (i < a.size() ? a[i] : 0) + (i < b.size() ? b[i] : 0);
        r[i] = v >= p ? v - p : v;
    }
    return trim(r);
}

Poly sub(const Poly& a, const Poly& b, std::uint64_t p) {
    Poly r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) {
        std::uint64_t av = i < a.size() ? a[i] : 0;
        std::uint64_t bv = i < b.size() ? b[i] : 0;
        r[i] = av >= bv ? av - bv : av + p - bv;
    }
    return trim(r);
}

Poly mul(const Poly& a, const Poly& b, std::uint64_t p) {
    if (is_zero(a) || is_zero(b)) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = (r[i + j] + mulmod_u64(a[i], b[j], p)) % p;
    }
    return trim(r);
}

Poly scale(const Poly& a, std::uint64_t c, std::uint64_t p) {
    Poly r = a;
    for (auto& v : r) v = mulmod_u64(v, c % p, p);
    return trim(r);
}

Poly monic(const Poly& a, std::uint64_t p) {
    Poly t = trim(a);
    if (t.empty()) return t;
    return scale(t, powmod_u64(t.back(), p - 2, p), p);
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b, std::uint64_t p) {
    Poly rem = trim(a), div = trim(b);
    if (div.empty()) throw error("univariate division by zero");
    if (rem.size() < div.size()) return {{}, rem};
    Poly quot(rem.size() - div.size() + 1, 0);
    std::uint64_t inv = powmod_u64(div.back(), p - 2, p);
    for (std::size_t i = rem.size(); i >= div.size(); --i) {
        std::uint64_t c = mulmod_u64(rem[i - 1], inv, p);
        std::size_t shift = i - div.size();
        if (c != 0) {
            quot[shift] = c;
            for (std::size_t j = 0; j < div.size(); ++j) {
                std::uint64_t sb = mulmod_u64(c, div[j], p);
                std::uint64_t cur = rem[shift + j];
                rem[shift + j] = cur >= sb ? cur - sb : cur + p - sb;
            }
        }
        if (i == div.size()) break;
    }
    return {trim(quot), trim(rem)};
}

Poly mod(const Poly& a, const Poly& b, std::uint64_t p) { return divmod(a, b, p).second; }

Poly gcd(Poly a, Poly b, std::uint64_t p) {
    a = trim(a);
    b = trim(b);
    while (!b.empty()) {
        Poly r = mod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return monic(a, p);
}

Poly derivative(const Poly& a, std::uint64_t p) {
    if (a.size() <= 1) return {};
    Poly r(a.size() - 1, 0);
    for (std::size_t i = 1; i < a.size(); ++i) r[i - 1] = mulmod_u64(a[i], i % p, p);
    return trim(r);
}

Poly powmod(const Poly& base, unsigned __int128 e, const Poly& m, std::uint64_t p) {
    Poly r = {1};
    Poly b = mod(base, m, p);
    while (e) {
        if (e & 1) r = mod(mul(r, b, p), m, p);
        b = mod(mul(b, b, p), m, p);
        e >>= 1;
    }
    return r;
}

bool is_squarefree(const Poly& f, std::uint64_t p) {
    Poly d = derivative(f, p);
    if (is_zero(d)) return degree(f) <= 0;
    return degree(gcd(f, d, p)) == 0;
}

namespace {

unsigned __int128 ipow128(std::uint64_t base, unsigned exp) {
    unsigned __int128 r = 1;
    for (unsigned i = 0; i < exp; ++i) r *= base;
    return r;
}

// split a squarefree product of degree-d irreducibles into its irreducible factors
void equal_degree_split(const Poly& f, unsigned d, std::uint64_t p, Rng& rng, std::vector<Poly>& out) {
    long long n = degree(f);
    if (n == static_cast<long long>(d)) {
        out.push_back(monic(f, p));
        return;
    }
    // Cantor-Zassenhaus, p odd: gcd(f, a^((p^d-1)/2) - 1) is proper for ~half of all a
    for (int attempt = 0; attempt < 256; ++attempt) {
        Poly a(static_cast<std::size_t>(n), 0);
        for (auto& c : a) c = rng.below(p);
        a = trim(a);
        if (degree(a) < 1) continue;
        Poly g = gcd(f, a, p);
        if (degree(g) > 0 && degree(g) < n) {
            equal_degree_split(g, d, p, rng, out);
            equal_degree_split(divmod(f, g, p).first, d, p, rng, out);
            return;
        }
        unsigned __int128 e = (ipow128(p, d) - 1) / 2;
        Poly b = powmod(a, e, f, p);
        g = gcd(f, sub(b, Poly{1}, p), p);
        if (degree(g) > 0 && degree(g) < n) {
            equal_degree_split(g, d, p, rng, out);
            equal_degree_split(divmod(f, g, p).first, d, p, rng, out);
            return;
        }
    }
    throw inconsistency_error("equal-degree splitting failed to converge");
}

} // namespace

std::vector<Poly> factor_squarefree(const Poly& fin, std::uint64_t p, Rng& rng) {
    Poly f = monic(fin, p);
    if (degree(f) < 1) throw shape_error("factorization needs degree >= 1");
    if (!is_squarefree(f, p)) throw shape_error("factor_squarefree needs squarefree input");
    std::vector<Poly> out;
    // distinct-degree pass: gcd with x^(p^d) - x collects the degree-d part
    Poly x = {0, 1};
    Poly h = x;
    unsigned d = 0;
    while (degree(f) > 0) {
        ++d;
        if (2 * static_cast<long long>(d) > degree(f)) {
            out.push_back(monic(f, p));
            break;
        }
        h = powmod(h, static_cast<unsigned __int128>(p), f, p);
        Poly g = gcd(f, sub(h, x, p), p);
        if (degree(g) > 0) {
            equal_degree_split(g, d, p, rng, out);
            f = divmod(f, g, p).first;
            h = mod(h, f, p);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace fpuni
} // namespace pidisc
