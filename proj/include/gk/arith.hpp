#pragma once

// Exact arbitrary-precision arithmetic: primality, factorization, and the
// factored-integer type everything else is built on.

#include <algorithm>
#include <cstdint>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace gk {

using Integer = mpz_class;

namespace detail {

// Primes up to 10^6, sieved once.
inline const std::vector<std::uint32_t>& small_primes() {
    static const std::vector<std::uint32_t> primes = [] {
        constexpr std::uint32_t limit = 1'000'000;
        std::vector<bool> composite(limit + 1, false);
        std::vector<std::uint32_t> out;
        for (std::uint32_t i = 2; i <= limit; ++i) {
            if (composite[i]) continue;
            out.push_back(i);
            for (std::uint64_t j = static_cast<std::uint64_t>(i) * i; j <= limit; j += i)
                composite[static_cast<std::uint32_t>(j)] = true;
        }
        return out;
    }();
    return primes;
}

inline bool small_prime_lookup(std::uint64_t n) {
    const auto& ps = small_primes();
    return std::binary_search(ps.begin(), ps.end(), static_cast<std::uint32_t>(n));
}

// One strong-pseudoprime round to the given base. n odd, n > 2, base >= 2.
inline bool strong_probable_prime(const Integer& n, unsigned long base) {
    Integer nm1 = n - 1;
    unsigned long s = mpz_scan1(nm1.get_mpz_t(), 0);
    Integer d = nm1 >> s;
    Integer b(base);
    if (b >= n) b %= n;
    if (b <= 1) return true;  // base collapses mod n, round is vacuous
    Integer x;
    mpz_powm(x.get_mpz_t(), b.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
    if (x == 1 || x == nm1) return true;
    for (unsigned long i = 1; i < s; ++i) {
        x = (x * x) % n;
        if (x == nm1) return true;
    }
    return false;
}

}  // namespace detail

// Deterministic and exact for every input this library produces: trial
// division below 2^20; the 12-base Miller-Rabin set (valid for all 64-bit
// integers) up to 2^64; above that, 25 fixed prime bases plus mandatory
// trial division by all primes <= 10^6.
inline bool is_prime(const Integer& n) {
    if (n < 2) return false;
    if (n < (1 << 20)) {
        std::uint64_t v = n.get_ui();
        if (v < 4) return true;
        if (v % 2 == 0) return false;
        for (std::uint32_t p : detail::small_primes()) {
            if (static_cast<std::uint64_t>(p) * p > v) break;
            if (v % p == 0) return false;
        }
        return true;
    }
    if (mpz_even_p(n.get_mpz_t())) return false;
    if (mpz_sizeinbase(n.get_mpz_t(), 2) <= 64) {
        static constexpr unsigned long bases[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
        for (unsigned long b : bases)
            if (!detail::strong_probable_prime(n, b)) return false;
        return true;
    }
    static constexpr unsigned long bases[] = {2,  3,  5,  7,  11, 13, 17, 19, 23, 29, 31, 37, 41,
                                              43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97};
    for (unsigned long b : bases)
        if (!detail::strong_probable_prime(n, b)) return false;
    for (std::uint32_t p : detail::small_primes())
        if (mpz_divisible_ui_p(n.get_mpz_t(), p)) return false;
    return true;
}

inline bool is_prime(std::uint64_t n) { return is_prime(Integer(static_cast<unsigned long>(n))); }

// A positive integer in factored form: prime -> exponent, ascending primes,
// no zero exponents, every key prime.
class Factorization {
public:
    using Map = std::map<Integer, unsigned>;

    Factorization() = default;

    void multiply_prime(const Integer& p, unsigned e) {
        if (e == 0) return;
        if (!is_prime(p))
            throw std::invalid_argument("Factorization: " + p.get_str() + " is not prime");
        entries_[p] += e;
    }

    Factorization& operator*=(const Factorization& o) {
        for (const auto& [p, e] : o.entries_) entries_[p] += e;
        return *this;
    }
    friend Factorization operator*(Factorization a, const Factorization& b) { return a *= b; }

    // Exact division; throws if not a divisor.
    Factorization& operator/=(const Factorization& o) {
        for (const auto& [p, e] : o.entries_) {
            auto it = entries_.find(p);
            if (it == entries_.end() || it->second < e)
                throw std::domain_error("Factorization: inexact division by " + p.get_str() + "^" +
                                        std::to_string(e));
            it->second -= e;
            if (it->second == 0) entries_.erase(it);
        }
        return *this;
    }
    friend Factorization operator/(Factorization a, const Factorization& b) { return a /= b; }

    Factorization pow(unsigned k) const {
        Factorization r;
        if (k == 0) return r;
        r.entries_ = entries_;
        for (auto& [p, e] : r.entries_) e *= k;
        return r;
    }

    unsigned valuation(const Integer& p) const {
        if (!is_prime(p))
            throw std::invalid_argument("valuation: " + p.get_str() + " is not prime");
        auto it = entries_.find(p);
        return it == entries_.end() ? 0 : it->second;
    }

    Integer largest_prime() const {
        if (entries_.empty())
            throw std::domain_error("largest_prime: empty factorization (the integer 1)");
        return entries_.rbegin()->first;
    }

    Integer value() const {
        Integer v = 1, pe;
        for (const auto& [p, e] : entries_) {
            mpz_pow_ui(pe.get_mpz_t(), p.get_mpz_t(), e);
            v *= pe;
        }
        return v;
    }

    bool divides(const Factorization& o) const {
        for (const auto& [p, e] : entries_) {
            auto it = o.entries_.find(p);
            if (it == o.entries_.end() || it->second < e) return false;
        }
        return true;
    }

    std::vector<Integer> primes() const {
        std::vector<Integer> out;
        out.reserve(entries_.size());
        for (const auto& [p, e] : entries_) out.push_back(p);
        return out;
    }

    // "2^4 * 5^1 * 73^1"; "1" for the empty factorization.
    std::string to_string() const {
        if (entries_.empty()) return "1";
        std::ostringstream os;
        bool first = true;
        for (const auto& [p, e] : entries_) {
            if (!first) os << " * ";
            os << p.get_str() << "^" << e;
            first = false;
        }
        return os.str();
    }

    bool empty() const { return entries_.empty(); }
    std::size_t size() const { return entries_.size(); }
    const Map& entries() const { return entries_; }
    bool operator==(const Factorization& o) const { return entries_ == o.entries_; }

private:
    Map entries_;
};

namespace detail {

// Brent-cycle Pollard rho; n odd composite with no prime factor <= 10^6.
// The polynomial offset c walks 1,2,3,... so the factor split is reproducible.
inline Integer brent_rho(const Integer& n) {
    for (unsigned long c = 1;; ++c) {
        Integer y = 2, q = 1, g = 1, x, ys;
        unsigned long r = 1;
        const unsigned long m = 128;
        while (g == 1) {
            x = y;
            for (unsigned long i = 0; i < r; ++i) y = (y * y + c) % n;
            unsigned long k = 0;
            while (k < r && g == 1) {
                ys = y;
                unsigned long lim = std::min(m, r - k);
                for (unsigned long i = 0; i < lim; ++i) {
                    y = (y * y + c) % n;
                    q = (q * abs(x - y)) % n;
                }
                mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
                k += lim;
            }
            r *= 2;
        }
        if (g == n) {
            // batched gcd overshot: replay one step at a time
            g = 1;
            while (g == 1) {
                ys = (ys * ys + c) % n;
                Integer d = abs(x - ys);
                mpz_gcd(g.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
            }
        }
        if (g != n) return g;
    }
}

}  // namespace detail

// Factors n >= 1 by trial division over primes <= 10^6 followed by Brent rho.
inline Factorization factor(const Integer& n0) {
    if (n0 < 1) throw std::invalid_argument("factor: argument must be a positive integer");
    Factorization f;
    Integer n = n0;
    bool exhausted_sieve = true;
    for (std::uint32_t p : detail::small_primes()) {
        if (mpz_cmp_ui(n.get_mpz_t(), static_cast<unsigned long>(p) * p) < 0) {
            exhausted_sieve = false;
            break;
        }
        if (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
            unsigned e = 0;
            do {
                mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
                ++e;
            } while (mpz_divisible_ui_p(n.get_mpz_t(), p));
            f.multiply_prime(Integer(p), e);
        }
    }
    if (n == 1) return f;
    if (!exhausted_sieve || is_prime(n)) {
        f.multiply_prime(n, 1);
        return f;
    }
    std::vector<Integer> work{n};
    while (!work.empty()) {
        Integer m = work.back();
        work.pop_back();
        if (is_prime(m)) {
            f.multiply_prime(m, 1);
            continue;
        }
        Integer d = detail::brent_rho(m);
        work.push_back(d);
        work.push_back(m / d);
    }
    return f;
}

inline Factorization factor(std::uint64_t n) { return factor(Integer(static_cast<unsigned long>(n))); }

inline unsigned valuation(const Factorization& f, const Integer& p) { return f.valuation(p); }
inline Integer largest_prime(const Factorization& f) { return f.largest_prime(); }

namespace detail {

inline std::vector<unsigned> divisors_of(unsigned n) {
    std::vector<unsigned> out;
    for (unsigned d = 1; d <= n; ++d)
        if (n % d == 0) out.push_back(d);
    return out;
}

inline int moebius(unsigned n) {
    int mu = 1;
    for (unsigned p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            n /= p;
            if (n % p == 0) return 0;
            mu = -mu;
        }
    }
    if (n > 1) mu = -mu;
    return mu;
}

// Phi_d(x) for integer x >= 2, via the Moebius product over divisors of d.
inline Integer cyclotomic_value(unsigned d, std::uint64_t x) {
    Integer num = 1, den = 1, t;
    for (unsigned e : divisors_of(d)) {
        int mu = moebius(d / e);
        if (mu == 0) continue;
        mpz_ui_pow_ui(t.get_mpz_t(), static_cast<unsigned long>(x), e);
        t -= 1;
        (mu > 0 ? num : den) *= t;
    }
    return num / den;  // exact
}

// factor(Phi_d(p)); cached for small p, where the same values recur across
// many group-order formulas.
inline Factorization factor_cyclotomic(std::uint64_t p, unsigned d) {
    static std::map<std::pair<std::uint64_t, unsigned>, Factorization> cache;
    static std::mutex cache_mutex;
    const bool cacheable = p <= 1000;
    if (cacheable) {
        std::lock_guard<std::mutex> lock(cache_mutex);
        auto it = cache.find({p, d});
        if (it != cache.end()) return it->second;
    }
    Factorization f = factor(cyclotomic_value(d, p));
    if (cacheable) {
        std::lock_guard<std::mutex> lock(cache_mutex);
        cache.emplace(std::make_pair(p, d), f);
    }
    return f;
}

}  // namespace detail

// Factorization of p^e - 1 (minus) or p^e + 1 (plus) for prime p, assembled
// from cyclotomic pieces so that only small values reach the factoring core.
inline Factorization factor_power_pm1(std::uint64_t p, unsigned e, bool plus) {
    if (e == 0) throw std::invalid_argument("factor_power_pm1: exponent must be >= 1");
    Factorization f;
    if (!plus) {
        for (unsigned d : detail::divisors_of(e)) f *= detail::factor_cyclotomic(p, d);
    } else {
        for (unsigned d : detail::divisors_of(2 * e))
            if (e % d != 0) f *= detail::factor_cyclotomic(p, d);
    }
    return f;
}

}  // namespace gk
