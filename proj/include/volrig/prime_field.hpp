#ifndef VOLRIG_PRIME_FIELD_HPP
#define VOLRIG_PRIME_FIELD_HPP

#include <cstdint>
#include <string>

#include "volrig/errors.hpp"

namespace volrig {

namespace detail {

inline std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

inline std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod_u64(r, a, m);
        a = mulmod_u64(a, a, m);
        e >>= 1;
    }
    return r;
}

// Deterministic Miller-Rabin, valid for all 64-bit inputs with these bases.
inline bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = powmod_u64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) { composite = false; break; }
        }
        if (composite) return false;
    }
    return true;
}

} // namespace detail

/*
 * Element of Z_p for a process-wide odd prime modulus. The default prime
 * is 2^61 + 15, the smallest prime above 2^61, so products fit comfortably
 * in 128-bit intermediates and k! is invertible for every feasible k.
 *
 * set_modulus() must not be called while Fp values are live; it is intended
 * for process startup (CLI --prime).
 */
class Fp {
public:
    static constexpr std::uint64_t kDefaultModulus = 2305843009213693967ull; // 2^61 + 15

    static std::uint64_t modulus() { return mod_(); }

    static void set_modulus(std::uint64_t p) {
        if (p < 3 || !detail::is_prime_u64(p))
            throw ArgumentError("Fp: modulus must be an odd prime, got " + std::to_string(p));
        mod_() = p;
    }

    Fp() : v_(0) {}
    Fp(int n) : Fp(static_cast<long long>(n)) {}   // NOLINT: implicit by design
    Fp(long n) : Fp(static_cast<long long>(n)) {}  // NOLINT
    Fp(long long n) {                              // NOLINT
        const std::uint64_t p = modulus();
        long long r = n % static_cast<long long>(p);
        if (r < 0) r += static_cast<long long>(p);
        v_ = static_cast<std::uint64_t>(r);
    }

    static Fp from_residue(std::uint64_t r) {
        Fp x;
        x.v_ = r % modulus();
        return x;
    }

    static Fp from_string(const std::string& s) {
        if (s.empty()) throw ParseError("Fp: empty string");
        bool neg = s[0] == '-';
        std::uint64_t acc = 0;
        const std::uint64_t p = modulus();
        for (std::size_t i = neg ? 1 : 0; i < s.size(); ++i) {
            if (s[i] < '0' || s[i] > '9') throw ParseError("Fp: cannot parse '" + s + "'");
            acc = detail::mulmod_u64(acc, 10, p);
            acc = (acc + static_cast<std::uint64_t>(s[i] - '0')) % p;
        }
        Fp x;
        x.v_ = neg ? (acc == 0 ? 0 : p - acc) : acc;
        return x;
    }

    std::uint64_t residue() const { return v_; }
    std::string to_string() const { return std::to_string(v_); }

    bool is_zero() const { return v_ == 0; }

    Fp operator-() const {
        Fp r;
        r.v_ = v_ == 0 ? 0 : modulus() - v_;
        return r;
    }

    Fp& operator+=(const Fp& o) {
        v_ += o.v_;
        if (v_ >= modulus()) v_ -= modulus();
        return *this;
    }
    Fp& operator-=(const Fp& o) {
        v_ = v_ >= o.v_ ? v_ - o.v_ : v_ + modulus() - o.v_;
        return *this;
    }
    Fp& operator*=(const Fp& o) {
        v_ = detail::mulmod_u64(v_, o.v_, modulus());
        return *this;
    }
    Fp& operator/=(const Fp& o) { return *this *= o.inverse(); }

    friend Fp operator+(Fp a, const Fp& b) { return a += b; }
    friend Fp operator-(Fp a, const Fp& b) { return a -= b; }
    friend Fp operator*(Fp a, const Fp& b) { return a *= b; }
    friend Fp operator/(Fp a, const Fp& b) { return a /= b; }

    friend bool operator==(const Fp& a, const Fp& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Fp& a, const Fp& b) { return a.v_ != b.v_; }

    Fp inverse() const {
        if (v_ == 0) throw ArgumentError("Fp: division by zero");
        Fp r;
        r.v_ = detail::powmod_u64(v_, modulus() - 2, modulus());
        return r;
    }

private:
    static std::uint64_t& mod_() {
        static std::uint64_t m = kDefaultModulus;
        return m;
    }

    std::uint64_t v_;
};

} // namespace volrig

#endif
