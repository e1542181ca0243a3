#ifndef VOLRIG_RATIONAL_HPP
#define VOLRIG_RATIONAL_HPP

#include <cstdint>
#include <string>
#include <utility>

#include <gmpxx.h>

#include "volrig/errors.hpp"

namespace volrig {

/*
 * Exact rational scalar backed by GMP. Always kept canonical
 * (reduced, positive denominator). Division by zero throws instead of
 * raising SIGFPE like raw mpq division would.
 */
class Rational {
public:
    Rational() : v_(0) {}
    Rational(int n) : v_(n) {}                     // NOLINT: implicit by design
    Rational(long n) : v_(static_cast<long>(n)) {} // NOLINT
    Rational(long long n) { v_ = from_ll(n); }     // NOLINT
    Rational(long long num, long long den) {
        if (den == 0) throw ArgumentError("Rational: zero denominator");
        v_ = mpq_class(from_ll(num)) / mpq_class(from_ll(den));
        v_.canonicalize();
    }
    explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }
    explicit Rational(const mpz_class& n) : v_(n) {}

    // Accepts "n", "-n", "n/d".
    static Rational from_string(const std::string& s) {
        if (s.empty()) throw ParseError("Rational: empty string");
        mpq_class q;
        if (q.set_str(s, 10) != 0) throw ParseError("Rational: cannot parse '" + s + "'");
        if (q.get_den() == 0) throw ParseError("Rational: zero denominator in '" + s + "'");
        q.canonicalize();
        return Rational(std::move(q));
    }

    std::string to_string() const { return v_.get_str(); }

    const mpz_class& num() const { return v_.get_num(); }
    const mpz_class& den() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    int sign() const { return sgn(v_); }

    Rational operator-() const { return Rational(mpq_class(-v_)); }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw ArgumentError("Rational: division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }

    Rational inverse() const {
        if (is_zero()) throw ArgumentError("Rational: inverse of zero");
        return Rational(mpq_class(1) / v_);
    }

    const mpq_class& raw() const { return v_; }

private:
    static mpz_class from_ll(long long n) {
        // mpz has no long long constructor on LLP64; go through strings only
        // when the value does not fit in a long.
        if (n >= static_cast<long long>(std::numeric_limits<long>::min()) &&
            n <= static_cast<long long>(std::numeric_limits<long>::max()))
            return mpz_class(static_cast<long>(n));
        return mpz_class(std::to_string(n));
    }

    mpq_class v_;
};

} // namespace volrig

#endif
