#ifndef VOLRIG_FIELD_HPP
#define VOLRIG_FIELD_HPP

#include <concepts>
#include <string>

#include "volrig/prime_field.hpp"
#include "volrig/rational.hpp"

namespace volrig {

template <class F>
concept FieldScalar = requires(F a, F b) {
    { a + b } -> std::convertible_to<F>;
    { a - b } -> std::convertible_to<F>;
    { a * b } -> std::convertible_to<F>;
    { a / b } -> std::convertible_to<F>;
    { -a } -> std::convertible_to<F>;
    { a == b } -> std::convertible_to<bool>;
    { a.is_zero() } -> std::convertible_to<bool>;
    { a.to_string() } -> std::convertible_to<std::string>;
    F(0);
    F(1);
};

enum class FieldKind { rational, prime };

template <class F> struct FieldTraits;

template <> struct FieldTraits<Rational> {
    static constexpr const char* name = "rational";
    static constexpr FieldKind kind = FieldKind::rational;
    static Rational parse(const std::string& s) { return Rational::from_string(s); }
};

template <> struct FieldTraits<Fp> {
    static constexpr const char* name = "prime";
    static constexpr FieldKind kind = FieldKind::prime;
    static Fp parse(const std::string& s) { return Fp::from_string(s); }
};

inline std::string field_kind_name(FieldKind k) {
    return k == FieldKind::rational ? "rational" : "prime";
}

inline FieldKind field_kind_from_name(const std::string& s) {
    if (s == "rational") return FieldKind::rational;
    if (s == "prime") return FieldKind::prime;
    throw ArgumentError("unknown field '" + s + "' (expected rational or prime)");
}

template <FieldScalar F>
F factorial_in(int k) {
    F r(1);
    for (int i = 2; i <= k; ++i) r = r * F(i);
    return r;
}

} // namespace volrig

#endif
