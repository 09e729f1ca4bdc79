#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace hopfgraph {

/// Exact rational number over checked 64-bit integers.
///
/// Always stored normalized: gcd(num, den) == 1, den > 0. Arithmetic runs
/// through 128-bit intermediates and throws std::overflow_error if a reduced
/// result does not fit in int64 — results are exact or loud, never wrapped.
class Rational {
public:
    Rational() = default;
    Rational(int64_t value) : num_(value) {}  // NOLINT: implicit int promotion is wanted
    Rational(int64_t num, int64_t den);

    /// Parses "p" or "p/q" with optional sign, e.g. "-3/2".
    static Rational parse(std::string_view text);

    int64_t num() const { return num_; }
    int64_t den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }
    /// Integer value; throws std::domain_error if not an integer.
    int64_t as_int64() const;

    Rational operator-() const { return Rational(-num_, den_, already_normalized{}); }

    Rational& operator+=(const Rational& rhs);
    Rational& operator-=(const Rational& rhs);
    Rational& operator*=(const Rational& rhs);
    Rational& operator/=(const Rational& rhs);

    /// Integer power; negative exponents invert (zero base rejected).
    Rational pow(int64_t exponent) const;

    /// "p" when integral, else "p/q".
    std::string str() const;

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    std::strong_ordering operator<=>(const Rational& rhs) const;

private:
    struct already_normalized {};
    Rational(int64_t num, int64_t den, already_normalized) : num_(num), den_(den) {}
    static Rational make(__int128 num, __int128 den);

    int64_t num_ = 0;
    int64_t den_ = 1;
};

inline Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
inline Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
inline Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
inline Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// n! as a Rational; n must be >= 0 and small enough to fit.
Rational factorial(int64_t n);

/// C(n, k) for integer n >= 0; zero outside 0 <= k <= n.
Rational binomial(int64_t n, int64_t k);

}  // namespace hopfgraph
