#include "hopfgraph/rational.hpp"

#include <charconv>
#include <ostream>
#include <stdexcept>

namespace hopfgraph {

namespace {

using i128 = __int128;

i128 abs128(i128 v) { return v < 0 ? -v : v; }

i128 gcd128(i128 a, i128 b) {
    a = abs128(a);
    b = abs128(b);
    while (b != 0) {
        i128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

int64_t narrow(i128 v, const char* what) {
    if (v > INT64_MAX || v < INT64_MIN) {
        throw std::overflow_error(std::string("rational overflow in ") + what);
    }
    return static_cast<int64_t>(v);
}

}  // namespace

Rational Rational::make(i128 num, i128 den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    if (num == 0) return Rational();
    i128 g = gcd128(num, den);
    num /= g;
    den /= g;
    return Rational(narrow(num, "numerator"), narrow(den, "denominator"), already_normalized{});
}

Rational::Rational(int64_t num, int64_t den) { *this = make(num, den); }

Rational& Rational::operator+=(const Rational& rhs) {
    *this = make(i128(num_) * rhs.den_ + i128(rhs.num_) * den_, i128(den_) * rhs.den_);
    return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
    *this = make(i128(num_) * rhs.den_ - i128(rhs.num_) * den_, i128(den_) * rhs.den_);
    return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
    *this = make(i128(num_) * rhs.num_, i128(den_) * rhs.den_);
    return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
    if (rhs.is_zero()) throw std::domain_error("division by zero rational");
    *this = make(i128(num_) * rhs.den_, i128(den_) * rhs.num_);
    return *this;
}

std::strong_ordering Rational::operator<=>(const Rational& rhs) const {
    i128 lhs_val = i128(num_) * rhs.den_;
    i128 rhs_val = i128(rhs.num_) * den_;
    if (lhs_val < rhs_val) return std::strong_ordering::less;
    if (lhs_val > rhs_val) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

Rational Rational::pow(int64_t exponent) const {
    if (exponent < 0) {
        if (is_zero()) throw std::domain_error("zero rational raised to negative power");
        return Rational(den_, num_).pow(-exponent);
    }
    Rational result(1);
    Rational base = *this;
    uint64_t e = static_cast<uint64_t>(exponent);
    while (e > 0) {
        if (e & 1) result *= base;
        base *= base;
        e >>= 1;
    }
    return result;
}

int64_t Rational::as_int64() const {
    if (den_ != 1) throw std::domain_error("rational " + str() + " is not an integer");
    return num_;
}

Rational Rational::parse(std::string_view text) {
    auto parse_int = [](std::string_view s) -> int64_t {
        int64_t value = 0;
        auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
        if (ec != std::errc{} || ptr != s.data() + s.size()) {
            throw std::invalid_argument("bad rational literal: '" + std::string(s) + "'");
        }
        return value;
    };
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_int(text));
    return Rational(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
}

std::string Rational::str() const {
    std::string s = std::to_string(num_);
    if (den_ != 1) {
        s += '/';
        s += std::to_string(den_);
    }
    return s;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Rational factorial(int64_t n) {
    if (n < 0) throw std::domain_error("factorial of negative number");
    Rational result(1);
    for (int64_t i = 2; i <= n; ++i) result *= Rational(i);
    return result;
}

Rational binomial(int64_t n, int64_t k) {
    if (n < 0) throw std::domain_error("binomial with negative n");
    if (k < 0 || k > n) return Rational(0);
    k = std::min(k, n - k);
    Rational result(1);
    for (int64_t i = 1; i <= k; ++i) {
        result *= Rational(n - k + i);
        result /= Rational(i);
    }
    return result;
}

}  // namespace hopfgraph
