#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace nmc {

// Exact rational with int64 numerator/denominator, always normalized:
// gcd(|num|, den) = 1 and den > 0. Intermediates go through __int128,
// which is ample headroom for the probability arithmetic here
// (denominators divide powers of two up to 2^20, supports are small).
class Rational {
public:
    constexpr Rational() = default;
    Rational(std::int64_t value) : num_(value) {}
    Rational(std::int64_t num, std::int64_t den) { assign(num, den); }

    static Rational from_counts(std::uint64_t count, std::uint64_t total) {
        if (total == 0) throw std::invalid_argument("Rational::from_counts: zero total");
        return Rational(static_cast<std::int64_t>(count), static_cast<std::int64_t>(total));
    }

    // Accepts "3/8", "-1/2" or a bare integer "7".
    static Rational parse(const std::string& text) {
        auto slash = text.find('/');
        if (slash == std::string::npos) return Rational(std::stoll(text));
        return Rational(std::stoll(text.substr(0, slash)), std::stoll(text.substr(slash + 1)));
    }

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    Rational abs() const { return num_ < 0 ? Rational(-num_, den_) : *this; }
    double to_double() const {
        return static_cast<double>(static_cast<long double>(num_) / static_cast<long double>(den_));
    }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return make(i128(a.num_) * b.den_ + i128(b.num_) * a.den_, i128(a.den_) * b.den_);
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return make(i128(a.num_) * b.den_ - i128(b.num_) * a.den_, i128(a.den_) * b.den_);
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return make(i128(a.num_) * b.num_, i128(a.den_) * b.den_);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num_ == 0) throw std::domain_error("Rational: division by zero");
        return make(i128(a.num_) * b.den_, i128(a.den_) * b.num_);
    }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        return i128(a.num_) * b.den_ < i128(b.num_) * a.den_;
    }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

    std::string str() const {
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

private:
    using i128 = __int128;

    static i128 gcd128(i128 a, i128 b) {
        if (a < 0) a = -a;
        if (b < 0) b = -b;
        while (b != 0) {
            i128 t = a % b;
            a = b;
            b = t;
        }
        return a;
    }

    static Rational make(i128 num, i128 den) {
        if (den == 0) throw std::domain_error("Rational: zero denominator");
        if (den < 0) { num = -num; den = -den; }
        i128 g = gcd128(num, den);
        if (g > 1) { num /= g; den /= g; }
        constexpr i128 lo = INT64_MIN, hi = INT64_MAX;
        if (num < lo || num > hi || den > hi)
            throw std::overflow_error("Rational: value out of int64 range");
        Rational r;
        r.num_ = static_cast<std::int64_t>(num);
        r.den_ = static_cast<std::int64_t>(den);
        return r;
    }

    void assign(std::int64_t num, std::int64_t den) {
        *this = make(num, den);
    }

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

}  // namespace nmc
