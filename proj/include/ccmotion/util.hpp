#pragma once

#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>

namespace ccm {

// Library-wide error type for precondition and input failures.
struct error : std::runtime_error {
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

// Checked 64-bit integer arithmetic. All counting in the library is exact;
// an overflow is a hard error, never silent wraparound.
inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw error("int64 overflow in addition");
    return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw error("int64 overflow in multiplication");
    return r;
}

inline std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_sub_overflow(a, b, &r)) throw error("int64 overflow in subtraction");
    return r;
}

// ceil(a/b) for b > 0.
inline std::int64_t ceil_div(std::int64_t a, std::int64_t b) {
    if (b <= 0) throw error("ceil_div: non-positive divisor");
    std::int64_t q = a / b;
    if (a % b != 0 && a > 0) ++q;
    return q;
}

// Exact rational over int64 with checked intermediates. Denominator kept
// positive, fraction always reduced.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(std::int64_t n) : num_(n), den_(1) {}
    Rational(std::int64_t n, std::int64_t d) : num_(n), den_(d) { normalize(); }

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    Rational operator+(const Rational& o) const {
        return Rational(wide(num_) * o.den_ + wide(o.num_) * den_, wide(den_) * o.den_);
    }
    Rational operator-(const Rational& o) const {
        return Rational(wide(num_) * o.den_ - wide(o.num_) * den_, wide(den_) * o.den_);
    }
    Rational operator*(const Rational& o) const {
        return Rational(wide(num_) * o.num_, wide(den_) * o.den_);
    }
    Rational operator/(const Rational& o) const {
        if (o.num_ == 0) throw error("Rational: division by zero");
        return Rational(wide(num_) * o.den_, wide(den_) * o.num_);
    }
    Rational operator-() const { return Rational(-num_, den_); }

    bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const Rational& o) const { return !(*this == o); }
    bool operator<(const Rational& o) const { return wide(num_) * o.den_ < wide(o.num_) * den_; }
    bool operator<=(const Rational& o) const { return wide(num_) * o.den_ <= wide(o.num_) * den_; }
    bool operator>(const Rational& o) const { return o < *this; }
    bool operator>=(const Rational& o) const { return o <= *this; }

    bool is_integer() const { return den_ == 1; }

    std::int64_t floor() const {
        std::int64_t q = num_ / den_;
        if (num_ % den_ != 0 && num_ < 0) --q;
        return q;
    }
    std::int64_t ceil() const {
        std::int64_t q = num_ / den_;
        if (num_ % den_ != 0 && num_ > 0) ++q;
        return q;
    }

    double to_double() const { return double(num_) / double(den_); }

    std::string str() const {
        if (den_ == 1) return std::to_string(num_);
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

private:
    using i128 = __int128;
    static i128 wide(std::int64_t v) { return i128(v); }

    Rational(i128 n, i128 d) {
        if (d == 0) throw error("Rational: zero denominator");
        if (d < 0) { n = -n; d = -d; }
        i128 g = gcd128(n < 0 ? -n : n, d);
        if (g > 1) { n /= g; d /= g; }
        if (n > INT64_MAX || n < INT64_MIN || d > INT64_MAX)
            throw error("Rational: overflow");
        num_ = std::int64_t(n);
        den_ = std::int64_t(d);
    }

    static i128 gcd128(i128 a, i128 b) {
        while (b != 0) { i128 t = a % b; a = b; b = t; }
        return a == 0 ? 1 : a;
    }

    void normalize() {
        if (den_ == 0) throw error("Rational: zero denominator");
        if (den_ < 0) { num_ = -num_; den_ = -den_; }
        std::int64_t g = std::gcd(num_ < 0 ? -num_ : num_, den_);
        if (g > 1) { num_ /= g; den_ /= g; }
    }

    std::int64_t num_;
    std::int64_t den_;
};

// An analytic tool declining to apply: names the first failed precondition
// with both sides evaluated.
struct NotApplicable {
    std::string precondition;
    double lhs = 0;
    double rhs = 0;
};

template <typename T>
struct OrNA {
    std::optional<T> value;
    std::optional<NotApplicable> na;

    static OrNA ok(T v) { return OrNA{std::move(v), std::nullopt}; }
    static OrNA no(std::string precondition, double lhs, double rhs) {
        return OrNA{std::nullopt, NotApplicable{std::move(precondition), lhs, rhs}};
    }
    bool applicable() const { return value.has_value(); }
    const T& operator*() const { return *value; }
    const T* operator->() const { return &*value; }
};

}  // namespace ccm
