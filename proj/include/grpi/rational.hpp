#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>
#include <utility>

namespace grpi {

/// Exact rational scalar. Always stored reduced with positive denominator;
/// serialization is "p/q", or just "p" for integers.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}  // NOLINT: implicit so 0 and 1 read naturally in formulas
    Rational(long num, long den);

    /// Wraps an already canonical mpq value (results of mpq arithmetic are canonical).
    explicit Rational(mpq_class v) : v_(std::move(v)) {}

    /// Accepts "p", "-p", "p/q", "-p/q" with decimal digits; reduces if needed.
    static Rational parse(const std::string& text);

    [[nodiscard]] std::string str() const;
    [[nodiscard]] std::string num_str() const;
    [[nodiscard]] std::string den_str() const;

    [[nodiscard]] bool is_zero() const { return sgn(v_) == 0; }
    [[nodiscard]] bool is_one() const { return v_ == 1; }
    [[nodiscard]] bool is_integer() const { return v_.get_den() == 1; }
    [[nodiscard]] int sign() const { return sgn(v_); }

    [[nodiscard]] Rational inv() const;

    /// Exact conversion; requires an integer value that fits in long.
    [[nodiscard]] long to_long() const;

    /// Nearest double, for display only. Exact arithmetic never uses this.
    [[nodiscard]] double approx() const { return v_.get_d(); }

    [[nodiscard]] const mpq_class& raw() const { return v_; }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.v_)); }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r);

private:
    mpq_class v_;
};

}
