#pragma once

#include <cstdint>
#include <string>

#include "hhlow/errors.hpp"

namespace hhlow {

/// Exact rational p/q, always reduced, q > 0. Arithmetic never rounds;
/// overflow of the int64 components throws arithmetic_error.
class Rational {
  public:
    constexpr Rational() : num_(0), den_(1) {}
    Rational(std::int64_t n) : num_(n), den_(1) {}  // NOLINT: implicit by design
    Rational(std::int64_t n, std::int64_t d);

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    Rational operator-() const;
    Rational operator+(const Rational& o) const;
    Rational operator-(const Rational& o) const;
    Rational operator*(const Rational& o) const;
    Rational operator/(const Rational& o) const;

    bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const Rational& o) const { return !(*this == o); }
    bool operator<(const Rational& o) const;
    bool operator<=(const Rational& o) const { return *this < o || *this == o; }
    bool operator>(const Rational& o) const { return o < *this; }
    bool operator>=(const Rational& o) const { return o <= *this; }

    int sign() const { return num_ > 0 ? 1 : (num_ < 0 ? -1 : 0); }
    bool is_zero() const { return num_ == 0; }

    double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

    /// "n", "n/d" or "-n/d"; the canonical text form used in reports.
    std::string str() const;

    /// Parses "n", "n/d", or a decimal like "0.625" (converted exactly
    /// with denominator ≤ 10^6, per the CLI contract).
    static Rational parse(const std::string& s);

  private:
    std::int64_t num_;
    std::int64_t den_;
};

/// Exponent a + b·δ of λ (or N); the ledger's atom. Closed under
/// addition, negation and rational scaling; evaluation is exact.
struct AffineExponent {
    Rational a;  // constant part
    Rational b;  // coefficient of δ

    AffineExponent() = default;
    AffineExponent(Rational a_, Rational b_) : a(a_), b(b_) {}

    AffineExponent operator+(const AffineExponent& o) const { return {a + o.a, b + o.b}; }
    AffineExponent operator-(const AffineExponent& o) const { return {a - o.a, b - o.b}; }
    AffineExponent operator-() const { return {-a, -b}; }
    AffineExponent scaled(const Rational& c) const { return {a * c, b * c}; }
    bool operator==(const AffineExponent& o) const { return a == o.a && b == o.b; }

    Rational eval(const Rational& delta) const { return a + b * delta; }
    double eval_double(double delta) const { return a.to_double() + b.to_double() * delta; }

    /// "a + b·d" in canonical text form, e.g. "-3 + 7/4 d".
    std::string str() const;
};

}  // namespace hhlow
