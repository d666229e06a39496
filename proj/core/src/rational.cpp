#include "hhlow/rational.hpp"

#include <cstdlib>
#include <numeric>

namespace hhlow {

namespace {

using i128 = __int128;

std::int64_t checked_narrow(i128 v, const char* what) {
    if (v > i128(INT64_MAX) || v < i128(INT64_MIN)) {
        throw arithmetic_error(std::string("rational overflow in ") + what);
    }
    return static_cast<std::int64_t>(v);
}

i128 gcd128(i128 a, i128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        i128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

Rational make_reduced(i128 n, i128 d, const char* what) {
    if (d == 0) throw arithmetic_error("zero denominator");
    if (d < 0) {
        n = -n;
        d = -d;
    }
    i128 g = gcd128(n, d);
    if (g > 1) {
        n /= g;
        d /= g;
    }
    return Rational(checked_narrow(n, what), checked_narrow(d, what));
}

}  // namespace

Rational::Rational(std::int64_t n, std::int64_t d) : num_(n), den_(d) {
    if (d == 0) throw arithmetic_error("zero denominator");
    if (den_ < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    std::int64_t g = std::gcd(num_ < 0 ? -num_ : num_, den_);
    if (g > 1) {
        num_ /= g;
        den_ /= g;
    }
}

Rational Rational::operator-() const { return Rational(-num_, den_); }

Rational Rational::operator+(const Rational& o) const {
    return make_reduced(i128(num_) * o.den_ + i128(o.num_) * den_, i128(den_) * o.den_, "add");
}

Rational Rational::operator-(const Rational& o) const {
    return make_reduced(i128(num_) * o.den_ - i128(o.num_) * den_, i128(den_) * o.den_, "sub");
}

Rational Rational::operator*(const Rational& o) const {
    return make_reduced(i128(num_) * o.num_, i128(den_) * o.den_, "mul");
}

Rational Rational::operator/(const Rational& o) const {
    if (o.num_ == 0) throw arithmetic_error("division by zero rational");
    return make_reduced(i128(num_) * o.den_, i128(den_) * o.num_, "div");
}

bool Rational::operator<(const Rational& o) const {
    return i128(num_) * o.den_ < i128(o.num_) * den_;
}

std::string Rational::str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::parse(const std::string& s) {
    if (s.empty()) throw parameter_error("empty rational literal");
    auto slash = s.find('/');
    if (slash != std::string::npos) {
        errno = 0;
        char* end = nullptr;
        long long n = std::strtoll(s.c_str(), &end, 10);
        if (end != s.c_str() + slash || errno != 0) {
            throw parameter_error("bad rational literal: " + s);
        }
        long long d = std::strtoll(s.c_str() + slash + 1, &end, 10);
        if (*end != '\0' || errno != 0 || d == 0) {
            throw parameter_error("bad rational literal: " + s);
        }
        return Rational(n, d);
    }
    auto dot = s.find('.');
    if (dot == std::string::npos) {
        errno = 0;
        char* end = nullptr;
        long long n = std::strtoll(s.c_str(), &end, 10);
        if (*end != '\0' || errno != 0) {
            throw parameter_error("bad rational literal: " + s);
        }
        return Rational(n);
    }
    // Decimal: exact conversion, denominator capped at 10^6 by contract.
    std::string frac = s.substr(dot + 1);
    if (frac.size() > 6) {
        throw parameter_error("decimal rational needs denominator > 1e6, pass n/d instead: " + s);
    }
    std::string digits = s.substr(0, dot) + frac;
    bool neg = !digits.empty() && digits[0] == '-';
    errno = 0;
    char* end = nullptr;
    long long n = std::strtoll(digits.c_str(), &end, 10);
    if (*end != '\0' || errno != 0) throw parameter_error("bad rational literal: " + s);
    std::int64_t d = 1;
    for (size_t i = 0; i < frac.size(); ++i) d *= 10;
    (void)neg;
    return Rational(n, d);
}

std::string AffineExponent::str() const {
    if (b.is_zero()) return a.str();
    std::string out = a.is_zero() ? "" : a.str();
    if (!out.empty()) out += b.sign() < 0 ? " - " : " + ";
    else if (b.sign() < 0) out += "-";
    Rational babs = b.sign() < 0 ? -b : b;
    if (!(babs == Rational(1))) out += babs.str() + " ";
    out += "d";
    return out;
}

}  // namespace hhlow
