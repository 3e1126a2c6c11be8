#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace lht {

using BigInt = mpz_class;

/// Exact rational number, always held in lowest terms with a positive
/// denominator. Zero is 0/1.
class BigRational {
public:
    BigRational() = default;
    BigRational(int v) : value_(v) {}
    BigRational(long v) : value_(v) {}
    BigRational(long long v) : value_(static_cast<long>(v)) {}
    BigRational(const BigInt& v) : value_(v) {}
    BigRational(const BigInt& num, const BigInt& den);
    BigRational(long num, long den) : BigRational(BigInt(num), BigInt(den)) {}

    /// Parses "p/q" or "p" (decimal integers, optional sign). Floating point
    /// notation is rejected.
    static BigRational parse(std::string_view text);

    BigInt numerator() const { return value_.get_num(); }
    BigInt denominator() const { return value_.get_den(); }
    const mpq_class& raw() const { return value_; }

    bool is_zero() const { return sgn(value_) == 0; }
    bool is_one() const { return value_ == 1; }
    int sign() const { return sgn(value_); }

    BigRational abs() const;
    BigRational inverse() const;
    BigRational pow(long exponent) const;
    double to_double() const { return value_.get_d(); }
    std::string to_string() const;

    BigRational operator-() const;
    BigRational& operator+=(const BigRational& o);
    BigRational& operator-=(const BigRational& o);
    BigRational& operator*=(const BigRational& o);
    BigRational& operator/=(const BigRational& o);

    friend BigRational operator+(BigRational a, const BigRational& b) { return a += b; }
    friend BigRational operator-(BigRational a, const BigRational& b) { return a -= b; }
    friend BigRational operator*(BigRational a, const BigRational& b) { return a *= b; }
    friend BigRational operator/(BigRational a, const BigRational& b) { return a /= b; }

    friend bool operator==(const BigRational& a, const BigRational& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const BigRational& a, const BigRational& b) {
        int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    friend std::ostream& operator<<(std::ostream& os, const BigRational& r) { return os << r.to_string(); }

private:
    explicit BigRational(mpq_class v) : value_(std::move(v)) {}
    mpq_class value_{0};
};

inline BigRational zero_like(const BigRational&) { return BigRational(0); }
inline BigRational one_like(const BigRational&) { return BigRational(1); }

/// Parses a tolerance: "p/q", an integer, or "1e-N" / "Me-N" scientific form
/// with integer mantissa, converted exactly.
BigRational parse_tolerance(std::string_view text);

/// Exact integer power of ten, 10^-digits as a rational.
BigRational ten_to_minus(unsigned digits);

/// Floor and ceiling of a/b for b > 0.
std::int64_t floor_div(std::int64_t a, std::int64_t b);
std::int64_t ceil_div(std::int64_t a, std::int64_t b);

std::string to_string(const BigInt& v);

}  // namespace lht
