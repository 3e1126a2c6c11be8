#include "lht/bigrational.hpp"

#include <cctype>
#include <stdexcept>

namespace lht {

namespace {

bool is_integer_literal(std::string_view s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

BigInt parse_integer(std::string_view s) {
    if (!is_integer_literal(s)) throw std::invalid_argument("not an integer literal: '" + std::string(s) + "'");
    if (s[0] == '+') s.remove_prefix(1);
    return BigInt(std::string(s), 10);
}

}  // namespace

BigRational::BigRational(const BigInt& num, const BigInt& den) {
    if (sgn(den) == 0) throw std::domain_error("BigRational: zero denominator");
    value_ = mpq_class(num, den);
    value_.canonicalize();
}

BigRational BigRational::parse(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return BigRational(parse_integer(text));
    auto num = parse_integer(text.substr(0, slash));
    auto den_text = text.substr(slash + 1);
    if (!den_text.empty() && den_text[0] == '-')
        throw std::invalid_argument("denominator must be positive: '" + std::string(text) + "'");
    return BigRational(num, parse_integer(den_text));
}

BigRational BigRational::abs() const { return BigRational(mpq_class(::abs(value_))); }

BigRational BigRational::inverse() const {
    if (is_zero()) throw std::domain_error("BigRational: inverse of zero");
    mpq_class r(value_.get_den(), value_.get_num());
    r.canonicalize();
    return BigRational(std::move(r));
}

BigRational BigRational::pow(long exponent) const {
    if (exponent < 0) return inverse().pow(-exponent);
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), value_.get_num_mpz_t(), static_cast<unsigned long>(exponent));
    mpz_pow_ui(den.get_mpz_t(), value_.get_den_mpz_t(), static_cast<unsigned long>(exponent));
    return BigRational(num, den);
}

std::string BigRational::to_string() const { return value_.get_str(10); }

BigRational BigRational::operator-() const { return BigRational(mpq_class(-value_)); }

BigRational& BigRational::operator+=(const BigRational& o) {
    value_ += o.value_;
    return *this;
}
BigRational& BigRational::operator-=(const BigRational& o) {
    value_ -= o.value_;
    return *this;
}
BigRational& BigRational::operator*=(const BigRational& o) {
    value_ *= o.value_;
    return *this;
}
BigRational& BigRational::operator/=(const BigRational& o) {
    if (o.is_zero()) throw std::domain_error("BigRational: division by zero");
    value_ /= o.value_;
    return *this;
}

BigRational ten_to_minus(unsigned digits) {
    BigInt p;
    mpz_ui_pow_ui(p.get_mpz_t(), 10, digits);
    return BigRational(BigInt(1), p);
}

BigRational parse_tolerance(std::string_view text) {
    auto e = text.find_first_of("eE");
    if (e == std::string_view::npos) return BigRational::parse(text);
    BigInt mantissa = parse_integer(text.substr(0, e));
    auto exp_text = text.substr(e + 1);
    BigInt exp_value = parse_integer(exp_text);
    if (!exp_value.fits_slong_p()) throw std::invalid_argument("tolerance exponent out of range");
    long ex = exp_value.get_si();
    BigRational scale = BigRational(10).pow(ex);
    return BigRational(mantissa) * scale;
}

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
    std::int64_t q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return -floor_div(-a, b); }

std::string to_string(const BigInt& v) { return v.get_str(10); }

}  // namespace lht
