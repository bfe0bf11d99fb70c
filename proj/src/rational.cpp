#include "hyperappell/rational.hpp"

#include <cctype>
#include <ostream>

#include "hyperappell/errors.hpp"

namespace hyperappell {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (std::isdigit(static_cast<unsigned char>(c)) == 0) return false;
    }
    return true;
}

} // namespace

Rational::Rational(long num, long den) {
    if (den == 0) throw DivisionByZero();
    value_ = mpq_class(mpz_class(num), mpz_class(den));
    value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) {
    if (value_.get_den() == 0) throw DivisionByZero();
    value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
    auto fail = [&] { return ParseError("invalid rational literal '" + std::string(text) + "'"); };
    std::string_view num = text;
    std::string_view den = "1";
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        num = text.substr(0, slash);
        den = text.substr(slash + 1);
        if (!all_digits(den)) throw fail();
    }
    std::string_view digits = num;
    if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) digits.remove_prefix(1);
    if (!all_digits(digits)) throw fail();

    mpz_class n(std::string(digits), 10);
    if (num.front() == '-') n = -n;
    mpz_class d(std::string(den), 10);
    if (d == 0) throw DivisionByZero();
    mpq_class q(n, d);
    q.canonicalize();
    return Rational(std::move(q));
}

std::string Rational::str() const { return value_.get_str(10); }

Rational Rational::pow(long exponent) const {
    if (exponent < 0) {
        if (is_zero()) throw DivisionByZero();
        mpq_class inv = 1 / value_;
        return Rational(inv).pow(-exponent);
    }
    mpz_class num;
    mpz_class den;
    mpz_pow_ui(num.get_mpz_t(), value_.get_num_mpz_t(), static_cast<unsigned long>(exponent));
    mpz_pow_ui(den.get_mpz_t(), value_.get_den_mpz_t(), static_cast<unsigned long>(exponent));
    Rational out;
    // Powers of coprime integers stay coprime; no canonicalization needed.
    out.value_ = mpq_class(num, den);
    return out;
}

Rational& Rational::operator+=(const Rational& rhs) {
    value_ += rhs.value_;
    return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
    value_ -= rhs.value_;
    return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
    value_ *= rhs.value_;
    return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
    if (rhs.is_zero()) throw DivisionByZero();
    value_ /= rhs.value_;
    return *this;
}

Rational Rational::operator-() const {
    Rational out;
    out.value_ = -value_;
    return out;
}

std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) {
    int c = cmp(lhs.value_, rhs.value_);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Rational pochhammer(const Rational& x, unsigned n) {
    Rational out(1);
    Rational factor = x;
    for (unsigned i = 0; i < n; ++i) {
        out *= factor;
        if (out.is_zero()) break;
        factor += 1;
    }
    return out;
}

Rational falling_factorial(const Rational& x, unsigned n) {
    Rational out(1);
    Rational factor = x;
    for (unsigned i = 0; i < n; ++i) {
        out *= factor;
        if (out.is_zero()) break;
        factor -= 1;
    }
    return out;
}

Rational factorial(unsigned n) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return Rational(mpq_class(f));
}

Rational binomial(unsigned n, unsigned i) {
    if (i > n) return Rational(0);
    mpz_class c;
    mpz_bin_uiui(c.get_mpz_t(), n, i);
    return Rational(mpq_class(c));
}

} // namespace hyperappell
