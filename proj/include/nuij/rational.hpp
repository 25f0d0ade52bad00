#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <string_view>

namespace nuij {

/// Exact arbitrary-precision rational number.
///
/// Stored reduced with a positive denominator (both guaranteed by the
/// GMP canonical form). All operations are pure; values are immutable
/// once constructed and safe to share across threads.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {} // NOLINT(google-explicit-constructor)
    Rational(const mpz_class& n) : v_(n) {}

    Rational(const mpz_class& num, const mpz_class& den) {
        if (den == 0)
            throw std::domain_error("Rational: zero denominator");
        v_ = mpq_class(num, den);
        v_.canonicalize();
    }
    Rational(long num, long den) : Rational(mpz_class(num), mpz_class(den)) {}

    /// Parses "p/q" or "p" (q = 1). Whitespace is not accepted.
    static Rational parse(std::string_view s) {
        if (s.empty())
            throw std::invalid_argument("Rational: empty string");
        const auto slash = s.find('/');
        mpz_class num = parse_int(s.substr(0, slash));
        if (slash == std::string_view::npos)
            return Rational(num);
        mpz_class den = parse_int(s.substr(slash + 1));
        if (den == 0)
            throw std::invalid_argument("Rational: zero denominator in \"" +
                                        std::string(s) + "\"");
        return Rational(num, den);
    }

    mpz_class num() const { return v_.get_num(); }
    mpz_class den() const { return v_.get_den(); }

    bool is_zero() const { return v_ == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    Rational abs() const { return Rational(mpq_class(::abs(v_))); }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return Rational(mpq_class(a.v_ + b.v_));
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return Rational(mpq_class(a.v_ - b.v_));
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return Rational(mpq_class(a.v_ * b.v_));
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.is_zero())
            throw std::domain_error("Rational: division by zero");
        return Rational(mpq_class(a.v_ / b.v_));
    }
    Rational operator-() const { return Rational(mpq_class(-v_)); }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.v_ == b.v_;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = cmp(a.v_, b.v_);
        return c < 0   ? std::strong_ordering::less
               : c > 0 ? std::strong_ordering::greater
                       : std::strong_ordering::equal;
    }

    /// Integer exponent power; e < 0 requires a nonzero base.
    Rational pow(long e) const {
        if (e < 0)
            return Rational(1) / pow(-e);
        Rational acc(1), base = *this;
        for (; e > 0; e >>= 1) {
            if (e & 1)
                acc *= base;
            base *= base;
        }
        return acc;
    }

    /// Serialized form: "p/q", or "p" when the denominator is 1.
    std::string str() const {
        if (is_integer())
            return v_.get_num().get_str();
        return v_.get_num().get_str() + "/" + v_.get_den().get_str();
    }

    /// True iff the value is the square of a rational; r receives that
    /// nonnegative square root.
    bool sqrt_if_square(Rational& r) const {
        if (sign() < 0)
            return false;
        mpz_class n = v_.get_num(), d = v_.get_den();
        if (mpz_perfect_square_p(n.get_mpz_t()) == 0 ||
            mpz_perfect_square_p(d.get_mpz_t()) == 0)
            return false;
        mpz_class sn, sd;
        mpz_sqrt(sn.get_mpz_t(), n.get_mpz_t());
        mpz_sqrt(sd.get_mpz_t(), d.get_mpz_t());
        r = Rational(sn, sd);
        return true;
    }

    const mpq_class& raw() const { return v_; }

private:
    explicit Rational(const mpq_class& q) : v_(q) {}

    static mpz_class parse_int(std::string_view s) {
        if (s.empty())
            throw std::invalid_argument("Rational: malformed integer");
        std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
        if (i == s.size())
            throw std::invalid_argument("Rational: malformed integer");
        for (std::size_t k = i; k < s.size(); ++k)
            if (s[k] < '0' || s[k] > '9')
                throw std::invalid_argument("Rational: malformed integer in \"" +
                                            std::string(s) + "\"");
        return mpz_class(std::string(s), 10);
    }

    mpq_class v_;
};

inline mpz_class factorial(unsigned long n) {
    mpz_class r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

/// n! / (n-k)!, the falling factorial n (n-1) ... (n-k+1).
inline mpz_class falling_factorial(unsigned long n, unsigned long k) {
    mpz_class r = 1;
    for (unsigned long i = 0; i < k; ++i)
        r *= mpz_class(n - i);
    return r;
}

inline mpz_class binomial(unsigned long n, unsigned long k) {
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

} // namespace nuij
