#pragma once

#include <stdexcept>
#include <string>
#include <utility>

#include "nuij/rational.hpp"

namespace nuij {

/// Element x + y*sqrt(D) of the real quadratic extension Q(sqrt(D)),
/// with rational radicand D >= 0 fixed per computation context.
///
/// Construction normalizes: if D is the square of a rational r the value
/// collapses to (x + y*r, 0). Consequently y != 0 implies sqrt(D) is
/// irrational, so a value is zero iff both components are zero.
class QuadExt {
public:
    QuadExt() : x_(0), y_(0), d_(0) {}
    QuadExt(Rational rational_value) // NOLINT(google-explicit-constructor)
        : x_(std::move(rational_value)), y_(0), d_(0) {}
    QuadExt(long n) : x_(n), y_(0), d_(0) {}

    QuadExt(Rational x, Rational y, Rational D)
        : x_(std::move(x)), y_(std::move(y)), d_(std::move(D)) {
        if (d_.sign() < 0)
            throw std::domain_error("QuadExt: negative radicand");
        Rational r;
        if (d_.sqrt_if_square(r)) {
            x_ += y_ * r;
            y_ = Rational(0);
        }
        if (y_.is_zero())
            d_ = Rational(0);
    }

    /// sqrt(D) itself (normalizes to a rational when D is a square).
    static QuadExt sqrt(const Rational& D) {
        return QuadExt(Rational(0), Rational(1), D);
    }

    const Rational& x() const { return x_; }
    const Rational& y() const { return y_; }
    const Rational& radicand() const { return d_; }

    bool is_rational() const { return y_.is_zero(); }
    bool is_zero() const { return x_.is_zero() && y_.is_zero(); }

    /// Rational part accessor for values known to be rational.
    const Rational& as_rational() const {
        if (!is_rational())
            throw std::domain_error("QuadExt: value is irrational");
        return x_;
    }

    QuadExt conjugate() const { return QuadExt(x_, -y_, d_, tag{}); }

    friend QuadExt operator+(const QuadExt& a, const QuadExt& b) {
        const Rational& D = common_radicand(a, b);
        return QuadExt(a.x_ + b.x_, a.y_ + b.y_, D, tag{});
    }
    friend QuadExt operator-(const QuadExt& a, const QuadExt& b) {
        const Rational& D = common_radicand(a, b);
        return QuadExt(a.x_ - b.x_, a.y_ - b.y_, D, tag{});
    }
    friend QuadExt operator*(const QuadExt& a, const QuadExt& b) {
        if (a.is_rational() && b.is_rational())
            return QuadExt(a.x_ * b.x_);
        const Rational& D = common_radicand(a, b);
        // (x1 + y1 sqrt(D))(x2 + y2 sqrt(D))
        return QuadExt(a.x_ * b.x_ + D * a.y_ * b.y_,
                       a.x_ * b.y_ + a.y_ * b.x_, D, tag{});
    }
    friend QuadExt operator/(const QuadExt& a, const QuadExt& b) {
        if (b.is_zero())
            throw std::domain_error("QuadExt: division by zero");
        if (b.is_rational()) {
            const Rational& D = common_radicand(a, b);
            return QuadExt(a.x_ / b.x_, a.y_ / b.x_, D, tag{});
        }
        const Rational& D = common_radicand(a, b);
        // Multiply by the conjugate; the norm x^2 - D y^2 is a nonzero
        // rational for b != 0.
        Rational norm = b.x_ * b.x_ - D * b.y_ * b.y_;
        QuadExt num = a * b.conjugate();
        return QuadExt(num.x_ / norm, num.y_ / norm, D, tag{});
    }
    QuadExt operator-() const { return QuadExt(-x_, -y_, d_, tag{}); }

    QuadExt& operator+=(const QuadExt& o) { return *this = *this + o; }
    QuadExt& operator-=(const QuadExt& o) { return *this = *this - o; }
    QuadExt& operator*=(const QuadExt& o) { return *this = *this * o; }
    QuadExt& operator/=(const QuadExt& o) { return *this = *this / o; }

    /// Componentwise equality; the radicand participates only when both
    /// sides have an irrational part (rational values compare equal no
    /// matter which context D they were created in).
    friend bool operator==(const QuadExt& a, const QuadExt& b) {
        if (a.x_ != b.x_ || a.y_ != b.y_)
            return false;
        return a.y_.is_zero() || a.d_ == b.d_;
    }

    QuadExt pow(unsigned long e) const {
        QuadExt acc(Rational(1)), base = *this;
        for (; e > 0; e >>= 1) {
            if (e & 1)
                acc = acc * base;
            base = base * base;
        }
        return acc;
    }

    std::string str() const {
        if (is_rational())
            return x_.str();
        return x_.str() + " + " + y_.str() + "*sqrt(" + d_.str() + ")";
    }

private:
    struct tag {};
    // Trusted fast path: components already normalized, D square-free
    // checked by the originating values.
    QuadExt(Rational x, Rational y, Rational D, tag)
        : x_(std::move(x)), y_(std::move(y)), d_(std::move(D)) {
        if (y_.is_zero())
            d_ = Rational(0);
    }

    static const Rational& common_radicand(const QuadExt& a, const QuadExt& b) {
        if (a.is_rational())
            return b.d_;
        if (b.is_rational())
            return a.d_;
        if (a.d_ != b.d_)
            throw std::domain_error("QuadExt: mismatched radicands");
        return a.d_;
    }

    Rational x_, y_, d_;
};

} // namespace nuij
