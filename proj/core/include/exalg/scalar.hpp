#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace exalg {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

struct ScalarError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Exact rational, always in lowest terms with positive denominator.
class Rational {
  public:
    Rational() = default;
    Rational(long n) : v_(n) {}
    Rational(long n, long d) : v_(n, d) {
        if (d == 0) throw ScalarError("Rational: zero denominator");
    }
    explicit Rational(BigInt n) : v_(std::move(n)) {}
    Rational(BigInt n, BigInt d) {
        if (d == 0) throw ScalarError("Rational: zero denominator");
        v_ = BigRat(std::move(n), std::move(d));
    }

    /// Parses "p", "-p/q" or "p/q"; exact, no rounding.
    static Rational parse(const std::string& s);

    BigInt num() const { return boost::multiprecision::numerator(v_); }
    BigInt den() const { return boost::multiprecision::denominator(v_); }

    bool is_zero() const { return v_.is_zero(); }
    bool is_one() const { return v_ == 1; }

    Rational operator-() const { return Rational(-v_); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw ScalarError("Rational: division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }

    std::string str() const;

  private:
    explicit Rational(BigRat v) : v_(std::move(v)) {}
    BigRat v_;
};

/// Element of Q(i): re + im*i with exact rational parts. Problems over plain Q
/// simply never produce a nonzero imaginary part; the CLI field flag decides
/// whether inputs may mention i at all.
class Scalar {
  public:
    Scalar() = default;
    Scalar(long n) : re_(n) {}
    Scalar(long n, long d) : re_(n, d) {}
    Scalar(Rational re) : re_(std::move(re)) {}
    Scalar(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

    static Scalar i() { return Scalar(Rational(0), Rational(1)); }

    /// Parses "p/q", "p/q*i", "i", "-i" or "a+b*i" style tokens.
    static Scalar parse(const std::string& s);

    const Rational& re() const { return re_; }
    const Rational& im() const { return im_; }

    bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
    bool is_real() const { return im_.is_zero(); }

    Scalar operator-() const { return Scalar(-re_, -im_); }
    Scalar& operator+=(const Scalar& o) { re_ += o.re_; im_ += o.im_; return *this; }
    Scalar& operator-=(const Scalar& o) { re_ -= o.re_; im_ -= o.im_; return *this; }
    Scalar& operator*=(const Scalar& o) {
        Rational r = re_ * o.re_ - im_ * o.im_;
        Rational i = re_ * o.im_ + im_ * o.re_;
        re_ = std::move(r);
        im_ = std::move(i);
        return *this;
    }
    Scalar& operator/=(const Scalar& o) {
        if (o.is_zero()) throw ScalarError("Scalar: division by zero");
        Rational n = o.re_ * o.re_ + o.im_ * o.im_;
        Scalar conj(o.re_, -o.im_);
        *this *= conj;
        re_ /= n;
        im_ /= n;
        return *this;
    }

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
    friend bool operator==(const Scalar& a, const Scalar& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    std::string str() const;

  private:
    Rational re_;
    Rational im_;
};

inline Scalar frac(long n, long d) { return Scalar(n, d); }

} // namespace exalg
