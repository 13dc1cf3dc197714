#pragma once

// Exact arithmetic over the ring Z + Z*a, where the density a is a rational
// or a quadratic surd (p + q*sqrt(n))/r. Every strict inequality used by the
// word construction is decided here without floating point.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace balword {

using Integer = boost::multiprecision::cpp_int;

// floor division with b > 0 (cpp_int's operator/ truncates toward zero)
Integer floor_div(const Integer& a, const Integer& b);

// sign of A + B*sqrt(n), n >= 0 (n = 0 treated as sqrt(0) = 0)
int quad_sign(const Integer& A, const Integer& B, const Integer& n);

// ---------------------------------------------------------------------------
// ExactReal: an element (p + q*sqrt(n)) / r of Q or of a real quadratic field.
//
// Normal form: r > 0; gcd(p, q, r) = 1; q == 0 implies n == 0; q != 0 implies
// n >= 2 and n non-square (square factors of n are folded into q). Values
// from different quadratic fields cannot be mixed; arithmetic throws.
// ---------------------------------------------------------------------------
class ExactReal {
  public:
    ExactReal() : p_(0), q_(0), n_(0), r_(1) {}
    ExactReal(long long v) : p_(v), q_(0), n_(0), r_(1) {}  // NOLINT(google-explicit-constructor)
    explicit ExactReal(Integer v) : p_(std::move(v)), q_(0), n_(0), r_(1) {}
    ExactReal(Integer num, Integer den);                        // rational num/den
    ExactReal(Integer p, Integer q, Integer n, Integer r);      // (p + q*sqrt(n))/r

    const Integer& p() const { return p_; }
    const Integer& q() const { return q_; }
    const Integer& n() const { return n_; }
    const Integer& r() const { return r_; }
    bool is_rational() const { return q_ == 0; }

    int sign() const;
    bool is_zero() const { return p_ == 0 && q_ == 0; }
    Integer floor() const;

    ExactReal operator-() const;
    ExactReal operator+(const ExactReal& o) const;
    ExactReal operator-(const ExactReal& o) const;
    ExactReal operator*(const ExactReal& o) const;
    ExactReal operator/(const ExactReal& o) const;  // o must be nonzero

    // three-way comparison by value
    int compare(const ExactReal& o) const { return (*this - o).sign(); }
    bool operator==(const ExactReal& o) const { return compare(o) == 0; }
    bool operator<(const ExactReal& o) const { return compare(o) < 0; }
    bool operator<=(const ExactReal& o) const { return compare(o) <= 0; }

    // correctly rounded decimal string with `digits` fractional digits
    // (ties, which can only occur for rationals, round to even)
    std::string to_decimal(unsigned digits) const;

    // exact text: "7", "-3/2", or "(1+2*sqrt(5))/3" (parseable density syntax)
    std::string to_string() const;

    static ExactReal max(const ExactReal& a, const ExactReal& b) {
        return a.compare(b) >= 0 ? a : b;
    }
    ExactReal abs() const { return sign() < 0 ? -*this : *this; }

  private:
    void normalize();
    Integer p_, q_, n_, r_;
};

// ---------------------------------------------------------------------------
// Density: the target density a, restricted to [0, 1].
// ---------------------------------------------------------------------------
class Density {
  public:
    enum class Kind { Rational, Surd };

    // Accepted grammar (whitespace-insensitive):
    //   INT "/" INT            e.g. "1/2"
    //   decimal literal        e.g. "0.25" (exactly 1/4, never approximated)
    //   "(" INT ("+"|"-") INT "*sqrt(" INT "))/" INT
    // Rejects values outside [0,1] and surds whose radicand is a perfect
    // square (use the rational form instead).
    static Density parse(const std::string& text);

    static Density rational(Integer num, Integer den);

    Kind kind() const { return value_.is_rational() ? Kind::Rational : Kind::Surd; }
    const ExactReal& value() const { return value_; }

    // rational accessors (kind == Rational): a = num/den in lowest terms, den > 0
    const Integer& num() const { return value_.p(); }
    const Integer& den() const { return value_.r(); }

    bool is_zero() const { return value_.is_zero(); }
    bool is_one() const { return value_.p() == value_.r() && value_.q() == 0; }

    std::string to_string() const { return value_.to_string(); }

    // normal forms are canonical, so comparing fields is comparing values
    bool operator==(const Density& o) const;
    bool operator<(const Density& o) const;  // total order for map keys

  private:
    explicit Density(ExactReal v) : value_(std::move(v)) {}
    ExactReal value_;
};

// ---------------------------------------------------------------------------
// AffineValue: p + q*a as an exact pair of integers over an ambient density.
// The carrier of all orbit coordinates, f-values and h-values.
// ---------------------------------------------------------------------------
struct AffineValue {
    Integer p;
    Integer q;

    AffineValue() : p(0), q(0) {}
    AffineValue(Integer p_, Integer q_) : p(std::move(p_)), q(std::move(q_)) {}

    AffineValue operator+(const AffineValue& o) const { return {p + o.p, q + o.q}; }
    AffineValue operator-(const AffineValue& o) const { return {p - o.p, q - o.q}; }
    AffineValue operator-() const { return {-p, -q}; }
    AffineValue scaled(const Integer& k) const { return {p * k, q * k}; }
    bool same_rep(const AffineValue& o) const { return p == o.p && q == o.q; }
};

// exact sign of p + q*a
int affine_sign(const AffineValue& v, const Density& a);

// exact sign of (p + q*a) - e; e must be rational or share a's radicand
int affine_cmp(const AffineValue& v, const Density& a, const ExactReal& e);

// the real denoted by v, as an exact field element
ExactReal affine_value(const AffineValue& v, const Density& a);

// correctly rounded decimal expansion of p + q*a
std::string to_decimal(const AffineValue& v, const Density& a, unsigned digits);

// exact text of the denoted rational, e.g. "3/2" (requires rational a)
std::string to_rational_string(const AffineValue& v, const Density& a);

}  // namespace balword
