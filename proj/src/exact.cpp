#include "balword/exact.hpp"

#include <boost/multiprecision/integer.hpp>

#include <cctype>
#include <stdexcept>
#include <utility>

namespace balword {

namespace mp = boost::multiprecision;

Integer floor_div(const Integer& a, const Integer& b) {
    Integer q = a / b;
    if (a % b != 0 && a < 0) --q;
    return q;
}

int quad_sign(const Integer& A, const Integer& B, const Integer& n) {
    int sa = A.sign();
    int sb = B.sign();
    if (sb == 0 || n == 0) return sa;
    if (sa == 0) return sb;
    if (sa == sb) return sa;
    // opposite strict signs: |A| vs |B|*sqrt(n), decided by squaring
    Integer lhs = A * A;
    Integer rhs = B * B * n;
    if (lhs == rhs) return 0;  // impossible for non-square n
    return lhs > rhs ? sa : sb;
}

// ---------------------------------------------------------------------------
// ExactReal
// ---------------------------------------------------------------------------

ExactReal::ExactReal(Integer num, Integer den)
    : p_(std::move(num)), q_(0), n_(0), r_(std::move(den)) {
    normalize();
}

ExactReal::ExactReal(Integer p, Integer q, Integer n, Integer r)
    : p_(std::move(p)), q_(std::move(q)), n_(std::move(n)), r_(std::move(r)) {
    normalize();
}

void ExactReal::normalize() {
    if (r_ == 0) throw std::invalid_argument("ExactReal: zero denominator");
    if (r_ < 0) {
        p_ = -p_;
        q_ = -q_;
        r_ = -r_;
    }
    if (n_ < 0) throw std::invalid_argument("ExactReal: negative radicand");
    if (n_ == 0) q_ = 0;
    if (q_ == 0) {
        n_ = 0;
    } else {
        // pull square factors out of the radicand: sqrt(f^2 m) = f sqrt(m)
        for (Integer f = 2; f * f <= n_ && f <= 100000; ++f) {
            while (n_ % (f * f) == 0) {
                n_ /= f * f;
                q_ *= f;
            }
        }
        if (n_ == 1) {
            p_ += q_;
            q_ = 0;
            n_ = 0;
        }
    }
    Integer g = mp::gcd(mp::gcd(Integer(mp::abs(p_)), Integer(mp::abs(q_))), r_);
    if (g > 1) {
        p_ /= g;
        q_ /= g;
        r_ /= g;
    }
}

int ExactReal::sign() const {
    if (q_ == 0) return p_.sign();
    return quad_sign(p_, q_, n_);
}

Integer ExactReal::floor() const {
    if (q_ == 0) return floor_div(p_, r_);
    Integer D = q_ * q_ * n_;
    Integer s = mp::sqrt(D);
    // n_ is non-square, so sqrt(D) is irrational and strictly between s, s+1
    if (q_ > 0) return floor_div(p_ + s, r_);
    return floor_div(p_ - s - 1, r_);
}

ExactReal ExactReal::operator-() const {
    ExactReal out = *this;
    out.p_ = -out.p_;
    out.q_ = -out.q_;
    return out;
}

static const Integer& merge_radicand(const ExactReal& a, const ExactReal& b) {
    if (a.q() != 0 && b.q() != 0 && a.n() != b.n())
        throw std::logic_error("ExactReal: mixed radicands");
    return a.q() != 0 ? a.n() : b.n();
}

ExactReal ExactReal::operator+(const ExactReal& o) const {
    Integer nn = merge_radicand(*this, o);
    return ExactReal(p_ * o.r_ + o.p_ * r_, q_ * o.r_ + o.q_ * r_, nn, r_ * o.r_);
}

ExactReal ExactReal::operator-(const ExactReal& o) const { return *this + (-o); }

ExactReal ExactReal::operator*(const ExactReal& o) const {
    Integer nn = merge_radicand(*this, o);
    return ExactReal(p_ * o.p_ + q_ * o.q_ * nn, p_ * o.q_ + q_ * o.p_, nn, r_ * o.r_);
}

ExactReal ExactReal::operator/(const ExactReal& o) const {
    if (o.is_zero()) throw std::invalid_argument("ExactReal: division by zero");
    // 1/o = conj(o) * r / (p^2 - n q^2)
    ExactReal inv(o.p_ * o.r_, -o.q_ * o.r_, o.n_, o.p_ * o.p_ - o.n_ * o.q_ * o.q_);
    return *this * inv;
}

std::string ExactReal::to_decimal(unsigned digits) const {
    Integer scale = mp::pow(Integer(10), digits);
    ExactReal v = *this * ExactReal(scale);
    Integer i = v.floor();
    // round to nearest; break exact ties (rational values only) to even
    ExactReal twice_frac_minus_one = v + v - ExactReal(2 * i + 1);
    int t = twice_frac_minus_one.sign();
    Integer n = i;
    if (t > 0 || (t == 0 && i % 2 != 0)) n = i + 1;

    bool neg = n < 0;
    std::string s = Integer(mp::abs(n)).str();
    if (digits > 0) {
        if (s.size() <= digits) s = std::string(digits + 1 - s.size(), '0') + s;
        s.insert(s.size() - digits, ".");
    }
    return neg ? "-" + s : s;
}

std::string ExactReal::to_string() const {
    if (q_ == 0) {
        if (r_ == 1) return p_.str();
        return p_.str() + "/" + r_.str();
    }
    std::string qs = Integer(mp::abs(q_)).str();
    return "(" + p_.str() + (q_ < 0 ? "-" : "+") + qs + "*sqrt(" + n_.str() + "))/" +
           r_.str();
}

// ---------------------------------------------------------------------------
// Density parsing
// ---------------------------------------------------------------------------

namespace {

Integer parse_integer(const std::string& s) {
    std::size_t i = 0;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) ++i;
    if (i == s.size()) throw std::invalid_argument("density: malformed integer '" + s + "'");
    for (std::size_t j = i; j < s.size(); ++j)
        if (!std::isdigit(static_cast<unsigned char>(s[j])))
            throw std::invalid_argument("density: malformed integer '" + s + "'");
    return s[0] == '+' ? Integer(s.substr(1)) : Integer(s);
}

// scans an optionally signed digit run starting at i
std::string take_integer(const std::string& s, std::size_t& i) {
    std::size_t b = i;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) ++i;
    std::size_t digits_from = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == digits_from)
        throw std::invalid_argument("density: expected integer at '" + s.substr(b) + "'");
    return s.substr(b, i - b);
}

void expect(const std::string& s, std::size_t& i, const std::string& tok) {
    if (s.compare(i, tok.size(), tok) != 0)
        throw std::invalid_argument("density: expected '" + tok + "' in '" + s + "'");
    i += tok.size();
}

ExactReal parse_surd(const std::string& s) {
    std::size_t i = 0;
    expect(s, i, "(");
    Integer p = parse_integer(take_integer(s, i));
    if (i >= s.size() || (s[i] != '+' && s[i] != '-'))
        throw std::invalid_argument("density: expected '+' or '-' in '" + s + "'");
    bool minus = s[i] == '-';
    ++i;
    Integer q = parse_integer(take_integer(s, i));
    if (minus) q = -q;
    expect(s, i, "*sqrt(");
    Integer n = parse_integer(take_integer(s, i));
    expect(s, i, "))/");
    Integer r = parse_integer(take_integer(s, i));
    if (i != s.size()) throw std::invalid_argument("density: trailing characters in '" + s + "'");

    if (n <= 0) throw std::invalid_argument("density: radicand must be positive");
    Integer rt = mp::sqrt(n);
    if (rt * rt == n)
        throw std::invalid_argument(
            "density: radicand " + n.str() + " is a perfect square; use the rational form");
    if (r == 0) throw std::invalid_argument("density: zero denominator");
    return ExactReal(std::move(p), std::move(q), std::move(n), std::move(r));
}

ExactReal parse_decimal(const std::string& s) {
    std::size_t i = 0;
    bool neg = false;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
        neg = s[i] == '-';
        ++i;
    }
    std::string digits;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) digits += s[i++];
    std::size_t frac = 0;
    if (i < s.size() && s[i] == '.') {
        ++i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
            digits += s[i++];
            ++frac;
        }
    }
    if (digits.empty() || i != s.size())
        throw std::invalid_argument("density: malformed literal '" + s + "'");
    Integer num(digits);
    if (neg) num = -num;
    return ExactReal(std::move(num), mp::pow(Integer(10), static_cast<unsigned>(frac)));
}

}  // namespace

Density Density::parse(const std::string& text) {
    std::string s;
    s.reserve(text.size());
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) throw std::invalid_argument("density: empty input");

    ExactReal v;
    if (s.front() == '(') {
        v = parse_surd(s);
    } else if (s.find('/') != std::string::npos) {
        std::size_t pos = s.find('/');
        if (s.find('/', pos + 1) != std::string::npos)
            throw std::invalid_argument("density: malformed ratio '" + s + "'");
        Integer num = parse_integer(s.substr(0, pos));
        Integer den = parse_integer(s.substr(pos + 1));
        if (den == 0) throw std::invalid_argument("density: zero denominator");
        v = ExactReal(std::move(num), std::move(den));
    } else {
        v = parse_decimal(s);
    }

    if (v.sign() < 0 || (v - ExactReal(1)).sign() > 0)
        throw std::invalid_argument("density: value " + v.to_string() + " outside [0,1]");
    return Density(std::move(v));
}

Density Density::rational(Integer num, Integer den) {
    if (den == 0) throw std::invalid_argument("density: zero denominator");
    ExactReal v(std::move(num), std::move(den));
    if (v.sign() < 0 || (v - ExactReal(1)).sign() > 0)
        throw std::invalid_argument("density: value " + v.to_string() + " outside [0,1]");
    return Density(std::move(v));
}

bool Density::operator==(const Density& o) const {
    const ExactReal &x = value_, &y = o.value_;
    return x.p() == y.p() && x.q() == y.q() && x.n() == y.n() && x.r() == y.r();
}

bool Density::operator<(const Density& o) const {
    // order on normal forms (for map keys); normal forms are canonical,
    // so this is consistent with value equality
    const ExactReal &x = value_, &y = o.value_;
    if (x.n() != y.n()) return x.n() < y.n();
    if (x.p() != y.p()) return x.p() < y.p();
    if (x.q() != y.q()) return x.q() < y.q();
    return x.r() < y.r();
}

// ---------------------------------------------------------------------------
// AffineValue helpers
// ---------------------------------------------------------------------------

int affine_sign(const AffineValue& v, const Density& a) {
    const ExactReal& s = a.value();
    if (s.is_rational()) {
        Integer t = v.p * s.r() + v.q * s.p();
        return t.sign();
    }
    Integer A = v.p * s.r() + v.q * s.p();
    Integer B = v.q * s.q();
    return quad_sign(A, B, s.n());
}

ExactReal affine_value(const AffineValue& v, const Density& a) {
    const ExactReal& s = a.value();
    if (s.is_rational()) return ExactReal(v.p * s.r() + v.q * s.p(), s.r());
    return ExactReal(v.p * s.r() + v.q * s.p(), v.q * s.q(), s.n(), s.r());
}

int affine_cmp(const AffineValue& v, const Density& a, const ExactReal& e) {
    const ExactReal& s = a.value();
    if (s.is_rational() && e.is_rational()) {
        Integer t = (v.p * s.r() + v.q * s.p()) * e.r() - e.p() * s.r();
        return t.sign();
    }
    if (!s.is_rational() && (e.is_rational() || e.n() == s.n())) {
        Integer A = v.p * s.r() + v.q * s.p();
        Integer B = v.q * s.q();
        return quad_sign(A * e.r() - e.p() * s.r(), B * e.r() - e.q() * s.r(), s.n());
    }
    return (affine_value(v, a) - e).sign();
}

std::string to_decimal(const AffineValue& v, const Density& a, unsigned digits) {
    return affine_value(v, a).to_decimal(digits);
}

std::string to_rational_string(const AffineValue& v, const Density& a) {
    if (a.kind() != Density::Kind::Rational)
        throw std::logic_error("to_rational_string: density is irrational");
    return affine_value(v, a).to_string();
}

}  // namespace balword
