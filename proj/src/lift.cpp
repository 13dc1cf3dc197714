#include "balword/lift.hpp"

#include "balword/errors.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace balword {

namespace {

std::vector<Integer> binomial_row(int d) {
    std::vector<Integer> row(static_cast<std::size_t>(d) + 1);
    row[0] = 1;
    for (int i = 1; i <= d; ++i)
        row[static_cast<std::size_t>(i)] =
            row[static_cast<std::size_t>(i - 1)] * (d - i + 1) / i;
    return row;
}

// extended gcd for coprime (num, den): returns (u, v) with u*num + v*den = 1
std::pair<Integer, Integer> bezout_coprime(const Integer& num, const Integer& den) {
    Integer old_r = num, r = den;
    Integer old_u = 1, u = 0;
    Integer old_v = 0, v = 1;
    while (r != 0) {
        Integer q = old_r / r;
        Integer t = old_r - q * r;
        old_r = r;
        r = t;
        t = old_u - q * u;
        old_u = u;
        u = t;
        t = old_v - q * v;
        old_v = v;
        v = t;
    }
    if (old_r == 1) return {old_u, old_v};
    if (old_r == -1) return {-old_u, -old_v};
    throw std::logic_error("bezout_coprime: inputs not coprime");
}

// exact rational t/s as p + q*a, or throws sequence_error
AffineValue represent_over(const Integer& t, const Integer& s, const Density& a,
                           long long line_no) {
    auto fail = [&](const std::string& why) {
        throw sequence_error("sequence file line " + std::to_string(line_no) + ": " +
                             why);
    };
    if (a.kind() == Density::Kind::Surd) {
        if (s != 1) fail("entry " + t.str() + "/" + s.str() +
                         " is not representable in Z + Z*a for irrational a");
        return {t, 0};
    }
    const Integer& num = a.num();
    const Integer& den = a.den();
    Integer scaled = t * den;
    if (scaled % s != 0)
        fail("entry " + t.str() + "/" + s.str() + " is not representable over Z + Z*a");
    Integer k = scaled / s;
    if (den == 1) return {k, 0};  // a integral: take q = 0
    auto [u, v] = bezout_coprime(num, den);
    Integer q0 = u * k;
    Integer q = ((q0 % den) + den) % den;
    Integer p = v * k + ((q0 - q) / den) * num;
    return {std::move(p), std::move(q)};
}

}  // namespace

LiftedSequence::LiftedSequence(Kind kind, Density a, int d, ExactReal bound)
    : kind_(kind), a_(std::move(a)), d_(d), bound_(std::move(bound)),
      binom_(binomial_row(d)) {
    if (d_ < 1) throw std::invalid_argument("LiftedSequence: dimension must be >= 1");
}

LiftedSequence LiftedSequence::from_orbit(const Density& a) {
    OrbitBounds b = orbit_bounds(a);  // rejects the endpoints
    LiftedSequence seq(Kind::Orbit2D, a, 2, ExactReal::max(b.alpha, b.beta));
    seq.orbit_ = OrbitCache::shared_for(a);
    return seq;
}

LiftedSequence LiftedSequence::sturmian(const Density& a) {
    return {Kind::Sturmian1D, a, 1, ExactReal(1)};
}

LiftedSequence LiftedSequence::constant(const Density& a, int dimension) {
    if (!a.is_zero() && !a.is_one())
        throw std::invalid_argument("LiftedSequence::constant: density must be 0 or 1");
    LiftedSequence seq(Kind::ConstantWord, a, dimension, ExactReal(0));
    seq.const_symbol_ = a.is_zero() ? Symbol::A : Symbol::AMinus1;
    return seq;
}

LiftedSequence LiftedSequence::from_file(int dimension, const std::string& path,
                                         const Density& a, ExactReal bound) {
    std::ifstream in(path);
    if (!in) throw sequence_error("sequence file: cannot open " + path);

    LiftedSequence seq(Kind::UserSeq, a, dimension, std::move(bound));
    seq.entries_.emplace_back();  // index 0 unused
    std::string line;
    long long line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::string tok;
        for (char c : line)
            if (!std::isspace(static_cast<unsigned char>(c))) tok += c;
        if (tok.empty()) continue;

        Integer t, s;
        try {
            if (auto slash = tok.find('/'); slash != std::string::npos) {
                t = Integer(tok.substr(0, slash));
                s = Integer(tok.substr(slash + 1));
            } else {
                t = Integer(tok);
                s = 1;
            }
        } catch (const std::exception&) {
            throw sequence_error("sequence file line " + std::to_string(line_no) +
                                 ": malformed entry '" + tok + "'");
        }
        if (s == 0)
            throw sequence_error("sequence file line " + std::to_string(line_no) +
                                 ": zero denominator");
        if (s < 0) {
            t = -t;
            s = -s;
        }
        Integer g = boost::multiprecision::gcd(Integer(boost::multiprecision::abs(t)), s);
        if (g > 1) {
            t /= g;
            s /= g;
        }
        seq.entries_.push_back(represent_over(t, s, a, line_no));
    }

    long long n = static_cast<long long>(seq.entries_.size()) - 1;
    if (n < dimension)
        throw sequence_error("sequence file: needs at least d = " +
                             std::to_string(dimension) + " entries, found " +
                             std::to_string(n));
    for (int i = 1; i <= dimension; ++i)
        if (affine_sign(seq.entries_[static_cast<std::size_t>(i)], a) != 0)
            throw sequence_error("sequence file: x_" + std::to_string(i) +
                                 " must be zero");
    return seq;
}

AffineValue LiftedSequence::user_x(long long index) const {
    if (index < 1 || index >= static_cast<long long>(entries_.size()))
        throw sequence_error("sequence index " + std::to_string(index) +
                             " outside the supplied range");
    return entries_[static_cast<std::size_t>(index)];
}

AffineValue LiftedSequence::f_at(long long m) const {
    switch (kind_) {
        case Kind::Orbit2D:
            return m >= 1 ? orbit_->x_at(m) : orbit_->x_at(3 - m);
        case Kind::Sturmian1D: {
            // f(m) = m a - floor(m a)
            const ExactReal& v = a_.value();
            Integer fl;
            if (v.is_rational()) {
                fl = floor_div(Integer(m) * v.p(), v.r());
            } else {
                fl = ExactReal(Integer(m) * v.p(), Integer(m) * v.q(), v.n(), v.r())
                         .floor();
            }
            return {-fl, m};
        }
        case Kind::ConstantWord:
            return {0, 0};
        case Kind::UserSeq: {
            if (m >= 1) return user_x(m);
            AffineValue v = user_x(d_ + 1 - m);
            return d_ % 2 == 0 ? v : -v;
        }
    }
    throw std::logic_error("LiftedSequence: unreachable");
}

Symbol LiftedSequence::g_at(long long s) const {
    if (kind_ == Kind::ConstantWord) return const_symbol_;

    AffineValue acc;
    for (int i = 0; i <= d_; ++i) {
        Integer c = binom_[static_cast<std::size_t>(i)];
        if ((d_ - i) % 2 != 0) c = -c;
        acc = acc + f_at(s + i).scaled(c);
    }
    // acc must equal a = (0,1) or a-1 = (-1,1)
    if (affine_sign(acc - AffineValue{0, 1}, a_) == 0) return Symbol::A;
    if (affine_sign(acc - AffineValue{-1, 1}, a_) == 0) return Symbol::AMinus1;

    std::string msg = "difference at s = " + std::to_string(s) +
                      " is not in {a, a-1}: value " + to_decimal(acc, a_, 6);
    if (kind_ == Kind::UserSeq) throw sequence_error("user sequence: " + msg);
    throw invariant_error("lift: " + msg);
}

}  // namespace balword
