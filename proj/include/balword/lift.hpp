#pragma once

// Two-sided lift of a bounded one-sided sequence x (with x_1 = ... = x_d = 0)
// by parity-dependent reflection: f(m) = x_m for m >= 1 and, for m <= 0,
// f(m) = x_{d+1-m} when d is even, -x_{d+1-m} when d is odd. Exposes the
// d-th forward difference g(s) = sum_i (-1)^(d-i) C(d,i) f(s+i), classified
// into {a, a-1}.

#include "balword/exact.hpp"
#include "balword/orbit.hpp"

#include <memory>
#include <string>
#include <vector>

namespace balword {

class LiftedSequence {
  public:
    // d = 2 source backed by the orbit x-sequence; requires 0 < a < 1
    static LiftedSequence from_orbit(const Density& a);

    // d = 1 source f(n) = {n a}, defined two-sidedly: no reflection involved
    static LiftedSequence sturmian(const Density& a);

    // degenerate source of the constant endpoint words (a = 0 or a = 1)
    static LiftedSequence constant(const Density& a, int dimension);

    // User-supplied x_1..x_N from a file: one exact rational per line
    // ("p/q" or integer), 1-based, '#' comments allowed. The leading d
    // entries must be zero. Entries must be representable in Z + Z*a.
    // `bound` is the declared sup-norm of the lift.
    static LiftedSequence from_file(int dimension, const std::string& path,
                                    const Density& a, ExactReal bound);

    int dimension() const { return d_; }
    const Density& density() const { return a_; }

    // declared envelope for |f|: max(alpha, beta) for the orbit source,
    // 1 for the Sturmian source, 0 for constant words, as declared for files
    const ExactReal& bound() const { return bound_; }

    AffineValue f_at(long long m) const;

    // classifies the d-th difference at s; throws invariant_error for
    // built-in sources and sequence_error for user files if the value
    // falls outside {a, a-1}
    Symbol g_at(long long s) const;

  private:
    enum class Kind { Orbit2D, Sturmian1D, ConstantWord, UserSeq };

    LiftedSequence(Kind kind, Density a, int d, ExactReal bound);

    AffineValue user_x(long long index) const;

    Kind kind_;
    Density a_;
    int d_;
    ExactReal bound_;
    std::vector<Integer> binom_;              // C(d, i), i = 0..d
    std::shared_ptr<OrbitCache> orbit_;       // Orbit2D
    Symbol const_symbol_ = Symbol::A;         // ConstantWord
    std::vector<AffineValue> entries_;        // UserSeq, 1-based (index 0 unused)
};

}  // namespace balword
