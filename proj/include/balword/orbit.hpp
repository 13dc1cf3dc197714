#pragma once

// The skew-product map T_h(x, y) = (x + y, y + h(x, y)) with the selection
// function h into {a, a-1}, iterated from the origin. Indexing is shifted so
// that (x_1, y_1) = (0, 0); this makes x_1 = x_2 = 0 hold and identifies the
// second difference of x at n with the symbol chosen at step n.

#include "balword/exact.hpp"

#include <cstdint>
#include <deque>
#include <memory>
#include <optional>
#include <shared_mutex>
#include <utility>
#include <vector>

namespace balword {

enum class Symbol : std::uint8_t {
    A,         // step value a
    AMinus1,   // step value a - 1
};

struct OrbitState {
    AffineValue x;
    AffineValue y;
    long long step = 1;  // 1-based
};

// h(x,y) = a-1 when y + a > 1, or when x > 0 and y + a > 0; otherwise a.
// All comparisons strict and exact.
Symbol h_value(const AffineValue& x, const AffineValue& y, const Density& a);

OrbitState advance(const OrbitState& s, const Density& a);

// the proven envelopes alpha = 1/(1-a) + 2 and beta = 2 + 1/a
struct OrbitBounds {
    ExactReal alpha;
    ExactReal beta;
};

// requires 0 < a < 1 (the formulas diverge at the endpoints)
OrbitBounds orbit_bounds(const Density& a);

// checks -1 <= y <= 1 and -beta <= x <= alpha; throws invariant_error
void check_state(const OrbitState& s, const Density& a, const OrbitBounds& b);

// states for steps 1..n, each validated against the bounds
std::vector<OrbitState> orbit_prefix(const Density& a, long long n);

// Streams the orbit for `steps` steps, validating every state, without
// storing the trajectory. Returns the extreme coordinates encountered.
struct OrbitExtremes {
    long long steps = 0;
    AffineValue x_min, x_max;
    AffineValue y_min, y_max;
};
OrbitExtremes scan_orbit(const Density& a, long long steps);

// Least (preperiod, period) with state_{preperiod+1+period} = state_{preperiod+1},
// searched within max_steps. Only defined for rational densities: states are
// compared by exact value, and value recurrence happens only on the rational
// grid. Throws std::invalid_argument for irrational a.
std::optional<std::pair<long long, long long>> detect_period(const Density& a,
                                                             long long max_steps);

// Append-only memoized orbit prefix with random access by step. Extension is
// deterministic, so concurrent readers either see a fully computed prefix or
// trigger an idempotent extension.
class OrbitCache {
  public:
    explicit OrbitCache(const Density& a);  // requires 0 < a < 1

    const Density& density() const { return a_; }
    const OrbitBounds& bounds() const { return bounds_; }

    OrbitState state_at(long long step) const;  // step >= 1
    AffineValue x_at(long long step) const;
    long long computed_steps() const;

    // process-wide instance per density, released when unused
    static std::shared_ptr<OrbitCache> shared_for(const Density& a);

  private:
    void ensure(long long step) const;

    Density a_;
    OrbitBounds bounds_;
    mutable std::shared_mutex mutex_;
    mutable std::deque<OrbitState> states_;
};

}  // namespace balword
