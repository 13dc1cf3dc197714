#include "balword/orbit.hpp"

#include "balword/errors.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace balword {

namespace {

void require_interior(const Density& a, const char* who) {
    if (a.is_zero() || a.is_one())
        throw std::invalid_argument(std::string(who) +
                                    ": density must satisfy 0 < a < 1");
}

}  // namespace

Symbol h_value(const AffineValue& x, const AffineValue& y, const Density& a) {
    // y + a - 1 = (y.p - 1) + (y.q + 1) a
    if (affine_sign({y.p - 1, y.q + 1}, a) > 0) return Symbol::AMinus1;
    if (affine_sign(x, a) > 0 && affine_sign({y.p, y.q + 1}, a) > 0)
        return Symbol::AMinus1;
    return Symbol::A;
}

OrbitState advance(const OrbitState& s, const Density& a) {
    Symbol h = h_value(s.x, s.y, a);
    AffineValue step = h == Symbol::A ? AffineValue{0, 1} : AffineValue{-1, 1};
    return {s.x + s.y, s.y + step, s.step + 1};
}

OrbitBounds orbit_bounds(const Density& a) {
    require_interior(a, "orbit_bounds");
    const ExactReal& v = a.value();
    ExactReal one(1), two(2);
    return {one / (one - v) + two, two + one / v};
}

void check_state(const OrbitState& s, const Density& a, const OrbitBounds& b) {
    // -1 <= y <= 1
    if (affine_sign({s.y.p + 1, s.y.q}, a) < 0 ||
        affine_sign({s.y.p - 1, s.y.q}, a) > 0)
        throw invariant_error("orbit: y out of [-1,1] at step " +
                              std::to_string(s.step));
    // -beta <= x <= alpha
    if (affine_cmp(s.x, a, b.alpha) > 0 || affine_cmp(s.x, a, -b.beta) < 0)
        throw invariant_error("orbit: x out of [-beta,alpha] at step " +
                              std::to_string(s.step));
}

std::vector<OrbitState> orbit_prefix(const Density& a, long long n) {
    require_interior(a, "orbit_prefix");
    if (n < 1) throw std::invalid_argument("orbit_prefix: n must be positive");
    OrbitBounds b = orbit_bounds(a);
    std::vector<OrbitState> out;
    out.reserve(static_cast<std::size_t>(n));
    OrbitState s{{0, 0}, {0, 0}, 1};
    check_state(s, a, b);
    out.push_back(s);
    while (out.back().step < n) {
        s = advance(out.back(), a);
        check_state(s, a, b);
        out.push_back(std::move(s));
    }
    return out;
}

OrbitExtremes scan_orbit(const Density& a, long long steps) {
    require_interior(a, "scan_orbit");
    if (steps < 1) throw std::invalid_argument("scan_orbit: steps must be positive");
    OrbitBounds b = orbit_bounds(a);
    OrbitState s{{0, 0}, {0, 0}, 1};
    check_state(s, a, b);
    OrbitExtremes e{1, s.x, s.x, s.y, s.y};
    auto lower = [&](AffineValue& best, const AffineValue& v) {
        if (affine_sign(v - best, a) < 0) best = v;
    };
    auto raise = [&](AffineValue& best, const AffineValue& v) {
        if (affine_sign(v - best, a) > 0) best = v;
    };
    while (s.step < steps) {
        s = advance(s, a);
        check_state(s, a, b);
        lower(e.x_min, s.x);
        raise(e.x_max, s.x);
        lower(e.y_min, s.y);
        raise(e.y_max, s.y);
        ++e.steps;
    }
    return e;
}

std::optional<std::pair<long long, long long>> detect_period(const Density& a,
                                                             long long max_steps) {
    if (a.kind() != Density::Kind::Rational)
        throw std::invalid_argument(
            "detect_period: undefined for irrational densities");
    require_interior(a, "detect_period");
    if (max_steps < 1)
        throw std::invalid_argument("detect_period: max_steps must be positive");

    // canonical state key: den-scaled exact values (representations differ)
    auto key_of = [&](const AffineValue& v) { return v.p * a.den() + v.q * a.num(); };

    std::map<std::pair<Integer, Integer>, long long> seen;
    OrbitState s{{0, 0}, {0, 0}, 1};
    for (long long i = 1; i <= max_steps; ++i) {
        auto [it, fresh] =
            seen.try_emplace({key_of(s.x), key_of(s.y)}, i);
        if (!fresh) return std::make_pair(it->second - 1, i - it->second);
        s = advance(s, a);
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// OrbitCache
// ---------------------------------------------------------------------------

OrbitCache::OrbitCache(const Density& a) : a_(a), bounds_(orbit_bounds(a)) {
    OrbitState first{{0, 0}, {0, 0}, 1};
    check_state(first, a_, bounds_);
    states_.push_back(std::move(first));
}

void OrbitCache::ensure(long long step) const {
    if (step < 1) throw std::invalid_argument("OrbitCache: step must be >= 1");
    {
        std::shared_lock lock(mutex_);
        if (static_cast<long long>(states_.size()) >= step) return;
    }
    std::unique_lock lock(mutex_);
    while (static_cast<long long>(states_.size()) < step) {
        OrbitState next = advance(states_.back(), a_);
        check_state(next, a_, bounds_);
        states_.push_back(std::move(next));
    }
}

OrbitState OrbitCache::state_at(long long step) const {
    ensure(step);
    std::shared_lock lock(mutex_);
    return states_[static_cast<std::size_t>(step - 1)];
}

AffineValue OrbitCache::x_at(long long step) const {
    ensure(step);
    std::shared_lock lock(mutex_);
    return states_[static_cast<std::size_t>(step - 1)].x;
}

long long OrbitCache::computed_steps() const {
    std::shared_lock lock(mutex_);
    return static_cast<long long>(states_.size());
}

std::shared_ptr<OrbitCache> OrbitCache::shared_for(const Density& a) {
    static std::mutex registry_mutex;
    static std::map<Density, std::weak_ptr<OrbitCache>> registry;
    std::lock_guard lock(registry_mutex);
    auto& slot = registry[a];
    if (auto live = slot.lock()) return live;
    auto fresh = std::make_shared<OrbitCache>(a);
    slot = fresh;
    return fresh;
}

}  // namespace balword
