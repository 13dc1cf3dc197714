#pragma once

// Test-only oracles, written independently of the library code paths they
// check. Everything here recomputes its answer from first principles:
// the rational orbit simulator works on den-scaled int64 coordinates, the
// sign and floor oracles use decimal interval refinement instead of the
// library's cross-squaring case analysis, and the rectangle recount is a
// plain double loop.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace oracle {

using BigInt = boost::multiprecision::cpp_int;

// ---------------------------------------------------------------------------
// Naive skew-product simulator for rational density a = num/den.
//
// All coordinates are stored scaled by den, so every value is an exact
// int64 as long as the magnitudes stay small (they do: |y| <= 1, |x| <= 5
// for the densities used in tests). The selection rule is transcribed
// directly from the map definition:
//   step is a-1 when y + a > 1, or when x > 0 and y + a > 0; else a.
// ---------------------------------------------------------------------------
struct RatOrbitRow {
    std::int64_t x_scaled = 0;  // x * den
    std::int64_t y_scaled = 0;  // y * den
    char h = 'a';               // 'a' or 'b' (= a-1) chosen at this state
};

inline std::vector<RatOrbitRow> rat_orbit(std::int64_t num, std::int64_t den,
                                          std::int64_t steps) {
    if (den <= 0 || num < 0 || num > den)
        throw std::invalid_argument("rat_orbit: density outside [0,1]");
    std::vector<RatOrbitRow> rows;
    rows.reserve(static_cast<std::size_t>(steps));
    std::int64_t x = 0, y = 0;  // state 1 = (0, 0)
    for (std::int64_t i = 1; i <= steps; ++i) {
        bool minus = (y + num > den) || (x > 0 && y + num > 0);
        rows.push_back({x, y, minus ? 'b' : 'a'});
        x += y;
        y += minus ? num - den : num;
    }
    return rows;
}

// ---------------------------------------------------------------------------
// Interval sign oracle.
//
// Evaluates sign(p + q * a) where a = (sp + sq*sqrt(sn)) / sr (use sq = 0,
// sn = 0 for a rational density sp/sr). The surd case brackets a * 10^D
// between consecutive integers using an integer square root and widens the
// precision until the interval clears zero; quadratic irrationals stay far
// enough from rationals for this to terminate quickly.
// ---------------------------------------------------------------------------
inline BigInt isqrt_floor(const BigInt& v) {
    return boost::multiprecision::sqrt(v);
}

inline int interval_sign(const BigInt& p, const BigInt& q, const BigInt& sp,
                         const BigInt& sq, const BigInt& sn, const BigInt& sr,
                         unsigned digits = 200) {
    if (sq == 0) {
        // rational density sp/sr, sr > 0
        BigInt t = p * sr + q * sp;
        return t == 0 ? 0 : (t > 0 ? 1 : -1);
    }
    if (p == 0 && q == 0) return 0;
    for (unsigned d = digits; d <= 8 * digits; d *= 2) {
        BigInt scale = boost::multiprecision::pow(BigInt(10), d);
        // bracket sq*sqrt(sn)*scale
        BigInt w = isqrt_floor(sq * sq * sn * scale * scale);
        BigInt term_lo = sq >= 0 ? w : BigInt(-(w + 1));
        BigInt term_hi = sq >= 0 ? BigInt(w + 1) : BigInt(-w);
        // bracket a*scale = (sp*scale + term) / sr, sr > 0
        BigInt a_lo = sp * scale + term_lo;  // numerator bounds over sr
        BigInt a_hi = sp * scale + term_hi;
        // v*scale*sr = p*scale*sr + q*(a*scale*sr); a*scale*sr in [a_lo, a_hi]
        BigInt base = p * scale * sr;
        BigInt c1 = base + q * a_lo, c2 = base + q * a_hi;
        BigInt lo = c1 < c2 ? c1 : c2, hi = c1 < c2 ? c2 : c1;
        if (lo > 0) return 1;
        if (hi < 0) return -1;
    }
    throw std::runtime_error("interval_sign: interval never cleared zero");
}

// floor(m * a) by the same interval bracketing; exact for the quadratic
// densities used in tests (the interval shrinks below the distance from
// m*a to the nearest integer).
inline BigInt interval_floor_mul(std::int64_t m, const BigInt& sp,
                                 const BigInt& sq, const BigInt& sn,
                                 const BigInt& sr, unsigned digits = 200) {
    if (sq == 0) {
        BigInt t = BigInt(m) * sp;
        BigInt f = t / sr;
        if (t % sr != 0 && t < 0) --f;
        return f;
    }
    for (unsigned d = digits; d <= 8 * digits; d *= 2) {
        BigInt scale = boost::multiprecision::pow(BigInt(10), d);
        BigInt w = isqrt_floor(sq * sq * sn * scale * scale);
        BigInt term_lo = sq >= 0 ? w : BigInt(-(w + 1));
        BigInt term_hi = sq >= 0 ? BigInt(w + 1) : BigInt(-w);
        BigInt n_lo = BigInt(m) * (sp * scale + (m >= 0 ? term_lo : term_hi));
        BigInt n_hi = BigInt(m) * (sp * scale + (m >= 0 ? term_hi : term_lo));
        BigInt den = sr * scale;
        auto fdiv = [&](const BigInt& t) {
            BigInt f = t / den;
            if (t % den != 0 && t < 0) --f;
            return f;
        };
        BigInt f_lo = fdiv(n_lo), f_hi = fdiv(n_hi);
        if (f_lo == f_hi) return f_lo;
    }
    throw std::runtime_error("interval_floor_mul: no convergence");
}

// Sturmian bit from the floor oracle: 1 iff floor((m+1)a) - floor(ma) = 1.
inline int interval_sturmian_bit(std::int64_t m, const BigInt& sp,
                                 const BigInt& sq, const BigInt& sn,
                                 const BigInt& sr) {
    BigInt d = interval_floor_mul(m + 1, sp, sq, sn, sr) -
               interval_floor_mul(m, sp, sq, sn, sr);
    if (d != 0 && d != 1)
        throw std::runtime_error("interval_sturmian_bit: non-binary step");
    return static_cast<int>(d);
}

// ---------------------------------------------------------------------------
// Brute-force rectangle recount: counts 1s of every p x q placement inside a
// bit matrix with two nested loops per placement. Quadratic and obviously
// correct; used to check both the prefix-sum oracle and the fast scanner.
// ---------------------------------------------------------------------------
struct MinMaxCount {
    std::int64_t max_count = 0;
    std::int64_t min_count = 0;
};

inline std::optional<MinMaxCount> naive_minmax(
    const std::vector<std::vector<std::uint8_t>>& bits, std::int64_t p,
    std::int64_t q) {
    if (bits.empty()) return std::nullopt;
    std::int64_t h = static_cast<std::int64_t>(bits.size());
    std::int64_t w = static_cast<std::int64_t>(bits[0].size());
    if (p < 1 || q < 1 || p > w || q > h) return std::nullopt;
    std::optional<MinMaxCount> out;
    for (std::int64_t j = 0; j + q <= h; ++j) {
        for (std::int64_t i = 0; i + p <= w; ++i) {
            std::int64_t c = 0;
            for (std::int64_t dj = 0; dj < q; ++dj)
                for (std::int64_t di = 0; di < p; ++di)
                    c += bits[static_cast<std::size_t>(j + dj)]
                             [static_cast<std::size_t>(i + di)];
            if (!out) {
                out = MinMaxCount{c, c};
            } else {
                if (c > out->max_count) out->max_count = c;
                if (c < out->min_count) out->min_count = c;
            }
        }
    }
    return out;
}

}  // namespace oracle
