#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numbers>
#include <vector>

#include "parallel.hpp"

namespace gft {

inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Maps any angle into [0, 2*pi).
inline double normalize_angle(double theta) noexcept
{
    double t = std::fmod(theta, kTwoPi);
    if (t < 0.0)
        t += kTwoPi;
    if (t >= kTwoPi)
        t = 0.0;
    return t;
}

struct CircleMax {
    double value = 0.0;
    double angle = 0.0; // in [0, 2*pi)
    std::size_t evaluations = 0;
};

namespace detail {

// Strictly larger value wins; equal values go to the smaller angle.
inline bool better(double value, double angle, const CircleMax& cur) noexcept
{
    return value > cur.value || (value == cur.value && angle < cur.angle);
}

template <class G>
CircleMax golden_refine(G& g, CircleMax start, double half_width, std::size_t iters)
{
    constexpr double inv_phi = 0.6180339887498948482; // (sqrt(5) - 1) / 2
    CircleMax best = start;
    double a = start.angle - half_width;
    double b = start.angle + half_width;
    double c = b - inv_phi * (b - a);
    double d = a + inv_phi * (b - a);
    double gc = 0.0;
    double gd = 0.0;
    bool have_c = false;
    bool have_d = false;

    auto offer = [&](double theta, double v) {
        const double t = normalize_angle(theta);
        if (better(v, t, best)) {
            best.value = v;
            best.angle = t;
        }
    };

    for (std::size_t it = 0; it < iters; ++it) {
        if (!have_c) {
            gc = g(c);
            ++best.evaluations;
            offer(c, gc);
            have_c = true;
        }
        if (!have_d) {
            gd = g(d);
            ++best.evaluations;
            offer(d, gd);
            have_d = true;
        }
        if (gc > gd) {
            b = d;
            d = c;
            gd = gc;
            c = b - inv_phi * (b - a);
            have_c = false;
        } else {
            a = c;
            c = d;
            gc = gd;
            d = a + inv_phi * (b - a);
            have_d = false;
        }
    }
    return best;
}

} // namespace detail

// Estimates max g(theta) over the circle. A uniform grid of `samples`
// angles is evaluated (in parallel when large), then each of the
// `max_peaks` highest strict local maxima of the grid, plus the overall
// best sample, gets `refine_iters` golden-section steps inside its grid
// cell pair. Results never decrease as refine_iters grows, and ties are
// resolved toward the smallest angle in [0, 2*pi).
template <class G>
CircleMax maximize_on_circle(G&& g, std::size_t samples, std::size_t refine_iters, std::size_t max_peaks = 8)
{
    std::vector<double> values(samples);
    const double step = kTwoPi / static_cast<double>(samples);
    parallel_for(
        samples, [&](std::size_t k) { values[k] = g(step * static_cast<double>(k)); }, 1024);

    std::size_t best_k = 0;
    for (std::size_t k = 1; k < samples; ++k)
        if (values[k] > values[best_k])
            best_k = k;

    std::vector<std::size_t> peaks{best_k};
    for (std::size_t k = 0; k < samples; ++k) {
        const double prev = values[(k + samples - 1) % samples];
        const double next = values[(k + 1) % samples];
        if (k != best_k && values[k] > prev && values[k] >= next)
            peaks.push_back(k);
    }
    std::stable_sort(peaks.begin() + 1, peaks.end(),
                     [&](std::size_t x, std::size_t y) { return values[x] > values[y]; });
    if (peaks.size() > max_peaks)
        peaks.resize(std::max<std::size_t>(max_peaks, 1));

    CircleMax result{values[best_k], step * static_cast<double>(best_k), samples};
    for (std::size_t k : peaks) {
        CircleMax seed{values[k], step * static_cast<double>(k), 0};
        const CircleMax refined = detail::golden_refine(g, seed, step, refine_iters);
        result.evaluations += refined.evaluations;
        if (detail::better(refined.value, refined.angle, result)) {
            result.value = refined.value;
            result.angle = refined.angle;
        }
    }
    return result;
}

} // namespace gft
