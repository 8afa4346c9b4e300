#include "qcausal/stationary_phase.hpp"

#include <algorithm>
#include <cmath>

namespace qcausal {

namespace {

constexpr double kPi = 3.14159265358979323846;

void check_real_positive_convention(const WaveFunction& a, const WaveFunction& b) {
    const complexd overlap = inner_product(b.f, a.f);
    if (std::abs(overlap.imag()) > 1e-10 * std::max(1.0, std::abs(overlap))) {
        throw Error(errc::non_real_overlap,
                    "phase_difference: overlap is not real; apply rotate_to_real_overlap first");
    }
}

struct QuadraticFit {
    double a = 0.0;  // value at the window centre
    double b = 0.0;  // slope per sample
    double c = 0.0;  // curvature per sample^2
};

// Least-squares fit y ~ a + b v + c v^2 with v the sample index measured
// from the window centre. Solved by Cramer's rule on the normal equations;
// v stays within +-7 so conditioning is not a concern.
QuadraticFit fit_quadratic(std::span<const double> y, double centre) {
    double s0 = 0, s1 = 0, s2 = 0, s3 = 0, s4 = 0;
    double t0 = 0, t1 = 0, t2 = 0;
    for (std::size_t i = 0; i < y.size(); ++i) {
        const double v = static_cast<double>(i) - centre;
        const double v2 = v * v;
        s0 += 1.0;
        s1 += v;
        s2 += v2;
        s3 += v2 * v;
        s4 += v2 * v2;
        t0 += y[i];
        t1 += y[i] * v;
        t2 += y[i] * v2;
    }
    const double det = s0 * (s2 * s4 - s3 * s3) - s1 * (s1 * s4 - s2 * s3) + s2 * (s1 * s3 - s2 * s2);
    QuadraticFit fit;
    fit.a = (t0 * (s2 * s4 - s3 * s3) - s1 * (t1 * s4 - t2 * s3) + s2 * (t1 * s3 - t2 * s2)) / det;
    fit.b = (s0 * (t1 * s4 - t2 * s3) - t0 * (s1 * s4 - s2 * s3) + s2 * (s1 * t2 - s2 * t1)) / det;
    fit.c = (s0 * (s2 * t2 - s3 * t1) - s1 * (s1 * t2 - s3 * t0) + t0 * (s1 * s3 - s2 * s2)) / det;
    return fit;
}

}  // namespace

PhaseProfile phase_difference(const WaveFunction& a, const WaveFunction& b, double floor,
                              double hbar) {
    if (a.grid() != b.grid()) {
        throw Error(errc::grid_mismatch, "phase_difference: states live on different grids");
    }
    check_real_positive_convention(a, b);

    const std::size_t n = a.size();
    double peak_a = 0.0, peak_b = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        peak_a = std::max(peak_a, std::abs(a[k]));
        peak_b = std::max(peak_b, std::abs(b[k]));
    }

    std::vector<std::uint8_t> mask(n, 0);
    std::vector<double> raw(n, 0.0);
    for (std::size_t k = 0; k < n; ++k) {
        if (std::abs(a[k]) > floor * peak_a && std::abs(b[k]) > floor * peak_b) {
            mask[k] = 1;
            raw[k] = std::arg(b[k]) - std::arg(a[k]);
        }
    }

    UnwrapResult unwrapped = unwrap_phase(raw, mask);  // validates mask contiguity

    PhaseProfile profile;
    profile.grid = a.grid();
    profile.hbar = hbar;
    profile.s_over_hbar.assign(n, 0.0);
    profile.mask_lo = n;
    for (std::size_t k = 0; k < n; ++k) {
        if (mask[k]) {
            if (profile.mask_lo == n) profile.mask_lo = k;
            profile.mask_hi = k + 1;
            profile.s_over_hbar[k] = unwrapped.values[k];
        }
    }
    profile.aliasing_warning = unwrapped.aliasing_warning;
    profile.max_raw_jump = unwrapped.max_raw_jump;
    return profile;
}

std::vector<StationaryPoint> find_stationary_points(const PhaseProfile& s) {
    const std::size_t m = s.mask_size();
    if (m == 0) throw Error(errc::empty_mask, "find_stationary_points: empty mask");

    const double dx = s.grid.dx();
    std::span<const double> region(s.s_over_hbar.data() + s.mask_lo, m);
    const Derivative d = derivative(region, dx, 1);  // throws region_too_small below 7 points

    // Sign-change scan over consecutive nonzero derivative samples. Exact
    // zeros between opposite signs collapse into a single crossing.
    std::vector<std::size_t> brackets;  // local index of the left edge of a crossing
    int last_sign = 0;
    std::size_t last_idx = 0;
    for (std::size_t i = 0; i < m; ++i) {
        const double v = d.values[i];
        if (v == 0.0) continue;
        const int sign = v > 0.0 ? 1 : -1;
        if (last_sign != 0 && sign != last_sign) {
            brackets.push_back((last_idx + i) / 2);
        }
        last_sign = sign;
        last_idx = i;
    }
    if (brackets.empty()) {
        throw Error(errc::no_stationary_point,
                    "find_stationary_points: dS/dx never changes sign on the mask");
    }

    std::vector<StationaryPoint> points;
    for (std::size_t centre : brackets) {
        const std::size_t lo = centre >= 7 ? centre - 7 : 0;
        const std::size_t hi = std::min(m, centre + 8);
        if (hi - lo < 3) continue;
        const QuadraticFit fit =
            fit_quadratic(region.subspan(lo, hi - lo), static_cast<double>(centre - lo));

        // gamma = (1/(2 hbar)) d2S/dx2 equals the quadratic coefficient of
        // S/hbar in physical units.
        if (std::abs(fit.c) < 1e-9) {
            throw Error(errc::degenerate_curvature,
                        "find_stationary_points: |gamma| below 1e-9/dx^2, stationarity is not quadratic");
        }
        StationaryPoint pt;
        pt.gamma = fit.c / (dx * dx);
        const double v_star = -fit.b / (2.0 * fit.c);
        pt.mu = s.grid.x(s.mask_lo + centre) + v_star * dx;
        pt.s_mu_over_hbar = principal_angle(fit.a - fit.b * fit.b / (4.0 * fit.c));
        pt.refinement_window = IndexRange{s.mask_lo + lo, s.mask_lo + hi};
        points.push_back(pt);
    }

    // Merge refinements that collapsed onto the same location.
    std::sort(points.begin(), points.end(),
              [](const StationaryPoint& x, const StationaryPoint& y) { return x.mu < y.mu; });
    std::vector<StationaryPoint> unique;
    for (const StationaryPoint& pt : points) {
        if (unique.empty() || std::abs(pt.mu - unique.back().mu) > 0.5 * dx) {
            unique.push_back(pt);
        }
    }
    if (unique.empty()) {
        throw Error(errc::no_stationary_point, "find_stationary_points: no refinable crossing");
    }
    return unique;
}

FresnelReference fresnel_reference(double gamma, double half_window) {
    if (!(gamma > 0.0) || !(half_window > 0.0)) {
        throw Error(errc::invalid_argument, "fresnel_reference: gamma and half_window must be positive");
    }
    const double closed = std::sqrt(kPi / gamma);

    // Sampling is set by the highest local frequency 2*gamma*L at the
    // window edge: 32 samples per fringe (one fringe = 2*pi of phase),
    // never fewer than 64 cells on the half-range. The cell count is
    // capped; if the cap would leave fewer than 4 samples per fringe the
    // quadrature refuses.
    const double edge_freq = 2.0 * gamma * half_window;
    constexpr std::size_t kMaxCells = std::size_t(1) << 26;
    double cells_needed = half_window / (kPi / (16.0 * std::max(edge_freq, 1e-300)));
    std::size_t cells = cells_needed < 64.0 ? 64
                        : cells_needed > static_cast<double>(kMaxCells)
                            ? kMaxCells
                            : static_cast<std::size_t>(std::ceil(cells_needed));
    if (cells == kMaxCells &&
        (half_window / static_cast<double>(cells)) * edge_freq > kPi / 2.0) {
        throw Error(errc::under_resolved,
                    "fresnel_reference: cannot resolve 4 samples per fringe at the window edge");
    }
    if (cells % 2 == 1) ++cells;

    // Composite Simpson on [0, L], doubled (even integrand).
    const double du = half_window / static_cast<double>(cells);
    auto f = [gamma](double u) { return std::cos(gamma * u * u - kPi / 4.0); };
    double acc = f(0.0) + f(half_window);
    for (std::size_t i = 1; i < cells; ++i) {
        acc += f(static_cast<double>(i) * du) * (i % 2 == 1 ? 4.0 : 2.0);
    }
    return FresnelReference{2.0 * acc * du / 3.0, closed};
}

double fresnel_overlap_estimate(const WaveFunction& a, const StationaryPoint& pt,
                                const PhaseProfile& s) {
    const double x_lo = s.grid.x(s.mask_lo);
    const double x_hi = s.grid.x(s.mask_hi - 1);
    if (pt.mu < x_lo || pt.mu > x_hi) {
        throw Error(errc::mu_outside_mask, "fresnel_overlap_estimate: mu lies outside the valid mask");
    }
    return std::sqrt(kPi / pt.gamma_magnitude()) * density_at(a, pt.mu);
}

bool in_validity_regime(const WaveFunction& a, double gamma, double validity_factor) {
    const double fringe = std::sqrt(kPi / std::abs(gamma));
    return fringe <= position_std(a) / validity_factor;
}

}  // namespace qcausal
