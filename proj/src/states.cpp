#include "qcausal/states.hpp"

#include <algorithm>
#include <cmath>

namespace qcausal {

namespace {

constexpr double kBoundaryFloor = 1e-8;  // boundary amplitude relative to peak

double peak_magnitude(const SampledFunction& f) {
    double peak = 0.0;
    for (const complexd& v : f.values) peak = std::max(peak, std::abs(v));
    return peak;
}

void check_fits_box(const SampledFunction& f, errc code, const char* who) {
    const double peak = peak_magnitude(f);
    const double edge = std::max(std::abs(f.values.front()), std::abs(f.values.back()));
    if (peak <= 0.0 || edge > kBoundaryFloor * peak) {
        throw Error(code, std::string(who) + ": state does not decay below 1e-8 of peak at the box boundary");
    }
}

void normalize(SampledFunction& f) {
    const double nrm = norm(f);
    if (!(nrm > 0.0)) {
        throw Error(errc::invalid_argument, "normalize: zero state");
    }
    for (complexd& v : f.values) v /= nrm;
}

}  // namespace

WaveFunction gaussian(const GaussianSpec& spec, const Grid& grid, double hbar) {
    if (!(spec.sigma > 0.0)) {
        throw Error(errc::invalid_argument, "gaussian: sigma must be positive");
    }
    if (grid.dx() > spec.sigma / 8.0) {
        throw Error(errc::resolution_too_coarse,
                    "gaussian: need at least 8 grid points per sigma");
    }

    SampledFunction f{grid, std::vector<complexd>(grid.n)};
    const double inv4s2 = 1.0 / (4.0 * spec.sigma * spec.sigma);
    for (std::size_t k = 0; k < grid.n; ++k) {
        const double u = grid.x(k) - spec.x0;
        const double envelope = std::exp(-u * u * inv4s2);
        const double phase = spec.chirp * u * u + spec.p0 * u / hbar + spec.global_phase;
        f.values[k] = envelope * std::polar(1.0, phase);
    }
    check_fits_box(f, errc::box_too_small, "gaussian");
    normalize(f);
    return WaveFunction{std::move(f)};
}

WaveFunction from_samples(SampledFunction samples) {
    check_fits_box(samples, errc::box_too_small, "from_samples");
    normalize(samples);
    return WaveFunction{std::move(samples)};
}

ConjugatePair conjugate_pair(double x0, double sigma, double chirp, const Grid& grid,
                             double hbar) {
    if (chirp == 0.0) {
        throw Error(errc::zero_chirp,
                    "conjugate_pair: chirp must be nonzero (phase difference needs a quadratic stationary point)");
    }
    WaveFunction a = gaussian(GaussianSpec{x0, 0.0, sigma, chirp, 0.0}, grid, hbar);

    // <B|A> = integral A(x)^2 dx for B = conj(A); rotating A by half the
    // negative argument of that integral makes the overlap real positive
    // while preserving B = conj(A) pointwise.
    SampledFunction a_sq{grid, std::vector<complexd>(grid.n)};
    for (std::size_t k = 0; k < grid.n; ++k) a_sq.values[k] = a.f.values[k] * a.f.values[k];
    const complexd raw = integrate(a_sq);
    const double phi = -0.5 * std::arg(raw);

    const complexd rot = std::polar(1.0, phi);
    for (complexd& v : a.f.values) v *= rot;

    WaveFunction b{SampledFunction{grid, std::vector<complexd>(grid.n)}};
    for (std::size_t k = 0; k < grid.n; ++k) b.f.values[k] = std::conj(a.f.values[k]);

    const complexd overlap = inner_product(b.f, a.f);
    return ConjugatePair{std::move(a), std::move(b), overlap.real(), phi};
}

WaveFunction free_evolve(const WaveFunction& psi, double mass, double t, double hbar) {
    if (!(mass > 0.0)) {
        throw Error(errc::invalid_argument, "free_evolve: mass must be positive");
    }
    SampledFunction phi = to_momentum(psi.f, hbar);
    const double coeff = t / (2.0 * mass * hbar);
    for (std::size_t k = 0; k < phi.size(); ++k) {
        const double p = phi.grid.x(k);
        phi.values[k] *= std::polar(1.0, -coeff * p * p);
    }
    SampledFunction evolved = from_momentum(phi, psi.grid(), hbar);
    check_fits_box(evolved, errc::box_overflow, "free_evolve");
    return WaveFunction{std::move(evolved)};
}

std::pair<WaveFunction, double> rotate_to_real_overlap(const WaveFunction& a,
                                                       const WaveFunction& b) {
    const complexd overlap = inner_product(b.f, a.f);
    if (std::abs(overlap) <= 1e-12) {
        throw Error(errc::vanishing_overlap,
                    "rotate_to_real_overlap: |<B|A>| <= 1e-12, phase convention undefined");
    }
    double phi = -std::arg(overlap);
    if (phi <= -3.14159265358979323846) phi = 3.14159265358979323846;  // keep phi in (-pi, pi]
    WaveFunction rotated = a;
    const complexd rot = std::polar(1.0, phi);
    for (complexd& v : rotated.f.values) v *= rot;
    return {std::move(rotated), phi};
}

double density_at(const WaveFunction& psi, double x) {
    const Grid& g = psi.grid();
    const double dx = g.dx();
    double pos = (x - g.x_min) / dx;
    if (pos < 0.0) pos = 0.0;
    std::size_t k = static_cast<std::size_t>(pos);
    if (k + 1 >= g.n) k = g.n - 2;
    const double t = (x - g.x(k)) / dx;
    const double d0 = std::norm(psi[k]);
    const double d1 = std::norm(psi[k + 1]);
    return (1.0 - t) * d0 + t * d1;
}

double mean_position(const WaveFunction& psi) {
    const Grid& g = psi.grid();
    double w = 0.0, m = 0.0;
    for (std::size_t k = 0; k < g.n; ++k) {
        const double d = std::norm(psi[k]);
        w += d;
        m += d * g.x(k);
    }
    return m / w;
}

double position_std(const WaveFunction& psi) {
    const Grid& g = psi.grid();
    const double mean = mean_position(psi);
    double w = 0.0, v = 0.0;
    for (std::size_t k = 0; k < g.n; ++k) {
        const double d = std::norm(psi[k]);
        const double u = g.x(k) - mean;
        w += d;
        v += d * u * u;
    }
    return std::sqrt(v / w);
}

}  // namespace qcausal
