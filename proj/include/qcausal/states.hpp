#pragma once

#include <utility>

#include "qcausal/numerics.hpp"

namespace qcausal {

/// Analytic parameters of a (optionally chirped) Gaussian wavepacket
///   psi(x) = N exp(-(x-x0)^2/(4 sigma^2)
///            + i (chirp (x-x0)^2 + p0 (x-x0)/hbar + global_phase)),
/// with N fixed by unit norm on the grid.
struct GaussianSpec {
    double x0 = 0.0;
    double p0 = 0.0;
    double sigma = 1.0;
    double chirp = 0.0;
    double global_phase = 0.0;
};

/// Normalised position-representation state on a grid. Constructors and
/// evolution keep the norm at 1 and require the amplitude at both box
/// boundaries to stay below 1e-8 of the peak.
struct WaveFunction {
    SampledFunction f;

    const Grid& grid() const { return f.grid; }
    std::size_t size() const { return f.size(); }
    const complexd& operator[](std::size_t k) const { return f.values[k]; }
};

struct ConjugatePair {
    WaveFunction a;
    WaveFunction b;
    double overlap = 0.0;       // <B|A>, real and positive by construction
    double rotation_phi = 0.0;  // global phase applied to A to realise that
};

WaveFunction gaussian(const GaussianSpec& spec, const Grid& grid, double hbar = 1.0);

/// Wraps arbitrary samples as a state: normalises and enforces the
/// boundary-decay invariant. Intended for synthetic fixtures.
WaveFunction from_samples(SampledFunction samples);

/// Builds the pair B = conj(A) from a chirped Gaussian, with A rotated by
/// a global phase so that <B|A> is real and positive. The two magnitudes
/// are equal sample by sample, exactly.
ConjugatePair conjugate_pair(double x0, double sigma, double chirp, const Grid& grid,
                             double hbar = 1.0);

/// Free-particle evolution: multiplies the momentum representation by
/// exp(-i p^2 t / (2 m hbar)).
WaveFunction free_evolve(const WaveFunction& psi, double mass, double t, double hbar = 1.0);

/// Returns A' = exp(i phi) A with phi in (-pi, pi] chosen so that <B|A'>
/// is real and positive.
std::pair<WaveFunction, double> rotate_to_real_overlap(const WaveFunction& a,
                                                       const WaveFunction& b);

/// Probability density |psi(x)|^2 at an arbitrary position, linearly
/// interpolated between the bracketing grid points.
double density_at(const WaveFunction& psi, double x);

/// Mean and standard deviation of position under |psi|^2.
double mean_position(const WaveFunction& psi);
double position_std(const WaveFunction& psi);

}  // namespace qcausal
