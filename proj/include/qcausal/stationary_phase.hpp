#pragma once

#include <vector>

#include "qcausal/states.hpp"

namespace qcausal {

/// Unwrapped phase difference S(x)/hbar between <x|B> and <x|A>, valid on
/// the single contiguous index range [mask_lo, mask_hi) where both
/// magnitudes exceed `floor` times their peaks. Values outside the mask
/// are zero and carry no meaning.
struct PhaseProfile {
    Grid grid;
    std::vector<double> s_over_hbar;
    std::size_t mask_lo = 0;
    std::size_t mask_hi = 0;  // half-open
    double hbar = 1.0;
    bool aliasing_warning = false;
    double max_raw_jump = 0.0;

    std::size_t mask_size() const { return mask_hi - mask_lo; }
    bool in_mask(std::size_t k) const { return k >= mask_lo && k < mask_hi; }
};

struct IndexRange {
    std::size_t lo = 0;
    std::size_t hi = 0;  // half-open, absolute grid indices
};

/// A zero of dS/dx with the local quadratic model fitted around it.
/// `gamma` is (1/(2 hbar)) d2S/dx2 at mu, signed as computed (negative for
/// a phase maximum). `s_mu_over_hbar` is the fitted phase at mu reduced to
/// its principal value in (-pi, pi].
struct StationaryPoint {
    double mu = 0.0;
    double gamma = 0.0;
    double s_mu_over_hbar = 0.0;
    IndexRange refinement_window;

    double gamma_magnitude() const { return gamma < 0.0 ? -gamma : gamma; }
    int gamma_sign() const { return gamma < 0.0 ? -1 : 1; }
};

struct FresnelReference {
    double numeric = 0.0;      // quadrature of cos(gamma u^2 - pi/4) over [-L, L]
    double closed_form = 0.0;  // sqrt(pi/gamma)
};

PhaseProfile phase_difference(const WaveFunction& a, const WaveFunction& b,
                              double floor = 1e-6, double hbar = 1.0);

/// Locates every sign change of the finite-difference dS/dx on the mask,
/// refines each by a quadratic least-squares fit of S/hbar over +-7
/// samples, and returns the points ordered by position. Throws
/// no_stationary_point when the derivative never changes sign and
/// degenerate_curvature when the fitted |gamma| falls below 1e-9/dx^2.
std::vector<StationaryPoint> find_stationary_points(const PhaseProfile& s);

/// Truncated Fresnel integral against its closed form. The quadrature
/// resolves at least 8 samples per fringe at the window edge (32 by
/// default); the truncation tail is bounded by 2/(gamma*L).
FresnelReference fresnel_reference(double gamma, double half_window);

/// Stationary-phase estimate of the overlap:
/// sqrt(pi/|gamma|) * |<x=mu|A>|^2 with the density linearly interpolated.
double fresnel_overlap_estimate(const WaveFunction& a, const StationaryPoint& pt,
                                const PhaseProfile& s);

/// Fringe-versus-envelope criterion for the quadratic-phase approximation:
/// sqrt(pi/|gamma|) <= position_std(a) / validity_factor.
bool in_validity_regime(const WaveFunction& a, double gamma, double validity_factor = 5.0);

}  // namespace qcausal
