#pragma once

#include "qcausal/stationary_phase.hpp"

namespace qcausal {

/// Equal superposition of two states with a real overlap, together with
/// the measured overlap and detection probabilities. P_A + P_B - 1 equals
/// the overlap within 1e-8.
struct SuperpositionResult {
    WaveFunction psi;
    double s = 0.0;    // <B|A>, real by precondition
    double p_a = 0.0;  // |<A|psi>|^2
    double p_b = 0.0;  // |<B|psi>|^2
};

/// Result of the cosine-weighted overlap integral, together with the
/// residual of the unconditional quadrature identity
/// Re integral conj(<x|A>) <x|B> dx = Re <A|B>, which holds for any pair.
struct ResidueResult {
    double value = 0.0;
    double identity_residual = 0.0;
};

/// psi = (A + B) / sqrt(2 (1 + s)). Requires the overlap to be real
/// (rotate first) and s > -1 + 1e-6.
SuperpositionResult superpose_equal(const WaveFunction& a, const WaveFunction& b);

/// P_A + P_B - 1 - s; below 1e-8 in magnitude for any valid result.
double overlap_identity_residual(const SuperpositionResult& res);

/// Closed-form fringe pattern (1 + cos(S/hbar)) |<x|A>|^2 / (1 + s) on the
/// mask of `s_profile` (zero outside). Equals the direct superposition
/// density wherever the two magnitudes agree pointwise.
std::vector<double> interference_pattern(const WaveFunction& a, const WaveFunction& b,
                                         const PhaseProfile& s_profile);

/// integral cos(S/hbar) |<x|A>|^2 dx over the mask. Requires the density
/// outside the mask to be below 1e-8 of the total.
ResidueResult residue_integral(const WaveFunction& a, const WaveFunction& b,
                               const PhaseProfile& s_profile);

/// max_k ||A_k| - |B_k|| / max_k |A_k| -- dimensionless magnitude-symmetry
/// measure; exactly zero for conjugate pairs.
double symmetry_residual(const WaveFunction& a, const WaveFunction& b);

}  // namespace qcausal
