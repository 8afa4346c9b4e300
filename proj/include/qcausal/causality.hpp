#pragma once

#include <optional>
#include <string>

#include "qcausal/interference.hpp"

namespace qcausal {

/// Everything the broadening/inequality analysis derives from one pair of
/// states. `gamma` is the curvature magnitude; its sign is kept separately
/// so downstream formulas can use it directly.
struct CausalityReport {
    double s = 0.0;
    double p_a = 0.0;
    double p_b = 0.0;
    double joint_prob_lower_bound = 0.0;  // = s, the constructive-interference bound
    double mu = 0.0;
    double gamma = 0.0;  // |gamma|
    int gamma_sign = 1;
    double peak_density_a = 0.0;    // |<mu|A>|^2
    double peak_density_psi = 0.0;  // |<mu|psi>|^2, from the direct superposition
    double delta_x_classical = 0.0;
    double delta_x_quantum = 0.0;
    double ratio_check = 0.0;  // delta_x_quantum * s / delta_x_classical - 1
    double fresnel_estimate = 0.0;
    double lhs_eq13 = 0.0;  // peak_density_psi * delta_x_classical, vs joint bound
    double lhs_eq14 = 0.0;  // peak_density_psi * delta_x_quantum, vs 1
    bool violated_eq13 = false;
    bool violated_eq14 = false;
    bool indeterminate_eq13 = false;  // margin below 1e-9, too close to call
    bool indeterminate_eq14 = false;
    double symmetry_residual = 0.0;
    bool validity_regime = false;
    double overlap_rotation_phi = 0.0;
};

struct InequalityOutcome {
    double lhs_eq13 = 0.0;
    double lhs_eq14 = 0.0;
    bool violated_eq13 = false;
    bool violated_eq14 = false;
    bool indeterminate_eq13 = false;
    bool indeterminate_eq14 = false;
};

struct AnalysisOptions {
    double hbar = 1.0;
    double floor = 1e-6;
    double validity_factor = 5.0;
};

/// s^2 / peak_density_A: the position spread a deterministic account needs
/// to reconcile a finite overlap with the density at the stationary point.
double classical_broadening(double s, double peak_density_a);

/// sqrt(pi / (2 |gamma|)): half-width of the central Fresnel zone, where
/// the phase stays within pi/4 of its stationary value.
double quantum_broadening(double gamma);

/// delta_q * s / delta_c - 1. Exactly zero when delta_q is the
/// overlap-ratio form s/density (pure algebra); when delta_q is the
/// Fresnel half-width sqrt(pi/(2|gamma|)) the stationary-phase relation
/// makes the value 1/sqrt(2) - 1, since the half-width is 1/sqrt(2) of
/// s/density.
double ratio_check(double delta_q, double delta_c, double s);

/// Strict comparisons, no epsilon slack; margins below 1e-9 are flagged
/// indeterminate rather than claimed as violations.
InequalityOutcome causality_inequalities(double peak_density_psi, double delta_x_classical,
                                         double delta_x_quantum, double joint_prob_lower_bound);

/// Full pipeline: rotate -> superpose -> phase profile -> stationary point
/// -> broadenings -> inequalities. Deterministic; requires exactly one
/// stationary point.
CausalityReport analyze(const WaveFunction& a, const WaveFunction& b,
                        const AnalysisOptions& opts = {});

/// Pipeline variant that does not throw on a missing or non-unique
/// stationary point: everything computed before the failure is retained
/// and `status` records the outcome ("ok", "no_stationary_point",
/// "multiple_stationary_points").
struct AnalysisOutcome {
    std::string status;
    std::optional<CausalityReport> report;       // set when status == "ok"
    double s = 0.0, p_a = 0.0, p_b = 0.0;        // always set
    double symmetry_residual = 0.0;              // always set
    double overlap_rotation_phi = 0.0;           // always set
    WaveFunction rotated_a;                      // A after overlap rotation
    WaveFunction psi;                            // direct superposition
    PhaseProfile profile;                        // unwrapped phase difference
};

AnalysisOutcome analyze_detailed(const WaveFunction& a, const WaveFunction& b,
                                 const AnalysisOptions& opts = {});

}  // namespace qcausal
