#include "qcausal/causality.hpp"

#include <cmath>

namespace qcausal {

namespace {
constexpr double kPi = 3.14159265358979323846;
constexpr double kIndeterminateMargin = 1e-9;
}  // namespace

double classical_broadening(double s, double peak_density_a) {
    if (!(peak_density_a > 0.0)) {
        throw Error(errc::zero_density, "classical_broadening: peak density must be positive");
    }
    if (!(s > 0.0) || s > 1.0) {
        throw Error(errc::invalid_argument, "classical_broadening: s must lie in (0, 1]");
    }
    return s * s / peak_density_a;
}

double quantum_broadening(double gamma) {
    const double mag = std::abs(gamma);
    if (!(mag > 0.0)) {
        throw Error(errc::degenerate_curvature, "quantum_broadening: gamma must be nonzero");
    }
    return std::sqrt(kPi / (2.0 * mag));
}

double ratio_check(double delta_q, double delta_c, double s) {
    return delta_q * s / delta_c - 1.0;
}

InequalityOutcome causality_inequalities(double peak_density_psi, double delta_x_classical,
                                         double delta_x_quantum, double joint_prob_lower_bound) {
    InequalityOutcome out;
    out.lhs_eq13 = peak_density_psi * delta_x_classical;
    out.lhs_eq14 = peak_density_psi * delta_x_quantum;
    out.violated_eq13 = out.lhs_eq13 < joint_prob_lower_bound;
    out.violated_eq14 = out.lhs_eq14 < 1.0;
    out.indeterminate_eq13 = std::abs(out.lhs_eq13 - joint_prob_lower_bound) < kIndeterminateMargin;
    out.indeterminate_eq14 = std::abs(out.lhs_eq14 - 1.0) < kIndeterminateMargin;
    return out;
}

AnalysisOutcome analyze_detailed(const WaveFunction& a, const WaveFunction& b,
                                 const AnalysisOptions& opts) {
    AnalysisOutcome out;

    auto [rotated, phi] = rotate_to_real_overlap(a, b);
    out.rotated_a = std::move(rotated);
    out.overlap_rotation_phi = phi;

    SuperpositionResult sup = superpose_equal(out.rotated_a, b);
    out.s = sup.s;
    out.p_a = sup.p_a;
    out.p_b = sup.p_b;
    out.psi = std::move(sup.psi);
    out.symmetry_residual = symmetry_residual(out.rotated_a, b);

    out.profile = phase_difference(out.rotated_a, b, opts.floor, opts.hbar);

    std::vector<StationaryPoint> points;
    try {
        points = find_stationary_points(out.profile);
    } catch (const Error& e) {
        if (e.code() == errc::no_stationary_point) {
            out.status = "no_stationary_point";
            return out;
        }
        throw;
    }
    if (points.size() != 1) {
        out.status = "multiple_stationary_points";
        return out;
    }
    const StationaryPoint& pt = points.front();

    CausalityReport rep;
    rep.s = out.s;
    rep.p_a = out.p_a;
    rep.p_b = out.p_b;
    rep.joint_prob_lower_bound = out.s;
    rep.mu = pt.mu;
    rep.gamma = pt.gamma_magnitude();
    rep.gamma_sign = pt.gamma_sign();
    rep.peak_density_a = density_at(out.rotated_a, pt.mu);
    rep.peak_density_psi = density_at(out.psi, pt.mu);
    rep.fresnel_estimate = fresnel_overlap_estimate(out.rotated_a, pt, out.profile);
    rep.delta_x_classical = classical_broadening(rep.s, rep.peak_density_a);
    rep.delta_x_quantum = quantum_broadening(pt.gamma);
    rep.ratio_check = ratio_check(rep.delta_x_quantum, rep.delta_x_classical, rep.s);

    const InequalityOutcome ineq = causality_inequalities(
        rep.peak_density_psi, rep.delta_x_classical, rep.delta_x_quantum, rep.joint_prob_lower_bound);
    rep.lhs_eq13 = ineq.lhs_eq13;
    rep.lhs_eq14 = ineq.lhs_eq14;
    rep.violated_eq13 = ineq.violated_eq13;
    rep.violated_eq14 = ineq.violated_eq14;
    rep.indeterminate_eq13 = ineq.indeterminate_eq13;
    rep.indeterminate_eq14 = ineq.indeterminate_eq14;

    rep.symmetry_residual = out.symmetry_residual;
    rep.validity_regime = in_validity_regime(out.rotated_a, pt.gamma, opts.validity_factor);
    rep.overlap_rotation_phi = out.overlap_rotation_phi;

    out.report = rep;
    out.status = "ok";
    return out;
}

CausalityReport analyze(const WaveFunction& a, const WaveFunction& b,
                        const AnalysisOptions& opts) {
    AnalysisOutcome out = analyze_detailed(a, b, opts);
    if (out.status == "no_stationary_point") {
        throw Error(errc::no_stationary_point, "analyze: phase difference has no stationary point");
    }
    if (out.status == "multiple_stationary_points") {
        throw Error(errc::multiple_stationary_points,
                    "analyze: more than one stationary point; single-point analysis not applicable");
    }
    return *out.report;
}

}  // namespace qcausal
