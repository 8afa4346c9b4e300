#include "qcausal/interference.hpp"

#include <algorithm>
#include <cmath>

namespace qcausal {

namespace {

double real_overlap_or_throw(const WaveFunction& a, const WaveFunction& b, const char* who) {
    const complexd overlap = inner_product(b.f, a.f);
    if (std::abs(overlap.imag()) > 1e-10 * std::max(1.0, std::abs(overlap))) {
        throw Error(errc::non_real_overlap,
                    std::string(who) + ": overlap is not real; apply rotate_to_real_overlap first");
    }
    return overlap.real();
}

}  // namespace

SuperpositionResult superpose_equal(const WaveFunction& a, const WaveFunction& b) {
    if (a.grid() != b.grid()) {
        throw Error(errc::grid_mismatch, "superpose_equal: states live on different grids");
    }
    const double s = real_overlap_or_throw(a, b, "superpose_equal");
    if (s <= -1.0 + 1e-6) {
        throw Error(errc::antiparallel_degenerate,
                    "superpose_equal: s <= -1 + 1e-6, normalization diverges");
    }

    const double scale = 1.0 / std::sqrt(2.0 * (1.0 + s));
    SampledFunction sum{a.grid(), std::vector<complexd>(a.size())};
    for (std::size_t k = 0; k < a.size(); ++k) {
        sum.values[k] = (a[k] + b[k]) * scale;
    }
    WaveFunction psi{std::move(sum)};

    SuperpositionResult res;
    res.s = s;
    res.p_a = std::norm(inner_product(a.f, psi.f));
    res.p_b = std::norm(inner_product(b.f, psi.f));
    res.psi = std::move(psi);
    return res;
}

double overlap_identity_residual(const SuperpositionResult& res) {
    return res.p_a + res.p_b - 1.0 - res.s;
}

std::vector<double> interference_pattern(const WaveFunction& a, const WaveFunction& b,
                                         const PhaseProfile& s_profile) {
    if (s_profile.mask_size() == 0) {
        throw Error(errc::empty_mask, "interference_pattern: empty mask");
    }
    const double s = real_overlap_or_throw(a, b, "interference_pattern");

    std::vector<double> pattern(a.size(), 0.0);
    const double norm_factor = 1.0 / (1.0 + s);
    for (std::size_t k = s_profile.mask_lo; k < s_profile.mask_hi; ++k) {
        pattern[k] = norm_factor * (1.0 + std::cos(s_profile.s_over_hbar[k])) * std::norm(a[k]);
    }
    return pattern;
}

ResidueResult residue_integral(const WaveFunction& a, const WaveFunction& b,
                               const PhaseProfile& s_profile) {
    double inside = 0.0, total = 0.0;
    for (std::size_t k = 0; k < a.size(); ++k) {
        const double d = std::norm(a[k]);
        total += d;
        if (s_profile.in_mask(k)) inside += d;
    }
    if (total - inside > 1e-8 * total) {
        throw Error(errc::support_escapes_mask,
                    "residue_integral: more than 1e-8 of the density lies outside the mask");
    }

    double acc = 0.0;
    for (std::size_t k = s_profile.mask_lo; k < s_profile.mask_hi; ++k) {
        acc += std::cos(s_profile.s_over_hbar[k]) * std::norm(a[k]);
    }

    ResidueResult res;
    res.value = acc * a.grid().dx();

    SampledFunction cross{a.grid(), std::vector<complexd>(a.size())};
    for (std::size_t k = 0; k < a.size(); ++k) cross.values[k] = std::conj(a[k]) * b[k];
    res.identity_residual = integrate(cross).real() - inner_product(a.f, b.f).real();
    return res;
}

double symmetry_residual(const WaveFunction& a, const WaveFunction& b) {
    if (a.grid() != b.grid()) {
        throw Error(errc::grid_mismatch, "symmetry_residual: states live on different grids");
    }
    double peak = 0.0, worst = 0.0;
    for (std::size_t k = 0; k < a.size(); ++k) {
        const double ma = std::abs(a[k]);
        peak = std::max(peak, ma);
        worst = std::max(worst, std::abs(ma - std::abs(b[k])));
    }
    return worst / peak;
}

}  // namespace qcausal
