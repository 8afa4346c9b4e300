#pragma once

#include <stdexcept>
#include <string>

namespace qcausal {

/// Machine-readable failure categories. The CLI maps these to exit codes:
/// analysis-not-applicable conditions (no or multiple stationary points)
/// exit with 2, everything else with 1.
enum class errc {
    invalid_argument,
    invalid_bounds,
    grid_mismatch,
    region_too_small,
    non_contiguous_mask,
    empty_mask,
    box_too_small,
    resolution_too_coarse,
    zero_chirp,
    box_overflow,
    vanishing_overlap,
    non_real_overlap,
    antiparallel_degenerate,
    support_escapes_mask,
    no_stationary_point,
    multiple_stationary_points,
    degenerate_curvature,
    under_resolved,
    mu_outside_mask,
    zero_density,
    config_parse,
    config_validation,
    io_failure,
};

class Error : public std::runtime_error {
  public:
    Error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}

    errc code() const noexcept { return code_; }

  private:
    errc code_;
};

inline const char* errc_name(errc c) {
    switch (c) {
        case errc::invalid_argument: return "invalid_argument";
        case errc::invalid_bounds: return "invalid_bounds";
        case errc::grid_mismatch: return "grid_mismatch";
        case errc::region_too_small: return "region_too_small";
        case errc::non_contiguous_mask: return "non_contiguous_mask";
        case errc::empty_mask: return "empty_mask";
        case errc::box_too_small: return "box_too_small";
        case errc::resolution_too_coarse: return "resolution_too_coarse";
        case errc::zero_chirp: return "zero_chirp";
        case errc::box_overflow: return "box_overflow";
        case errc::vanishing_overlap: return "vanishing_overlap";
        case errc::non_real_overlap: return "non_real_overlap";
        case errc::antiparallel_degenerate: return "antiparallel_degenerate";
        case errc::support_escapes_mask: return "support_escapes_mask";
        case errc::no_stationary_point: return "no_stationary_point";
        case errc::multiple_stationary_points: return "multiple_stationary_points";
        case errc::degenerate_curvature: return "degenerate_curvature";
        case errc::under_resolved: return "under_resolved";
        case errc::mu_outside_mask: return "mu_outside_mask";
        case errc::zero_density: return "zero_density";
        case errc::config_parse: return "config_parse";
        case errc::config_validation: return "config_validation";
        case errc::io_failure: return "io_failure";
    }
    return "unknown";
}

}  // namespace qcausal
