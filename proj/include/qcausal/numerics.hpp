#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "qcausal/errors.hpp"

namespace qcausal {

using complexd = std::complex<double>;

/// Uniform periodic 1D grid: n points x_k = x_min + k*dx with
/// dx = (x_max - x_min)/n. There is no sample at x_max; the interval is
/// treated as one period, which makes rectangle quadrature and the
/// discrete Fourier transform mutually consistent.
struct Grid {
    double x_min = 0.0;
    double x_max = 0.0;
    std::size_t n = 0;

    double dx() const { return (x_max - x_min) / static_cast<double>(n); }
    double x(std::size_t k) const { return x_min + static_cast<double>(k) * dx(); }
    double length() const { return x_max - x_min; }

    friend bool operator==(const Grid& a, const Grid& b) {
        return a.x_min == b.x_min && a.x_max == b.x_max && a.n == b.n;
    }
    friend bool operator!=(const Grid& a, const Grid& b) { return !(a == b); }
};

/// Complex samples over a Grid. Values are owned; the grid is stored by
/// value (it is three scalars).
struct SampledFunction {
    Grid grid;
    std::vector<complexd> values;

    std::size_t size() const { return values.size(); }
};

Grid make_grid(double x_min, double x_max, std::size_t n);

/// Rectangle-rule integral dx * sum_k f_k. On the periodic grid this is
/// spectrally accurate for smooth integrands that decay to the grid floor
/// at both ends. Summation is a plain left-to-right accumulation so that
/// integrate(conj(f)*g) reproduces inner_product(f, g) bit-exactly.
complexd integrate(const SampledFunction& f);

/// dx * sum_k conj(f_k) * g_k. Conjugate-symmetric.
complexd inner_product(const SampledFunction& f, const SampledFunction& g);

/// L2 norm sqrt(<f|f>).
double norm(const SampledFunction& f);

/// Unitary transform to the momentum representation,
///   phi(p) = (2*pi*hbar)^(-1/2) * integral psi(x) exp(-i p x / hbar) dx,
/// discretised on the dual grid with spacing dp = 2*pi*hbar/(n*dx) and
/// points ordered by ascending p (p = m*dp for m = -floor(n/2) .. ).
/// Norm-preserving to machine precision.
SampledFunction to_momentum(const SampledFunction& f, double hbar);

/// Inverse of to_momentum back onto `position_grid`.
SampledFunction from_momentum(const SampledFunction& phi, const Grid& position_grid, double hbar);

/// Finite-difference derivative of a real sample sequence over a uniform
/// spacing. Interior points use the 4th-order central stencil; the two
/// points at each end fall back to one-sided stencils of the same formal
/// order (larger error constant) and are flagged.
struct Derivative {
    std::vector<double> values;
    std::vector<std::uint8_t> one_sided;  // 1 where a one-sided stencil was used
};

Derivative derivative(std::span<const double> f, double dx, int order);

/// Finite-difference weights for the m-th derivative at z over the given
/// nodes (Fornberg recurrence). Exposed for the local stencil machinery
/// and its tests.
std::vector<double> fd_weights(double z, std::span<const double> nodes, int m);

struct UnwrapResult {
    std::vector<double> values;    // full length; untouched outside the mask
    bool aliasing_warning = false; // some raw adjacent jump exceeded pi/2
    double max_raw_jump = 0.0;     // largest wrapped adjacent jump on the mask
};

/// 1D phase unwrap on the single contiguous region where mask != 0.
/// Adjacent samples of the result differ by less than pi and the sample at
/// the region's centre is anchored to its principal value in (-pi, pi].
/// The output differs from the input by integer multiples of 2*pi.
UnwrapResult unwrap_phase(std::span<const double> theta, std::span<const std::uint8_t> mask);

/// Principal value of an angle, reduced to (-pi, pi].
double principal_angle(double theta);

}  // namespace qcausal
