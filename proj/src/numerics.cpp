#include "qcausal/numerics.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>

namespace qcausal {

namespace {

constexpr double kPi = 3.14159265358979323846;

void require_same_grid(const SampledFunction& f, const SampledFunction& g) {
    if (f.grid != g.grid) {
        throw Error(errc::grid_mismatch, "operands live on different grids");
    }
}

// FFTW plan creation is not thread-safe; execution through the new-array
// interface is. Plans are cached per size and created with FFTW_UNALIGNED
// so they can run on any std::vector storage.
class FftPlans {
  public:
    static FftPlans& instance() {
        static FftPlans plans;
        return plans;
    }

    void forward(std::size_t n, fftw_complex* in, fftw_complex* out) {
        fftw_execute_dft(get(n, FFTW_FORWARD), in, out);
    }

    void backward(std::size_t n, fftw_complex* in, fftw_complex* out) {
        fftw_execute_dft(get(n, FFTW_BACKWARD), in, out);
    }

  private:
    fftw_plan get(std::size_t n, int sign) {
        std::lock_guard<std::mutex> lock(mutex_);
        auto key = std::make_pair(n, sign);
        auto it = cache_.find(key);
        if (it != cache_.end()) return it->second;
        std::vector<complexd> scratch(n);
        auto* buf = reinterpret_cast<fftw_complex*>(scratch.data());
        fftw_plan plan = fftw_plan_dft_1d(static_cast<int>(n), buf, buf, sign,
                                          FFTW_ESTIMATE | FFTW_UNALIGNED);
        cache_.emplace(key, plan);
        return plan;
    }

    std::mutex mutex_;
    std::map<std::pair<std::size_t, int>, fftw_plan> cache_;
};

}  // namespace

Grid make_grid(double x_min, double x_max, std::size_t n) {
    if (!(x_min < x_max)) {
        throw Error(errc::invalid_bounds, "make_grid: x_min must be less than x_max");
    }
    if (n < 16) {
        throw Error(errc::invalid_bounds, "make_grid: need at least 16 points");
    }
    return Grid{x_min, x_max, n};
}

complexd integrate(const SampledFunction& f) {
    complexd sum{0.0, 0.0};
    for (const complexd& v : f.values) sum += v;
    return sum * f.grid.dx();
}

complexd inner_product(const SampledFunction& f, const SampledFunction& g) {
    require_same_grid(f, g);
    complexd sum{0.0, 0.0};
    for (std::size_t k = 0; k < f.values.size(); ++k) {
        sum += std::conj(f.values[k]) * g.values[k];
    }
    return sum * f.grid.dx();
}

double norm(const SampledFunction& f) {
    double sum = 0.0;
    for (const complexd& v : f.values) sum += std::norm(v);
    return std::sqrt(sum * f.grid.dx());
}

namespace {

// Signed frequency index for DFT bin j: 0..n-1 -> -floor(n/2)..ceil(n/2)-1,
// arranged so the output momentum axis ascends.
std::size_t half_point(std::size_t n) { return n / 2; }

}  // namespace

SampledFunction to_momentum(const SampledFunction& f, double hbar) {
    const std::size_t n = f.size();
    const double dx = f.grid.dx();
    const double dp = 2.0 * kPi * hbar / (static_cast<double>(n) * dx);
    const std::size_t h = half_point(n);

    std::vector<complexd> work(f.values);
    auto* buf = reinterpret_cast<fftw_complex*>(work.data());
    FftPlans::instance().forward(n, buf, buf);

    const double p_min = -static_cast<double>(h) * dp;
    Grid dual{p_min, p_min + static_cast<double>(n) * dp, n};

    // phi(p_m) = dx/sqrt(2 pi hbar) * exp(-i p_m x_min / hbar) * F_j(m),
    // where F is the unnormalised forward DFT and j(m) = m mod n.
    const double scale = dx / std::sqrt(2.0 * kPi * hbar);
    SampledFunction out{dual, std::vector<complexd>(n)};
    for (std::size_t k = 0; k < n; ++k) {
        const long m = static_cast<long>(k) - static_cast<long>(h);
        const std::size_t j = static_cast<std::size_t>(m < 0 ? m + static_cast<long>(n) : m);
        const double p = static_cast<double>(m) * dp;
        const double phase = -p * f.grid.x_min / hbar;
        out.values[k] = scale * std::polar(1.0, phase) * work[j];
    }
    return out;
}

SampledFunction from_momentum(const SampledFunction& phi, const Grid& position_grid, double hbar) {
    const std::size_t n = phi.size();
    if (position_grid.n != n) {
        throw Error(errc::grid_mismatch, "from_momentum: grid size mismatch");
    }
    const double dx = position_grid.dx();
    const double dp = 2.0 * kPi * hbar / (static_cast<double>(n) * dx);
    const std::size_t h = half_point(n);

    // Undo the shift and phase applied by to_momentum, then backward DFT.
    std::vector<complexd> work(n);
    const double scale = std::sqrt(2.0 * kPi * hbar) / (dx * static_cast<double>(n));
    for (std::size_t k = 0; k < n; ++k) {
        const long m = static_cast<long>(k) - static_cast<long>(h);
        const std::size_t j = static_cast<std::size_t>(m < 0 ? m + static_cast<long>(n) : m);
        const double p = static_cast<double>(m) * dp;
        const double phase = p * position_grid.x_min / hbar;
        work[j] = scale * std::polar(1.0, phase) * phi.values[k];
    }
    auto* buf = reinterpret_cast<fftw_complex*>(work.data());
    FftPlans::instance().backward(n, buf, buf);
    return SampledFunction{position_grid, std::move(work)};
}

std::vector<double> fd_weights(double z, std::span<const double> nodes, int m) {
    // Fornberg's recurrence for finite-difference weights on arbitrary nodes.
    const std::size_t nn = nodes.size();
    std::vector<std::vector<double>> c(nn, std::vector<double>(static_cast<std::size_t>(m) + 1, 0.0));
    double c1 = 1.0;
    double c4 = nodes[0] - z;
    c[0][0] = 1.0;
    for (std::size_t i = 1; i < nn; ++i) {
        const int mn = std::min<int>(static_cast<int>(i), m);
        double c2 = 1.0;
        const double c5 = c4;
        c4 = nodes[i] - z;
        for (std::size_t j = 0; j < i; ++j) {
            const double c3 = nodes[i] - nodes[j];
            c2 *= c3;
            if (j == i - 1) {
                for (int k = mn; k >= 1; --k) {
                    c[i][k] = c1 * (k * c[i - 1][k - 1] - c5 * c[i - 1][k]) / c2;
                }
                c[i][0] = -c1 * c5 * c[i - 1][0] / c2;
            }
            for (int k = mn; k >= 1; --k) {
                c[j][k] = (c4 * c[j][k] - k * c[j][k - 1]) / c3;
            }
            c[j][0] = c4 * c[j][0] / c3;
        }
        c1 = c2;
    }
    std::vector<double> w(nn);
    for (std::size_t i = 0; i < nn; ++i) w[i] = c[i][static_cast<std::size_t>(m)];
    return w;
}

Derivative derivative(std::span<const double> f, double dx, int order) {
    if (order != 1 && order != 2) {
        throw Error(errc::invalid_argument, "derivative: order must be 1 or 2");
    }
    const std::size_t n = f.size();
    if (n < 7) {
        throw Error(errc::region_too_small, "derivative: need at least 7 contiguous points");
    }

    // Window sizes giving 4th-order accuracy: 5 symmetric nodes for the
    // interior (both orders), 5 one-sided nodes near the ends for order 1
    // and 6 for order 2.
    const std::size_t edge_window = (order == 1) ? 5 : 6;

    Derivative out;
    out.values.assign(n, 0.0);
    out.one_sided.assign(n, 0);

    auto apply = [&](std::size_t i, std::size_t lo, std::size_t count) {
        std::vector<double> nodes(count);
        for (std::size_t j = 0; j < count; ++j) nodes[j] = static_cast<double>(lo + j);
        const std::vector<double> w = fd_weights(static_cast<double>(i), nodes, order);
        double acc = 0.0;
        for (std::size_t j = 0; j < count; ++j) acc += w[j] * f[lo + j];
        out.values[i] = acc / std::pow(dx, order);
    };

    for (std::size_t i = 0; i < n; ++i) {
        if (i >= 2 && i + 2 < n) {
            apply(i, i - 2, 5);
        } else {
            const std::size_t lo = (i < 2) ? 0 : n - edge_window;
            apply(i, lo, edge_window);
            out.one_sided[i] = 1;
        }
    }
    return out;
}

double principal_angle(double theta) {
    const double two_pi = 2.0 * kPi;
    double p = theta - two_pi * std::ceil((theta - kPi) / two_pi);
    if (p <= -kPi) p += two_pi;  // guard against rounding at the branch cut
    return p;
}

UnwrapResult unwrap_phase(std::span<const double> theta, std::span<const std::uint8_t> mask) {
    if (theta.size() != mask.size()) {
        throw Error(errc::invalid_argument, "unwrap_phase: mask length mismatch");
    }
    const std::size_t n = theta.size();

    std::size_t lo = n, hi = n;
    for (std::size_t k = 0; k < n; ++k) {
        if (mask[k]) {
            lo = k;
            break;
        }
    }
    if (lo == n) throw Error(errc::empty_mask, "unwrap_phase: mask selects no points");
    hi = lo;
    while (hi < n && mask[hi]) ++hi;
    for (std::size_t k = hi; k < n; ++k) {
        if (mask[k]) {
            throw Error(errc::non_contiguous_mask, "unwrap_phase: mask has more than one region");
        }
    }

    const double two_pi = 2.0 * kPi;
    UnwrapResult out;
    out.values.assign(theta.begin(), theta.end());

    // Accumulate integer 2*pi offsets so that adjacent differences stay
    // below pi, then re-anchor the branch at the region centre.
    std::vector<long> offset(hi - lo, 0);
    double max_jump = 0.0;
    for (std::size_t k = lo + 1; k < hi; ++k) {
        const double d = theta[k] - theta[k - 1];
        const long cycles = std::lround(d / two_pi);
        offset[k - lo] = offset[k - lo - 1] - cycles;
        max_jump = std::max(max_jump, std::abs(d - two_pi * static_cast<double>(cycles)));
    }

    const std::size_t centre = lo + (hi - lo) / 2;
    const double anchored = theta[centre] + two_pi * static_cast<double>(offset[centre - lo]);
    const long shift = std::lround((anchored - principal_angle(anchored)) / two_pi);

    for (std::size_t k = lo; k < hi; ++k) {
        out.values[k] = theta[k] + two_pi * static_cast<double>(offset[k - lo] - shift);
    }
    out.max_raw_jump = max_jump;
    out.aliasing_warning = max_jump > kPi / 2.0;
    return out;
}

}  // namespace qcausal
