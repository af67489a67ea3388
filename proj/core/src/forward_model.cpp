#include "ctperf/forward_model.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace ctp {

void GammaVariateParams::validate() const {
    if (!(amplitude_hu > 0.0)) throw std::invalid_argument("gamma variate: amplitude must be > 0");
    if (!(shape > 0.0)) throw std::invalid_argument("gamma variate: shape must be > 0");
    if (!(scale_s > 0.0)) throw std::invalid_argument("gamma variate: scale must be > 0");
    if (recirculation_fraction < 0.0 || recirculation_fraction >= 1.0)
        throw std::invalid_argument("gamma variate: recirculation_fraction must be in [0,1)");
}

namespace {

double gamma_value(double t_rel, double shape, double scale) {
    if (t_rel <= 0.0) return 0.0;
    const double x = t_rel / (shape * scale);
    return std::pow(x, shape) * std::exp(shape - t_rel / scale);
}

}  // namespace

Curve gamma_variate(const GammaVariateParams& params, const TimeGrid& grid) {
    params.validate();
    if (grid.nt < 2 || grid.dt <= 0.0) throw std::invalid_argument("gamma variate: bad grid");
    Curve c;
    c.dt = grid.dt;
    c.t0 = grid.t0;
    c.samples.resize(grid.nt);
    for (int i = 0; i < grid.nt; ++i) {
        const double t = grid.t0 + i * grid.dt;
        double v = gamma_value(t - params.onset_s, params.shape, params.scale_s);
        if (params.recirculation_fraction > 0.0) {
            v += params.recirculation_fraction *
                 gamma_value(t - params.onset_s - 8.0, params.shape, 2.0 * params.scale_s);
        }
        c.samples[i] = params.amplitude_hu * v;
    }
    return c;
}

Curve unit_box_irf(double mtt_s, double delay_s, const TimeGrid& grid) {
    if (!(mtt_s > 0.0)) throw std::invalid_argument("box IRF: mtt must be > 0");
    if (delay_s < 0.0) throw std::invalid_argument("box IRF: delay must be >= 0");
    if (grid.nt < 2 || grid.dt <= 0.0) throw std::invalid_argument("box IRF: bad grid");
    Curve c;
    c.dt = grid.dt;
    c.t0 = 0.0;
    c.samples.resize(grid.nt);
    const double u0 = delay_s / grid.dt;
    const double u1 = (delay_s + mtt_s) / grid.dt;
    for (int m = 0; m < grid.nt; ++m) {
        const double cover = std::min<double>(m + 1, u1) - std::max<double>(m, u0);
        c.samples[m] = std::max(cover, 0.0) / mtt_s;
    }
    return c;
}

Curve box_irf(double cbv, double mtt_s, double delay_s, const TimeGrid& grid, double k) {
    if (cbv < 0.0) throw std::invalid_argument("box IRF: cbv must be >= 0");
    Curve c = unit_box_irf(mtt_s, delay_s, grid);
    const double a = k * cbv;
    for (double& v : c.samples) v *= a;
    return c;
}

Curve convolve_causal(const Curve& a, const Curve& b) {
    a.validate();
    b.validate();
    if (std::abs(a.dt - b.dt) > 1e-12 * std::max(a.dt, b.dt))
        throw std::invalid_argument("convolve_causal: dt mismatch");
    Curve out;
    out.dt = a.dt;
    out.t0 = a.t0;
    const int n = a.size();
    const int nb = b.size();
    out.samples.assign(n, 0.0);
    for (int i = 0; i < n; ++i) {
        double acc = 0.0;
        const int mmax = std::min(i, nb - 1);
        for (int m = 0; m <= mmax; ++m) acc += a.samples[i - m] * b.samples[m];
        out.samples[i] = acc * a.dt;
    }
    return out;
}

Curve model_tac(const Curve& aif, double mtt_s, double delay_s) {
    if (!(mtt_s > 0.0)) throw std::invalid_argument("model_tac: mtt must be > 0");
    if (delay_s < 0.0) throw std::invalid_argument("model_tac: delay must be >= 0");
    aif.validate();
    const int n = aif.size();
    const double dt = aif.dt;

    // Prefix sums with fractional tail: W(x) = sum_m clamp(x-m,0,1)*aif[m].
    std::vector<double> prefix(n + 1, 0.0);
    for (int i = 0; i < n; ++i) prefix[i + 1] = prefix[i] + aif.samples[i];
    const auto W = [&](double x) -> double {
        if (x <= 0.0) return 0.0;
        if (x >= n) return prefix[n];
        const int j = static_cast<int>(x);
        return prefix[j] + (x - j) * aif.samples[j];
    };

    const double u0 = delay_s / dt;
    const double u1 = (delay_s + mtt_s) / dt;
    Curve out;
    out.dt = dt;
    out.t0 = aif.t0;
    out.samples.resize(n);
    const double scale = dt / mtt_s;
    for (int i = 0; i < n; ++i)
        out.samples[i] = scale * (W(i + 1 - u0) - W(i + 1 - u1));
    return out;
}

Curve synth_tac(const Curve& aif, double cbv, double mtt_s, double delay_s, double k) {
    TimeGrid grid{aif.size(), aif.dt, 0.0};
    if (cbv == 0.0) {
        Curve out;
        out.dt = aif.dt;
        out.t0 = aif.t0;
        out.samples.assign(aif.samples.size(), 0.0);
        return out;
    }
    return convolve_causal(aif, box_irf(cbv, mtt_s, delay_s, grid, k));
}

}  // namespace ctp
