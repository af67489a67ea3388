// Indicator-dilution forward model: gamma-variate bolus, box-shaped IRF,
// and their discrete convolution. The phantom generator and the NLR
// fitter both go through model_tac, so the fit inverts exactly the model
// that produced the data.
#pragma once

#include "ctperf/types.hpp"

namespace ctp {

/// HU enhancement amplitude per unit CBV (ml/100g): brain density
/// 1.04 g/ml times 1/100, hematocrit/density correction 1.0.
inline constexpr double kDefaultHuPerCbv = 1.04 * 0.01;

struct TimeGrid {
    int nt = 0;
    double dt = 0.0;
    double t0 = 0.0;
};

/// Peak-normalized gamma-variate bolus: the maximum is exactly
/// amplitude_hu, reached at onset_s + shape * scale_s.
struct GammaVariateParams {
    double amplitude_hu = 300.0;
    double onset_s = 3.0;
    double shape = 3.0;    // alpha
    double scale_s = 1.5;  // beta
    /// Optional recirculation bump: a copy delayed by 8 s with doubled
    /// scale, scaled by this fraction. 0 disables it.
    double recirculation_fraction = 0.0;

    void validate() const;
};

/// Sample the gamma-variate on the grid. 0 for t <= onset.
Curve gamma_variate(const GammaVariateParams& params, const TimeGrid& grid);

/// Unit-area box IRF on the lag axis (t0 = 0), discretized by fractional
/// sample coverage: sample m holds (1/mtt) * |[m*dt,(m+1)*dt) ∩
/// [delay, delay+mtt)| / dt, so sum*dt == 1 exactly whenever the box fits
/// inside the grid and the model is continuous in (mtt, delay).
Curve unit_box_irf(double mtt_s, double delay_s, const TimeGrid& grid);

/// Box IRF with area k*cbv (height k*cbv/mtt). Throws if mtt <= 0.
Curve box_irf(double cbv, double mtt_s, double delay_s, const TimeGrid& grid,
              double k = kDefaultHuPerCbv);

/// Causal discrete convolution (a ⊛ b)[n]*dt truncated to a's length.
/// Throws if the grids (dt) differ.
Curve convolve_causal(const Curve& a, const Curve& b);

/// aif ⊛ unit_box_irf(mtt, delay) * dt, computed in O(nt) via fractional
/// prefix sums. Identical (up to rounding) to convolve_causal against
/// unit_box_irf; this is the fitter's basis curve.
Curve model_tac(const Curve& aif, double mtt_s, double delay_s);

/// Tissue enhancement curve for a voxel with the given hemodynamics:
/// (aif ⊛ box_irf(cbv, mtt, delay))*dt. Throws on grid mismatch.
Curve synth_tac(const Curve& aif, double cbv, double mtt_s, double delay_s,
                double k = kDefaultHuPerCbv);

}  // namespace ctp
