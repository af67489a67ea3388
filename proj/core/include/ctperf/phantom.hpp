// Synthetic CTP phantom: a stroke scene with known per-voxel
// hemodynamics, its noiseless/noisy time-series, and the matching
// ground-truth maps.
#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "ctperf/forward_model.hpp"
#include "ctperf/types.hpp"

namespace ctp {

/// Per-voxel ground-truth hemodynamics plus region labels.
struct TissueParamField {
    int nx = 0, ny = 0, nz = 0;
    double sx = 1.0, sy = 1.0, sz = 1.0;
    std::vector<float> cbv;    // ml/100g
    std::vector<float> mtt;    // s
    std::vector<float> delay;  // s
    std::vector<std::uint8_t> labels;

    std::size_t index(int x, int y, int z) const {
        return (static_cast<std::size_t>(z) * ny + y) * nx + x;
    }
    Label label_at(std::size_t i) const { return static_cast<Label>(labels[i]); }
    LabelField label_field() const;

    void validate() const;
};

struct AcquisitionConfig {
    int nt = 89;
    double dt = 0.5;  // s; defaults give the 44.5 s scan window
    double baseline_hu = 35.0;

    double duration_s() const { return nt * dt; }
    TimeGrid grid() const { return {nt, dt, 0.0}; }
    void validate() const;
};

struct NoiseMotionConfig {
    double noise_sigma_hu = 0.0;
    int max_shift_px = 0;
    /// Per-frame (dx,dy) integer shifts; empty means no motion. When
    /// non-empty it must have one entry per frame, all within
    /// max_shift_px.
    std::vector<std::pair<int, int>> shift_schedule;
    std::uint64_t rng_seed = 0;

    void validate() const;
};

/// Seeded per-frame schedule with frame 0 fixed at (0,0) and the rest
/// uniform in [-max_shift, max_shift]^2.
std::vector<std::pair<int, int>> make_random_shift_schedule(int nt, int max_shift,
                                                            std::uint64_t seed);

/// Elliptical brain of healthy tissue with a nested penumbra/core lesion,
/// 3-4 arterial clusters contralateral to the lesion and one venous
/// cluster. Class parameters are jittered per seed (within +/-20% of the
/// nominals cbv 4/3/1 ml/100g, mtt 4/8/10 s, delay 0.5/3/4 s) with the
/// severity ordering and a minimum penumbra TTP prolongation enforced
/// structurally. Requires nx, ny >= 32.
TissueParamField builtin_stroke_scene(int nx, int ny, std::uint64_t seed);

/// Same brain and vessels, no lesion.
TissueParamField builtin_healthy_scene(int nx, int ny, std::uint64_t seed);

/// Synthesize the acquisition. Tissue voxels get baseline + k*cbv *
/// (AIF (x) box IRF); artery voxels carry the AIF itself and vein voxels
/// a copy delayed by vein_delay_s with equal area. Brain voxels also get
/// a constant anatomy offset (+8 HU tissue, +12 HU vessels) so frames
/// are textured before bolus arrival. Frames are then shifted per the
/// schedule and i.i.d. Gaussian noise is added; the noise stream is
/// indexed by (voxel, frame) so output is schedule-independent and
/// bit-reproducible per seed.
TimeSeriesVolume generate_phantom(const TissueParamField& scene, const AcquisitionConfig& acq,
                                  const GammaVariateParams& aif_params,
                                  const NoiseMotionConfig& nm, double vein_delay_s = 2.0,
                                  double k = kDefaultHuPerCbv);

struct GroundTruthMaps {
    ParametricMap cbv, cbf, mtt, ttp, delay;
};

/// Maps implied by the scene: CBV/MTT/DELAY from the field, CBF by the
/// central volume principle, TTP as the earliest argmax time of the
/// noiseless synthesized enhancement (0 where there is no signal).
GroundTruthMaps ground_truth_maps(const TissueParamField& scene, const AcquisitionConfig& acq,
                                  const GammaVariateParams& aif_params, double vein_delay_s = 2.0,
                                  double k = kDefaultHuPerCbv);

/// Constant anatomy offsets used by generate_phantom.
double anatomy_offset_hu(Label label);

}  // namespace ctp
