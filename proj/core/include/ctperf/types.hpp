// Core data types shared by every stage of the CT perfusion pipeline.
#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace ctp {

enum class MapKind { CBV, CBF, MTT, TTP, DELAY };

const char* to_string(MapKind kind);
MapKind map_kind_from_string(const std::string& s);

/// Fixed normalization window per map kind, in physical units
/// (CBV ml/100g, CBF ml/100g/min, MTT s, TTP s, DELAY s).
std::pair<double, double> default_norm_range(MapKind kind);

/// 4-D contrast-enhancement record in HU. Memory order: x fastest,
/// then y, z, t.
struct TimeSeriesVolume {
    int nx = 0, ny = 0, nz = 0, nt = 0;
    double sx = 1.0, sy = 1.0, sz = 1.0;  // mm/voxel
    double dt = 0.0;                      // seconds per frame
    double t0 = 0.0;                      // acquisition start, seconds
    std::vector<float> values;

    std::size_t voxel_count() const {
        return static_cast<std::size_t>(nx) * ny * nz;
    }
    std::size_t index(int x, int y, int z, int t) const {
        return ((static_cast<std::size_t>(t) * nz + z) * ny + y) * nx + x;
    }
    float at(int x, int y, int z, int t) const { return values[index(x, y, z, t)]; }
    float& at(int x, int y, int z, int t) { return values[index(x, y, z, t)]; }

    /// Throws std::invalid_argument on any invariant violation
    /// (nt < 2, non-positive dt/spacing, size mismatch, non-finite values).
    void validate() const;
};

/// Uniformly sampled 1-D time signal (AIF, VOF, TAC, IRF).
struct Curve {
    double dt = 0.0;
    double t0 = 0.0;
    std::vector<double> samples;

    int size() const { return static_cast<int>(samples.size()); }
    double time_at(int i) const { return t0 + i * dt; }

    void validate() const;
};

/// One scalar parametric map. Values are stored in physical units unless
/// norm_range is set, in which case they live in [0,1].
struct ParametricMap {
    MapKind kind = MapKind::CBV;
    int nx = 0, ny = 0, nz = 0;
    double sx = 1.0, sy = 1.0, sz = 1.0;
    std::vector<float> values;
    std::optional<std::pair<double, double>> norm_range;

    std::size_t index(int x, int y, int z) const {
        return (static_cast<std::size_t>(z) * ny + y) * nx + x;
    }
    float at(int x, int y, int z) const { return values[index(x, y, z)]; }
    float& at(int x, int y, int z) { return values[index(x, y, z)]; }

    void validate() const;
};

struct BinaryMask {
    int nx = 0, ny = 0, nz = 0;
    double sx = 1.0, sy = 1.0, sz = 1.0;
    std::vector<std::uint8_t> values;  // {0,1}

    std::size_t index(int x, int y, int z) const {
        return (static_cast<std::size_t>(z) * ny + y) * nx + x;
    }
    bool at(int x, int y, int z) const { return values[index(x, y, z)] != 0; }
    std::size_t count() const;

    void validate() const;
};

enum class Label : std::uint8_t {
    Background = 0,
    Artery = 1,
    Vein = 2,
    Tissue = 3,
    Penumbra = 4,
    Core = 5,
};

/// Per-voxel region labels for a synthetic scene.
struct LabelField {
    int nx = 0, ny = 0, nz = 0;
    double sx = 1.0, sy = 1.0, sz = 1.0;
    std::vector<std::uint8_t> values;

    std::size_t index(int x, int y, int z) const {
        return (static_cast<std::size_t>(z) * ny + y) * nx + x;
    }
    Label at(int x, int y, int z) const { return static_cast<Label>(values[index(x, y, z)]); }

    /// Mask of all voxels that are not Background.
    BinaryMask foreground_mask() const;
    BinaryMask mask_of(Label label) const;

    void validate() const;
};

/// clamp((v - lo) / (hi - lo), 0, 1) per voxel; records the range.
/// Throws std::invalid_argument if hi <= lo.
ParametricMap normalize_map(const ParametricMap& map, std::pair<double, double> range);

/// Normalize with the fixed per-kind default range.
ParametricMap normalize_map(const ParametricMap& map);

/// Inverse of normalize_map. Throws std::invalid_argument if the map
/// carries no norm_range.
ParametricMap denormalize_map(const ParametricMap& map);

}  // namespace ctp
