#include "ctperf/types.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace ctp {

const char* to_string(MapKind kind) {
    switch (kind) {
        case MapKind::CBV: return "CBV";
        case MapKind::CBF: return "CBF";
        case MapKind::MTT: return "MTT";
        case MapKind::TTP: return "TTP";
        case MapKind::DELAY: return "DELAY";
    }
    return "?";
}

MapKind map_kind_from_string(const std::string& s) {
    if (s == "CBV") return MapKind::CBV;
    if (s == "CBF") return MapKind::CBF;
    if (s == "MTT") return MapKind::MTT;
    if (s == "TTP") return MapKind::TTP;
    if (s == "DELAY") return MapKind::DELAY;
    throw std::invalid_argument("unknown map kind: " + s);
}

std::pair<double, double> default_norm_range(MapKind kind) {
    switch (kind) {
        case MapKind::CBV: return {0.0, 8.0};
        case MapKind::CBF: return {0.0, 100.0};
        case MapKind::MTT: return {0.0, 20.0};
        case MapKind::TTP: return {0.0, 40.0};
        case MapKind::DELAY: return {0.0, 10.0};
    }
    return {0.0, 1.0};
}

namespace {

void require(bool cond, const char* msg) {
    if (!cond) throw std::invalid_argument(msg);
}

template <typename T>
bool all_finite(const std::vector<T>& v) {
    return std::all_of(v.begin(), v.end(), [](T x) { return std::isfinite(static_cast<double>(x)); });
}

}  // namespace

void TimeSeriesVolume::validate() const {
    require(nx > 0 && ny > 0 && nz > 0, "TimeSeriesVolume: dims must be positive");
    require(nt >= 2, "TimeSeriesVolume: nt must be >= 2");
    require(dt > 0.0, "TimeSeriesVolume: dt must be > 0");
    require(sx > 0.0 && sy > 0.0 && sz > 0.0, "TimeSeriesVolume: spacing must be > 0");
    require(values.size() == voxel_count() * static_cast<std::size_t>(nt),
            "TimeSeriesVolume: value count does not match dims");
    require(all_finite(values), "TimeSeriesVolume: non-finite values");
}

void Curve::validate() const {
    require(samples.size() >= 2, "Curve: need at least 2 samples");
    require(dt > 0.0, "Curve: dt must be > 0");
    require(all_finite(samples), "Curve: non-finite samples");
}

void ParametricMap::validate() const {
    require(nx > 0 && ny > 0 && nz > 0, "ParametricMap: dims must be positive");
    require(sx > 0.0 && sy > 0.0 && sz > 0.0, "ParametricMap: spacing must be > 0");
    require(values.size() == static_cast<std::size_t>(nx) * ny * nz,
            "ParametricMap: value count does not match dims");
    require(all_finite(values), "ParametricMap: non-finite values");
    for (float v : values) {
        require(v >= 0.0f, "ParametricMap: negative value");
        if (norm_range) require(v <= 1.0f, "ParametricMap: normalized value above 1");
    }
    if (norm_range) require(norm_range->second > norm_range->first, "ParametricMap: bad norm_range");
}

std::size_t BinaryMask::count() const {
    return static_cast<std::size_t>(std::count(values.begin(), values.end(), std::uint8_t{1}));
}

void BinaryMask::validate() const {
    require(nx > 0 && ny > 0 && nz > 0, "BinaryMask: dims must be positive");
    require(values.size() == static_cast<std::size_t>(nx) * ny * nz,
            "BinaryMask: value count does not match dims");
    for (auto v : values) require(v <= 1, "BinaryMask: values must be 0 or 1");
}

BinaryMask LabelField::foreground_mask() const {
    BinaryMask m{nx, ny, nz, sx, sy, sz, {}};
    m.values.resize(values.size());
    for (std::size_t i = 0; i < values.size(); ++i)
        m.values[i] = values[i] != static_cast<std::uint8_t>(Label::Background) ? 1 : 0;
    return m;
}

BinaryMask LabelField::mask_of(Label label) const {
    BinaryMask m{nx, ny, nz, sx, sy, sz, {}};
    m.values.resize(values.size());
    for (std::size_t i = 0; i < values.size(); ++i)
        m.values[i] = values[i] == static_cast<std::uint8_t>(label) ? 1 : 0;
    return m;
}

void LabelField::validate() const {
    require(nx > 0 && ny > 0 && nz > 0, "LabelField: dims must be positive");
    require(values.size() == static_cast<std::size_t>(nx) * ny * nz,
            "LabelField: value count does not match dims");
    for (auto v : values)
        require(v <= static_cast<std::uint8_t>(Label::Core), "LabelField: unknown label value");
}

ParametricMap normalize_map(const ParametricMap& map, std::pair<double, double> range) {
    const auto [lo, hi] = range;
    if (!(hi > lo)) throw std::invalid_argument("normalize_map: range hi must be > lo");
    ParametricMap out = map;
    const double inv = 1.0 / (hi - lo);
    for (float& v : out.values) {
        const double u = (static_cast<double>(v) - lo) * inv;
        v = static_cast<float>(std::clamp(u, 0.0, 1.0));
    }
    out.norm_range = range;
    return out;
}

ParametricMap normalize_map(const ParametricMap& map) {
    return normalize_map(map, default_norm_range(map.kind));
}

ParametricMap denormalize_map(const ParametricMap& map) {
    if (!map.norm_range) throw std::invalid_argument("denormalize_map: map carries no norm_range");
    const auto [lo, hi] = *map.norm_range;
    ParametricMap out = map;
    for (float& v : out.values)
        v = static_cast<float>(lo + static_cast<double>(v) * (hi - lo));
    out.norm_range.reset();
    return out;
}

}  // namespace ctp
