// Raw f32/u8 payload + JSON sidecar file formats, and curve CSV.
#pragma once

#include <stdexcept>
#include <string>

#include "ctperf/types.hpp"

namespace ctp {

/// File could not be opened / read / written. Message names the path.
struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Sidecar or CSV is malformed (bad JSON, missing keys, bad values).
struct FormatError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Payload byte count disagrees with the sidecar dims.
struct LengthMismatchError : FormatError {
    using FormatError::FormatError;
};

/// Sidecar format_version is not supported.
struct VersionError : FormatError {
    using FormatError::FormatError;
};

// Volumes and maps: `<stem>.f32raw` (little-endian float32, x fastest)
// plus `<stem>.json` sidecar. Masks and label fields: `<stem>.u8raw`.
// Writers refuse non-finite or otherwise invalid data.

void write_volume(const TimeSeriesVolume& vol, const std::string& stem);
TimeSeriesVolume read_volume(const std::string& stem);

void write_map(const ParametricMap& map, const std::string& stem);
ParametricMap read_map(const std::string& stem);

void write_mask(const BinaryMask& mask, const std::string& stem);
BinaryMask read_mask(const std::string& stem);

void write_labels(const LabelField& labels, const std::string& stem);
LabelField read_labels(const std::string& stem);

/// CSV with header `t_s,value`, one row per sample.
void write_curve_csv(const Curve& curve, const std::string& path);
Curve read_curve_csv(const std::string& path);

}  // namespace ctp
