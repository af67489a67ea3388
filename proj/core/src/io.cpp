#include "ctperf/io.hpp"

#include <bit>
#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <sstream>
#include <vector>

#include <json.hpp>

static_assert(std::endian::native == std::endian::little,
              "raw payload format assumes a little-endian host");

namespace ctp {

namespace {

using nlohmann::json;

void write_bytes(const std::string& path, const void* data, std::size_t n) {
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f) throw IoError("cannot open for writing: " + path);
    f.write(static_cast<const char*>(data), static_cast<std::streamsize>(n));
    if (!f) throw IoError("write failed: " + path);
}

std::vector<char> read_bytes(const std::string& path) {
    std::ifstream f(path, std::ios::binary | std::ios::ate);
    if (!f) throw IoError("cannot open for reading: " + path);
    const auto size = f.tellg();
    f.seekg(0);
    std::vector<char> buf(static_cast<std::size_t>(size));
    f.read(buf.data(), size);
    if (!f) throw IoError("read failed: " + path);
    return buf;
}

void write_sidecar(const std::string& path, const json& j) {
    std::ofstream f(path, std::ios::trunc);
    if (!f) throw IoError("cannot open for writing: " + path);
    f << j.dump(2) << "\n";
    if (!f) throw IoError("write failed: " + path);
}

json read_sidecar(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw IoError("cannot open for reading: " + path);
    json j;
    try {
        f >> j;
    } catch (const json::exception& e) {
        throw FormatError("malformed sidecar " + path + ": " + e.what());
    }
    if (!j.is_object()) throw FormatError("sidecar is not a JSON object: " + path);
    return j;
}

void check_version(const json& j, const std::string& path) {
    if (!j.contains("format_version"))
        throw FormatError("sidecar missing format_version: " + path);
    const auto v = j.at("format_version");
    if (!v.is_string() || v.get<std::string>() != "1")
        throw VersionError("unsupported format_version in " + path);
}

template <typename T>
T get_key(const json& j, const char* key, const std::string& path) {
    if (!j.contains(key)) throw FormatError(std::string("sidecar missing key '") + key + "': " + path);
    try {
        return j.at(key).get<T>();
    } catch (const json::exception& e) {
        throw FormatError(std::string("sidecar key '") + key + "' malformed in " + path + ": " + e.what());
    }
}

json spacing_json(double sx, double sy, double sz) { return json::array({sx, sy, sz}); }

}  // namespace

void write_volume(const TimeSeriesVolume& vol, const std::string& stem) {
    vol.validate();
    json j;
    j["format_version"] = "1";
    j["kind"] = "timeseries";
    j["dims"] = json::array({vol.nx, vol.ny, vol.nz, vol.nt});
    j["spacing_mm"] = spacing_json(vol.sx, vol.sy, vol.sz);
    j["dt_s"] = vol.dt;
    j["t0_s"] = vol.t0;
    write_sidecar(stem + ".json", j);
    write_bytes(stem + ".f32raw", vol.values.data(), vol.values.size() * sizeof(float));
}

TimeSeriesVolume read_volume(const std::string& stem) {
    const std::string sidecar = stem + ".json";
    const json j = read_sidecar(sidecar);
    check_version(j, sidecar);
    if (get_key<std::string>(j, "kind", sidecar) != "timeseries")
        throw FormatError("sidecar kind is not 'timeseries': " + sidecar);
    const auto dims = get_key<std::vector<int>>(j, "dims", sidecar);
    if (dims.size() != 4) throw FormatError("volume dims must have 4 entries: " + sidecar);
    const auto sp = get_key<std::vector<double>>(j, "spacing_mm", sidecar);
    if (sp.size() != 3) throw FormatError("spacing_mm must have 3 entries: " + sidecar);

    TimeSeriesVolume vol;
    vol.nx = dims[0];
    vol.ny = dims[1];
    vol.nz = dims[2];
    vol.nt = dims[3];
    vol.sx = sp[0];
    vol.sy = sp[1];
    vol.sz = sp[2];
    vol.dt = get_key<double>(j, "dt_s", sidecar);
    vol.t0 = get_key<double>(j, "t0_s", sidecar);

    const auto payload = read_bytes(stem + ".f32raw");
    const std::size_t expected =
        static_cast<std::size_t>(vol.nx) * vol.ny * vol.nz * vol.nt * sizeof(float);
    if (payload.size() != expected) {
        std::ostringstream msg;
        msg << "payload length mismatch for " << stem << ".f32raw: got " << payload.size()
            << " bytes, expected " << expected;
        throw LengthMismatchError(msg.str());
    }
    vol.values.resize(payload.size() / sizeof(float));
    std::memcpy(vol.values.data(), payload.data(), payload.size());
    vol.validate();
    return vol;
}

void write_map(const ParametricMap& map, const std::string& stem) {
    map.validate();
    json j;
    j["format_version"] = "1";
    j["kind"] = to_string(map.kind);
    j["dims"] = json::array({map.nx, map.ny, map.nz});
    j["spacing_mm"] = spacing_json(map.sx, map.sy, map.sz);
    j["dt_s"] = 0.0;
    j["t0_s"] = 0.0;
    if (map.norm_range) j["norm_range"] = json::array({map.norm_range->first, map.norm_range->second});
    write_sidecar(stem + ".json", j);
    write_bytes(stem + ".f32raw", map.values.data(), map.values.size() * sizeof(float));
}

ParametricMap read_map(const std::string& stem) {
    const std::string sidecar = stem + ".json";
    const json j = read_sidecar(sidecar);
    check_version(j, sidecar);
    const auto dims = get_key<std::vector<int>>(j, "dims", sidecar);
    if (dims.size() != 3) throw FormatError("map dims must have 3 entries: " + sidecar);
    const auto sp = get_key<std::vector<double>>(j, "spacing_mm", sidecar);
    if (sp.size() != 3) throw FormatError("spacing_mm must have 3 entries: " + sidecar);

    ParametricMap map;
    map.kind = map_kind_from_string(get_key<std::string>(j, "kind", sidecar));
    map.nx = dims[0];
    map.ny = dims[1];
    map.nz = dims[2];
    map.sx = sp[0];
    map.sy = sp[1];
    map.sz = sp[2];
    if (j.contains("norm_range")) {
        const auto r = get_key<std::vector<double>>(j, "norm_range", sidecar);
        if (r.size() != 2) throw FormatError("norm_range must have 2 entries: " + sidecar);
        map.norm_range = {r[0], r[1]};
    }

    const auto payload = read_bytes(stem + ".f32raw");
    const std::size_t expected = static_cast<std::size_t>(map.nx) * map.ny * map.nz * sizeof(float);
    if (payload.size() != expected) {
        std::ostringstream msg;
        msg << "payload length mismatch for " << stem << ".f32raw: got " << payload.size()
            << " bytes, expected " << expected;
        throw LengthMismatchError(msg.str());
    }
    map.values.resize(payload.size() / sizeof(float));
    std::memcpy(map.values.data(), payload.data(), payload.size());
    map.validate();
    return map;
}

namespace {

json byte_field_sidecar(const char* kind, int nx, int ny, int nz, double sx, double sy, double sz) {
    json j;
    j["format_version"] = "1";
    j["kind"] = kind;
    j["dims"] = json::array({nx, ny, nz});
    j["spacing_mm"] = spacing_json(sx, sy, sz);
    j["dt_s"] = 0.0;
    j["t0_s"] = 0.0;
    return j;
}

std::vector<char> read_byte_payload(const std::string& stem, std::size_t expected) {
    auto payload = read_bytes(stem + ".u8raw");
    if (payload.size() != expected) {
        std::ostringstream msg;
        msg << "payload length mismatch for " << stem << ".u8raw: got " << payload.size()
            << " bytes, expected " << expected;
        throw LengthMismatchError(msg.str());
    }
    return payload;
}

}  // namespace

void write_mask(const BinaryMask& mask, const std::string& stem) {
    mask.validate();
    write_sidecar(stem + ".json",
                  byte_field_sidecar("mask", mask.nx, mask.ny, mask.nz, mask.sx, mask.sy, mask.sz));
    write_bytes(stem + ".u8raw", mask.values.data(), mask.values.size());
}

BinaryMask read_mask(const std::string& stem) {
    const std::string sidecar = stem + ".json";
    const json j = read_sidecar(sidecar);
    check_version(j, sidecar);
    if (get_key<std::string>(j, "kind", sidecar) != "mask")
        throw FormatError("sidecar kind is not 'mask': " + sidecar);
    const auto dims = get_key<std::vector<int>>(j, "dims", sidecar);
    if (dims.size() != 3) throw FormatError("mask dims must have 3 entries: " + sidecar);
    const auto sp = get_key<std::vector<double>>(j, "spacing_mm", sidecar);
    if (sp.size() != 3) throw FormatError("spacing_mm must have 3 entries: " + sidecar);

    BinaryMask mask;
    mask.nx = dims[0];
    mask.ny = dims[1];
    mask.nz = dims[2];
    mask.sx = sp[0];
    mask.sy = sp[1];
    mask.sz = sp[2];
    const auto payload =
        read_byte_payload(stem, static_cast<std::size_t>(mask.nx) * mask.ny * mask.nz);
    mask.values.assign(payload.begin(), payload.end());
    mask.validate();
    return mask;
}

void write_labels(const LabelField& labels, const std::string& stem) {
    labels.validate();
    write_sidecar(stem + ".json", byte_field_sidecar("labels", labels.nx, labels.ny, labels.nz,
                                                     labels.sx, labels.sy, labels.sz));
    write_bytes(stem + ".u8raw", labels.values.data(), labels.values.size());
}

LabelField read_labels(const std::string& stem) {
    const std::string sidecar = stem + ".json";
    const json j = read_sidecar(sidecar);
    check_version(j, sidecar);
    if (get_key<std::string>(j, "kind", sidecar) != "labels")
        throw FormatError("sidecar kind is not 'labels': " + sidecar);
    const auto dims = get_key<std::vector<int>>(j, "dims", sidecar);
    if (dims.size() != 3) throw FormatError("labels dims must have 3 entries: " + sidecar);
    const auto sp = get_key<std::vector<double>>(j, "spacing_mm", sidecar);
    if (sp.size() != 3) throw FormatError("spacing_mm must have 3 entries: " + sidecar);

    LabelField labels;
    labels.nx = dims[0];
    labels.ny = dims[1];
    labels.nz = dims[2];
    labels.sx = sp[0];
    labels.sy = sp[1];
    labels.sz = sp[2];
    const auto payload =
        read_byte_payload(stem, static_cast<std::size_t>(labels.nx) * labels.ny * labels.nz);
    labels.values.assign(payload.begin(), payload.end());
    labels.validate();
    return labels;
}

void write_curve_csv(const Curve& curve, const std::string& path) {
    curve.validate();
    std::ofstream f(path, std::ios::trunc);
    if (!f) throw IoError("cannot open for writing: " + path);
    f << "t_s,value\n";
    char buf[64];
    for (int i = 0; i < curve.size(); ++i) {
        std::snprintf(buf, sizeof(buf), "%.17g,%.17g\n", curve.time_at(i), curve.samples[i]);
        f << buf;
    }
    if (!f) throw IoError("write failed: " + path);
}

Curve read_curve_csv(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw IoError("cannot open for reading: " + path);
    std::string line;
    if (!std::getline(f, line) || line != "t_s,value")
        throw FormatError("curve CSV missing 't_s,value' header: " + path);
    std::vector<double> ts, vs;
    while (std::getline(f, line)) {
        if (line.empty()) continue;
        const auto comma = line.find(',');
        if (comma == std::string::npos) throw FormatError("curve CSV row missing comma: " + path);
        try {
            ts.push_back(std::stod(line.substr(0, comma)));
            vs.push_back(std::stod(line.substr(comma + 1)));
        } catch (const std::exception&) {
            throw FormatError("curve CSV row not numeric: " + path);
        }
    }
    if (ts.size() < 2) throw FormatError("curve CSV needs at least 2 rows: " + path);
    Curve c;
    c.t0 = ts[0];
    c.dt = ts[1] - ts[0];
    c.samples = std::move(vs);
    if (c.dt <= 0.0) throw FormatError("curve CSV times not increasing: " + path);
    for (std::size_t i = 1; i < ts.size(); ++i) {
        if (std::abs(ts[i] - (c.t0 + static_cast<double>(i) * c.dt)) > 1e-6 * std::max(1.0, std::abs(ts[i])))
            throw FormatError("curve CSV not uniformly sampled: " + path);
    }
    c.validate();
    return c;
}

}  // namespace ctp
