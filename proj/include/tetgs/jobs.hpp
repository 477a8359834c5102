#pragma once

#include "tetgs/camera.hpp"
#include "tetgs/fields.hpp"
#include "tetgs/io.hpp"

#include <json.hpp>

#include <cstdint>
#include <string>

namespace tetgs {

inline constexpr const char* kStages[] = {"grid", "extract", "partition", "adapt", "paint", "render", "metrics"};

struct JobContext {
    std::string stage;
    nlohmann::json config;  // the whole job file; the stage reads its own block
    fs::path config_dir;    // relative input paths resolve against this
    fs::path out_dir;
    std::uint64_t seed = 0;
};

// Runs one stage, writes its artifacts plus `manifest.json` into out_dir and
// returns the manifest. Library errors propagate as tetgs::Error.
nlohmann::json run_job(const JobContext& job);

// {"type": "sphere", "center": [..], "radius": r} and friends (plane, box,
// constant, union with "children").
FieldPtr parse_field(const nlohmann::json& j);
// Explicit intrinsics/extrinsics or {"look_at": {...}}.
Camera parse_camera(const nlohmann::json& j);
nlohmann::json camera_to_json(const Camera& camera);

// FNV-1a of a file's bytes, as 16 hex digits.
std::string file_hash(const fs::path& path);

}  // namespace tetgs
