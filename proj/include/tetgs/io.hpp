#pragma once

#include "tetgs/gauss_embed.hpp"
#include "tetgs/image.hpp"
#include "tetgs/marching_tet.hpp"
#include "tetgs/partition.hpp"
#include "tetgs/tet_grid.hpp"

#include <filesystem>
#include <memory>
#include <string>

namespace tetgs {

namespace fs = std::filesystem;

inline constexpr int kGridFormatVersion = 1;

// Binary container: 8-byte magic, u32 header length, JSON header, then raw
// little-endian arrays (vertices f64x3, tets i32x4, sdf f64, frozen u8, reference f64).
void save_grid(const fs::path& path, const TetGrid& grid);
TetGrid load_grid(const fs::path& path);

// OBJ with positions at full precision; provenance goes to a sidecar JSON
// holding `source_edges` and `parent_tets`.
void save_mesh(const fs::path& obj_path, const fs::path& sidecar_path, const ExtractedMesh& mesh);
ExtractedMesh load_mesh(const fs::path& obj_path, const fs::path& sidecar_path);
fs::path sidecar_path_for(const fs::path& obj_path);

// Binary little-endian PLY, one vertex element per kernel with the baked world
// position plus every kernel attribute.
void save_kernels(const fs::path& path, const GaussianSet& set);
GaussianSet load_kernels(const fs::path& path, std::shared_ptr<const ExtractedMesh> mesh);

// 8-bit PNGs. Color images are written RGBA with the given alpha (opaque when empty).
void write_png(const fs::path& path, const ColorImage& color, const MaskImage* alpha = nullptr);
void write_png(const fs::path& path, const MaskImage& gray);
void write_normal_png(const fs::path& path, const NormalImage& normals);
ColorImage read_png_color(const fs::path& path);
// Grayscale (or luminance of color) in [0,1].
MaskImage read_png_mask(const fs::path& path);

// Raw little-endian float32 plus `<path>.json` with width and height.
void write_depth(const fs::path& path, const DepthImage& depth);
DepthImage read_depth(const fs::path& path);

void save_partition(const fs::path& path, const PartitionResult& partition);
PartitionResult load_partition(const fs::path& path);

std::string read_text(const fs::path& path);
void write_text(const fs::path& path, const std::string& text);

}  // namespace tetgs
