#pragma once

#include "tetgs/camera.hpp"
#include "tetgs/fields.hpp"
#include "tetgs/marching_tet.hpp"
#include "tetgs/partition.hpp"
#include "tetgs/tet_grid.hpp"

#include <iosfwd>
#include <span>
#include <vector>

namespace tetgs {

struct GuidanceContext {
    const TetGrid& grid;              // connectivity, positions, frozen flags
    std::span<const double> sdf;      // current parameters
    const ExtractedMesh& mesh;        // extracted from `sdf`
    std::span<const Camera> global_cameras;
    std::span<const Camera> local_cameras;
};

// Global and local guidance terms with their gradients per grid vertex.
struct GuidanceTerms {
    double global = 0.0;
    double local = 0.0;
    std::vector<double> grad_global;
    std::vector<double> grad_local;
};

class GuidanceProvider {
  public:
    virtual ~GuidanceProvider() = default;
    // Gradients must be zero at frozen vertices.
    virtual GuidanceTerms evaluate(const GuidanceContext& ctx) const = 0;
};

// Squared distance to a target field in units of cell_size. The global term
// sums over every editable vertex, the local term only over editable vertices
// within 2 cells of the target surface.
class TargetSdfGuidance final : public GuidanceProvider {
  public:
    explicit TargetSdfGuidance(FieldPtr target, double weight_global = 1.0, double weight_local = 1.0);
    GuidanceTerms evaluate(const GuidanceContext& ctx) const override;

  private:
    FieldPtr target_;
    double weight_global_;
    double weight_local_;
};

struct AdaptConfig {
    int steps = 2000;
    double learning_rate = 1e-3;
    double lambda_global = 0.5;
    double lambda_local = 0.5;
    double lambda_sa = 5000.0;
    double lambda_nc = 2000.0;
    bool soft_keep = false;
    double beta1 = 0.9;
    double beta2 = 0.999;
    double epsilon = 1e-8;
    double weight_decay = 0.0;
    // Steps (0-based, before the update of that step) at which edit tets near
    // the surface are red-refined.
    std::vector<int> subdivide_at;
    double subdivide_band = 1.0;  // in cells of the current grid
    std::vector<Camera> global_cameras;
    std::vector<Camera> local_cameras;
};

struct AdaptLogRow {
    int step = 0;
    double total = 0, global = 0, local = 0, sa = 0, nc = 0;
};

struct ObjectiveValue {
    AdaptLogRow terms;
    std::vector<double> grad;  // per grid vertex, masked to the parameters being optimized
};

// Weighted objective of one adapt step at `sdf`. `skip_tets` flags tets whose
// faces get no normal-consistency gradient (configuration flips).
ObjectiveValue adapt_objective(const TetGrid& grid, std::span<const double> sdf, const GuidanceProvider& guidance,
                               const AdaptConfig& config, std::span<const std::uint8_t> skip_tets = {});

struct AdaptResult {
    TetGrid grid;
    PartitionResult partition;  // updated when subdivision added tets/vertices
    std::vector<AdaptLogRow> log;
};

// Throws DivergenceError on a non-finite objective.
AdaptResult adapt(const TetGrid& grid, const PartitionResult& partition, const GuidanceProvider& guidance,
                  const AdaptConfig& config);

// Edit tets within `band` cells of the surface whose refinement leaves every
// keep tet untouched.
std::vector<int> subdivision_selection(const TetGrid& grid, std::span<const double> sdf,
                                       const PartitionResult& partition, double band);

// Partition of a grid refined by `subdivide` from the grid `partition` was built on.
PartitionResult extend_partition(const PartitionResult& partition, const TetGrid& refined);

void write_adapt_log(std::ostream& out, std::span<const AdaptLogRow> log);

}  // namespace tetgs
