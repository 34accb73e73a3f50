#pragma once

#include <array>
#include <functional>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "aflab/grid.hpp"
#include "aflab/sample.hpp"
#include "aflab/shape.hpp"

namespace aflab {

enum class CheckKind { Identity, Inequality };
enum class OriginPolicy { AsGiven, Circumcenter, SteinerPoint };

struct CheckEval {
    bool hyp_pass = true;
    std::string hyp_detail = "pass";
    double lhs = 0.0, rhs = 0.0;
    double term_scale = 0.0;  // sum of |assembled terms|, conditioning floor
};

/// What an evaluator sees: samples translated per the origin policy, the
/// circumradius of those samples, and the precomputed quermassintegrals
/// I_{-1}..I_n (so ninety checks do not each redo the same reductions).
struct CheckInput {
    const SampleSet& samples;
    double circumradius = 0.0;
    std::array<double, 4> iq{0, 0, 0, 0};

    double I(int k) const { return iq[static_cast<std::size_t>(k + 1)]; }
};

/// One theorem check: an identity evaluated as a residual or an inequality
/// evaluated as a slack, with its hypotheses and origin policy.
struct CheckSpec {
    std::string id;
    CheckKind kind = CheckKind::Identity;
    int k = 0;
    double m = 0.0;
    std::string phi;  // catalog tag where applicable
    OriginPolicy origin = OriginPolicy::AsGiven;
    std::string hypotheses;

    std::function<CheckEval(const CheckInput&)> eval;
};

struct CheckResult {
    std::string id;
    std::string kind;  // "identity" | "inequality"
    double lhs = 0.0, rhs = 0.0;
    double residual_or_slack = 0.0;  // |lhs-rhs| for identities, rhs-lhs for inequalities
    double tol = 0.0;
    std::string verdict;  // "pass" | "fail" | "skipped-hypothesis"
    std::string hypothesis_status;
    std::string grid;
    double refinement_delta = 0.0;
};

/// The check registry for surface dimension n (1 or 2). Ids are unique and
/// the list is sorted by id.
const std::vector<CheckSpec>& check_registry(int n);

/// Look up a registered check. UsageError for unknown ids.
const CheckSpec& find_check(const std::string& id, int n);

/// Samples of one shape on the evaluation grid and on a doubled grid, under
/// each origin policy, plus the per-grid circumballs. Built once, immutable
/// afterwards, so checks can run concurrently.
class CheckContext {
  public:
    /// pre_shift translates the sampled body before any per-check policy
    /// is applied (the CLI --origin flag); exact for every representation
    /// because it acts on samples.
    CheckContext(const Shape& shape, const SphereGrid& grid,
                 const Eigen::Vector3d& pre_shift = Eigen::Vector3d::Zero());

    const SampleSet& samples(OriginPolicy policy, bool refined) const;
    CheckInput input(OriginPolicy policy, bool refined) const;
    double circumradius(bool refined) const;
    const std::string& grid_desc() const { return grid_desc_; }
    int dim() const { return dim_; }

  private:
    int dim_;
    std::string grid_desc_;
    SampleSet base_[2];
    SampleSet recentered_[2];
    SampleSet steinered_[2];
    std::array<double, 4> iq_[3][2];
    double circumradius_[2];
};

/// Evaluate one check: origin policy, hypothesis gating, residual/slack on
/// the evaluation grid, tolerance from the refined-grid delta.
CheckResult run_check(const CheckSpec& spec, CheckContext& ctx);

/// Run a selection of checks ("all" or explicit ids) on the shape.
/// Results are ordered by id; checks run as a parallel map capped by the
/// AFLAB_THREADS environment variable.
std::vector<CheckResult> run_suite(const Shape& shape, const SphereGrid& grid,
                                   const std::vector<std::string>& selection,
                                   const Eigen::Vector3d& pre_shift = Eigen::Vector3d::Zero());

struct ConvergenceRow {
    std::string grid;
    double residual_or_slack = 0.0;
    std::string verdict;
};

/// Residual/slack of one check across a list of grids.
std::vector<ConvergenceRow> convergence_study(const Shape& shape, const std::string& check_id,
                                              const std::vector<std::string>& grids);

}  // namespace aflab
