#pragma once

#include <map>
#include <string>
#include <vector>

#include "island/simulate.hpp"

namespace island {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    double seconds = 0.0;
    std::vector<std::string> details;
};

struct VerifyOptions {
    int n_max_override = 0;  // 0 = auto-size from the front estimate
};

// Caches the expensive simulations shared between criteria within a process.
class VerifyContext {
  public:
    explicit VerifyContext(VerifyOptions options = {}) : options_(options) {}

    const VerifyOptions& options() const { return options_; }
    const TruncatedTrajectory& decay_run(int i);         // bare substrate to T = 1e5
    const TruncatedTrajectory& conservation_run(int i);  // bare substrate to T = 1e4

    // Launches the decay runs for both i values on worker threads.
    void prewarm();

  private:
    VerifyOptions options_;
    std::map<std::pair<int, double>, TruncatedTrajectory> cache_;
};

inline constexpr int kCriterionCount = 12;

const char* criterion_name(int id);
CriterionResult run_criterion(int id, VerifyContext& context);
std::vector<CriterionResult> run_all_criteria(VerifyContext& context);

}  // namespace island
