// Acceptance suite: one line per criterion, nonzero exit if any fails.
// Usage: acceptance [--criterion N] [--n-max N] [--details]

#include <cstdio>
#include <cstring>
#include <string>

#include "island/verify.hpp"

using namespace island;

namespace {

void print_result(const CriterionResult& r, bool details) {
    std::printf("[%s] criterion %2d (%s) — %.2f s\n", r.pass ? "PASS" : "FAIL", r.id, r.name.c_str(),
                r.seconds);
    if (details || !r.pass)
        for (const auto& line : r.details) std::printf("    %s\n", line.c_str());
}

}  // namespace

int main(int argc, char** argv) {
    int only = 0;
    bool details = false;
    VerifyOptions options;
    for (int k = 1; k < argc; ++k) {
        if (!std::strcmp(argv[k], "--criterion") && k + 1 < argc) {
            only = std::atoi(argv[++k]);
        } else if (!std::strcmp(argv[k], "--n-max") && k + 1 < argc) {
            options.n_max_override = std::atoi(argv[++k]);
        } else if (!std::strcmp(argv[k], "--details")) {
            details = true;
        } else {
            std::fprintf(stderr, "unknown argument: %s\n", argv[k]);
            return 2;
        }
    }

    VerifyContext context(options);
    bool all_pass = true;
    if (only > 0) {
        auto r = run_criterion(only, context);
        print_result(r, details);
        all_pass = r.pass;
    } else {
        for (const auto& r : run_all_criteria(context)) {
            print_result(r, details);
            all_pass = all_pass && r.pass;
        }
    }
    return all_pass ? 0 : 1;
}
