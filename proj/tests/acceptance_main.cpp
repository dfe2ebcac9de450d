#include <cstdio>
#include <cstdlib>
#include <string>

#include "ancestor/acceptance.hpp"

int main(int argc, char** argv) {
    anc::AcceptanceOptions options;
    bool verbose = false;
    for (int k = 1; k < argc; ++k) {
        std::string arg = argv[k];
        if (arg == "--max-j" && k + 1 < argc) options.maxJ = std::atoi(argv[++k]);
        if (arg == "--verbose") verbose = true;
    }
    int failed = 0;
    for (int id : anc::criterionIds()) {
        auto r = anc::runCriterion(id, options);
        if (!r.pass) ++failed;
        std::printf("%s criterion %2d: %s (%.2f s, limit %.0f s)\n", r.pass ? "PASS" : "FAIL", r.id, r.title.c_str(),
                    r.seconds, r.limitSeconds);
        if (verbose || !r.pass)
            for (const auto& n : r.notes) std::printf("      %s\n", n.c_str());
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(anc::criterionIds().size()) - failed,
                anc::criterionIds().size());
    return failed == 0 ? 0 : 1;
}
