#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace anc {

struct AcceptanceOptions {
    int maxJ = 99;                     ///< caps the degree range of every sweep
    std::uint64_t seed = 0x5eed2024;
};

struct CriterionResult {
    int id;
    std::string title;
    bool pass;
    std::vector<std::string> notes;
    double seconds;
    double limitSeconds;
};

std::vector<int> criterionIds();
CriterionResult runCriterion(int id, const AcceptanceOptions& options);
std::vector<CriterionResult> runAcceptance(const AcceptanceOptions& options);

}  // namespace anc
