#ifndef LOCALH_REGRESS_HPP
#define LOCALH_REGRESS_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "localh/complex.hpp"

namespace localh {

struct CriterionResult {
    int index = 0;
    std::string name;
    bool pass = false;
    std::vector<std::string> notes;  // failures, plus key confirmations
};

// The fixed triangulation corpus exercised by the regression suite.
std::vector<std::pair<std::string, Triangulation>> regression_corpus();

// Runs one numbered regression criterion (1-10).
CriterionResult run_criterion(int index, std::uint64_t seed);

// Runs the whole suite in order.
std::vector<CriterionResult> run_acceptance(std::uint64_t seed);

}  // namespace localh

#endif
