#pragma once

#include <string>
#include <utility>
#include <vector>

#include "modspace/grid.hpp"
#include "modspace/lattice.hpp"

namespace modspace {

/// One acceptance criterion run: pass/fail, a one-line summary, a JSON blob
/// with the measured numbers, and optional CSV artifacts for plotting.
struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string summary;
    std::string details_json;
    std::vector<std::pair<std::string, std::string>> csv_artifacts;  // (filename, content)
};

struct SuiteOptions {
    unsigned seed = 20240801;
    std::string cli_path;  // used by the end-to-end criterion; falls back to $MODSPACE_CLI
};

std::vector<int> criteria_ids();
std::string criterion_name(int id);
CriterionResult run_criterion(int id, const SuiteOptions& options = {});
std::vector<CriterionResult> run_all_criteria(const SuiteOptions& options = {});

/// Deterministic band-limited test functions on the given grid; entries with
/// narrow_band have Fourier support inside the half-unit cube.
struct CorpusEntry {
    GridFunction f;
    std::string label;
    bool narrow_band = false;
    bool nonnegative = false;
};
std::vector<CorpusEntry> bandlimited_corpus(const GridSpec& grid, unsigned seed, int count = 20);

/// Nonnegative coefficients on {|k|_inf <= radius} drawn from a seeded
/// generator.
Sequence random_coefficients(Dimension dim, long radius, unsigned seed);

}  // namespace modspace
