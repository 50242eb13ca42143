#ifndef POLYZERO_CORPUS_HPP
#define POLYZERO_CORPUS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "polyzero/rational.hpp"

namespace polyzero {

/// Deterministic random-polynomial validation harness. Coefficients are
/// uniform integers in [-height, height] with nonzero leading and constant
/// terms; identical seeds produce identical corpora and summaries.
struct CorpusSpec {
    int count = 0;
    int degree_lo = 2;
    int degree_hi = 9;
    long height = 10;
    uint64_t seed = 0;
    Rational width_budget{1, 1024};
};

struct CorpusSummary {
    int total = 0;
    int exact_count_cases = 0;        // both positive and negative pinned exactly
    double mean_candidate_size = 0;   // avg |positive set| + |negative set|
    double mean_descartes_size = 0;   // same for the sign-rule baseline
    int interval_cells_checked = 0;
    std::vector<std::string> violations;  // must stay empty

    bool ok() const { return violations.empty(); }
    std::string render() const;
};

CorpusSummary run_corpus(const CorpusSpec& spec);

}  // namespace polyzero

#endif
