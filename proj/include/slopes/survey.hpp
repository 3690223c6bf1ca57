#ifndef SLOPES_SURVEY_HPP
#define SLOPES_SURVEY_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "slopes/slope.hpp"

namespace slopes {

struct SurveyRow {
    Int p, q;
    int n_components;
    Int crossing_number;
    Int diameter;
    Int num_minimal_paths;
    Int slope_min, slope_max;
    Int sigma0, sigma1;
    std::optional<Int> linking_number;  // links only
};

// All reduced fractions p/q with 0 < p < q and 2 <= q <= max_q, ordered by
// (q, p).
std::vector<Fraction> survey_targets(const Int& max_q);

SurveyRow survey_row(const Fraction& target, std::uint64_t cap = 1000000);

// OpenMP-parallel sweep; rows land in target order regardless of the thread
// count, so output bytes never depend on --jobs.  jobs = 0 means the OpenMP
// default.
std::vector<SurveyRow> survey_rows(const Int& max_q, int jobs = 0,
                                   std::uint64_t cap = 1000000);

// Single-threaded reference used by tests and the benchmark.
std::vector<SurveyRow> survey_rows_serial(const Int& max_q, std::uint64_t cap = 1000000);

}  // namespace slopes

#endif
