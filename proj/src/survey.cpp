#include "slopes/survey.hpp"

#include <omp.h>

namespace slopes {

std::vector<Fraction> survey_targets(const Int& max_q) {
    if (max_q < 2) throw std::invalid_argument("survey needs max_q >= 2");
    std::vector<Fraction> out;
    for (Int q = 2; q <= max_q; ++q)
        for (Int p = 1; p < q; ++p)
            if (gcd(p, q) == 1) out.push_back(make_fraction(p, q));
    return out;
}

SurveyRow survey_row(const Fraction& target, std::uint64_t cap) {
    SlopeReport rep = slope_report(target, cap);
    SurveyRow row;
    row.p = target.num();
    row.q = target.den();
    row.n_components = rep.components;
    row.crossing_number = rep.crossing_number;
    row.diameter = rep.diameter;
    row.num_minimal_paths = rep.path_count;
    row.slope_min = rep.slope_min;
    row.slope_max = rep.slope_max;
    row.sigma0 = rep.sigma0;
    row.sigma1 = rep.sigma1;
    row.linking_number = rep.linking_number;
    return row;
}

std::vector<SurveyRow> survey_rows(const Int& max_q, int jobs, std::uint64_t cap) {
    std::vector<Fraction> targets = survey_targets(max_q);
    std::vector<SurveyRow> rows(targets.size());
    std::exception_ptr error;
    if (jobs > 0) omp_set_num_threads(jobs);
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(targets.size()); ++i) {
        try {
            rows[static_cast<std::size_t>(i)] =
                survey_row(targets[static_cast<std::size_t>(i)], cap);
        } catch (...) {
#pragma omp critical
            if (!error) error = std::current_exception();
        }
    }
    if (error) std::rethrow_exception(error);
    return rows;
}

std::vector<SurveyRow> survey_rows_serial(const Int& max_q, std::uint64_t cap) {
    std::vector<Fraction> targets = survey_targets(max_q);
    std::vector<SurveyRow> rows;
    rows.reserve(targets.size());
    for (const Fraction& f : targets) rows.push_back(survey_row(f, cap));
    return rows;
}

}  // namespace slopes
