#include <chrono>
#include <cstdlib>
#include <iostream>

#include "slopes/json_io.hpp"
#include "slopes/survey.hpp"

namespace {

double seconds(std::chrono::steady_clock::duration d) {
    return std::chrono::duration<double>(d).count();
}

}  // namespace

// Compares the serial reference survey with the parallel one and checks that
// they produce identical bytes.
int main(int argc, char** argv) {
    std::int64_t max_q = argc > 1 ? std::atoll(argv[1]) : 120;
    if (max_q < 2) {
        std::cerr << "usage: slope-bench [max_q >= 2]\n";
        return 2;
    }

    auto t0 = std::chrono::steady_clock::now();
    std::vector<slopes::SurveyRow> serial = slopes::survey_rows_serial(max_q);
    auto t1 = std::chrono::steady_clock::now();
    std::vector<slopes::SurveyRow> parallel = slopes::survey_rows(max_q);
    auto t2 = std::chrono::steady_clock::now();

    std::string a = slopes::survey_csv(serial);
    std::string b = slopes::survey_csv(parallel);
    if (a != b) {
        std::cerr << "mismatch between serial and parallel survey output\n";
        return 1;
    }

    double ts = seconds(t1 - t0), tp = seconds(t2 - t1);
    std::cout << "max_q " << max_q << ": " << serial.size() << " rows\n";
    std::cout << "serial   " << ts << " s\n";
    std::cout << "parallel " << tp << " s (speedup " << (tp > 0 ? ts / tp : 0.0)
              << "x)\n";
    return 0;
}
