#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "slopes/json_io.hpp"
#include "slopes/render.hpp"
#include "slopes/verify.hpp"

namespace {

// Exit codes: 0 ok, 1 verification failure, 2 input error, 3 cap exceeded,
// 4 I/O error.
constexpr int kOk = 0, kVerifyFail = 1, kInputError = 2, kCapExceeded = 3, kIoError = 4;

slopes::Fraction parse_target(const std::string& s) {
    slopes::Fraction f = slopes::Fraction::parse(s);
    if (f.is_infinity() || f.num() <= 0 || f.num() >= f.den())
        throw slopes::bad_fraction("expected a reduced fraction p/q with 0 < p < q");
    // Fraction construction reduces silently; the CLI insists on reduced input.
    auto slash = s.find('/');
    if (slash != std::string::npos && slopes::Int(s.substr(slash + 1)) != f.den())
        throw slopes::bad_fraction("fraction is not reduced: " + s);
    return f;
}

int write_output(const std::string& path, const std::string& content) {
    if (path.empty()) {
        std::cout << content;
        return kOk;
    }
    std::ofstream out(path, std::ios::binary);
    out << content;
    out.flush();
    if (!out) {
        std::cerr << "error: cannot write " << path << "\n";
        return kIoError;
    }
    return kOk;
}

int cmd_info(const std::string& fraction, std::uint64_t cap) {
    slopes::SlopeReport rep = slopes::slope_report(parse_target(fraction), cap);
    std::cout << slopes::to_json(rep).dump(2) << "\n";
    return rep.truncated ? kCapExceeded : kOk;
}

int cmd_survey(std::int64_t max_q, const std::string& format, const std::string& out,
               int jobs, std::uint64_t cap) {
    std::vector<slopes::SurveyRow> rows = slopes::survey_rows(max_q, jobs, cap);
    return write_output(out, format == "json" ? slopes::survey_json(rows)
                                              : slopes::survey_csv(rows));
}

int cmd_verify(std::int64_t max_q, const std::string& suite, bool corrupt_sigma0) {
    slopes::VerifyHooks hooks;
    if (corrupt_sigma0) hooks.sigma0_offset = 1;
    slopes::VerifyResult r;
    if (suite == "lemmas") {
        r = slopes::verify_lemmas(max_q, 10000, 20260826, hooks);
    } else if (suite == "theorems") {
        r = slopes::verify_theorems(max_q);
    } else {
        r = slopes::verify_all(max_q, hooks);
    }
    if (!r.ok) {
        std::cout << "FAIL: " << r.counterexample << "\n";
        return kVerifyFail;
    }
    std::cout << "ok: all identities hold up to q = " << max_q << " (suite " << suite
              << ")\n";
    return kOk;
}

int cmd_render(const std::string& fraction, const std::string& paths,
               const std::string& out) {
    slopes::RenderPaths mode = slopes::RenderPaths::extremes;
    if (paths == "all") mode = slopes::RenderPaths::all;
    if (paths == "even") mode = slopes::RenderPaths::even;
    return write_output(out, slopes::render_svg(parse_target(fraction), mode));
}

int cmd_checkerboard(const std::string& diagram_path, bool mirror) {
    std::ifstream in(diagram_path, std::ios::binary);
    if (!in) {
        std::cerr << "error: cannot read " << diagram_path << "\n";
        return kIoError;
    }
    slopes::json j;
    try {
        in >> j;
    } catch (const slopes::json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInputError;
    }
    slopes::LinkDiagram d = slopes::diagram_from_json(j);
    slopes::CheckerboardSlopes cs = slopes::checkerboard_slopes(d);
    if (mirror) cs = slopes::mirrored(cs);
    slopes::json out = slopes::to_json(cs);
    out["crossings"] = d.crossings.size();
    out["slope_sum_identity"] = slopes::slope_sum_identity(d);
    std::cout << out.dump(2) << "\n";
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"boundary slopes of 2-bridge knot and link exteriors"};
    app.require_subcommand(1);

    std::string fraction, out, format = "csv", suite = "all", paths = "extremes";
    std::string diagram_path;
    std::int64_t max_q = 2;
    int jobs = 0;
    std::uint64_t cap = 1000000;
    bool mirror = false, corrupt_sigma0 = false;

    CLI::App* info = app.add_subcommand("info", "full slope report for one fraction");
    info->add_option("fraction", fraction, "target fraction p/q")->required();
    info->add_option("--cap", cap, "maximum number of paths to enumerate");

    CLI::App* survey = app.add_subcommand("survey", "tabulate slopes for all q <= N");
    survey->add_option("--max-q", max_q, "largest denominator")->required()
        ->check(CLI::Range(std::int64_t(2), std::int64_t(1) << 32));
    survey->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));
    survey->add_option("--out", out, "output file (default stdout)");
    survey->add_option("--jobs", jobs, "worker threads (0 = default)");
    survey->add_option("--cap", cap, "per-fraction enumeration cap");

    CLI::App* verify = app.add_subcommand("verify", "check the slope identities");
    verify->add_option("--max-q", max_q, "largest denominator")->required();
    verify->add_option("--suite", suite)->check(CLI::IsMember({"all", "lemmas", "theorems"}));
    verify->add_flag("--corrupt-sigma0", corrupt_sigma0)->group("");  // test hook, hidden

    CLI::App* render = app.add_subcommand("render", "draw the quad chain as SVG");
    render->add_option("fraction", fraction)->required();
    render->add_option("--paths", paths)->check(CLI::IsMember({"all", "extremes", "even"}));
    render->add_option("--out", out, "output SVG file")->required();

    CLI::App* checker = app.add_subcommand("checkerboard", "checkerboard surface slopes");
    checker->add_option("--diagram", diagram_path, "diagram JSON file")->required();
    checker->add_flag("--mirror", mirror, "mirror image (swap and negate)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kOk : kInputError;
    }

    try {
        if (info->parsed()) return cmd_info(fraction, cap);
        if (survey->parsed()) return cmd_survey(max_q, format, out, jobs, cap);
        if (verify->parsed()) return cmd_verify(max_q, suite, corrupt_sigma0);
        if (render->parsed()) return cmd_render(fraction, paths, out);
        if (checker->parsed()) return cmd_checkerboard(diagram_path, mirror);
    } catch (const slopes::enumeration_cap_exceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kCapExceeded;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInputError;
    } catch (const std::logic_error& e) {
        std::cerr << "verification failure: " << e.what() << "\n";
        return kVerifyFail;
    } catch (const std::ios_base::failure& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kIoError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInputError;
    }
    return kInputError;
}
