#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>

#include "pointed/cli.hpp"

namespace {

struct Input {
    std::string text;
    std::string source;
};

Input read_input(const std::string& path) {
    std::ostringstream os;
    if (path == "-") {
        os << std::cin.rdbuf();
        return {os.str(), "<stdin>"};
    }
    std::ifstream in(path);
    if (!in) throw pointed::Error(pointed::ErrorKind::Parse, path + ": cannot open file");
    os << in.rdbuf();
    return {os.str(), path};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Finite-dimensional pointed Hopf algebras over abelian groups: data, Nichols algebras and liftings"};
    app.require_subcommand(1);
    app.fallthrough();

    pointed::CliOptions opt;
    std::string format = "kv";
    std::string path = "-";
    std::size_t max_degree = 0;

    app.add_option("--budget", opt.exec.budget, "Largest linear problem or enumeration size attempted")->capture_default_str();
    app.add_option("--threads", opt.exec.threads, "Worker threads (0 = hardware concurrency)")->capture_default_str();
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"kv", "json"}))->capture_default_str();

    auto add_input = [&](CLI::App* sub) { sub->add_option("input", path, "Datum file, or - for stdin")->capture_default_str(); };
    auto* check = app.add_subcommand("check", "Validate a datum and describe its braiding, Cartan matrix and root system");
    add_input(check);
    auto* nichols = app.add_subcommand("nichols", "Graded dimensions of the Nichols algebra against the PBW series");
    add_input(nichols);
    nichols->add_option("--max-degree", max_degree, "Highest degree computed (default: top PBW degree + 1)");
    auto* lift = app.add_subcommand("lift", "Dimension of the lifted algebra against the product formula");
    add_input(lift);
    lift->add_option("--max-degree", max_degree, "Degree cap of the truncation (default: top PBW degree + 2)");
    auto* hyp = app.add_subcommand("hypotheses", "Which standing hypotheses hold for a datum");
    add_input(hyp);
    std::int64_t hyp_p = 0;
    hyp->add_option("--p", hyp_p, "Prime p for the applicability check");
    auto* link = app.add_subcommand("link", "Linkable pairs, validity of the given linking and all linkings");
    add_input(link);
    auto* enumerate = app.add_subcommand("enumerate", "Enumerate data over (Z/p)^s");
    std::int64_t p = 0;
    enumerate->add_option("--p", p, "Prime p")->required();
    enumerate->add_option("--s", opt.s, "Rank s of the group")->capture_default_str();
    enumerate->add_option("--theta-max", opt.theta_max, "Largest number of vertices")->capture_default_str();
    enumerate->add_option("--types", opt.types, "Keep only these Dynkin types, e.g. A_2 or \"A_1 x A_1\"")->delimiter(',');
    enumerate->add_flag("--links", opt.links, "Also count linking data");

    CLI11_PARSE(app, argc, argv);

    if (max_degree > 0) opt.max_degree = max_degree;
    pointed::CommandResult result;
    if (*enumerate) {
        opt.p = p;
        result = pointed::cmd_enumerate(opt);
    } else {
        if (*hyp && hyp_p > 0) opt.p = hyp_p;
        Input in;
        try {
            in = read_input(path);
        } catch (const pointed::Error& e) {
            result.report.add("status", "error");
            result.report.add("error.kind", pointed::to_string(e.kind()));
            result.report.add("error.message", e.what());
            result.exit_code = pointed::exit_code(e.kind());
            std::cout << result.report.render(format);
            return result.exit_code;
        }
        if (*check) result = pointed::cmd_check(in.text, in.source, opt);
        else if (*nichols) result = pointed::cmd_nichols(in.text, in.source, opt);
        else if (*lift) result = pointed::cmd_lift(in.text, in.source, opt);
        else if (*hyp) result = pointed::cmd_hypotheses(in.text, in.source, opt);
        else result = pointed::cmd_link(in.text, in.source, opt);
    }
    std::cout << result.report.render(format);
    if (result.exit_code != 0 && result.report.has("error.message")) std::cerr << "error: " << result.report.get("error.message") << "\n";
    return result.exit_code;
}
