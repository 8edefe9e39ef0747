// greyrank: interval grey relation decision making from the command line.
//
//   greyrank rank <file> [--stage S] [--format text|json] [--rho R]
//                 [--theta-plus T] [--borda-weights w1,w2,w3]
//                 [--methods topsis,incidence,entropy] [--out PATH]
//   greyrank whatif <file> --set "A2.G3=[6.5,7.5]" [--set ...] [same options]
//
// Exit codes: 0 success, 1 validation error, 2 computation error.

#include "greyrank/errors.hpp"
#include "greyrank/io.hpp"
#include "greyrank/pipeline.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

namespace {

constexpr int kExitValidation = 1;
constexpr int kExitComputation = 2;

struct Options {
    std::string input;
    std::string stage = "all";
    std::string format = "text";
    std::string out;
    std::vector<std::string> methods;
    std::vector<double> borda_weights;
    std::vector<std::string> overrides;
    std::optional<double> rho;
    std::optional<double> theta_plus;
};

void add_common(CLI::App* cmd, Options& o) {
    cmd->add_option("file", o.input, "Problem file (JSON) or an earlier report")->required();
    cmd->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));
    cmd->add_option("--rho", o.rho, "Incidence resolution coefficient in (0,1)");
    cmd->add_option("--theta-plus", o.theta_plus, "Positive-ideal preference coefficient; theta- = 1 - theta+");
    cmd->add_option("--borda-weights", o.borda_weights, "Borda weights for topsis,incidence,entropy")
        ->delimiter(',')
        ->expected(3);
    cmd->add_option("--methods", o.methods, "Subset of topsis,incidence,entropy")->delimiter(',');
    cmd->add_option("--out", o.out, "Write output to PATH instead of stdout");
}

greyrank::RunConfig make_config(const Options& o) {
    greyrank::RunConfig c;
    c.input_path = o.input;
    c.format = o.format == "json" ? greyrank::OutputFormat::Json : greyrank::OutputFormat::Text;
    c.stage = greyrank::parse_stage(o.stage);
    if (!o.methods.empty()) {
        c.methods.clear();
        for (const auto& m : o.methods)
            c.methods.push_back(greyrank::parse_method(m));
    }
    c.overrides = o.overrides;
    c.rho = o.rho;
    c.theta_plus = o.theta_plus;
    if (!o.borda_weights.empty())
        c.borda_weights = std::array<double, 3>{o.borda_weights[0], o.borda_weights[1], o.borda_weights[2]};
    return c;
}

void emit(const std::string& text, const std::string& path) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw greyrank::ValidationError("cannot open output file '" + path + "'");
    out << text;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Hybrid grey interval relation multi-attribute decision making"};
    app.require_subcommand(1);

    Options opts;
    auto* rank = app.add_subcommand("rank", "Run the pipeline on a decision problem");
    add_common(rank, opts);
    rank->add_option("--stage", opts.stage, "Last stage to run")
        ->check(CLI::IsMember({"normalize", "weights", "rank", "all"}));

    auto* whatif = app.add_subcommand("whatif", "Compare a baseline run against a perturbed one");
    add_common(whatif, opts);
    whatif->add_option("--set", opts.overrides, "Override, e.g. A2.G3=[6.5,7.5], q.A1=[0.5,0.7], expert1=[...]")
        ->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitValidation;
    }

    try {
        const auto config = make_config(opts);
        std::string output;
        if (rank->parsed()) {
            const auto report = greyrank::run(config);
            output = config.format == greyrank::OutputFormat::Json ? greyrank::dump_json(greyrank::to_json(report))
                                                                    : greyrank::render_text(report);
        } else {
            const auto result = greyrank::whatif(config);
            output = config.format == greyrank::OutputFormat::Json ? greyrank::dump_json(greyrank::to_json(result))
                                                                    : greyrank::render_text(result);
        }
        emit(output, opts.out);
        return 0;
    } catch (const greyrank::ValidationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitValidation;
    } catch (const greyrank::ComputationError& e) {
        std::cerr << "computation error: " << e.what() << '\n';
        return kExitComputation;
    }
}
