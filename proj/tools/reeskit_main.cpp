#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "reeskit/cli.hpp"

namespace {

struct CommonArgs {
    std::vector<reeskit::Exp> numbers;
    std::string ideal;
    std::string format;
    std::string output;
};

void add_common(CLI::App* cmd, CommonArgs& args, const std::string& defaultFormat,
                bool takesParams = true) {
    if (takesParams) {
        cmd->add_option("numbers", args.numbers,
                        "parameters d1 d2 u1 u2 (or d u with --plane)")
            ->expected(-1);
        cmd->add_option("--ideal", args.ideal, "ideal as \"m1,m2,m3\" over T0,T1");
    }
    args.format = defaultFormat;
    cmd->add_option("--format", args.format, "output format")->capture_default_str();
    cmd->add_option("--output,-o", args.output, "write the artifact to a file");
}

int emit(const reeskit::RunResult& res, const std::string& outputPath) {
    if (!res.error.empty()) std::cerr << "error: " << res.error << "\n";
    if (!res.output.empty()) {
        if (outputPath.empty()) {
            std::cout << res.output;
        } else {
            std::ofstream f(outputPath, std::ios::binary);
            if (!f) {
                std::cerr << "error: cannot open " << outputPath << "\n";
                return 2;
            }
            f << res.output;
        }
    }
    return res.exitCode;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Rees ideals of tri-generated monomial ideals in two variables: "
                 "minimal generators, Rees graph, Groebner basis, free resolution, "
                 "brute-force verification"};
    app.require_subcommand(1);

    struct Cmd {
        CLI::App* cli;
        reeskit::Subcommand sub;
        CommonArgs args;
        bool plane = false;
        bool augmented = false;
        bool minimal = false;
        reeskit::Exp tbound = 0;
        reeskit::Exp dmax = 0;
        std::string checks = "full";
    };
    std::vector<std::unique_ptr<Cmd>> cmds;

    auto add = [&](const std::string& name, const std::string& desc,
                   const std::string& defaultFormat, bool takesParams = true) -> Cmd& {
        auto cmd = std::make_unique<Cmd>();
        cmd->cli = app.add_subcommand(name, desc);
        cmd->sub = reeskit::parse_subcommand(name);
        add_common(cmd->cli, cmd->args, defaultFormat, takesParams);
        cmds.push_back(std::move(cmd));
        return *cmds.back();
    };

    auto& gens = add("gens", "minimal generating set of the Rees ideal", "text");
    gens.cli->add_flag("--plane", gens.plane, "equigenerated case, inputs d u");
    auto& trace = add("trace", "algorithm trace table", "text");
    trace.cli->add_flag("--plane", trace.plane, "equigenerated case, inputs d u");
    auto& graph = add("graph", "Rees graph", "dot");
    graph.cli->add_flag("--augmented", graph.augmented, "augment with the node g0");
    add("gb", "minimal Groebner basis under the block order", "text");
    add("colon", "minimal generators of the colon ideals M_j", "text");
    auto& resolution = add("resolution", "free resolution matrices", "text");
    resolution.cli->add_flag("--minimal", resolution.minimal, "minimalize the resolution");
    add("betti", "Betti numbers and projective dimension", "text");
    auto& verify = add("verify", "run every oracle check on one parameter set", "text");
    verify.cli->add_option("--tbound", verify.tbound, "brute-force layer bound override");
    auto& sweep = add("sweep", "verify a whole parameter grid", "text", false);
    sweep.cli->add_option("--dmax", sweep.dmax, "upper bound for d1 and d2")->required();
    sweep.cli->add_option("--checks", sweep.checks, "counts|full")->capture_default_str();
    sweep.cli->add_option("--tbound", sweep.tbound, "brute-force layer bound override");

    CLI11_PARSE(app, argc, argv);

    for (const auto& cmd : cmds) {
        if (!cmd->cli->parsed()) continue;
        reeskit::Invocation inv;
        inv.subcommand = cmd->sub;
        inv.numbers = cmd->args.numbers;
        inv.idealString = cmd->args.ideal;
        inv.plane = cmd->plane;
        inv.augmented = cmd->augmented;
        inv.minimal = cmd->minimal;
        inv.tbound = cmd->tbound;
        inv.dmax = cmd->dmax;
        if (cmd->checks == "counts")
            inv.countsOnly = true;
        else if (cmd->checks != "full") {
            std::cerr << "error: --checks must be counts or full\n";
            return 2;
        }
        try {
            inv.format = reeskit::parse_format(cmd->args.format);
        } catch (const std::exception& e) {
            std::cerr << "error: " << e.what() << "\n";
            return 2;
        }
        return emit(reeskit::run(inv), cmd->args.output);
    }
    return 2;
}
