// Command-line driver: pwsyn <subcommand> --config cfg.json [--out path] [--format json|csv] [--oracle] [--seed u64]
//
// Exit codes: 0 success, 1 other failure (including failed verification),
// 2 parse errors, 3 empty sets or missing mandatory certificates.

#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "pwsyn/experiments.hpp"

namespace {

using pwsyn::json;

int exit_code_for(const std::exception& e) {
    if (dynamic_cast<const pwsyn::ParseError*>(&e) || dynamic_cast<const nlohmann::json::exception*>(&e)) return 2;
    if (dynamic_cast<const pwsyn::EmptySet*>(&e) || dynamic_cast<const pwsyn::Infeasible*>(&e) || dynamic_cast<const pwsyn::NoRow*>(&e))
        return 3;
    return 1;
}

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw pwsyn::ParseError("cannot open " + path);
    try {
        return json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw pwsyn::ParseError(path + ": " + e.what());
    }
}

void emit(const json& report, const std::string& out, const std::string& format) {
    std::ofstream file;
    if (!out.empty()) {
        file.open(out, std::ios::binary);
        if (!file) throw std::runtime_error("cannot write " + out);
    }
    std::ostream& os = out.empty() ? std::cout : file;
    if (format == "csv") {
        pwsyn::write_report_csv(os, report);
    } else {
        os << report.dump(2) << '\n';
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Windowed piecewise-syndetic and polynomial recurrence experiments"};
    app.require_subcommand(1);

    std::string config, out, format = "json";
    bool oracle = false;
    std::optional<std::uint64_t> seed;

    using Runner = std::function<json(const json&, const pwsyn::RunContext&)>;
    const std::map<std::string, std::pair<std::string, Runner>> commands{
        {"analyze", {"Gap, syndeticity, longest run, pws witness and progression search on one set", pwsyn::cmd_analyze}},
        {"thma", {"Combinatorial set on a box with a 2D pws witness inside the validity mask", pwsyn::cmd_thma}},
        {"thmb", {"Shift covers a_N for a pws target set", pwsyn::cmd_thmb}},
        {"returns", {"Polynomial return-time set of an explicit system", pwsyn::cmd_returns}},
        {"induced", {"Recurrence times of the induced block sequence", pwsyn::cmd_induced}},
        {"nilcheck", {"Heisenberg return-set gap stability across windows", pwsyn::cmd_nilcheck}},
    };

    std::string chosen;
    for (const auto& [name, entry] : commands) {
        auto* sub = app.add_subcommand(name, entry.first);
        if (name == "nilcheck")
            sub->add_option("--config", config, "Experiment config (JSON); defaults apply when omitted");
        else
            sub->add_option("--config", config, "Experiment config (JSON)")->required();
        sub->add_option("--out", out, "Output file (default stdout)");
        sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv"}));
        sub->add_flag("--oracle", oracle, "Cross-check against the modular arithmetic oracle when applicable");
        sub->add_option("--seed", seed, "Seed for randomized set sources");
        sub->callback([&chosen, n = name] { chosen = n; });
    }
    auto* verify = app.add_subcommand("verify", "Re-check every certificate in a report using only the report");
    verify->add_option("report,--config", config, "Report JSON produced by another subcommand")->required();
    verify->add_option("--out", out, "Output file (default stdout)");
    verify->callback([&chosen] { chosen = "verify"; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (chosen == "verify") {
            const json result = pwsyn::cmd_verify(read_json_file(config));
            emit(result, out, "json");
            return result.at("all_ok").get<bool>() ? 0 : 1;
        }
        json cfg = config.empty() ? json::object() : read_json_file(config);
        pwsyn::RunContext ctx;
        ctx.oracle = oracle;
        if (!config.empty()) ctx.base_dir = std::filesystem::path(config).parent_path();
        if (seed) ctx.seed = *seed;
        else if (cfg.contains("seed")) ctx.seed = cfg.at("seed").get<std::uint64_t>();
        emit(commands.at(chosen).second(cfg, ctx), out, format);
        return 0;
    } catch (const std::exception& e) {
        const int rc = exit_code_for(e);
        const json err{{"error", e.what()}, {"exit_code", rc}, {"experiment", chosen}};
        std::cerr << err.dump() << '\n';
        if (!out.empty() && format == "json") {
            std::ofstream file(out);
            file << err.dump(2) << '\n';
        }
        return rc;
    }
}
