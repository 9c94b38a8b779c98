#include <cstdint>
#include <exception>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "commands.hpp"
#include "mdl/solve.hpp"

namespace {

// --budget flag wins over MDL_BUDGET, which wins over the library default.
std::uint64_t resolve_budget(const CLI::Option* flag, std::uint64_t flag_value) {
    if (flag->count() > 0) return flag_value;
    if (const char* env = std::getenv("MDL_BUDGET")) {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
            throw std::runtime_error("MDL_BUDGET is not a number: `" + std::string(env) + "`");
        }
    }
    return mdl::kDefaultNodeBudget;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Johnson/Kneser graph generators and exact metric, strong and doubly "
                 "metric dimension solvers"};
    app.require_subcommand(1);

    std::string source, output, which, mode, theorem, family, invariants;
    std::string gen_format = "edgelist", atlas_format = "csv";
    std::string n_text, k_text;
    std::uint64_t budget_flag = mdl::kDefaultNodeBudget;

    auto* gen = app.add_subcommand("gen", "Emit a graph as a canonical edge list");
    gen->add_option("source", source, "Family spec (J:n,k / K:n,k) or edge-list file")->required();
    gen->add_option("--format", gen_format, "Output format (edgelist)");
    gen->add_option("--output", output, "Output path (default stdout)");

    auto* inv = app.add_subcommand("invariant", "Compute beta, beta_s or psi exactly");
    inv->add_option("which", which, "One of: beta, beta_s, psi")->required();
    inv->add_option("source", source, "Family spec or edge-list file")->required();
    auto* inv_budget = inv->add_option("--budget", budget_flag, "Branch-node budget");

    auto* ver = app.add_subcommand("verify", "Re-check a named identity over a parameter range");
    std::string known;
    for (const auto& id : mdl::cli::verify_ids()) known += (known.empty() ? "" : ", ") + id;
    ver->add_option("theorem", theorem, "One of: " + known)->required();
    ver->add_option("--n", n_text, "Range a..b (or single value) for n");
    ver->add_option("--k", k_text, "Range a..b (or single value) for k");
    auto* ver_budget = ver->add_option("--budget", budget_flag, "Branch-node budget");

    auto* exp = app.add_subcommand("export-lp", "Write an ILP model in LP format");
    exp->add_option("source", source, "Family spec or edge-list file")->required();
    exp->add_option("--mode", mode, "strong or doubly")->required();
    exp->add_option("--output", output, "Output path (`-` for stdout; default derived)");

    auto* atl = app.add_subcommand("atlas", "Sweep a family range and write an invariant CSV");
    atl->add_option("--family", family, "J, K or both")->required();
    atl->add_option("--n", n_text, "Range a..b (or single value) for n")->required();
    atl->add_option("--k", k_text, "Range a..b (or single value) for k")->required();
    atl->add_option("--invariants", invariants, "Comma list of beta,beta_s,psi,diam")->required();
    atl->add_option("--format", atlas_format, "Output format (csv)");
    atl->add_option("--output", output, "Output path (default stdout)");
    auto* atl_budget = atl->add_option("--budget", budget_flag, "Branch-node budget per solve");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : mdl::cli::kExitUsage;
    }

    try {
        if (gen->parsed()) return mdl::cli::cmd_gen(source, gen_format, output);
        if (inv->parsed())
            return mdl::cli::cmd_invariant(which, source, resolve_budget(inv_budget, budget_flag));
        if (ver->parsed()) {
            std::optional<mdl::cli::Range> nr, kr;
            if (!n_text.empty()) nr = mdl::cli::parse_range(n_text);
            if (!k_text.empty()) kr = mdl::cli::parse_range(k_text);
            return mdl::cli::cmd_verify(theorem, nr, kr, resolve_budget(ver_budget, budget_flag));
        }
        if (exp->parsed()) return mdl::cli::cmd_export_lp(source, mode, output);
        if (atl->parsed())
            return mdl::cli::cmd_atlas(family, mdl::cli::parse_range(n_text),
                                       mdl::cli::parse_range(k_text), invariants, atlas_format, output,
                                       resolve_budget(atl_budget, budget_flag));
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return mdl::cli::kExitUsage;
    }
    return mdl::cli::kExitUsage;
}
