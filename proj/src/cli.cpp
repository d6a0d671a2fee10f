#include "outext/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>

#include "outext/errors.hpp"
#include "outext/extengine.hpp"
#include "outext/liechar.hpp"
#include "outext/render.hpp"

#include "CLI11.hpp"

namespace outext {

namespace {

const Partition kTwo = Partition::parse("2");
const Partition kOneCubed = Partition::parse("1,1,1");

std::vector<std::string> env_data_files() {
    const char* dir = std::getenv("OUTEXT_DATA");
    if (!dir || !*dir) return {};
    namespace fs = std::filesystem;
    if (!fs::is_directory(dir))
        throw load_error("OUTEXT_DATA='" + std::string(dir) + "' is not a directory");
    std::vector<std::string> files;
    for (auto& entry : fs::directory_iterator(dir))
        if (entry.is_regular_file() && entry.path().extension() == ".mult")
            files.push_back(entry.path().string());
    std::sort(files.begin(), files.end());
    return files;
}

/// Degrees 0..d must be fully covered; names the first gap otherwise.
void require_coverage(const MultTable& t, int d) {
    for (int m = 0; m <= d; ++m)
        for (auto& lambda : generate_partitions(m))
            if (!t.row_complete(lambda))
                throw coverage_error("dataset coverage stops before degree " +
                                     std::to_string(m) + " (row " +
                                     lambda.to_text() + " incomplete)");
}

}  // namespace

MultTable load_tables(const RunConfig& cfg) {
    std::vector<MultTable> parts;
    parts.push_back(builtin_table(std::max(cfg.max_degree, 2)));
    for (auto& path : env_data_files())
        parts.push_back(load_mult_file(path, Provenance::dataset));
    for (auto& path : cfg.data_paths)
        parts.push_back(load_mult_file(path, Provenance::dataset));
    return merge_and_validate(parts);
}

int cmd_ext2(const RunConfig& cfg, int n, std::ostream& out) {
    if (n < 2) throw usage_error("ext2 needs --n >= 2");
    RunConfig load_cfg = cfg;
    load_cfg.max_degree = std::max(cfg.max_degree, n);
    MultTable table = load_tables(load_cfg);
    require_coverage(table, n);
    Ext2Result result = compute_ext2_table(n, table);
    if (cfg.format == RunConfig::csv) {
        out << render_birep_csv(result.birep);
    } else {
        out << "ext2 n=" << n << " : " << render_birep(result.birep) << "\n";
        out << "dimension : " << result.total_dim << "\n";
    }
    return 0;
}

int cmd_recursion(const RunConfig& cfg, std::ostream& out) {
    MultTable table = load_tables(cfg);
    require_coverage(table, cfg.max_degree);
    auto policy = cfg.strict ? ContradictionPolicy::halt_on_first
                             : ContradictionPolicy::record_and_continue;
    RecursionResult result = run_koszul_recursion(cfg.max_degree, table, policy);
    for (auto& report : result.reports) out << report.render();
    out << "contradictions : " << result.reports.size() << "\n";
    out << "skipped rows : " << result.skipped.size() << "\n";
    if (cfg.cache_path) {
        std::ofstream cache(*cfg.cache_path);
        if (!cache) throw load_error("cannot write '" + *cfg.cache_path + "'");
        serialize(result.table, cache);
    }
    return result.reports.empty() ? 0 : 2;
}

int cmd_diagram(const RunConfig& cfg, int nu_size, int lambda_size,
                std::ostream& out) {
    if (nu_size < 0 || lambda_size < 0)
        throw usage_error("diagram needs nonnegative sizes");
    E1Support support = e1_support(nu_size, lambda_size);
    out << (cfg.svg ? diagram_svg(support) : diagram_ascii(support));
    return 0;
}

int cmd_validate(const RunConfig& cfg, std::ostream& out) {
    MultTable table = load_tables(cfg);
    bool failed = false;
    auto line = [&](const std::string& name, bool ok, const std::string& why = "") {
        out << "check " << name << ": " << (ok ? "pass" : "fail");
        if (!ok && !why.empty()) out << ": " << why;
        out << "\n";
        if (!ok) failed = true;
    };

    // Table shape invariants. Inserts already reject violations, so these
    // re-scan the merged table as an end-to-end battery.
    bool diagonal_ok = true, zeros_ok = true, nonneg_ok = true, hooks_ok = true;
    for (auto& [key, cell] : table.entries()) {
        auto& [lambda, rho] = key;
        if (auto forced = MultTable::structural_value(lambda, rho)) {
            bool ok = cell.value == *forced;
            if (rho.size() == lambda.size())
                diagonal_ok &= ok;
            else
                zeros_ok &= ok;
        }
        nonneg_ok &= cell.value >= 0;
        if (!lambda.empty() && lambda.parts()[0] == 1) {
            auto family = hook_family(lambda.size());
            bool member =
                std::find(family.begin(), family.end(), rho) != family.end();
            hooks_ok &= cell.value == (member ? 1 : 0);
        }
    }
    line("diagonal", diagonal_ok);
    line("structural-zeros", zeros_ok);
    line("nonnegative", nonneg_ok);
    line("hook-rows", hooks_ok);

    int coverage = table.coverage_degree();
    out << "coverage degree : " << coverage << "\n";

    if (coverage < 3) {
        out << "check cyclic-restriction: skipped: dataset absent\n";
    } else {
        for (int n = 3; n <= coverage; ++n) {
            RestrictionReport report = verify_cyclic_restriction(table, n);
            line("cyclic-restriction n=" + std::to_string(n), report.pass,
                 report.message);
        }
    }

    A2Report a2 = verify_a2_vanishing(table, std::max(coverage, 4));
    if (a2.max_checked < 4) {
        out << "check square-column: skipped: dataset absent\n";
    } else {
        std::string why;
        for (auto& f : a2.failures) why += (why.empty() ? "" : "; ") + f;
        line("square-column", a2.pass, why);
    }
    return failed ? 1 : 0;
}

int cmd_invert(const RunConfig& cfg, std::ostream& out) {
    MultTable table = load_tables(cfg);
    require_coverage(table, cfg.max_degree);
    RecursionResult run = run_koszul_recursion(cfg.max_degree, table);
    if (!run.reports.empty())
        throw invariant_error("cannot invert: contradiction at (" +
                              run.reports.front().nu.to_text() + " ; " +
                              run.reports.front().lambda.to_text() + ")");
    MultTable recovered = invert_for_multiplicities(run.table, cfg.max_degree);
    serialize(recovered, out);
    return 0;
}

int cmd_lie_check(const RunConfig& cfg, std::ostream& out) {
    MultTable table = load_tables(cfg);
    bool failed = false;
    for (int n = 3; n <= cfg.max_degree; ++n) {
        bool covered = true;
        for (auto& lambda : generate_partitions(n))
            if (!table.query(lambda, kTwo).is_known() ||
                !table.query(lambda, kOneCubed).is_known())
                covered = false;
        if (!covered) {
            out << "lie-check n=" << n << ": skipped: dataset absent\n";
            continue;
        }
        bool columns_equal = true;
        for (auto& lambda : generate_partitions(n))
            if (table.at(lambda, kTwo) != table.at(lambda, kOneCubed))
                columns_equal = false;
        RestrictionReport report = verify_cyclic_restriction(table, n);
        bool ok = report.pass && columns_equal;
        out << "lie-check n=" << n << ": " << (ok ? "pass" : "fail");
        if (!report.pass) out << ": " << report.message;
        if (!columns_equal) out << ": columns (2) and (1,1,1) differ";
        out << "\n";
        if (!ok) failed = true;
    }
    return failed ? 1 : 0;
}

int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err) {
    CLI::App app{"Exact Ext computations between polynomial outer functors"};
    app.require_subcommand(1);

    RunConfig cfg;
    std::string format = "human";
    app.add_option("--data", cfg.data_paths, "multiplicity data file (repeatable)")
        ->check(CLI::ExistingFile);
    app.add_option("--format", format, "human|csv")
        ->check(CLI::IsMember({"human", "csv"}));
    app.add_option("--cache", cfg.cache_path, "ext cache output path");

    int n = 2, nu_size = 0, lambda_size = 0;
    auto* ext2 = app.add_subcommand("ext2", "Ext^2 decomposition at one degree");
    ext2->add_option("--n", n, "target degree")->required();

    auto* recursion = app.add_subcommand("recursion", "run the Koszul recursion");
    recursion->add_option("--max", cfg.max_degree, "maximum degree")->required();
    recursion->add_flag("--strict", cfg.strict, "halt on first contradiction");

    auto* diagram = app.add_subcommand("diagram", "first-page support diagram");
    diagram->add_option("--nu", nu_size, "source degree")->required();
    diagram->add_option("--lambda", lambda_size, "target degree")->required();
    diagram->add_flag("--svg", cfg.svg, "emit SVG instead of ASCII");

    auto* validate = app.add_subcommand("validate", "run the invariant battery");
    validate->add_option("--max", cfg.max_degree, "builtin degree bound");

    auto* invert = app.add_subcommand("invert", "recover multiplicities from ext");
    invert->add_option("--max", cfg.max_degree, "maximum degree")->required();

    auto* lie = app.add_subcommand("lie-check", "cyclic Lie consistency checks");
    lie->add_option("--max", cfg.max_degree, "maximum degree")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return 0;
        }
        err << "error: usage: " << e.what() << "\n";
        return 1;
    }

    try {
        cfg.format = format == "csv" ? RunConfig::csv : RunConfig::human;
        if (ext2->parsed()) return cmd_ext2(cfg, n, out);
        if (recursion->parsed()) return cmd_recursion(cfg, out);
        if (diagram->parsed()) return cmd_diagram(cfg, nu_size, lambda_size, out);
        if (validate->parsed()) return cmd_validate(cfg, out);
        if (invert->parsed()) return cmd_invert(cfg, out);
        if (lie->parsed()) return cmd_lie_check(cfg, out);
        err << "error: usage: no subcommand\n";
        return 1;
    } catch (const Error& e) {
        err << e.diagnostic() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "error: internal: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace outext
