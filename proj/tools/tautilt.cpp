#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>

#include "CLI11.hpp"
#include "tau/catalog.hpp"

namespace fs = std::filesystem;
using namespace tau;

namespace {

constexpr int exit_ok = 0, exit_fail = 1, exit_usage = 2;

struct Args {
    std::string pair, block = "principal", side = "sub", out = ".";
    unsigned field_degree = 0;  // 0: the entry's default
    std::uint64_t seed = 0;
    std::size_t max_vertices = 10000;
};

void add_common(CLI::App* cmd, Args& a)
{
    cmd->add_option("--pair", a.pair, "catalog entry")->required();
    cmd->add_option("--block", a.block, "principal or 'index N'");
    cmd->add_option("--field-degree", a.field_degree, "work over F_{p^m}")->check(CLI::Range(1u, 12u));
    cmd->add_option("--seed", a.seed, "seed for random modules");
    cmd->add_option("--max-vertices", a.max_vertices, "enumeration limit");
    cmd->add_option("--out", a.out, "output directory");
}

int usage_error(const std::string& msg, const CLI::App& app)
{
    std::cerr << "error: " << msg << "\n" << app.help();
    return exit_usage;
}

void write_file(const fs::path& p, const std::string& text)
{
    fs::create_directories(p.parent_path().empty() ? fs::path(".") : p.parent_path());
    std::ofstream f(p);
    if (!f)
        throw std::runtime_error("cannot write " + p.string());
    f << text;
}

int cmd_catalog()
{
    std::cout << std::left << std::setw(10) << "name" << std::setw(3) << "p" << std::setw(3) << "m"
              << std::setw(13) << "quotient" << std::setw(5) << "sub" << std::setw(7) << "super"
              << "note\n";
    for (auto& e : catalog())
        std::cout << std::left << std::setw(10) << e.name << std::setw(3) << e.p << std::setw(3) << e.m
                  << std::setw(13) << to_string(e.meta.kind) << std::setw(5) << e.expected_sub << std::setw(7)
                  << e.expected_super << e.note << "\n";
    return exit_ok;
}

int cmd_enumerate(const CatalogEntry& e, const RunOptions& opt, bool super, const fs::path& out)
{
    EnumerateResult r = run_enumerate(e, super, opt);
    for (auto& ev : r.events)
        std::cerr << "event: " << ev << "\n";
    write_file(out / (r.stem + ".hasse.json"), to_json(r.summary));
    write_file(out / (r.stem + ".hasse.dot"), to_dot(r.summary, "hasse"));
    std::cout << r.quiver.vertices.size() << "\n";
    std::cerr << r.quiver.arrows.size() << " arrows\n";
    if (!r.quiver.complete) {
        std::cerr << "incomplete: max-vertices reached\n";
        return exit_fail;
    }
    return exit_ok;
}

int cmd_verify(const CatalogEntry& e, const RunOptions& opt, const fs::path& out)
{
    Report r = run_verify(e, opt);
    fs::path path = out / (e.name + ".report.json");
    write_file(path, r.to_json() + "\n");
    for (auto& ev : r.events)
        std::cout << "event: " << ev << "\n";
    if (r.ok()) {
        std::cout << "verify " << e.name << ": all " << r.checks.size() << " checks passed (" << path.string()
                  << ")\n";
        return exit_ok;
    }
    std::cout << "verify " << e.name << ": failing checks:";
    for (auto& name : r.failures())
        std::cout << " " << name;
    std::cout << "\n";
    return exit_fail;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"support tau-tilting pairs of group algebra blocks"};
    app.require_subcommand(1);
    Args a;
    auto* en = app.add_subcommand("enumerate", "count support tau-tilting pairs of a block");
    add_common(en, a);
    en->add_option("--side", a.side, "sub (G) or super (G~)")->check(CLI::IsMember({"sub", "super"}));
    auto* ve = app.add_subcommand("verify", "check the induction theorems on a catalog pair");
    add_common(ve, a);
    app.add_subcommand("catalog", "list catalog entries");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_usage;
    }

    if (app.got_subcommand("catalog"))
        return cmd_catalog();

    const CatalogEntry* e = find_entry(a.pair);
    if (!e)
        return usage_error("unknown pair '" + a.pair + "'; see 'tautilt catalog'", app);
    RunOptions opt;
    try {
        opt.block = parse_block(a.block);
    } catch (const std::invalid_argument& x) {
        return usage_error(x.what(), app);
    }
    opt.field_degree = a.field_degree ? a.field_degree : e->m;
    opt.seed = a.seed;
    opt.max_vertices = a.max_vertices;

    try {
        if (app.got_subcommand("enumerate"))
            return cmd_enumerate(*e, opt, a.side == "super", a.out);
        return cmd_verify(*e, opt, a.out);
    } catch (const std::out_of_range& x) {
        return usage_error(x.what(), app);
    } catch (const std::exception& x) {
        std::cerr << "error: " << x.what() << "\n";
        return exit_fail;
    }
}
