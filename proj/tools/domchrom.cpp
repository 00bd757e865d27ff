// Command-line front end: solve/verify single instances, generate families,
// and run the verification campaigns.
//
// Exit codes: 0 = completed and everything checked held, 1 = counterexample
// or verification failure, 2 = usage or input error.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "domchrom/closed_forms.hpp"
#include "domchrom/error.hpp"
#include "domchrom/generators.hpp"
#include "domchrom/harness.hpp"
#include "domchrom/io.hpp"
#include "domchrom/solver.hpp"

using namespace domchrom;
using nlohmann::json;

namespace {

struct Globals {
    int jobs = default_jobs();
    std::string format;
    std::string output;
    std::uint64_t seed = 1;
    std::uint64_t budget = 0;

    CampaignOptions campaign() const
    {
        CampaignOptions opts;
        opts.jobs = jobs;
        if (budget > 0)
            opts.solve.node_budget = budget;
        return opts;
    }
};

void emit(const Globals& g, const std::string& text)
{
    if (g.output.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(g.output, std::ios::binary);
    if (!out)
        throw Error(ErrorKind::ParseError, "cannot write " + g.output);
    out << text;
}

int emit_report(const Globals& g, const Report& report, bool failures_matter = true)
{
    emit(g, g.format == "csv" ? to_csv_text(report) : to_json_text(report));
    std::cerr << report.campaign << ": " << report.summary.at("instances") << " instances, "
              << report.counterexample_count() << " counterexamples\n";
    return failures_matter && !report.holds() ? 1 : 0;
}

std::string certificate_text(const OrientedTree& t, const DominatorCertificate& cert)
{
    std::ostringstream out;
    out << "# vertex color witness\n";
    for (Vertex v = 0; v < t.size(); ++v) {
        out << v << ' ' << cert.coloring[v] << ' ';
        if (cert.witness[v].kind == Witness::Kind::SinkExempt)
            out << "sink";
        else
            out << cert.witness[v].color;
        out << '\n';
    }
    return out.str();
}

int run_solve(const Globals& g, const std::string& file)
{
    const OrientedTree t = read_tree_file(file);
    SolveOptions opts;
    if (g.budget > 0)
        opts.node_budget = g.budget;
    const SolveResult r = solve_exact(t, opts);
    if (g.format == "json") {
        json j = {{"tree", encode(t)},
                  {"chi", r.chi},
                  {"certificate", to_json(r.certificate)},
                  {"stats",
                   {{"nodes", r.stats.nodes},
                    {"prunes_proper", r.stats.prunes_proper},
                    {"prunes_domination", r.stats.prunes_domination},
                    {"prunes_singleton", r.stats.prunes_singleton},
                    {"max_depth", r.stats.max_depth}}}};
        emit(g, j.dump(1) + "\n");
    } else {
        emit(g, "chi " + std::to_string(r.chi) + "\n" + certificate_text(t, r.certificate));
    }
    return 0;
}

int run_verify(const Globals& g, const std::string& tree_file, const std::string& coloring_file)
{
    const OrientedTree t = read_tree_file(tree_file);
    const Coloring c = read_coloring_file(coloring_file, t.size());
    const Verification v = verify_dominator(t, c);
    if (g.format == "json") {
        json j = {{"tree", encode(t)}, {"valid", v.ok()}};
        if (v.ok()) {
            j["certificate"] = to_json(*v.certificate);
        } else {
            j["violations"] = json::array();
            for (const auto& x : v.violations)
                j["violations"].push_back(to_json(x));
        }
        emit(g, j.dump(1) + "\n");
    } else if (v.ok()) {
        emit(g, "valid " + std::to_string(c.num_colors()) + " colors\n" +
                    certificate_text(t, *v.certificate));
    } else {
        std::ostringstream out;
        out << "invalid\n";
        for (const auto& x : v.violations) {
            if (x.kind == Violation::Kind::ImproperEdge)
                out << "ImproperEdge " << x.arc.tail << ' ' << x.arc.head << '\n';
            else
                out << "NoDominatedClass " << x.vertex << '\n';
        }
        emit(g, out.str());
    }
    return v.ok() ? 0 : 1;
}

struct GenArgs {
    std::string family;
    std::vector<int> params;
    std::string emit = "edges";
    std::string scheme = "out";
    std::uint64_t mask = 0;
    std::uint64_t leg_mask = 0;
    std::vector<std::string> legs;
};

int param(const GenArgs& a, std::size_t i, const char* name)
{
    if (i >= a.params.size())
        throw CLI::ValidationError("gen " + a.family, std::string("missing parameter ") + name);
    return a.params[i];
}

int run_gen(const Globals& g, const GenArgs& a)
{
    OrientedTree t = OrientedTree::build(1, {});
    if (a.family == "path") {
        t = orient(path(param(a, 0, "N")), a.mask);
    } else if (a.family == "star") {
        t = star(param(a, 0, "M"), a.mask);
    } else if (a.family == "gs") {
        GsSpec spec{param(a, 0, "M"), param(a, 1, "K"), GsScheme::OutRootCenter, a.mask};
        if (a.scheme == "in")
            spec.scheme = GsScheme::InRootCenter;
        else if (a.scheme == "layered")
            spec.scheme = GsScheme::Layered;
        else if (a.scheme == "mask")
            spec.scheme = GsScheme::Mask;
        else if (a.scheme != "out")
            throw CLI::ValidationError("--scheme", "expected out|in|layered|mask");
        t = gs(spec);
    } else if (a.family == "caterpillar") {
        CaterpillarSpec spec;
        spec.spine_len = param(a, 0, "SPINE");
        spec.spine_mask = a.mask;
        spec.leg_mask = a.leg_mask;
        for (const auto& item : a.legs) {
            const auto colon = item.find(':');
            if (colon == std::string::npos)
                throw CLI::ValidationError("--legs", "expected INDEX:COUNT, got " + item);
            spec.legs.push_back({std::stoi(item.substr(0, colon)), std::stoi(item.substr(colon + 1))});
        }
        t = caterpillar(spec);
    } else if (a.family == "random") {
        t = orient(random_tree(param(a, 0, "N"), g.seed), a.mask);
    } else {
        throw CLI::ValidationError("gen", "unknown family '" + a.family +
                                              "' (path, star, gs, caterpillar, random)");
    }
    if (a.emit == "dot") {
        emit(g, to_dot(t));
    } else {
        std::ostringstream out;
        write_tree(out, t);
        emit(g, out.str());
    }
    return 0;
}

int run_orientations(const Globals& g, const std::string& file, bool want_min, bool want_max)
{
    const OrientedTree base = read_tree_file(file);
    const CampaignOptions opts = g.campaign();
    const Orientations all = orientations(base);
    json rows = json::array();
    int lo = -1, hi = -1;
    std::uint64_t lo_mask = 0, hi_mask = 0;
    for (auto it = all.begin(); it != all.end(); ++it) {
        const int chi = solve_exact(*it, opts.solve).chi;
        if (lo < 0 || chi < lo) {
            lo = chi;
            lo_mask = it.mask();
        }
        if (hi < 0 || chi > hi) {
            hi = chi;
            hi_mask = it.mask();
        }
        if (!want_min && !want_max)
            rows.push_back({{"mask", it.mask()}, {"tree", encode(*it)}, {"chi", chi}});
    }
    auto witness = [&](std::uint64_t mask) {
        const OrientedTree t = orient(base, mask);
        const SolveResult r = solve_exact(t, opts.solve);
        return json{{"mask", mask}, {"tree", encode(t)}, {"chi", r.chi},
                    {"certificate", to_json(r.certificate)}};
    };
    json out = {{"base", encode(base)}, {"orientations", all.count()}};
    if (want_min || (!want_min && !want_max))
        out["min"] = witness(lo_mask);
    if (want_max || (!want_min && !want_max))
        out["max"] = witness(hi_mask);
    if (!rows.empty())
        out["all"] = rows;
    if (g.format == "csv") {
        std::ostringstream csv;
        csv << "mask,tree,chi\n";
        for (const auto& r : rows)
            csv << r["mask"] << ',' << r["tree"].get<std::string>() << ',' << r["chi"] << '\n';
        if (rows.empty()) {
            for (const char* key : {"min", "max"})
                if (out.contains(key))
                    csv << out[key]["mask"] << ',' << out[key]["tree"].get<std::string>() << ','
                        << out[key]["chi"] << '\n';
        }
        emit(g, csv.str());
    } else {
        emit(g, out.dump(1) + "\n");
    }
    return 0;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact dominator colorings of oriented trees"};
    app.require_subcommand(1);
    app.fallthrough();

    Globals g;
    app.add_option("--jobs", g.jobs, "Parallel workers (default: $DOMCHROM_JOBS or 1)")
        ->check(CLI::PositiveNumber);
    app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
    app.add_option("--output", g.output, "Write output to PATH instead of stdout");
    app.add_option("--seed", g.seed, "Seed for sampling and random trees");
    app.add_option("--budget", g.budget, "Search node budget per solve (0 = unlimited)");

    std::string tree_file, coloring_file;
    auto* solve = app.add_subcommand("solve", "Print chi_d and a certificate");
    solve->add_option("tree-file", tree_file)->required()->check(CLI::ExistingFile);

    auto* verify = app.add_subcommand("verify", "Check a coloring against a tree");
    verify->add_option("tree-file", tree_file)->required()->check(CLI::ExistingFile);
    verify->add_option("coloring-file", coloring_file)->required()->check(CLI::ExistingFile);

    GenArgs gen_args;
    auto* gen = app.add_subcommand("gen", "Generate a tree: path N | star M | gs M K | "
                                          "caterpillar SPINE | random N");
    gen->add_option("family", gen_args.family)->required();
    gen->add_option("params", gen_args.params);
    gen->add_option("--emit", gen_args.emit)->check(CLI::IsMember({"dot", "edges"}));
    gen->add_option("--scheme", gen_args.scheme, "gs orientation: out|in|layered|mask");
    gen->add_option("--mask", gen_args.mask, "Orientation mask (spine mask for caterpillar)");
    gen->add_option("--leg-mask", gen_args.leg_mask, "Caterpillar leg directions");
    gen->add_option("--legs", gen_args.legs, "Caterpillar legs as INDEX:COUNT")->delimiter(',');

    bool want_min = false, want_max = false, want_all = false;
    auto* orients = app.add_subcommand("orientations", "Solve every orientation of a base tree");
    orients->add_option("tree-file", tree_file)->required()->check(CLI::ExistingFile);
    auto* min_flag = orients->add_flag("--min", want_min);
    auto* max_flag = orients->add_flag("--max", want_max);
    orients->add_flag("--all", want_all)->excludes(min_flag)->excludes(max_flag);

    int max_n = 0;
    auto* invariance = app.add_subcommand("invariance", "Reversal invariance campaign");
    invariance->add_option("--max-n", max_n)->required();
    auto* leafdel = app.add_subcommand("leafdel", "Leaf-deletion campaign");
    leafdel->add_option("--max-n", max_n)->required();
    auto* rooted = app.add_subcommand("rooted", "Rooted-tree formula campaign");
    rooted->add_option("--max-n", max_n)->required();
    auto* oracle = app.add_subcommand("oracle", "Solver vs brute-force campaign");
    oracle->add_option("--max-n", max_n)->required();

    int m_max = 0, k_max = 0, n_cap = 10;
    auto* conjecture = app.add_subcommand("conjecture", "Generalized-star conjecture explorer");
    conjecture->add_option("--m-max", m_max)->required();
    conjecture->add_option("--k-max", k_max)->required();
    conjecture->add_option("--n-cap", n_cap, "Largest mk+1 to enumerate (<= 10)");

    auto* star_cmd = app.add_subcommand("star", "Star orientation campaign");
    star_cmd->add_option("--m-max", m_max)->required();

    CaterpillarSampling sampling;
    auto* cat = app.add_subcommand("caterpillar", "Random caterpillar bounds campaign");
    cat->add_option("--samples", sampling.sample_count);
    cat->add_option("--spine-min", sampling.spine_min);
    cat->add_option("--spine-max", sampling.spine_max);
    cat->add_option("--max-n", sampling.max_n);

    int n_min = 4, n_max = 13;
    auto* paths = app.add_subcommand("paths", "Minimum over all orientations of P_n");
    paths->add_option("--n-min", n_min);
    paths->add_option("--n-max", n_max);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        const CampaignOptions opts = g.campaign();
        if (*solve)
            return run_solve(g, tree_file);
        if (*verify)
            return run_verify(g, tree_file, coloring_file);
        if (*gen)
            return run_gen(g, gen_args);
        if (*orients)
            return run_orientations(g, tree_file, want_min, want_max);
        if (*invariance)
            return emit_report(g, check_reversal_invariance(max_n, opts));
        if (*leafdel)
            return emit_report(g, check_leaf_deletion(max_n, opts));
        if (*rooted)
            return emit_report(g, check_rooted_formula(max_n, opts));
        if (*oracle)
            return emit_report(g, check_oracle_equivalence(max_n, opts));
        if (*conjecture)
            return emit_report(g, explore_conjecture_gs(m_max, k_max, n_cap, opts));
        if (*star_cmd)
            return emit_report(g, check_star_proposition(m_max, opts));
        if (*cat) {
            sampling.seed = g.seed;
            return emit_report(g, check_caterpillar_bounds(sampling, opts));
        }
        if (*paths)
            return emit_report(g, check_path_orientations(n_min, n_max, opts));
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
