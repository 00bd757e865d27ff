#include "domchrom/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <functional>
#include <mutex>
#include <random>
#include <set>
#include <sstream>
#include <thread>

#include "domchrom/closed_forms.hpp"
#include "domchrom/error.hpp"
#include "domchrom/generators.hpp"
#include "domchrom/io.hpp"

namespace domchrom {

using nlohmann::json;

namespace {

// Runs work(i) for i in [0, count) on `jobs` threads. Results land in slot i,
// so the output order never depends on scheduling.
template <class Result>
std::vector<Result> parallel_map(std::size_t count, int jobs,
                                 const std::function<Result(std::size_t)>& work)
{
    std::vector<Result> results(count);
    const int workers = std::max(1, std::min<int>(jobs, static_cast<int>(count)));
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i)
            results[i] = work(i);
        return results;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            while (true) {
                const std::size_t i = next.fetch_add(1);
                if (i >= count)
                    return;
                try {
                    results[i] = work(i);
                } catch (...) {
                    std::lock_guard lock(failure_mutex);
                    if (!failure)
                        failure = std::current_exception();
                    next = count;
                }
            }
        });
    }
    for (auto& t : pool)
        t.join();
    if (failure)
        std::rethrow_exception(failure);
    return results;
}

void require_range(const char* name, int value, int lo, int hi)
{
    if (value < lo || value > hi)
        throw Error(ErrorKind::TooLarge, std::string(name) + "=" + std::to_string(value) +
                                             " outside " + std::to_string(lo) + ".." +
                                             std::to_string(hi));
}

json witness_json(const OrientedTree& t, const SolveResult& r)
{
    return {{"tree", encode(t)}, {"chi", r.chi}, {"certificate", to_json(r.certificate)}};
}

void finish(Report& report, std::size_t instances, json counterexamples)
{
    report.summary["instances"] = instances;
    report.summary["holds_at_this_scale"] = counterexamples.empty();
    report.summary["counterexamples"] = std::move(counterexamples);
}

struct OrientedInstance {
    int n;
    std::size_t tree_index;
    OrientedTree base;
    std::uint64_t mask;
};

std::vector<OrientedInstance> all_orientations(int n_min, int max_n, bool half)
{
    std::vector<OrientedInstance> out;
    for (int n = n_min; n <= max_n; ++n) {
        const auto trees = free_trees(n);
        for (std::size_t ti = 0; ti < trees.size(); ++ti) {
            const std::uint64_t total = orientations(trees[ti]).count();
            const std::uint64_t limit = (half && total > 1) ? total / 2 : total;
            for (std::uint64_t mask = 0; mask < limit; ++mask)
                out.push_back({n, ti, trees[ti], mask});
        }
    }
    return out;
}

std::uint64_t complement(const OrientedTree& base, std::uint64_t mask)
{
    const std::size_t edges = base.arcs().size();
    const std::uint64_t full = edges >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << edges) - 1;
    return ~mask & full;
}

void collect_certified(const json& node, std::vector<const json*>& out)
{
    if (node.is_object()) {
        if (node.contains("tree") && node.contains("certificate"))
            out.push_back(&node);
        for (const auto& [key, value] : node.items())
            collect_certified(value, out);
    } else if (node.is_array()) {
        for (const auto& value : node)
            collect_certified(value, out);
    }
}

} // namespace

std::size_t Report::counterexample_count() const
{
    if (!summary.contains("counterexamples"))
        return 0;
    return summary.at("counterexamples").size();
}

std::string to_json_text(const Report& report)
{
    json j;
    j["campaign"] = report.campaign;
    j["params"] = report.params;
    j["version"] = kReportVersion;
    j["records"] = report.records;
    j["summary"] = report.summary;
    return j.dump(1) + "\n";
}

Report report_from_json(const json& j)
{
    Report r;
    r.campaign = j.at("campaign").get<std::string>();
    r.params = j.at("params");
    for (const auto& rec : j.at("records"))
        r.records.push_back(rec);
    r.summary = j.at("summary");
    return r;
}

std::string to_csv_text(const Report& report)
{
    std::set<std::string> columns;
    for (const auto& rec : report.records)
        for (const auto& [key, value] : rec.items())
            columns.insert(key);
    std::ostringstream out;
    out << "# campaign=" << report.campaign << " version=" << kReportVersion
        << " params=" << report.params.dump() << '\n';
    bool first = true;
    for (const auto& col : columns) {
        out << (first ? "" : ",") << col;
        first = false;
    }
    out << '\n';
    for (const auto& rec : report.records) {
        first = true;
        for (const auto& col : columns) {
            out << (first ? "" : ",");
            first = false;
            if (!rec.contains(col))
                continue;
            const json& v = rec.at(col);
            std::string cell = v.is_string() ? v.get<std::string>() : v.dump();
            if (cell.find_first_of(",\"\n") != std::string::npos) {
                std::string quoted = "\"";
                for (char ch : cell)
                    quoted += ch == '"' ? std::string("\"\"") : std::string(1, ch);
                cell = quoted + "\"";
            }
            out << cell;
        }
        out << '\n';
    }
    out << "# summary=" << report.summary.dump() << '\n';
    return out.str();
}

int default_jobs()
{
    if (const char* env = std::getenv("DOMCHROM_JOBS")) {
        const int jobs = std::atoi(env);
        if (jobs > 0)
            return jobs;
    }
    return 1;
}

Report check_reversal_invariance(int max_n, const CampaignOptions& opts)
{
    require_range("max_n", max_n, 1, 10);
    Report report;
    report.campaign = "reversal-invariance";
    report.params = {{"max_n", max_n}};

    const auto instances = all_orientations(1, max_n, true);
    struct Outcome {
        json record;
        json counterexample;
    };
    auto outcomes = parallel_map<Outcome>(instances.size(), opts.jobs, [&](std::size_t i) {
        const auto& inst = instances[i];
        const std::uint64_t rmask = complement(inst.base, inst.mask);
        const OrientedTree t = orient(inst.base, inst.mask);
        const OrientedTree r = orient(inst.base, rmask);
        const SolveResult a = solve_exact(t, opts.solve);
        const SolveResult b = solve_exact(r, opts.solve);
        Outcome o;
        o.record = {{"id", i},
                    {"n", inst.n},
                    {"tree_class", inst.tree_index},
                    {"mask", inst.mask},
                    {"reversed_mask", rmask},
                    {"tree", encode(t)},
                    {"chi", a.chi},
                    {"chi_reversed", b.chi},
                    {"equal", a.chi == b.chi}};
        bool formula_ok = true;
        const RootClassification rc = classify_rooted(t);
        if (rc.out_root || rc.in_root) {
            const int formula = chi_rooted(t);
            o.record["rooted_formula"] = formula;
            formula_ok = a.chi == formula && b.chi == formula;
        }
        if (a.chi != b.chi || !formula_ok)
            o.counterexample = {{"id", i},
                                {"kind", a.chi != b.chi ? "reversal" : "rooted_formula"},
                                {"instance", witness_json(t, a)},
                                {"reversal", witness_json(r, b)}};
        return o;
    });

    json counterexamples = json::array();
    for (auto& o : outcomes) {
        report.records.push_back(std::move(o.record));
        if (!o.counterexample.is_null())
            counterexamples.push_back(std::move(o.counterexample));
    }
    finish(report, instances.size(), std::move(counterexamples));
    return report;
}

Report check_leaf_deletion(int max_n, const CampaignOptions& opts)
{
    require_range("max_n", max_n, 2, 9);
    Report report;
    report.campaign = "leaf-deletion";
    report.params = {{"max_n", max_n}};

    const auto instances = all_orientations(2, max_n, false);
    struct Outcome {
        std::vector<json> records;
        std::vector<json> counterexamples;
    };
    auto outcomes = parallel_map<Outcome>(instances.size(), opts.jobs, [&](std::size_t i) {
        const auto& inst = instances[i];
        const OrientedTree t = orient(inst.base, inst.mask);
        const SolveResult whole = solve_exact(t, opts.solve);
        const DegreeProfile profile = degree_profile(t);
        Outcome o;
        for (Vertex v : profile.underlying_leaves) {
            const Vertex u = t.neighbors(v).front();
            const SolveResult part = solve_exact(delete_leaf(t, v).tree, opts.solve);
            const int delta = whole.chi - part.chi;
            const bool sole_out = t.out_degree(u) == 1 && t.has_arc(u, v);
            const bool unique_source =
                profile.sources.size() == 1 && profile.sources.front() == v;
            const bool predicate = sole_out || unique_source;
            const bool leaf_is_source = t.in_degree(v) == 0;
            const bool source_rule_applies = delta == 1 && leaf_is_source;
            const bool source_rule_ok = !source_rule_applies || t.in_degree(u) == 1;

            json rec = {{"instance", i},
                        {"tree", encode(t)},
                        {"leaf", v},
                        {"neighbor", u},
                        {"chi", whole.chi},
                        {"chi_deleted", part.chi},
                        {"delta", delta},
                        {"sole_out_neighbor", sole_out},
                        {"unique_source", unique_source},
                        {"predicate", predicate},
                        {"leaf_is_source", leaf_is_source},
                        {"neighbor_in_degree", t.in_degree(u)},
                        {"source_rule_ok", source_rule_ok}};
            auto flag = [&](const char* kind) {
                o.counterexamples.push_back({{"kind", kind},
                                             {"tree", encode(t)},
                                             {"leaf", v},
                                             {"delta", delta},
                                             {"predicate", predicate},
                                             {"instance", witness_json(t, whole)}});
            };
            if (delta != 0 && delta != 1)
                flag("delta_out_of_range");
            if ((delta == 1) != predicate)
                flag("leaf_characterization");
            if (!source_rule_ok)
                flag("source_leaf_neighbor");
            o.records.push_back(std::move(rec));
        }
        return o;
    });

    json counterexamples = json::array();
    std::size_t count = 0;
    for (auto& o : outcomes) {
        for (auto& r : o.records)
            report.records.push_back(std::move(r));
        for (auto& c : o.counterexamples)
            counterexamples.push_back(std::move(c));
    }
    count = report.records.size();
    finish(report, count, std::move(counterexamples));
    return report;
}

Report explore_conjecture_gs(int m_max, int k_max, int n_cap, const CampaignOptions& opts)
{
    require_range("n_cap", n_cap, 2, 10);
    if (m_max < 1 || k_max < 1)
        throw Error(ErrorKind::SpecInvalid, "m_max and k_max must be positive");
    Report report;
    report.campaign = "conjecture-gs";
    report.params = {{"m_max", m_max}, {"k_max", k_max}, {"n_cap", n_cap}};

    struct Family {
        int m, k;
        OrientedTree base;
    };
    std::vector<Family> families;
    for (int m = 1; m <= m_max; ++m)
        for (int k = 1; k <= k_max; ++k)
            if (m * k + 1 <= n_cap)
                families.push_back({m, k, gs({m, k, GsScheme::OutRootCenter, 0})});

    struct Job {
        std::size_t family;
        std::uint64_t mask;
    };
    std::vector<Job> jobs;
    for (std::size_t f = 0; f < families.size(); ++f) {
        const std::uint64_t total = orientations(families[f].base).count();
        for (std::uint64_t mask = 0; mask < total; ++mask)
            jobs.push_back({f, mask});
    }
    const auto chis = parallel_map<int>(jobs.size(), opts.jobs, [&](std::size_t i) {
        return solve_exact(orient(families[jobs[i].family].base, jobs[i].mask), opts.solve).chi;
    });

    json findings = json::array();
    json counterexamples = json::array();
    std::size_t cursor = 0;
    for (std::size_t f = 0; f < families.size(); ++f) {
        const auto& fam = families[f];
        const int m = fam.m, k = fam.k;
        int lo = -1, hi = -1;
        std::uint64_t lo_mask = 0, hi_mask = 0;
        json rooted = json::array();
        bool max_by_rooted = false;
        std::set<int> rooted_values;
        const std::size_t begin = cursor;
        for (; cursor < jobs.size() && jobs[cursor].family == f; ++cursor) {
            const int chi = chis[cursor];
            const std::uint64_t mask = jobs[cursor].mask;
            if (lo < 0 || chi < lo) {
                lo = chi;
                lo_mask = mask;
            }
            if (hi < 0 || chi > hi) {
                hi = chi;
                hi_mask = mask;
            }
        }
        for (std::size_t j = begin; j < cursor; ++j) {
            const OrientedTree t = orient(fam.base, jobs[j].mask);
            const RootClassification rc = classify_rooted(t);
            auto add = [&](const char* kind, Vertex root) {
                rooted.push_back(
                    {{"kind", kind}, {"root", root}, {"mask", jobs[j].mask}, {"chi", chis[j]}});
                rooted_values.insert(chis[j]);
                max_by_rooted = max_by_rooted || chis[j] == hi;
            };
            if (rc.out_root)
                add("out", *rc.out_root);
            if (rc.in_root)
                add("in", *rc.in_root);
        }

        const OrientedTree lo_tree = orient(fam.base, lo_mask);
        const OrientedTree hi_tree = orient(fam.base, hi_mask);
        const SolveResult lo_res = solve_exact(lo_tree, opts.solve);
        const SolveResult hi_res = solve_exact(hi_tree, opts.solve);
        json lo_w = witness_json(lo_tree, lo_res);
        lo_w["mask"] = lo_mask;
        json hi_w = witness_json(hi_tree, hi_res);
        hi_w["mask"] = hi_mask;
        if (!check_certificate(lo_tree, lo_res.certificate) ||
            !check_certificate(hi_tree, hi_res.certificate) || lo_res.chi != lo ||
            hi_res.chi != hi)
            counterexamples.push_back(
                {{"kind", "witness"}, {"m", m}, {"k", k}, {"min", lo_w}, {"max", hi_w}});

        const int conj_min = 3 + m * (k / 2 - 1);
        const int conj_max = m * (k - 1) + 2;
        const int center_out = solve_exact(gs({m, k, GsScheme::OutRootCenter, 0}), opts.solve).chi;
        const int center_in = solve_exact(gs({m, k, GsScheme::InRootCenter, 0}), opts.solve).chi;
        json rec = {{"m", m},
                    {"k", k},
                    {"n", m * k + 1},
                    {"orientations", cursor - begin},
                    {"min", lo},
                    {"max", hi},
                    {"min_witness", lo_w},
                    {"max_witness", hi_w},
                    {"conjectured_min", conj_min},
                    {"conjectured_min_in_domain", k >= 2},
                    {"conjectured_max", conj_max},
                    {"min_agrees", lo == conj_min},
                    {"max_agrees", hi == conj_max},
                    {"max_attained_by_rooted", max_by_rooted},
                    {"center_out_chi", center_out},
                    {"center_in_chi", center_in},
                    {"rooted", rooted},
                    {"path_like", m <= 2}};
        if (k >= 2) {
            const int bound = gs_layered_bound(m, k);
            rec["layered_bound"] = bound;
            rec["layered_bound_holds"] = lo <= bound;
        }
        if (lo != conj_min || hi != conj_max || !max_by_rooted)
            findings.push_back({{"m", m},
                                {"k", k},
                                {"min", lo},
                                {"conjectured_min", conj_min},
                                {"max", hi},
                                {"conjectured_max", conj_max},
                                {"max_attained_by_rooted", max_by_rooted}});
        report.records.push_back(std::move(rec));
    }
    report.summary["findings"] = std::move(findings);
    report.summary["orientations_solved"] = jobs.size();
    finish(report, families.size(), std::move(counterexamples));
    return report;
}

Report check_star_proposition(int m_max, const CampaignOptions& opts)
{
    require_range("m_max", m_max, 1, 10);
    Report report;
    report.campaign = "star-proposition";
    report.params = {{"m_max", m_max}};

    std::vector<std::pair<int, std::uint64_t>> instances;
    for (int m = 1; m <= m_max; ++m)
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask)
            instances.push_back({m, mask});

    struct Outcome {
        json record;
        json counterexample;
    };
    auto outcomes = parallel_map<Outcome>(instances.size(), opts.jobs, [&](std::size_t i) {
        const auto [m, mask] = instances[i];
        const StarValue formula = chi_star(mask, m);
        const SolveResult r = solve_exact(formula.tree, opts.solve);
        const bool uniform = mask == 0 || mask == (std::uint64_t{1} << m) - 1;
        const bool ok = (r.chi == 2 || r.chi == 3) && (r.chi == 2) == uniform &&
                        r.chi == formula.chi && check_certificate(formula.tree, formula.certificate);
        Outcome o;
        o.record = {{"m", m},           {"mask", mask},   {"tree", encode(formula.tree)},
                    {"chi", r.chi},     {"formula", formula.chi}, {"uniform", uniform},
                    {"ok", ok}};
        if (!ok)
            o.counterexample = {{"m", m}, {"mask", mask}, {"instance", witness_json(formula.tree, r)}};
        return o;
    });
    json counterexamples = json::array();
    for (auto& o : outcomes) {
        report.records.push_back(std::move(o.record));
        if (!o.counterexample.is_null())
            counterexamples.push_back(std::move(o.counterexample));
    }
    finish(report, instances.size(), std::move(counterexamples));
    return report;
}

Report check_caterpillar_bounds(const CaterpillarSampling& s, const CampaignOptions& opts)
{
    if (s.spine_min < 1 || s.spine_max < s.spine_min || s.max_n < s.spine_max)
        throw Error(ErrorKind::SpecInvalid, "bad caterpillar sampling ranges");
    Report report;
    report.campaign = "caterpillar-bounds";
    report.params = {{"samples", s.sample_count},
                     {"seed", s.seed},
                     {"spine_min", s.spine_min},
                     {"spine_max", s.spine_max},
                     {"max_n", s.max_n}};

    // Specs are drawn serially from one generator so they do not depend on
    // the worker count.
    std::mt19937_64 rng(s.seed);
    std::vector<CaterpillarSpec> specs;
    std::size_t skipped = 0;
    for (int i = 0; i < s.sample_count; ++i) {
        CaterpillarSpec spec;
        spec.spine_len = std::uniform_int_distribution<int>(s.spine_min, s.spine_max)(rng);
        const int budget = s.max_n - spec.spine_len;
        int legs = spec.spine_len >= 3 ? std::uniform_int_distribution<int>(0, budget)(rng) : 0;
        std::vector<int> per_index(spec.spine_len, 0);
        for (int l = 0; l < legs; ++l)
            ++per_index[std::uniform_int_distribution<int>(1, spec.spine_len - 2)(rng)];
        for (int idx = 1; idx + 1 < spec.spine_len; ++idx)
            if (per_index[idx] > 0)
                spec.legs.push_back({idx, per_index[idx]});
        const std::uint64_t spine_bits = (std::uint64_t{1} << (spec.spine_len - 1)) - 1;
        switch (std::uniform_int_distribution<int>(0, 3)(rng)) {
        case 0: spec.spine_mask = 0; break;
        case 1: spec.spine_mask = spine_bits; break;
        default: spec.spine_mask = rng() & spine_bits; break;
        }
        spec.leg_mask = legs > 0 ? rng() & ((std::uint64_t{1} << legs) - 1) : 0;
        if (spec.spine_len + legs > s.max_n) {
            ++skipped;
            continue;
        }
        specs.push_back(std::move(spec));
    }

    struct Outcome {
        json record;
        json counterexample;
    };
    auto outcomes = parallel_map<Outcome>(specs.size(), opts.jobs, [&](std::size_t i) {
        const OrientedTree t = caterpillar(specs[i]);
        const CaterpillarView view = central_path(t);
        const int m = static_cast<int>(view.spine.size());
        const SolveResult whole = solve_exact(t, opts.solve);
        const int spine_chi = solve_exact(spine_subtree(t, view), opts.solve).chi;
        const DominatorCertificate upper = caterpillar_upper_coloring(t);
        const int upper_colors = upper.coloring.num_colors();
        const bool directed = spine_is_directed(t, view);

        const bool lower_ok = spine_chi <= whole.chi;
        const bool upper_ok = whole.chi <= upper_colors && upper_colors <= 2 * m - 1;
        const bool upper_cert_ok = check_certificate(t, upper);
        bool directed_ok = true;
        json rec = {{"id", i},
                    {"tree", encode(t)},
                    {"n", t.size()},
                    {"m", m},
                    {"chi", whole.chi},
                    {"spine_chi", spine_chi},
                    {"upper_colors", upper_colors},
                    {"upper_bound", 2 * m - 1},
                    {"directed_spine", directed},
                    {"lower_ok", lower_ok},
                    {"upper_ok", upper_ok},
                    {"upper_certificate_ok", upper_cert_ok}};
        if (directed) {
            const DominatorCertificate dc = directed_spine_coloring(t);
            directed_ok = whole.chi == m && dc.coloring.num_colors() == m && check_certificate(t, dc);
            rec["directed_colors"] = dc.coloring.num_colors();
            rec["directed_ok"] = directed_ok;
        }
        Outcome o;
        o.record = std::move(rec);
        if (!(lower_ok && upper_ok && upper_cert_ok && directed_ok))
            o.counterexample = {{"id", i},
                                {"lower_ok", lower_ok},
                                {"upper_ok", upper_ok},
                                {"upper_certificate_ok", upper_cert_ok},
                                {"directed_ok", directed_ok},
                                {"instance", witness_json(t, whole)}};
        return o;
    });
    json counterexamples = json::array();
    std::size_t directed = 0;
    for (auto& o : outcomes) {
        if (o.record["directed_spine"].get<bool>())
            ++directed;
        report.records.push_back(std::move(o.record));
        if (!o.counterexample.is_null())
            counterexamples.push_back(std::move(o.counterexample));
    }
    report.summary["skipped"] = skipped;
    report.summary["directed_spine_instances"] = directed;
    finish(report, specs.size(), std::move(counterexamples));
    return report;
}

Report check_path_orientations(int n_min, int n_max, const CampaignOptions& opts)
{
    require_range("n_min", n_min, 1, kMaxOrientationN);
    require_range("n_max", n_max, n_min, kMaxOrientationN);
    Report report;
    report.campaign = "path-orientations";
    report.params = {{"n_min", n_min}, {"n_max", n_max}};

    std::vector<std::pair<int, std::uint64_t>> jobs;
    for (int n = n_min; n <= n_max; ++n)
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (n - 1)); ++mask)
            jobs.push_back({n, mask});
    const auto chis = parallel_map<int>(jobs.size(), opts.jobs, [&](std::size_t i) {
        return solve_exact(orient(path(jobs[i].first), jobs[i].second), opts.solve).chi;
    });

    json counterexamples = json::array();
    std::size_t cursor = 0;
    for (int n = n_min; n <= n_max; ++n) {
        int best = -1;
        std::uint64_t best_mask = 0;
        std::size_t count = 0;
        for (; cursor < jobs.size() && jobs[cursor].first == n; ++cursor, ++count)
            if (best < 0 || chis[cursor] < best) {
                best = chis[cursor];
                best_mask = jobs[cursor].second;
            }
        const OrientedTree t = orient(path(n), best_mask);
        json witness = witness_json(t, solve_exact(t, opts.solve));
        witness["mask"] = best_mask;
        const int formula = chi_path_orientation_min(n);
        json rec = {{"n", n},
                    {"orientations", count},
                    {"min", best},
                    {"formula", formula},
                    {"agrees", best == formula},
                    {"extension", path_orientation_min_is_extension(n)},
                    {"witness", witness}};
        if (best != formula)
            counterexamples.push_back(rec);
        report.records.push_back(std::move(rec));
    }
    finish(report, jobs.size(), std::move(counterexamples));
    return report;
}

Report check_rooted_formula(int max_n, const CampaignOptions& opts)
{
    require_range("max_n", max_n, 1, kMaxFreeTreeN);
    Report report;
    report.campaign = "rooted-formula";
    report.params = {{"max_n", max_n}};

    struct Job {
        OrientedTree tree;
        Vertex root;
        bool out;
    };
    std::vector<Job> jobs;
    for (int n = 1; n <= max_n; ++n) {
        for (const OrientedTree& base : free_trees(n)) {
            for (Vertex root = 0; root < n; ++root) {
                // Orient every edge away from `root`.
                std::vector<Arc> arcs;
                std::vector<Vertex> stack{root};
                std::vector<bool> seen(n, false);
                seen[root] = true;
                while (!stack.empty()) {
                    const Vertex v = stack.back();
                    stack.pop_back();
                    for (Vertex w : base.neighbors(v))
                        if (!seen[w]) {
                            seen[w] = true;
                            arcs.push_back({v, w});
                            stack.push_back(w);
                        }
                }
                const OrientedTree out_tree = OrientedTree::build(n, arcs);
                jobs.push_back({out_tree, root, true});
                jobs.push_back({reverse(out_tree), root, false});
            }
        }
    }
    struct Outcome {
        json record;
        bool ok;
    };
    auto outcomes = parallel_map<Outcome>(jobs.size(), opts.jobs, [&](std::size_t i) {
        const Job& job = jobs[i];
        const int l = directed_leaf_count(job.tree, job.out ? RootMode::OutTree : RootMode::InTree);
        const int formula = job.tree.size() - l + 1;
        const SolveResult r = solve_exact(job.tree, opts.solve);
        return Outcome{{{"tree", encode(job.tree)},
                        {"root", job.root},
                        {"sense", job.out ? "out" : "in"},
                        {"n", job.tree.size()},
                        {"directed_leaves", l},
                        {"formula", formula},
                        {"chi", r.chi},
                        {"agrees", r.chi == formula}},
                       r.chi == formula};
    });
    json counterexamples = json::array();
    for (auto& o : outcomes) {
        if (!o.ok)
            counterexamples.push_back(o.record);
        report.records.push_back(std::move(o.record));
    }
    finish(report, jobs.size(), std::move(counterexamples));
    return report;
}

Report check_oracle_equivalence(int max_n, const CampaignOptions& opts)
{
    require_range("max_n", max_n, 1, kBruteForceMaxN);
    Report report;
    report.campaign = "oracle-equivalence";
    report.params = {{"max_n", max_n}};
    const auto instances = all_orientations(1, max_n, false);
    struct Outcome {
        json record;
        bool ok;
    };
    auto outcomes = parallel_map<Outcome>(instances.size(), opts.jobs, [&](std::size_t i) {
        const OrientedTree t = orient(instances[i].base, instances[i].mask);
        const SolveResult r = solve_exact(t, opts.solve);
        const int brute = brute_force_chi(t);
        const bool ok = r.chi == brute && check_certificate(t, r.certificate);
        return Outcome{{{"tree", encode(t)}, {"chi", r.chi}, {"brute_force", brute}, {"agrees", ok}},
                       ok};
    });
    json counterexamples = json::array();
    for (auto& o : outcomes) {
        if (!o.ok)
            counterexamples.push_back(o.record);
        report.records.push_back(std::move(o.record));
    }
    finish(report, instances.size(), std::move(counterexamples));
    return report;
}

std::size_t revalidate_certificates(const Report& report)
{
    json whole;
    whole["records"] = report.records;
    whole["summary"] = report.summary;
    std::vector<const json*> certified;
    collect_certified(whole, certified);
    std::size_t failures = 0;
    for (const json* node : certified) {
        try {
            const OrientedTree t = decode(node->at("tree").get<std::string>());
            const DominatorCertificate cert = certificate_from_json(node->at("certificate"));
            const bool ok = check_certificate(t, cert) &&
                            (!node->contains("chi") ||
                             node->at("chi").get<int>() == cert.coloring.num_colors());
            if (!ok)
                ++failures;
        } catch (const std::exception&) {
            ++failures;
        }
    }
    return failures;
}

} // namespace domchrom
