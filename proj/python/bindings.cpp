#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "domchrom/closed_forms.hpp"
#include "domchrom/error.hpp"
#include "domchrom/generators.hpp"
#include "domchrom/harness.hpp"
#include "domchrom/io.hpp"
#include "domchrom/solver.hpp"

namespace py = pybind11;
using namespace domchrom;

namespace {

std::vector<Arc> to_arcs(const std::vector<std::pair<int, int>>& pairs)
{
    std::vector<Arc> arcs;
    arcs.reserve(pairs.size());
    for (auto [a, b] : pairs)
        arcs.push_back({a, b});
    return arcs;
}

std::vector<std::pair<int, int>> from_arcs(std::span<const Arc> arcs)
{
    std::vector<std::pair<int, int>> out;
    for (const Arc& a : arcs)
        out.emplace_back(a.tail, a.head);
    return out;
}

std::vector<int> labels(const Coloring& c) { return {c.colors().begin(), c.colors().end()}; }

py::object loads(const std::string& text) { return py::module_::import("json").attr("loads")(text); }

py::dict certificate_dict(const DominatorCertificate& cert)
{
    py::list witness;
    for (const Witness& w : cert.witness) {
        if (w.kind == Witness::Kind::SinkExempt)
            witness.append("sink");
        else
            witness.append(w.color);
    }
    py::dict d;
    d["colors"] = labels(cert.coloring);
    d["witness"] = witness;
    return d;
}

py::dict violation_dict(const Violation& v)
{
    py::dict d;
    if (v.kind == Violation::Kind::ImproperEdge) {
        d["kind"] = "ImproperEdge";
        d["arc"] = py::make_tuple(v.arc.tail, v.arc.head);
    } else {
        d["kind"] = "NoDominatedClass";
        d["vertex"] = v.vertex;
    }
    return d;
}

CampaignOptions campaign_options(int jobs)
{
    CampaignOptions o;
    o.jobs = jobs > 0 ? jobs : default_jobs();
    return o;
}

template <class F>
py::object run_campaign(F&& f)
{
    std::string text;
    {
        py::gil_scoped_release release;
        text = to_json_text(f());
    }
    return loads(text);
}

} // namespace

PYBIND11_MODULE(_core, m)
{
    m.doc() = "Exact dominator colorings of oriented trees";

    static py::exception<Error> error(m, "DomchromError", PyExc_ValueError);
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p)
                std::rethrow_exception(p);
        } catch (const Error& e) {
            py::set_error(error, e.what());
        }
    });

    py::class_<OrientedTree>(m, "OrientedTree")
        .def_property_readonly("n", &OrientedTree::size)
        .def_property_readonly("arcs", [](const OrientedTree& t) { return from_arcs(t.arcs()); })
        .def("out_neighbors",
             [](const OrientedTree& t, Vertex v) {
                 auto s = t.out_neighbors(v);
                 return std::vector<Vertex>(s.begin(), s.end());
             })
        .def("in_neighbors",
             [](const OrientedTree& t, Vertex v) {
                 auto s = t.in_neighbors(v);
                 return std::vector<Vertex>(s.begin(), s.end());
             })
        .def("encode", [](const OrientedTree& t) { return encode(t); })
        .def("__eq__", [](const OrientedTree& a, const OrientedTree& b) { return a == b; })
        .def("__hash__", [](const OrientedTree& t) { return std::hash<std::string>{}(encode(t)); })
        .def("__repr__", [](const OrientedTree& t) { return "OrientedTree('" + encode(t) + "')"; });

    // graph-core
    m.def("build_tree", [](int n, const std::vector<std::pair<int, int>>& arcs) {
        return OrientedTree::build(n, to_arcs(arcs));
    }, py::arg("n"), py::arg("arcs"));
    m.def("decode", &decode);
    m.def("reverse", &reverse);
    m.def("classify_rooted", [](const OrientedTree& t) {
        const RootClassification rc = classify_rooted(t);
        return py::make_tuple(rc.out_root ? py::cast(*rc.out_root) : py::none(),
                              rc.in_root ? py::cast(*rc.in_root) : py::none());
    });
    m.def("directed_leaf_count", [](const OrientedTree& t, const std::string& mode) {
        return directed_leaf_count(t, mode == "in" ? RootMode::InTree : RootMode::OutTree);
    }, py::arg("t"), py::arg("mode") = "out");
    m.def("delete_leaf", [](const OrientedTree& t, Vertex v) {
        LeafDeletion d = delete_leaf(t, v);
        return py::make_tuple(d.tree, d.relabel);
    });

    // coloring-verify
    m.def("canonicalize", [](const std::vector<int>& c) { return labels(canonicalize(c)); });
    m.def("verify_dominator", [](const OrientedTree& t, const std::vector<int>& colors) {
        const Verification v = verify_dominator(t, Coloring::from_labels(colors));
        py::dict d;
        d["valid"] = v.ok();
        if (v.ok())
            d["certificate"] = certificate_dict(*v.certificate);
        py::list violations;
        for (const auto& x : v.violations)
            violations.append(violation_dict(x));
        d["violations"] = violations;
        return d;
    });
    m.def("dominated_classes", [](const OrientedTree& t, const std::vector<int>& colors, Vertex v) {
        return dominated_classes(t, Coloring::from_labels(colors), v);
    });

    // exact-solver
    m.def("solve_exact", [](const OrientedTree& t, std::optional<std::uint64_t> node_budget) {
        SolveOptions opts;
        opts.node_budget = node_budget;
        SolveResult r;
        {
            py::gil_scoped_release release;
            r = solve_exact(t, opts);
        }
        py::dict stats;
        stats["nodes"] = r.stats.nodes;
        stats["prunes_proper"] = r.stats.prunes_proper;
        stats["prunes_domination"] = r.stats.prunes_domination;
        stats["prunes_singleton"] = r.stats.prunes_singleton;
        stats["max_depth"] = r.stats.max_depth;
        py::dict d;
        d["chi"] = r.chi;
        d["certificate"] = certificate_dict(r.certificate);
        d["stats"] = stats;
        return d;
    }, py::arg("t"), py::arg("node_budget") = py::none());
    m.def("brute_force_chi", &brute_force_chi);
    m.def("greedy_upper_bound", [](const OrientedTree& t) { return labels(greedy_upper_bound(t)); });
    m.def("trivial_lower_bound", &trivial_lower_bound);

    // closed-forms
    m.def("chi_directed_path", &chi_directed_path);
    m.def("chi_path_orientation_min", &chi_path_orientation_min);
    m.def("chi_rooted", &chi_rooted);
    m.def("chi_star", [](std::uint64_t mask, int m_leaves) {
        StarValue s = chi_star(mask, m_leaves);
        return py::make_tuple(s.chi, s.tree, certificate_dict(s.certificate));
    }, py::arg("mask"), py::arg("m"));
    m.def("gs_uniform_chi", &gs_uniform_chi);
    m.def("gs_layered_bound", &gs_layered_bound);
    m.def("build_layered_gs", [](int m_paths, int k) {
        LayeredGs g = build_layered_gs(m_paths, k);
        py::dict d;
        d["tree"] = g.tree;
        d["colors"] = labels(g.coloring);
        d["num_colors"] = g.colors;
        d["verified"] = g.certificate.has_value();
        return d;
    });
    m.def("central_path", [](const OrientedTree& t) {
        CaterpillarView v = central_path(t);
        py::list legs;
        for (const auto& at : v.legs) {
            py::list here;
            for (const auto& leg : at)
                here.append(py::make_tuple(leg.vertex, leg.into_spine));
            legs.append(here);
        }
        return py::make_tuple(v.spine, legs);
    });
    m.def("caterpillar_upper_coloring",
          [](const OrientedTree& t) { return certificate_dict(caterpillar_upper_coloring(t)); });
    m.def("directed_spine_coloring",
          [](const OrientedTree& t) { return certificate_dict(directed_spine_coloring(t)); });

    // generators
    m.def("path", &path);
    m.def("star", &star, py::arg("m"), py::arg("mask") = 0);
    m.def("gs", [](int m_paths, int k, const std::string& scheme, std::uint64_t mask) {
        GsSpec spec{m_paths, k, GsScheme::OutRootCenter, mask};
        if (scheme == "in")
            spec.scheme = GsScheme::InRootCenter;
        else if (scheme == "layered")
            spec.scheme = GsScheme::Layered;
        else if (scheme == "mask")
            spec.scheme = GsScheme::Mask;
        else if (scheme != "out")
            throw Error(ErrorKind::SpecInvalid, "scheme must be out|in|layered|mask");
        return gs(spec);
    }, py::arg("m"), py::arg("k"), py::arg("scheme") = "out", py::arg("mask") = 0);
    m.def("caterpillar", [](int spine_len, const std::vector<std::pair<int, int>>& legs,
                            std::uint64_t spine_mask, std::uint64_t leg_mask) {
        return caterpillar({spine_len, legs, spine_mask, leg_mask});
    }, py::arg("spine_len"), py::arg("legs") = std::vector<std::pair<int, int>>{},
       py::arg("spine_mask") = 0, py::arg("leg_mask") = 0);
    m.def("orient", &orient);
    m.def("orientation_count", [](const OrientedTree& t) { return orientations(t).count(); });
    m.def("free_trees", &free_trees);
    m.def("random_tree", &random_tree, py::arg("n"), py::arg("seed"));
    m.def("canonical_form", &canonical_form);

    // harness
    m.def("check_reversal_invariance", [](int max_n, int jobs) {
        return run_campaign([&] { return check_reversal_invariance(max_n, campaign_options(jobs)); });
    }, py::arg("max_n"), py::arg("jobs") = 0);
    m.def("check_leaf_deletion", [](int max_n, int jobs) {
        return run_campaign([&] { return check_leaf_deletion(max_n, campaign_options(jobs)); });
    }, py::arg("max_n"), py::arg("jobs") = 0);
    m.def("explore_conjecture_gs", [](int m_max, int k_max, int n_cap, int jobs) {
        return run_campaign(
            [&] { return explore_conjecture_gs(m_max, k_max, n_cap, campaign_options(jobs)); });
    }, py::arg("m_max"), py::arg("k_max"), py::arg("n_cap") = 10, py::arg("jobs") = 0);
    m.def("check_star_proposition", [](int m_max, int jobs) {
        return run_campaign([&] { return check_star_proposition(m_max, campaign_options(jobs)); });
    }, py::arg("m_max"), py::arg("jobs") = 0);
    m.def("check_caterpillar_bounds", [](int samples, std::uint64_t seed, int spine_min,
                                         int spine_max, int max_n, int jobs) {
        return run_campaign([&] {
            return check_caterpillar_bounds({samples, seed, spine_min, spine_max, max_n},
                                            campaign_options(jobs));
        });
    }, py::arg("samples") = 200, py::arg("seed") = 1, py::arg("spine_min") = 3,
       py::arg("spine_max") = 8, py::arg("max_n") = 12, py::arg("jobs") = 0);
    m.def("check_rooted_formula", [](int max_n, int jobs) {
        return run_campaign([&] { return check_rooted_formula(max_n, campaign_options(jobs)); });
    }, py::arg("max_n"), py::arg("jobs") = 0);
    m.def("check_oracle_equivalence", [](int max_n, int jobs) {
        return run_campaign([&] { return check_oracle_equivalence(max_n, campaign_options(jobs)); });
    }, py::arg("max_n"), py::arg("jobs") = 0);
    m.def("check_path_orientations", [](int n_min, int n_max, int jobs) {
        return run_campaign(
            [&] { return check_path_orientations(n_min, n_max, campaign_options(jobs)); });
    }, py::arg("n_min"), py::arg("n_max"), py::arg("jobs") = 0);
}
