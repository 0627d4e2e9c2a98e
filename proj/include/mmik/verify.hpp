#pragma once

// Verifiers for the order-nine classification. Each returns a Report with
// named checks (expected vs actual), summary details and the certificates
// behind every count.

#include "mmik/apex.hpp"
#include "mmik/catalog.hpp"
#include "mmik/classify.hpp"
#include "mmik/enumerate.hpp"
#include "mmik/families.hpp"
#include "mmik/graph6.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace mmik {

using json = nlohmann::json;

struct Check {
    std::string name;
    bool pass = false;
    json expected;
    json actual;
};

struct Report {
    std::string target;
    std::vector<Check> checks;
    json details = json::object();
    json certificates = json::object();

    bool passed() const
    {
        return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
    }

    bool check(std::string name, const json& expected, const json& actual)
    {
        const bool ok = expected == actual;
        checks.push_back({std::move(name), ok, expected, actual});
        return ok;
    }

    /// Records a boolean condition; expected is always true.
    bool require(std::string name, bool ok, json actual = true)
    {
        checks.push_back({std::move(name), ok, true, ok ? json(true) : std::move(actual)});
        return ok;
    }

    void absorb(const Report& other)
    {
        for (const auto& c : other.checks)
            checks.push_back({other.target + ": " + c.name, c.pass, c.expected, c.actual});
        details[other.target] = other.details;
        certificates[other.target] = other.certificates;
    }
};

inline json to_json(const Report& r, bool with_certificates = false)
{
    json checks = json::array();
    for (const auto& c : r.checks)
        checks.push_back({{"name", c.name}, {"pass", c.pass}, {"expected", c.expected}, {"actual", c.actual}});
    json j{{"target", r.target},
           {"status", r.passed() ? "PASS" : "FAIL"},
           {"pipeline", kPipelineNote},
           {"checks", checks},
           {"details", r.details}};
    if (with_certificates)
        j["certificates"] = r.certificates;
    return j;
}

inline std::string summary(const Report& r)
{
    std::ostringstream out;
    for (const auto& c : r.checks) {
        out << (c.pass ? "PASS " : "FAIL ") << c.name;
        if (!c.pass)
            out << "  expected " << c.expected.dump() << ", got " << c.actual.dump();
        out << '\n';
    }
    out << r.target << ": " << (r.passed() ? "PASS" : "FAIL") << '\n';
    return out.str();
}

struct VerifyOptions {
    int jobs = default_jobs();
    /// Re-check every witness as it is produced.
    bool verify = true;
    /// Range verifier: also classify every connected order-9 graph (informational).
    bool full_order9 = false;
};

namespace detail {

inline std::vector<std::string> graph6_list(const std::vector<SmallGraph>& gs)
{
    std::vector<std::string> out;
    for (const auto& g : gs)
        out.push_back(to_graph6(g));
    return out;
}

inline json plan_json(const CensusPlan& plan)
{
    json labels = json::array();
    for (const auto& c : plan.categories)
        labels.push_back(c.label);
    return labels;
}

inline void record_census(Report& rep, const std::string& key, const CensusPlan& plan, const CensusReport& cr,
                          const std::vector<std::size_t>& expected)
{
    rep.check(key + " category counts", expected, cr.counts());
    rep.check(key + " residue", 0, cr.residue.size());
    rep.require(key + " categories partition the slice", cr.partitions());
    json d = to_json(cr, false);
    d["plan"] = plan_json(plan);
    rep.details[key] = d;
    rep.certificates[key] = to_json(cr, true);
}

inline int single_degree3_vertex(const SmallGraph& g)
{
    for (int v = 0; v < g.order(); ++v)
        if (g.degree(v) == 3)
            return v;
    return -1;
}

/// Y-triangle at a degree-3 vertex and the triangle-Y back; the second graph
/// is a subgraph of g with as many edges as the first.
inline std::pair<SmallGraph, SmallGraph> y_triangle_round_trip(const SmallGraph& g, int a)
{
    SmallGraph reduced = y_triangle(g, a);
    std::array<int, 3> t{};
    int k = 0;
    for_each_bit(g.row(a), [&](int w) { t[k++] = w > a ? w - 1 : w; });
    return {reduced, triangle_y(reduced, t)};
}

inline std::optional<json> proper_ik_minor(const SmallGraph& g, const std::vector<std::string>& names, bool verify)
{
    for (const auto& name : names) {
        const SmallGraph& pat = catalog()[name];
        if (!is_proper_minor(g, pat))
            continue;
        if (auto w = has_minor(g, pat)) {
            if (verify && !verify_witness(g, pat, *w))
                throw std::logic_error("unverifiable minor witness for " + name);
            return json{{"minor", name}, {"witness", to_json(*w)}};
        }
    }
    return std::nullopt;
}

} // namespace detail

// ---------------------------------------------------------------------------
// Census plans for the size 28..30 slices, in priority order.

inline CensusPlan census_plan_30()
{
    using namespace census_tests;
    return {"(9,30)",
            {{"min degree < 4", min_degree_below(4)},
             {"A9 subgraph", has_subgraph_of("A9")},
             {"P+K2 with P a planar triangulation", p_plus_k2()},
             {"B9 subgraph", has_subgraph_of("B9")},
             {"K7 minor", has_minor_of("K7")}}};
}

/// The P+K2 members of a (9,30) census.
inline std::vector<SmallGraph> p_plus_k2_graphs(const CensusReport& c30)
{
    std::vector<SmallGraph> out;
    for (const auto& code : c30.categories.at(2).members)
        out.push_back(from_graph6(code));
    return out;
}

/// `pk2` holds the (9,30) P+K2 graphs.
inline CensusPlan census_plan_29(std::vector<SmallGraph> pk2)
{
    using namespace census_tests;
    return {"(9,29)",
            {{"min degree < 4", min_degree_below(4)},
             {"subgraph of a (9,30) P+K2 graph", subgraph_of_any(std::move(pk2), "(9,30) P+K2")},
             {"isomorphic to 260910", isomorphic_to("260910")},
             {"A9 subgraph", has_subgraph_of("A9")},
             {"B9 minor", has_minor_of("B9")},
             {"K7 minor", has_minor_of("K7")}}};
}

inline CensusPlan census_plan_28()
{
    using namespace census_tests;
    return {"(9,28) connected",
            {{"min degree < 3", min_degree_below(3)},
             {"min degree = 3", min_degree_equals(3)},
             {"F9 subgraph", has_subgraph_of("F9")},
             {"B9 subgraph", has_subgraph_of("B9")},
             {"K7 minor", has_minor_of("K7")},
             {"isomorphic to G9,28", isomorphic_to("G9,28")},
             {"2-apex", two_apex()},
             {"subgraph of 260910", subgraph_of_any({catalog()["260910"]}, "260910")}}};
}

// ---------------------------------------------------------------------------

inline Report verify_prop28(const VerifyOptions& opt = {})
{
    Report rep;
    rep.target = "prop28";
    const Catalog& cat = catalog();

    // (9,30)
    const auto s30 = enumerate_graphs(EnumSpec::slice(9, 30), opt.jobs);
    rep.check("(9,30) graphs", 63, s30.size());
    const CensusPlan p30 = census_plan_30();
    const auto c30 = census(s30, p30, opt.jobs, opt.verify);
    detail::record_census(rep, "(9,30)", p30, c30, {4, 51, 5, 2, 1});

    const auto pk2 = p_plus_k2_graphs(c30);
    for (const auto& g : pk2)
        if (opt.verify && !is_k_apex(g, 2))
            rep.require("P+K2 graph is 2-apex", false, to_graph6(g));

    // (9,29)
    const auto s29 = enumerate_graphs(EnumSpec::slice(9, 29), opt.jobs);
    rep.check("(9,29) graphs", 148, s29.size());
    const CensusPlan p29 = census_plan_29(pk2);
    const auto c29 = census(s29, p29, opt.jobs, opt.verify);
    detail::record_census(rep, "(9,29)", p29, c29, {15, 25, 1, 97, 5, 5});
    rep.require("260910 is not 2-apex", !is_k_apex(cat["260910"], 2));

    // (9,28), connected
    const auto s28 = enumerate_graphs(EnumSpec::slice(9, 28).with_connected(), opt.jobs);
    rep.check("(9,28) connected graphs", 344, s28.size());
    const CensusPlan p28 = census_plan_28();
    const auto c28 = census(s28, p28, opt.jobs, opt.verify);
    detail::record_census(rep, "(9,28)", p28, c28, {11, 39, 168, 4, 8, 1, 111, 2});

    // The IK tally read two ways: with G9,28 (181) and without it (180).
    const auto k = c28.counts();
    const std::size_t ik_without = k[2] + k[3] + k[4];
    rep.check("(9,28) IK graphs including G9,28", 181, ik_without + k[5]);
    rep.check("(9,28) IK graphs that are not MMIK", 180, ik_without);
    rep.check("(9,28) min degree > 3 graphs that are not IK", 113, k[6] + k[7]);
    rep.details["ik_readings"] = {{"including_G9,28", ik_without + k[5]}, {"excluding_G9,28", ik_without}};

    // Corrections: complement component structure among min degree > 3.
    std::size_t three_components = 0, two_isolated = 0, two_isolated_f9 = 0;
    {
        std::vector<SmallGraph> high;
        for (const auto& g : s28)
            if (min_degree(g) >= 4)
                high.push_back(g);
        auto f9 = parallel_map(high, [&](const SmallGraph& g) { return has_subgraph(g, cat["F9"]).has_value(); },
                               opt.jobs);
        for (std::size_t i = 0; i < high.size(); ++i) {
            const auto comps = components(complement(high[i]));
            if (comps.size() != 3)
                continue;
            ++three_components;
            const auto singletons = std::count_if(comps.begin(), comps.end(), [](Mask c) { return popcount(c) == 1; });
            if (singletons == 2) {
                ++two_isolated;
                two_isolated_f9 += f9[i] ? 1 : 0;
            }
        }
        rep.details["complement_three_components"] = {{"count", three_components},
                                                      {"two_isolated_vertices", two_isolated},
                                                      {"two_isolated_vertices_with_F9_subgraph", two_isolated_f9}};
    }
    rep.check("(9,28) min degree > 3 graphs whose complement has three components", 97, three_components);
    rep.check("(9,28) min degree > 3 graphs whose complement is two isolated vertices plus one component", 56,
              two_isolated);
    rep.check("... of those, graphs with an F9 subgraph", 56, two_isolated_f9);

    // Min degree 3 members of (9,28): at most one degree-3 vertex, Y-triangle
    // size 25..28, and each graph is 2-apex or has a proper IK minor.
    {
        const auto& members = c28.categories[1].members;
        std::vector<SmallGraph> d3;
        for (const auto& code : members)
            d3.push_back(from_graph6(code));
        struct Row {
            int degree3 = 0;
            int reduced_size = 0;
            json certificate;
        };
        auto rows = parallel_map(
            d3,
            [&](const SmallGraph& g) {
                Row r;
                r.degree3 = count_degree(g, 3);
                r.reduced_size = y_triangle(g, detail::single_degree3_vertex(g)).size();
                if (auto w = apex_witness(g, 2)) {
                    if (opt.verify && !verify_apex_witness(g, 2, *w))
                        throw std::logic_error("unverifiable apex witness");
                    r.certificate = {{"two_apex", to_json(*w)}};
                } else if (auto m = detail::proper_ik_minor(g, ik_probe_names(), opt.verify)) {
                    r.certificate = *m;
                }
                return r;
            },
            opt.jobs);
        std::size_t one_vertex = 0, in_range = 0, certified = 0, apex = 0;
        json certs = json::array();
        std::map<int, int> sizes;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            one_vertex += rows[i].degree3 == 1;
            in_range += rows[i].reduced_size >= 25 && rows[i].reduced_size <= 28;
            ++sizes[rows[i].reduced_size];
            if (!rows[i].certificate.is_null()) {
                ++certified;
                apex += rows[i].certificate.contains("two_apex");
            }
            certs.push_back({{"graph", members[i]}, {"certificate", rows[i].certificate}});
        }
        rep.check("(9,28) min degree 3 graphs with one degree-3 vertex", d3.size(), one_vertex);
        rep.check("(9,28) min degree 3 graphs with Y-triangle size in 25..28", d3.size(), in_range);
        rep.check("(9,28) min degree 3 graphs that are 2-apex or hold a proper IK minor", d3.size(), certified);
        json size_hist = json::object();
        for (auto [s, c] : sizes)
            size_hist[std::to_string(s)] = c;
        rep.details["min_degree_3"] = {
            {"count", d3.size()}, {"two_apex", apex}, {"proper_ik_minor", certified - apex}, {"y_triangle_sizes", size_hist}};
        rep.certificates["min_degree_3"] = certs;
    }

    // Degree-3 vertices in (9,29) and (9,30): the Y-triangle graph has at least
    // 5*8-14 = 26 edges, and the triangle-Y back is a proper subgraph.
    {
        std::size_t total = 0, ok = 0;
        for (const auto* slice : {&s29, &s30})
            for (const auto& g : *slice) {
                if (min_degree(g) != 3)
                    continue;
                ++total;
                const int a = detail::single_degree3_vertex(g);
                auto [reduced, back] = detail::y_triangle_round_trip(g, a);
                if (reduced.size() >= 5 * 8 - 14 && back.size() < g.size() && has_subgraph(g, back))
                    ++ok;
            }
        rep.check("(9,29)/(9,30) min degree 3 graphs with a proper IK subgraph", total, ok);
        rep.details["degree3_29_30"] = total;
    }

    // Every (9,31) graph has a K7 minor.
    {
        const auto s31 = enumerate_graphs(EnumSpec::slice(9, 31), opt.jobs);
        auto hits = parallel_map(
            s31,
            [&](const SmallGraph& g) {
                auto w = has_minor(g, cat["K7"]);
                return w && (!opt.verify || verify_witness(g, cat["K7"], *w));
            },
            opt.jobs);
        const auto n = static_cast<std::size_t>(std::count(hits.begin(), hits.end(), true));
        rep.check("(9,31) graphs with a K7 minor", s31.size(), n);
        rep.details["(9,31)"] = {{"total", s31.size()}, {"k7_minor", n}};
    }
    return rep;
}

// ---------------------------------------------------------------------------

inline Report verify_prop22(const VerifyOptions& opt = {})
{
    using namespace census_tests;
    Report rep;
    rep.target = "prop22";
    const Catalog& cat = catalog();

    // Main census over (9,22) with min degree 3.
    const auto s22 = enumerate_graphs(EnumSpec::slice(9, 22).with_min_degree(3), opt.jobs);
    CensusPlan plan{"(9,22) min degree >= 3",
                    {{"2-apex", two_apex()},
                     {"isomorphic to A9", isomorphic_to("A9")},
                     {"isomorphic to B9", isomorphic_to("B9")},
                     {"isomorphic to E9+e", isomorphic_to("E9+e")},
                     {"isomorphic to Cousin12", isomorphic_to("Cousin12")},
                     {"isomorphic to Cousin41", isomorphic_to("Cousin41")},
                     {"proper K7 minor", has_minor_of("K7")},
                     {"proper H8 minor", has_minor_of("H8")},
                     {"proper F9 minor", has_minor_of("F9")},
                     {"proper H9 minor", has_minor_of("H9")}}};
    const auto cr = census(s22, plan, opt.jobs, opt.verify);
    const auto k = cr.counts();
    rep.check("(9,22) named MMIK survivors A9, B9, E9+e, Cousin12, Cousin41",
              std::vector<std::size_t>{1, 1, 1, 1, 1}, std::vector<std::size_t>(k.begin() + 1, k.begin() + 6));
    rep.check("(9,22) residue", 0, cr.residue.size());
    rep.require("(9,22) categories partition the slice", cr.partitions());
    {
        json d = to_json(cr, false);
        d["plan"] = detail::plan_json(plan);
        d["not_two_apex"] = cr.total - k[0];
        rep.details["(9,22)"] = d;
        rep.certificates["(9,22)"] = to_json(cr, true);
    }

    // Max degree 5: nonplanar (7,12) graphs, min degree >= 2, at most one
    // degree-2 vertex.
    {
        auto base = enumerate_graphs(EnumSpec::slice(7, 12).with_min_degree(2).with_max_degree(5), opt.jobs);
        std::size_t delta5 = 0, delta_le5 = 0;
        for (const auto& g : base) {
            if (count_degree(g, 2) > 1 || planar_test(g))
                continue;
            ++delta_le5;
            delta5 += max_degree(g) == 5;
        }
        rep.check("nonplanar (7,12) graphs, max degree 5, min degree >= 2, <= 1 degree-2 vertex", 6, delta5);
        rep.details["nonplanar_7_12"] = {{"max_degree_5", delta5}, {"max_degree_at_most_5", delta_le5}};
    }

    // Triangle-free (8,10) complements with degree sequence 3^4 2^4; adding
    // back the degree-4 vertex always gives a 2-apex graph.
    {
        auto base = enumerate_graphs(EnumSpec::slice(8, 10).with_min_degree(2).with_max_degree(3), opt.jobs);
        std::size_t count = 0, apex = 0;
        json graphs = json::array();
        for (const auto& c : base) {
            if (!is_triangle_free(c) || count_degree(c, 3) != 4)
                continue;
            ++count;
            const SmallGraph h = complement(c);
            Mask avoid = 0;
            for (int v = 0; v < 8; ++v)
                if (c.degree(v) == 2)
                    avoid |= bit(v);
            const SmallGraph g = add_vertex_avoiding(h, avoid);
            auto w = apex_witness(g, 2);
            apex += w.has_value();
            graphs.push_back({{"complement", to_graph6(c)}, {"G", to_graph6(g)},
                              {"two_apex", w ? to_json(*w) : json(nullptr)}});
        }
        rep.check("triangle-free (8,10) graphs with degree sequence 3^4 2^4", 10, count);
        rep.check("... rebuilt order-9 graphs that are 2-apex", count, apex);
        rep.certificates["triangle_free_8_10"] = graphs;
    }

    // Max degree 7: the (8,15) non-apex pair.
    {
        auto base = enumerate_graphs(EnumSpec::slice(8, 15).with_min_degree(2), opt.jobs);
        std::vector<SmallGraph> nonapex;
        for (const auto& g : base)
            if (!is_k_apex(g, 1))
                nonapex.push_back(g);
        rep.check("non-apex (8,15) graphs with min degree >= 2", 2, nonapex.size());
        std::set<std::string> names;
        for (const auto& g : nonapex)
            names.insert(cat.identify(g).value_or("?"));
        rep.check("... identified", json({"K4,4-e", "P8"}), json(names));

        const SmallGraph& k44 = cat["K4,4-e"];
        const auto k44_orbits = orbits(k44, ElementKind::vertex).vertex_classes;
        rep.check("K4,4-e vertex orbits", 2, k44_orbits.size());
        json k44_out = json::array();
        bool deg4_apex = false, deg3_h9 = false;
        for (const auto& cls : k44_orbits) {
            const int v = cls.front();
            const SmallGraph g = add_vertex_avoiding(k44, bit(v));
            const bool apex = is_k_apex(g, 2);
            auto m = detail::proper_ik_minor(g, {"H9"}, opt.verify);
            if (k44.degree(v) == 4)
                deg4_apex = apex;
            else
                deg3_h9 = m.has_value() && !apex;
            k44_out.push_back({{"avoided_degree", k44.degree(v)}, {"two_apex", apex}, {"proper_H9_minor", m.has_value()}});
        }
        rep.require("K4,4-e + vertex avoiding a degree-4 vertex is 2-apex", deg4_apex);
        rep.require("K4,4-e + vertex avoiding a degree-3 vertex has a proper H9 minor", deg3_h9);

        const SmallGraph& p8 = cat["P8"];
        const auto p8_orbits = orbits(p8, ElementKind::vertex).vertex_classes;
        rep.check("P8 vertex orbits", 4, p8_orbits.size());
        int a9 = 0, f9 = 0, apex2 = 0;
        json p8_out = json::array();
        for (const auto& cls : p8_orbits) {
            const SmallGraph g = add_vertex_avoiding(p8, bit(cls.front()));
            json row{{"avoided", cls.front()}};
            if (are_isomorphic(g, cat["A9"])) {
                ++a9;
                row["outcome"] = "A9";
            } else if (is_k_apex(g, 2)) {
                ++apex2;
                row["outcome"] = "2-apex";
            } else if (detail::proper_ik_minor(g, {"F9"}, opt.verify)) {
                ++f9;
                row["outcome"] = "proper F9 minor";
            }
            p8_out.push_back(row);
        }
        rep.check("P8 + degree-7 vertex outcomes (A9, proper F9 minor, 2-apex)", json({1, 1, 2}),
                  json({a9, f9, apex2}));
        rep.details["max_degree_7"] = {{"K4,4-e", k44_out}, {"P8", p8_out}};
    }

    // Max degree 6: non-apex (8,16) candidates for G - a (reported only).
    {
        auto base = enumerate_graphs(EnumSpec::slice(8, 16).with_min_degree(2).with_max_degree(6), opt.jobs);
        std::vector<SmallGraph> cands;
        for (const auto& g : base)
            if (!is_k_apex(g, 1))
                cands.push_back(g);
        std::size_t edge_added = 0;
        json rows = json::array();
        for (const auto& h : cands) {
            const bool plus_edge = has_subgraph(h, cat["K4,4-e"]) || has_subgraph(h, cat["P8"]);
            edge_added += plus_edge;
            std::map<std::string, int> outcomes;
            const auto gens = automorphism_generators(h);
            std::vector<Edge> pairs;
            for (int x = 0; x < 8; ++x)
                for (int y = x + 1; y < 8; ++y)
                    pairs.emplace_back(x, y);
            for (const auto& cls : pair_orbits(8, pairs, gens)) {
                const SmallGraph g = add_vertex_avoiding(h, bit(cls.front().u) | bit(cls.front().v));
                std::string what;
                if (is_k_apex(g, 2))
                    what = "2-apex";
                else if (auto name = cat.identify(g))
                    what = *name;
                else if (auto m = detail::proper_ik_minor(g, {"K7", "H8", "F9", "H9"}, opt.verify))
                    what = "proper " + (*m)["minor"].get<std::string>() + " minor";
                else
                    what = "unresolved";
                ++outcomes[what];
            }
            rows.push_back({{"graph", to_graph6(h)}, {"petersen_plus_edge", plus_edge}, {"avoided_pair_outcomes", outcomes}});
        }
        rep.details["max_degree_6"] = {{"candidates", cands.size()},
                                       {"petersen_8_15_plus_edge", edge_added},
                                       {"other", cands.size() - edge_added},
                                       {"text_itemization", {8, 7}},
                                       {"graphs", rows}};
    }
    return rep;
}

// ---------------------------------------------------------------------------

inline Report verify_range_23_27(const VerifyOptions& opt = {})
{
    Report rep;
    rep.target = "range";
    const Catalog& cat = catalog();
    const SmallGraph& host260910 = cat["260910"];
    const SmallGraph& e9e = cat["E9+e"];

    // Approach 1: the pipeline over connected (9, 23..27).
    std::vector<SmallGraph> indeterminate;
    json per_size = json::object();
    std::size_t unverified = 0;
    std::vector<SmallGraph> test5_hits_23;
    for (int m = 23; m <= 27; ++m) {
        const auto slice = enumerate_graphs(EnumSpec::slice(9, m).with_connected(), opt.jobs);
        ClassifyOptions copt;
        copt.verify = opt.verify;
        auto verdicts = parallel_map(slice, [&](const SmallGraph& g) { return classify(g, copt); }, opt.jobs);
        auto checked = parallel_map(
            slice, [&](const SmallGraph& g) { return verify_verdict(g, verdicts[&g - slice.data()]); }, opt.jobs);
        std::map<int, std::size_t> by_test;
        std::size_t ind = 0;
        for (std::size_t i = 0; i < slice.size(); ++i) {
            ++by_test[verdicts[i].test_index];
            unverified += checked[i] ? 0 : 1;
            if (verdicts[i].status == Status::indeterminate) {
                ++ind;
                indeterminate.push_back(slice[i]);
            }
            if (m == 23 && verdicts[i].test_index == 5)
                test5_hits_23.push_back(slice[i]);
        }
        json tests = json::object();
        for (auto [t, c] : by_test)
            tests[t == 0 ? std::string("none") : std::to_string(t)] = c;
        per_size[std::to_string(m)] = {{"graphs", slice.size()}, {"by_test", tests}, {"indeterminate", ind}};
    }
    rep.details["approach1"] = per_size;
    rep.check("pipeline verdicts failing re-verification", 0, unverified);
    rep.check("indeterminate connected (9,23..27) graphs", 24, indeterminate.size());

    {
        struct Cert {
            std::string kind;  // "subgraph_of" 260910 or "proper_minor" of a named graph
            std::string name;
            json witness;
        };
        auto certs = parallel_map(
            indeterminate,
            [&](const SmallGraph& g) {
                if (auto w = has_subgraph(host260910, g)) {
                    if (opt.verify && !verify_witness(host260910, g, *w))
                        throw std::logic_error("unverifiable injection into 260910");
                    return Cert{"subgraph_of", "260910", to_json(*w)};
                }
                for (const char* name : {"E9+e", "Cousin12", "Cousin41"}) {
                    const SmallGraph& pat = cat[name];
                    if (!is_proper_minor(g, pat))
                        continue;
                    if (auto w = has_minor(g, pat)) {
                        if (opt.verify && !verify_witness(g, pat, *w))
                            throw std::logic_error(std::string("unverifiable minor witness for ") + name);
                        return Cert{"proper_minor", name, to_json(*w)};
                    }
                }
                return Cert{};
            },
            opt.jobs);
        std::size_t sub = 0, e9e_minor = 0, mmik22_minor = 0;
        json list = json::array();
        for (std::size_t i = 0; i < certs.size(); ++i) {
            sub += certs[i].kind == "subgraph_of";
            e9e_minor += certs[i].name == "E9+e";
            mmik22_minor += certs[i].kind == "proper_minor";
            list.push_back({{"graph", to_graph6(indeterminate[i])},
                            {"size", indeterminate[i].size()},
                            {"certificate", certs[i].kind.empty()
                                                ? json(nullptr)
                                                : json{{certs[i].kind, certs[i].name}, {"witness", certs[i].witness}}}});
        }
        rep.check("indeterminate graphs that are subgraphs of 260910", 4, sub);
        rep.check("indeterminate graphs with a proper E9+e minor", 20, e9e_minor);
        rep.check("indeterminate graphs with a proper minor among E9+e, Cousin12, Cousin41", 20, mmik22_minor);
        rep.check("indeterminate graphs without a certificate", 0, certs.size() - sub - mmik22_minor);
        rep.certificates["approach1_indeterminate"] = list;
    }

    // Test-5 hits stay IK after adding any edge.
    {
        auto ok = parallel_map(
            test5_hits_23,
            [&](const SmallGraph& g) {
                for (const Edge& e : g.non_edges())
                    if (classify(add_edge(g, e.u, e.v)).status != Status::ik)
                        return false;
                return true;
            },
            opt.jobs);
        rep.check("(9,23) test-5 hits whose one-edge extensions are all IK", test5_hits_23.size(),
                  static_cast<std::size_t>(std::count(ok.begin(), ok.end(), true)));
    }

    // Approach 2: one edge added per non-edge orbit of E9, G9,26, G9,27.
    {
        const SmallGraph& e9 = cat["E9"];
        const auto cls = orbits(e9, ElementKind::non_edge).pair_classes;
        rep.check("E9 non-edge orbits", 2, cls.size());
        int iso = 0, f9 = 0;
        json rows = json::array();
        for (const auto& c : cls) {
            const SmallGraph g = add_edge(e9, c.front().u, c.front().v);
            const bool is_e9e = are_isomorphic(g, e9e);
            const bool has_f9 = has_subgraph(g, cat["F9"]).has_value();
            iso += is_e9e;
            f9 += has_f9 && !is_e9e;
            rows.push_back({{"edge", {c.front().u, c.front().v}}, {"is_E9+e", is_e9e}, {"F9_subgraph", has_f9}});
        }
        rep.check("E9 extensions (isomorphic to E9+e, F9 subgraph)", json({1, 1}), json({iso, f9}));
        rep.details["E9"] = rows;
    }
    {
        const SmallGraph& g926 = cat["G9,26"];
        const auto gens = automorphism_generators(g926);
        const auto cls = pair_orbits(9, g926.non_edges(), gens);
        rep.details["G9,26_non_edge_orbits"] = cls.size();

        struct Case {
            std::pair<int, int> edge;  // published 1-based labels
            std::string kind;
        };
        const std::vector<Case> cases{{{1, 3}, "subgraph of G9,28"}, {{2, 4}, "subgraph of G9,28"},
                                      {{2, 3}, "subgraph of 260910"}, {{8, 9}, "A9 minor"},
                                      {{5, 7}, "A9 minor"},          {{1, 6}, "B9 minor"}};
        std::vector<int> orbit_of_case;
        std::size_t certified = 0;
        json rows = json::array();
        for (const auto& c : cases) {
            const Edge e(c.edge.first - 1, c.edge.second - 1);
            int which = -1;
            for (std::size_t i = 0; i < cls.size(); ++i)
                if (std::find(cls[i].begin(), cls[i].end(), e) != cls[i].end())
                    which = static_cast<int>(i);
            orbit_of_case.push_back(which);
            const SmallGraph g = add_edge(g926, e.u, e.v);
            bool ok = false;
            json witness;
            if (c.kind == "subgraph of G9,28" || c.kind == "subgraph of 260910") {
                const SmallGraph& host = cat[c.kind == "subgraph of G9,28" ? "G9,28" : "260910"];
                if (auto w = has_subgraph(host, g)) {
                    ok = verify_witness(host, g, *w);
                    witness = to_json(*w);
                }
            } else {
                const SmallGraph& pat = cat[c.kind == "A9 minor" ? "A9" : "B9"];
                if (auto w = has_minor(g, pat)) {
                    ok = verify_witness(g, pat, *w);
                    witness = to_json(*w);
                }
            }
            certified += ok;
            rows.push_back({{"edge", {c.edge.first, c.edge.second}}, {"orbit", which}, {"claim", c.kind},
                            {"certified", ok}, {"witness", witness}});
        }
        // {1,3} and {2,4} first; the four remaining edges name the other orbits.
        std::set<int> named(orbit_of_case.begin(), orbit_of_case.begin() + 2);
        std::set<int> others(orbit_of_case.begin() + 2, orbit_of_case.end());
        for (int o : named)
            others.erase(o);
        std::size_t other_orbits = cls.size() - named.size();
        rep.check("G9,26 non-edge orbits besides those of {1,3} and {2,4}", 4, other_orbits);
        rep.check("... each named by exactly one of {2,3}, {8,9}, {5,7}, {1,6}", other_orbits, others.size());
        rep.require("G9,26 listed edges reach every non-edge orbit", named.size() + others.size() == cls.size() &&
                                                                      !named.count(-1) && !others.count(-1));
        rep.check("G9,26 extensions certified", cases.size(), certified);
        rep.certificates["G9,26"] = rows;
    }
    {
        auto w = has_subgraph(host260910, cat["G9,27"]);
        rep.require("G9,27 is a subgraph of 260910", w && verify_witness(host260910, cat["G9,27"], *w));
        if (w)
            rep.certificates["G9,27"] = to_json(*w);
    }
    rep.details["closure_note"] = "certificates for G+e extend to every supergraph by minor-monotonicity";

    if (opt.full_order9) {
        json sizes = json::object();
        std::size_t total = 0;
        for (int m = 8; m <= 36; ++m) {
            const auto slice = enumerate_graphs(EnumSpec::slice(9, m).with_connected(), opt.jobs);
            auto verdicts = parallel_map(slice, [&](const SmallGraph& g) { return classify(g); }, opt.jobs);
            std::vector<std::string> ind;
            for (std::size_t i = 0; i < slice.size(); ++i)
                if (verdicts[i].status == Status::indeterminate)
                    ind.push_back(to_graph6(slice[i]));
            total += ind.size();
            if (!ind.empty())
                sizes[std::to_string(m)] = ind;
        }
        rep.details["full_order9_indeterminate"] = {{"total", total}, {"by_size", sizes}};
    }
    return rep;
}

// ---------------------------------------------------------------------------

inline Report verify_mmn2a(const VerifyOptions& opt = {})
{
    Report rep;
    rep.target = "mmn2a";
    const Catalog& cat = catalog();

    MmnaSearchOptions mo;
    mo.max_order = 9;
    mo.k = 2;
    mo.jobs = opt.jobs;
    const auto found = find_mm_not_k_apex(mo);
    rep.check("MMN2A graphs through order 9", 12, found.size());
    int k7 = 0, k3311 = 0, g926 = 0, g927 = 0;
    json rows = json::array();
    for (const auto& g : found) {
        std::string where = "other";
        if (cat.k7_family.contains(g)) {
            ++k7;
            where = "K7 family";
        } else if (cat.k3311_family.contains(g)) {
            ++k3311;
            where = "K3,3,1,1 family";
        } else if (are_isomorphic(g, cat["G9,26"])) {
            ++g926;
            where = "G9,26";
        } else if (are_isomorphic(g, cat["G9,27"])) {
            ++g927;
            where = "G9,27";
        }
        rows.push_back({{"graph", to_graph6(g)}, {"order", g.order()}, {"size", g.size()}, {"where", where},
                        {"name", cat.identify(g).value_or("")}});
    }
    rep.check("MMN2A split (K7 family, K3,3,1,1 family, G9,26, G9,27)", json({5, 5, 1, 1}),
              json({k7, k3311, g926, g927}));
    rep.details["mmn2a"] = rows;

    mo.k = 1;
    mo.max_size = 16;
    const auto mmna = find_mm_not_k_apex(mo);
    std::size_t petersen = 0;
    for (const auto& g : mmna)
        petersen += cat.petersen_family.contains(g);
    std::size_t members = 0;
    for (const auto& m : cat.petersen_family.members)
        members += m.graph.order() <= 9;
    rep.check("MMNA graphs through order 9 with at most 16 edges", members, mmna.size());
    rep.check("... all in the Petersen family", mmna.size(), petersen);
    rep.details["mmna"] = detail::graph6_list(mmna);
    return rep;
}

// ---------------------------------------------------------------------------

inline const char* default_axioms_json()
{
    return R"json({
  "axioms": [
    {"id": "K7-family-IK", "statement": "Every graph in the K7 family is intrinsically knotted, and K7, H8, F9, H9, E9 are MMIK"},
    {"id": "K3311-family-IK", "statement": "Every graph in the K3,3,1,1 family is intrinsically knotted, and the order-9 members A9, B9, Cousin12, Cousin41 are MMIK"},
    {"id": "E9+e-MMIK", "statement": "E9+e is MMIK"},
    {"id": "G9,28-MMIK", "statement": "G9,28, the complement of K2 + C7, is MMIK"},
    {"id": "260910-unknotted", "statement": "260910 has an unknotted embedding"},
    {"id": "size-bound", "statement": "A graph with n >= 7 vertices and at least 5n-14 edges is IK, and is not MMIK when the inequality is strict or n > 7"},
    {"id": "small-graphs", "statement": "Graphs with at most 6 vertices or at most 20 edges are not IK"},
    {"id": "two-apex", "statement": "A 2-apex graph is not IK"},
    {"id": "triangle-Y", "statement": "A triangle-Y move preserves intrinsic knotting"},
    {"id": "size-21", "statement": "F9 and H9 are the only order-9 MMIK graphs with at most 21 edges"}
  ]
})json";
}

inline json load_axioms(const std::string& path = {})
{
    if (path.empty())
        return json::parse(default_axioms_json());
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot read axioms file " + path);
    return json::parse(in);
}

/// Upstream results the theorem is assembled from; when absent, the named
/// catalog graphs stand in and the report says so.
struct TheoremInputs {
    const Report* prop22 = nullptr;
    const Report* prop28 = nullptr;
    const Report* range = nullptr;
    json axioms = load_axioms();
};

inline Report verify_theorem(const TheoremInputs& in = {})
{
    Report rep;
    rep.target = "theorem";
    const Catalog& cat = catalog();

    std::vector<std::pair<std::string, std::string>> ledger{
        {"F9", "size <= 21 classification (axiom)"}, {"H9", "size <= 21 classification (axiom)"}};
    for (const char* name : {"A9", "B9", "E9+e", "Cousin12", "Cousin41"})
        ledger.emplace_back(name, "size 22 census");
    ledger.emplace_back("G9,28", "size >= 28 census");

    json upstream = json::object();
    for (auto [key, r] : {std::pair{"prop22", in.prop22}, {"prop28", in.prop28}, {"range", in.range}}) {
        if (r) {
            rep.require(std::string(key) + " passed", r->passed());
            upstream[key] = r->passed() ? "PASS" : "FAIL";
        } else {
            upstream[key] = "not run";
        }
    }
    if (in.prop22) {
        // The size-22 survivors are exactly the five named graphs.
        const auto& counts = in.prop22->details["(9,22)"]["categories"];
        std::size_t named = 0;
        for (std::size_t i = 1; i <= 5; ++i)
            named += counts[i]["count"].get<std::size_t>();
        rep.check("size 22 survivors", 5, named);
    }
    if (in.prop28)
        rep.check("size >= 28 survivors", 1, in.prop28->details["(9,28)"]["categories"][5]["count"].get<std::size_t>());

    std::vector<SmallGraph> graphs;
    std::vector<int> sizes;
    json list = json::array();
    for (const auto& [name, source] : ledger) {
        const SmallGraph g = canonical_graph(cat[name]);
        graphs.push_back(g);
        sizes.push_back(g.size());
        list.push_back({{"name", name}, {"graph6", to_graph6(g)}, {"order", g.order()}, {"size", g.size()},
                        {"source", source}});
    }
    std::sort(sizes.begin(), sizes.end());
    rep.check("order-9 MMIK graphs", 8, graphs.size());
    rep.check("sizes", json({21, 21, 22, 22, 22, 22, 22, 28}), json(sizes));
    std::set<CanonKey> keys;
    for (const auto& g : graphs)
        keys.insert(canonical_key(g));
    rep.check("pairwise non-isomorphic", graphs.size(), keys.size());
    rep.require("all of order 9",
                std::all_of(graphs.begin(), graphs.end(), [](const SmallGraph& g) { return g.order() == 9; }));
    rep.require("none is 2-apex",
                std::none_of(graphs.begin(), graphs.end(), [](const SmallGraph& g) { return is_k_apex(g, 2); }));

    bool unknotted = false;
    for (const auto& a : in.axioms.at("axioms"))
        unknotted |= a.at("statement").get<std::string>() == "260910 has an unknotted embedding";
    rep.require("axiom list declares the unknotted embedding of 260910", unknotted);

    rep.details["graphs"] = list;
    rep.details["axioms"] = in.axioms.at("axioms");
    rep.details["upstream"] = upstream;
    return rep;
}

} // namespace mmik
