#pragma once

// Six-test IK pipeline and priority-ordered census over graph slices.
//
// Tests 1-3 are fixed as: order ≤ 6 is not IK; ‖G‖ ≥ 5|G| − 14 is IK (Mader
// bound, |G| ≥ 7); ‖G‖ ≤ 20 is not IK. Test 4 asks whether G is a proper minor
// of a cataloged MMIK graph with 21 or 22 edges, test 5 whether G contains one
// of K7, H8, F9, H9, K3,3,1,1, A9, B9 as a minor, test 6 whether G is 2-apex.

#include "mmik/apex.hpp"
#include "mmik/catalog.hpp"
#include "mmik/graph.hpp"
#include "mmik/graph6.hpp"
#include "mmik/minors.hpp"
#include "mmik/parallel.hpp"

#include <nlohmann/json.hpp>

#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace mmik {

enum class Status { ik, not_ik, indeterminate };

inline std::string to_string(Status s)
{
    switch (s) {
    case Status::ik: return "IK";
    case Status::not_ik: return "NotIK";
    case Status::indeterminate: return "Indeterminate";
    }
    return "?";
}

struct OrderNotIK {};
struct SizeBoundIK {};
struct SmallNotIK {};
struct MinorOfMmik {
    std::string name;
    MinorWitness witness;  // subject as a minor of the named graph
};
struct ContainsIKMinor {
    std::string name;
    MinorWitness witness;  // named graph as a minor of the subject
};
struct TwoApex {
    ApexWitness witness;
};
struct SubgraphOfUnknotted {
    SubgraphWitness witness;  // subject into 260910
};

using Certificate = std::variant<std::monostate, OrderNotIK, SizeBoundIK, SmallNotIK, MinorOfMmik, ContainsIKMinor,
                                 TwoApex, SubgraphOfUnknotted>;

struct Verdict {
    Status status = Status::indeterminate;
    int test_index = 0;  // 1..6, 0 when no test fired
    Certificate certificate;
};

inline constexpr const char* kPipelineNote =
    "tests 1-3 reconstructed as: |G| <= 6 => not IK; ||G|| >= 5|G|-14 (|G| >= 7) => IK; ||G|| <= 20 => not IK";

struct ClassifyOptions {
    /// Re-check every witness before returning it.
    bool verify = true;
};

/// Runs the six tests in order and stops at the first that decides.
inline Verdict classify(const SmallGraph& g, const ClassifyOptions& opt = {})
{
    const int n = g.order();
    const int m = g.size();
    if (n <= 6)
        return {Status::not_ik, 1, OrderNotIK{}};
    if (m >= 5 * n - 14)
        return {Status::ik, 2, SizeBoundIK{}};
    if (m <= 20)
        return {Status::not_ik, 3, SmallNotIK{}};

    const Catalog& cat = catalog();
    for (const auto& name : small_mmik_names()) {
        const SmallGraph& big = cat[name];
        if (!is_proper_minor(big, g) || m > big.size() || n > big.order())
            continue;
        if (auto w = has_minor(big, g)) {
            if (opt.verify && !verify_witness(big, g, *w))
                throw std::logic_error("unverifiable minor-of witness for " + name);
            return {Status::not_ik, 4, MinorOfMmik{name, *w}};
        }
    }
    for (const auto& name : ik_probe_names()) {
        const SmallGraph& pat = cat[name];
        if (auto w = has_minor(g, pat)) {
            if (opt.verify && !verify_witness(g, pat, *w))
                throw std::logic_error("unverifiable contains-minor witness for " + name);
            return {Status::ik, 5, ContainsIKMinor{name, *w}};
        }
    }
    if (auto w = apex_witness(g, 2)) {
        if (opt.verify && !verify_apex_witness(g, 2, *w))
            throw std::logic_error("unverifiable 2-apex witness");
        return {Status::not_ik, 6, TwoApex{*w}};
    }
    return {};
}

/// Independent re-check of a verdict's certificate against its subject.
inline bool verify_verdict(const SmallGraph& g, const Verdict& v)
{
    const Catalog& cat = catalog();
    return std::visit(
        [&](const auto& c) -> bool {
            using C = std::decay_t<decltype(c)>;
            if constexpr (std::is_same_v<C, std::monostate>)
                return v.status == Status::indeterminate;
            else if constexpr (std::is_same_v<C, OrderNotIK>)
                return v.status == Status::not_ik && g.order() <= 6;
            else if constexpr (std::is_same_v<C, SizeBoundIK>)
                return v.status == Status::ik && g.order() >= 7 && g.size() >= 5 * g.order() - 14;
            else if constexpr (std::is_same_v<C, SmallNotIK>)
                return v.status == Status::not_ik && g.size() <= 20;
            else if constexpr (std::is_same_v<C, MinorOfMmik>)
                return v.status == Status::not_ik && is_proper_minor(cat[c.name], g) &&
                       verify_witness(cat[c.name], g, c.witness);
            else if constexpr (std::is_same_v<C, ContainsIKMinor>)
                return v.status == Status::ik && verify_witness(g, cat[c.name], c.witness);
            else if constexpr (std::is_same_v<C, TwoApex>)
                return v.status == Status::not_ik && verify_apex_witness(g, 2, c.witness);
            else
                return v.status == Status::not_ik && verify_witness(cat["260910"], g, c.witness);
        },
        v.certificate);
}

// ---------------------------------------------------------------------------
// JSON views

inline nlohmann::json to_json(const MinorWitness& w)
{
    nlohmann::json sets = nlohmann::json::array();
    for (Mask s : w.branch_sets) {
        nlohmann::json one = nlohmann::json::array();
        for_each_bit(s, [&](int v) { one.push_back(v); });
        sets.push_back(one);
    }
    return {{"branch_sets", sets}};
}

inline nlohmann::json to_json(const SubgraphWitness& w) { return {{"injection", w.injection}}; }

inline nlohmann::json to_json(const ApexWitness& w)
{
    return {{"removed", w.vertices()}, {"certified_planar", w.certified_planar}};
}

inline nlohmann::json to_json(const Verdict& v)
{
    nlohmann::json j{{"status", to_string(v.status)}, {"test", v.test_index}};
    std::visit(
        [&](const auto& c) {
            using C = std::decay_t<decltype(c)>;
            if constexpr (std::is_same_v<C, std::monostate>)
                j["certificate"] = nullptr;
            else if constexpr (std::is_same_v<C, OrderNotIK>)
                j["certificate"] = {{"kind", "OrderNotIK"}};
            else if constexpr (std::is_same_v<C, SizeBoundIK>)
                j["certificate"] = {{"kind", "SizeBoundIK"}};
            else if constexpr (std::is_same_v<C, SmallNotIK>)
                j["certificate"] = {{"kind", "SmallNotIK"}};
            else if constexpr (std::is_same_v<C, MinorOfMmik>)
                j["certificate"] = {{"kind", "MinorOf"}, {"graph", c.name}, {"witness", to_json(c.witness)}};
            else if constexpr (std::is_same_v<C, ContainsIKMinor>)
                j["certificate"] = {{"kind", "ContainsIKMinor"}, {"graph", c.name}, {"witness", to_json(c.witness)}};
            else if constexpr (std::is_same_v<C, TwoApex>)
                j["certificate"] = {{"kind", "TwoApex"}, {"witness", to_json(c.witness)}};
            else
                j["certificate"] = {{"kind", "SubgraphOfUnknotted"}, {"witness", to_json(c.witness)}};
        },
        v.certificate);
    return j;
}

// ---------------------------------------------------------------------------
// Census

/// A category test returns its evidence when it matches; with `verify` set the
/// witness behind the evidence is re-checked first.
using CategoryTest = std::function<std::optional<nlohmann::json>(const SmallGraph&, bool verify)>;

struct CensusCategory {
    std::string label;
    CategoryTest test;
};

struct CensusPlan {
    std::string slice;
    std::vector<CensusCategory> categories;
};

struct CategoryTally {
    std::string label;
    std::size_t count = 0;
    std::vector<std::string> members;  // canonical graph6
    std::vector<nlohmann::json> evidence;
};

struct CensusReport {
    std::string slice;
    std::size_t total = 0;
    std::vector<CategoryTally> categories;
    std::vector<std::string> residue;

    std::vector<std::size_t> counts() const
    {
        std::vector<std::size_t> out;
        for (const auto& c : categories)
            out.push_back(c.count);
        return out;
    }

    bool partitions() const
    {
        std::size_t sum = residue.size();
        for (const auto& c : categories)
            sum += c.count;
        return sum == total;
    }
};

/// Assigns each graph to the first category whose test matches.
inline CensusReport census(const std::vector<SmallGraph>& slice, const CensusPlan& plan, int jobs = default_jobs(),
                           bool verify = true)
{
    struct Assignment {
        int category = -1;
        nlohmann::json evidence;
    };
    auto assigned = parallel_map(
        slice,
        [&](const SmallGraph& g) {
            for (std::size_t c = 0; c < plan.categories.size(); ++c)
                if (auto ev = plan.categories[c].test(g, verify))
                    return Assignment{static_cast<int>(c), std::move(*ev)};
            return Assignment{};
        },
        jobs);

    CensusReport rep;
    rep.slice = plan.slice;
    rep.total = slice.size();
    for (const auto& c : plan.categories)
        rep.categories.push_back({c.label, 0, {}, {}});
    for (std::size_t i = 0; i < slice.size(); ++i) {
        const std::string code = to_graph6(slice[i]);
        if (assigned[i].category < 0) {
            rep.residue.push_back(code);
            continue;
        }
        auto& tally = rep.categories[assigned[i].category];
        ++tally.count;
        tally.members.push_back(code);
        tally.evidence.push_back(std::move(assigned[i].evidence));
    }
    return rep;
}

inline nlohmann::json to_json(const CensusReport& r, bool with_members = true)
{
    nlohmann::json cats = nlohmann::json::array();
    for (const auto& c : r.categories) {
        nlohmann::json j{{"label", c.label}, {"count", c.count}};
        if (with_members) {
            j["members"] = c.members;
            j["evidence"] = c.evidence;
        }
        cats.push_back(j);
    }
    return {{"slice", r.slice}, {"total", r.total}, {"categories", cats}, {"residue", r.residue}};
}

// Category tests used by the census plans.
namespace census_tests {

inline CategoryTest min_degree_below(int d)
{
    return [d](const SmallGraph& g, bool) -> std::optional<nlohmann::json> {
        int md = min_degree(g);
        if (md < d)
            return nlohmann::json{{"min_degree", md}};
        return std::nullopt;
    };
}

inline CategoryTest min_degree_equals(int d)
{
    return [d](const SmallGraph& g, bool) -> std::optional<nlohmann::json> {
        if (min_degree(g) == d)
            return nlohmann::json{{"min_degree", d}};
        return std::nullopt;
    };
}

inline CategoryTest has_subgraph_of(const std::string& name)
{
    return [name](const SmallGraph& g, bool verify) -> std::optional<nlohmann::json> {
        const SmallGraph& pat = catalog()[name];
        if (auto w = has_subgraph(g, pat)) {
            if (verify && !verify_witness(g, pat, *w))
                throw std::logic_error("unverifiable subgraph witness for " + name);
            return nlohmann::json{{"subgraph", name}, {"witness", to_json(*w)}};
        }
        return std::nullopt;
    };
}

inline CategoryTest has_minor_of(const std::string& name)
{
    return [name](const SmallGraph& g, bool verify) -> std::optional<nlohmann::json> {
        const SmallGraph& pat = catalog()[name];
        if (auto w = has_minor(g, pat)) {
            if (verify && !verify_witness(g, pat, *w))
                throw std::logic_error("unverifiable minor witness for " + name);
            return nlohmann::json{{"minor", name}, {"proper", is_proper_minor(g, pat)}, {"witness", to_json(*w)}};
        }
        return std::nullopt;
    };
}

inline CategoryTest isomorphic_to(const std::string& name)
{
    return [name](const SmallGraph& g, bool) -> std::optional<nlohmann::json> {
        if (are_isomorphic(g, catalog()[name]))
            return nlohmann::json{{"isomorphic_to", name}};
        return std::nullopt;
    };
}

inline CategoryTest p_plus_k2()
{
    return [](const SmallGraph& g, bool) -> std::optional<nlohmann::json> {
        if (recognize_p_plus_k2(g))
            return nlohmann::json{{"form", "P+K2"}};
        return std::nullopt;
    };
}

inline CategoryTest two_apex()
{
    return [](const SmallGraph& g, bool verify) -> std::optional<nlohmann::json> {
        if (auto w = apex_witness(g, 2)) {
            if (verify && !verify_apex_witness(g, 2, *w))
                throw std::logic_error("unverifiable apex witness");
            return nlohmann::json{{"two_apex", to_json(*w)}};
        }
        return std::nullopt;
    };
}

/// Subgraph of any graph in `hosts` (label names the host set in the evidence).
inline CategoryTest subgraph_of_any(std::vector<SmallGraph> hosts, std::string label)
{
    return [hosts = std::move(hosts), label](const SmallGraph& g, bool verify) -> std::optional<nlohmann::json> {
        for (std::size_t i = 0; i < hosts.size(); ++i)
            if (auto w = has_subgraph(hosts[i], g)) {
                if (verify && !verify_witness(hosts[i], g, *w))
                    throw std::logic_error("unverifiable subgraph witness into " + label);
                return nlohmann::json{{"subgraph_of", label},
                                      {"host", to_graph6(hosts[i])},
                                      {"witness", to_json(*w)}};
            }
        return std::nullopt;
    };
}

} // namespace census_tests

} // namespace mmik
