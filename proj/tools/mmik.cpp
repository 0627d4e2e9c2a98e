// mmik: command-line front end.
//
// Exit status: 0 success or PASS, 1 verification failure or "not found",
// 2 usage error (bad flags, malformed graph6, unwritable output).

#include "mmik/apex.hpp"
#include "mmik/canon.hpp"
#include "mmik/catalog.hpp"
#include "mmik/classify.hpp"
#include "mmik/enumerate.hpp"
#include "mmik/families.hpp"
#include "mmik/graph6.hpp"
#include "mmik/minors.hpp"
#include "mmik/planar.hpp"
#include "mmik/verify.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <regex>
#include <string>
#include <vector>

namespace fs = std::filesystem;
using nlohmann::json;
using namespace mmik;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct RunConfig {
    int order = 9;
    std::string size;  // "m" or "lo..hi"
    bool connected = false;
    std::optional<int> min_degree;
    std::optional<int> max_degree;
    bool count_only = false;
    int jobs = 0;
    std::string out_dir;
    std::string cert_dir;
    std::uint64_t seed = 0;
    std::string axioms;
};

std::pair<int, int> parse_size(const std::string& s, int order)
{
    const int total = order * (order - 1) / 2;
    if (s.empty())
        return {0, total};
    static const std::regex range(R"(^(\d+)(?:\.\.(\d+))?$)");
    std::smatch m;
    if (!std::regex_match(s, m, range))
        throw UsageError("bad size '" + s + "': expected M or LO..HI");
    const int lo = std::stoi(m[1]);
    const int hi = m[2].matched ? std::stoi(m[2]) : lo;
    if (lo > hi || hi > total)
        throw UsageError("size range " + s + " outside 0.." + std::to_string(total));
    return {lo, hi};
}

EnumSpec slice_spec(const RunConfig& cfg)
{
    if (cfg.order < 0 || cfg.order > kMaxEnumerationOrder)
        throw UsageError("order must be in 0.." + std::to_string(kMaxEnumerationOrder));
    auto [lo, hi] = parse_size(cfg.size, cfg.order);
    EnumSpec spec = EnumSpec::slice(cfg.order, lo, hi);
    if (cfg.connected)
        spec.with_connected();
    if (cfg.min_degree)
        spec.with_min_degree(*cfg.min_degree);
    if (cfg.max_degree)
        spec.with_max_degree(*cfg.max_degree);
    return spec;
}

SmallGraph parse_graph(const std::string& text)
{
    if (catalog().has(text))
        return catalog()[text];
    return from_graph6(text);
}

/// Writes via a temporary file in the same directory, then renames.
void write_atomic(const fs::path& path, const std::string& content)
{
    std::error_code ec;
    if (path.has_parent_path())
        fs::create_directories(path.parent_path(), ec);
    fs::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out)
            throw UsageError("cannot write " + tmp.string());
        out << content;
        if (!out.flush())
            throw UsageError("cannot write " + tmp.string());
    }
    fs::rename(tmp, path, ec);
    if (ec)
        throw UsageError("cannot rename " + tmp.string() + " to " + path.string() + ": " + ec.message());
}

/// Prints to stdout, or writes `name` under --out when given.
void emit(const RunConfig& cfg, const std::string& name, const std::string& content)
{
    if (cfg.out_dir.empty()) {
        std::cout << content;
        return;
    }
    const fs::path path = fs::path(cfg.out_dir) / name;
    write_atomic(path, content);
    std::cerr << "wrote " << path.string() << '\n';
}

std::string lines(const std::vector<SmallGraph>& gs)
{
    std::string out;
    for (const auto& g : gs)
        out += to_graph6(g) + '\n';
    return out;
}

std::string slice_name(const EnumSpec& s)
{
    std::string name = "n" + std::to_string(s.order) + "_m" + std::to_string(s.min_size);
    if (s.max_size != s.min_size)
        name += "-" + std::to_string(s.max_size);
    if (s.connected.value_or(false))
        name += "_c";
    if (s.min_degree)
        name += "_d" + std::to_string(*s.min_degree);
    if (s.max_degree)
        name += "_D" + std::to_string(*s.max_degree);
    return name;
}

int run_enumerate(const RunConfig& cfg)
{
    const EnumSpec spec = slice_spec(cfg);
    const auto graphs = enumerate_graphs(spec, cfg.jobs);
    if (cfg.count_only) {
        std::cout << graphs.size() << '\n';
        return 0;
    }
    emit(cfg, slice_name(spec) + ".g6", lines(graphs));
    return 0;
}

int run_canon(const std::vector<std::string>& inputs, bool show_orbits)
{
    for (const auto& text : inputs) {
        const SmallGraph g = parse_graph(text);
        if (!show_orbits) {
            std::cout << to_graph6(canonical_graph(g)) << '\n';
            continue;
        }
        const CanonicalForm f = canonical_form(g);
        json perm = json::array();
        for (int v = 0; v < g.order(); ++v)
            perm.push_back(f.perm[v]);
        json j{{"canonical", to_graph6(apply_permutation(g, f.perm))}, {"permutation", perm}};
        j["vertex_orbits"] = orbits(g, ElementKind::vertex).vertex_classes;
        for (auto kind : {ElementKind::edge, ElementKind::non_edge}) {
            json classes = json::array();
            for (const auto& cls : orbits(g, kind).pair_classes) {
                json c = json::array();
                for (const Edge& e : cls)
                    c.push_back({e.u, e.v});
                classes.push_back(c);
            }
            j[to_string(kind) + "_orbits"] = classes;
        }
        std::cout << j.dump() << '\n';
    }
    return 0;
}

int run_planar(const std::vector<std::string>& inputs)
{
    for (const auto& text : inputs) {
        const SmallGraph g = parse_graph(text);
        const PlanarityResult r = is_planar(g);
        json j{{"graph", to_graph6(g)}, {"planar", r.planar}};
        if (r.obstruction)
            j["obstruction"] = {{"kind", to_string(r.obstruction->kind)}, {"witness", to_json(r.obstruction->model)}};
        std::cout << j.dump() << '\n';
    }
    return 0;
}

int run_apex(const std::vector<std::string>& inputs, int k)
{
    for (const auto& text : inputs) {
        const SmallGraph g = parse_graph(text);
        auto w = apex_witness(g, k);
        json j{{"graph", to_graph6(g)}, {"k", k}, {"apex", w.has_value()}};
        if (w)
            j["witness"] = to_json(*w);
        std::cout << j.dump() << '\n';
    }
    return 0;
}

int run_search(const RunConfig& cfg, int max_order, int k, int min_order)
{
    MmnaSearchOptions opt;
    opt.max_order = max_order;
    opt.min_order = min_order;
    opt.k = k;
    opt.jobs = cfg.jobs;
    if (!cfg.size.empty()) {
        auto [lo, hi] = parse_size(cfg.size, max_order);
        opt.min_size = lo;
        opt.max_size = hi;
    }
    const auto found = find_mm_not_k_apex(opt);
    json rows = json::array();
    for (const auto& g : found)
        rows.push_back({{"graph6", to_graph6(g)},
                        {"order", g.order()},
                        {"size", g.size()},
                        {"name", catalog().identify(g).value_or("")}});
    const std::string stem = "mmn" + std::to_string(k) + "a_n" + std::to_string(max_order);
    if (cfg.out_dir.empty()) {
        std::cout << lines(found);
        std::cerr << found.size() << " graphs\n";
    } else {
        emit(cfg, stem + ".g6", lines(found));
        emit(cfg, stem + ".json", json{{"k", k}, {"max_order", max_order}, {"graphs", rows}}.dump(2) + '\n');
    }
    return 0;
}

int run_containment(const std::string& host_text, const std::string& pattern_text, bool minor)
{
    const SmallGraph host = parse_graph(host_text);
    const SmallGraph pattern = parse_graph(pattern_text);
    json j{{"host", to_graph6(host)}, {"pattern", to_graph6(pattern)}};
    bool found = false;
    if (minor) {
        if (auto w = has_minor(host, pattern)) {
            found = verify_witness(host, pattern, *w);
            j["witness"] = to_json(*w);
            j["proper"] = is_proper_minor(host, pattern);
        }
    } else if (auto w = has_subgraph(host, pattern)) {
        found = verify_witness(host, pattern, *w);
        j["witness"] = to_json(*w);
    }
    j["present"] = found;
    std::cout << j.dump() << '\n';
    return found ? 0 : 1;
}

int run_family(const RunConfig& cfg, const std::string& seed_text)
{
    const SmallGraph seed = parse_graph(seed_text);
    const FamilyClosure fam = family_closure(seed, seed_text);
    json members = json::array();
    std::vector<SmallGraph> graphs;
    for (std::size_t i = 0; i < fam.members.size(); ++i) {
        const auto& m = fam.members[i];
        graphs.push_back(m.graph);
        json row{{"index", i},
                 {"graph6", to_graph6(m.graph)},
                 {"order", m.graph.order()},
                 {"size", m.graph.size()},
                 {"parent", m.parent},
                 {"move", to_string(m.move)},
                 {"name", catalog().identify(m.graph).value_or("")}};
        if (m.move == Move::triangle_y)
            row["triangle"] = m.triangle;
        if (m.move == Move::y_triangle) {
            row["vertex"] = m.vertex;
            row["edges_lost"] = m.edges_lost;
        }
        members.push_back(row);
    }
    if (cfg.out_dir.empty()) {
        std::cout << json{{"seed", seed_text}, {"members", members}}.dump(2) << '\n';
    } else {
        const std::string stem = "family_" + std::regex_replace(seed_text, std::regex("[^A-Za-z0-9]"), "_");
        emit(cfg, stem + ".g6", lines(graphs));
        emit(cfg, stem + ".json", json{{"seed", seed_text}, {"members", members}}.dump(2) + '\n');
    }
    return 0;
}

int run_catalog(const std::vector<std::string>& names, bool graph6_only)
{
    const Catalog& cat = catalog();
    std::vector<const NamedGraph*> chosen;
    if (names.empty())
        for (const auto& ng : cat.graphs)
            chosen.push_back(&ng);
    for (const auto& n : names) {
        if (!cat.has(n))
            throw UsageError("unknown catalog graph '" + n + "'");
        chosen.push_back(&cat.get(n));
    }
    for (const auto* ng : chosen) {
        const std::string code = to_graph6(canonical_graph(ng->graph));
        if (graph6_only)
            std::cout << code << '\n';
        else
            std::cout << ng->name << '\t' << ng->graph.order() << '\t' << ng->graph.size() << '\t' << code << '\t'
                      << ng->provenance << '\n';
    }
    return 0;
}

int run_classify(const RunConfig& cfg, const std::vector<std::string>& inputs)
{
    std::vector<SmallGraph> graphs;
    if (inputs.empty()) {
        graphs = enumerate_graphs(slice_spec(cfg), cfg.jobs);
    } else {
        for (const auto& t : inputs)
            graphs.push_back(parse_graph(t));
    }
    auto verdicts = parallel_map(graphs, [](const SmallGraph& g) { return classify(g); }, cfg.jobs);
    std::string out;
    std::map<std::string, std::size_t> tally;
    for (std::size_t i = 0; i < graphs.size(); ++i) {
        json j = to_json(verdicts[i]);
        j["graph"] = to_graph6(graphs[i]);
        out += j.dump() + '\n';
        ++tally[to_string(verdicts[i].status)];
    }
    emit(cfg, "classify.jsonl", out);
    for (const auto& [k, v] : tally)
        std::cerr << k << ": " << v << '\n';
    return 0;
}

int run_census(const RunConfig& cfg)
{
    auto [lo, hi] = parse_size(cfg.size, cfg.order);
    if (cfg.order != 9 || lo != hi || lo < 28 || lo > 30)
        throw UsageError("census plans exist for -n 9 -m 28, 29 or 30");
    CensusPlan plan;
    EnumSpec spec = EnumSpec::slice(9, lo);
    if (lo == 30) {
        plan = census_plan_30();
    } else if (lo == 29) {
        const auto c30 = census(enumerate_graphs(EnumSpec::slice(9, 30), cfg.jobs), census_plan_30(), cfg.jobs);
        plan = census_plan_29(p_plus_k2_graphs(c30));
    } else {
        plan = census_plan_28();
        spec.with_connected();
    }
    const auto report = census(enumerate_graphs(spec, cfg.jobs), plan, cfg.jobs);
    json j = to_json(report, true);
    j["plan"] = detail::plan_json(plan);
    for (const auto& c : report.categories)
        std::cerr << c.count << '\t' << c.label << '\n';
    std::cerr << report.residue.size() << "\tresidue\n";
    emit(cfg, "census_n9_m" + std::to_string(lo) + ".json", j.dump(2) + '\n');
    return report.residue.empty() && report.partitions() ? 0 : 1;
}

int run_verify(const RunConfig& cfg, const std::string& target, bool full)
{
    VerifyOptions opt;
    opt.jobs = cfg.jobs;
    opt.full_order9 = full;
    std::vector<Report> reports;
    std::optional<Report> p22, p28, rng;
    const bool all = target == "all";
    if (all || target == "prop28")
        reports.push_back(*(p28 = verify_prop28(opt)));
    if (all || target == "prop22")
        reports.push_back(*(p22 = verify_prop22(opt)));
    if (all || target == "range")
        reports.push_back(*(rng = verify_range_23_27(opt)));
    if (all || target == "mmn2a")
        reports.push_back(verify_mmn2a(opt));
    if (all || target == "theorem") {
        TheoremInputs in;
        in.prop22 = p22 ? &*p22 : nullptr;
        in.prop28 = p28 ? &*p28 : nullptr;
        in.range = rng ? &*rng : nullptr;
        in.axioms = load_axioms(cfg.axioms);
        reports.push_back(verify_theorem(in));
    }
    if (reports.empty())
        throw UsageError("unknown verify target '" + target + "'");

    bool pass = true;
    for (const auto& r : reports) {
        std::cout << summary(r);
        pass = pass && r.passed();
        json j = to_json(r);
        j["seed"] = cfg.seed;
        if (!cfg.out_dir.empty())
            emit(cfg, "verify_" + r.target + ".json", j.dump(2) + '\n');
        if (!cfg.cert_dir.empty()) {
            const fs::path path = fs::path(cfg.cert_dir) / ("certificates_" + r.target + ".json");
            write_atomic(path, r.certificates.dump(1) + '\n');
        }
    }
    if (all)
        std::cout << "all: " << (pass ? "PASS" : "FAIL") << '\n';
    return pass ? 0 : 1;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Order-nine MMIK graph verification toolkit"};
    app.require_subcommand(1);
    RunConfig cfg;

    auto slice_flags = [&](CLI::App* sub) {
        sub->add_option("-n,--order", cfg.order, "graph order");
        sub->add_option("-m,--size", cfg.size, "edge count M or range LO..HI");
        sub->add_flag("--connected", cfg.connected, "connected graphs only");
        sub->add_option("--min-degree", cfg.min_degree, "minimum degree");
        sub->add_option("--max-degree", cfg.max_degree, "maximum degree");
    };
    app.add_option("--jobs", cfg.jobs, "worker threads (default: MMIK_JOBS or hardware concurrency)");
    app.add_option("--out", cfg.out_dir, "output directory (default: MMIK_OUT, else standard output)");
    app.add_option("--certificates", cfg.cert_dir, "dump every witness into this directory");
    app.add_option("--seed", cfg.seed, "seed recorded in reports");
    app.add_option("--axioms", cfg.axioms, "axioms JSON file for verify theorem");

    auto* en = app.add_subcommand("enumerate", "list non-isomorphic graphs of a slice as graph6");
    slice_flags(en);
    en->add_flag("--count-only", cfg.count_only, "print only the number of graphs");

    std::vector<std::string> inputs;
    bool show_orbits = false;
    auto* ca = app.add_subcommand("canon", "canonical graph6");
    ca->add_option("graph", inputs, "graph6 strings or catalog names")->required();
    ca->add_flag("--orbits", show_orbits, "print labeling and orbits as JSON");

    auto* pl = app.add_subcommand("planar", "planarity with a Kuratowski minor witness");
    pl->add_option("graph", inputs, "graph6 strings or catalog names")->required();

    int k = 2;
    auto* ap = app.add_subcommand("apex", "smallest deletion set leaving a planar graph");
    ap->add_option("graph", inputs, "graph6 strings or catalog names")->required();
    ap->add_option("-k", k, "deletion budget")->check(CLI::Range(0, 16));

    int max_order = 9, min_order = 5;
    auto* se = app.add_subcommand("search-mmn2a", "minor-minimal not k-apex graphs");
    se->add_option("--max-order", max_order, "largest order")->check(CLI::Range(1, 9));
    se->add_option("--min-order", min_order, "smallest order")->check(CLI::Range(1, 9));
    se->add_option("-k", k, "k (1 or 2)")->check(CLI::Range(1, 2));
    se->add_option("-m,--size", cfg.size, "edge count M or range LO..HI");

    std::string host, pattern;
    auto* mi = app.add_subcommand("minor", "minor containment with branch sets");
    mi->add_option("host", host)->required();
    mi->add_option("pattern", pattern)->required();
    auto* sg = app.add_subcommand("subgraph", "subgraph containment with an injection");
    sg->add_option("host", host)->required();
    sg->add_option("pattern", pattern)->required();

    std::string seed_graph;
    auto* fa = app.add_subcommand("family", "closure under triangle-Y and Y-triangle moves");
    fa->add_option("seed", seed_graph, "graph6 string or catalog name")->required();

    bool graph6_only = false;
    auto* cg = app.add_subcommand("catalog", "named graphs");
    cg->add_option("names", inputs, "names to print (default: all)");
    cg->add_flag("--graph6", graph6_only, "print only canonical graph6");

    auto* cl = app.add_subcommand("classify", "six-test IK pipeline");
    cl->add_option("graph", inputs, "graph6 strings or catalog names (default: the slice)");
    slice_flags(cl);

    auto* ce = app.add_subcommand("census", "priority-ordered census of a size 28..30 slice");
    ce->add_option("-n,--order", cfg.order, "graph order");
    ce->add_option("-m,--size", cfg.size, "edge count")->required();

    std::string target;
    bool full = false;
    auto* ve = app.add_subcommand("verify", "run verifiers");
    ve->add_option("target", target, "prop22, prop28, range, mmn2a, theorem or all")
        ->required()
        ->check(CLI::IsMember({"prop22", "prop28", "range", "mmn2a", "theorem", "all"}));
    ve->add_flag("--full", full, "range: also classify every connected order-9 graph");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    if (cfg.jobs == 0)
        if (const char* env = std::getenv("MMIK_JOBS"))
            cfg.jobs = std::atoi(env);
    if (cfg.jobs <= 0)
        cfg.jobs = default_jobs();
    set_default_jobs(cfg.jobs);
    if (cfg.out_dir.empty())
        if (const char* env = std::getenv("MMIK_OUT"))
            cfg.out_dir = env;

    try {
        if (*en)
            return run_enumerate(cfg);
        if (*ca)
            return run_canon(inputs, show_orbits);
        if (*pl)
            return run_planar(inputs);
        if (*ap)
            return run_apex(inputs, k);
        if (*se)
            return run_search(cfg, max_order, k, min_order);
        if (*mi)
            return run_containment(host, pattern, true);
        if (*sg)
            return run_containment(host, pattern, false);
        if (*fa)
            return run_family(cfg, seed_graph);
        if (*cg)
            return run_catalog(inputs, graph6_only);
        if (*cl)
            return run_classify(cfg, inputs);
        if (*ce)
            return run_census(cfg);
        if (*ve)
            return run_verify(cfg, target, full);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const Graph6Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const GraphError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 2;
}
