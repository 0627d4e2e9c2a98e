// Acceptance run: one PASS/FAIL line per criterion, details for failures.

#include "mmik/verify.hpp"
#include "oracles.hpp"

#include <chrono>
#include <iostream>
#include <map>
#include <set>

using namespace mmik;

namespace {

struct Outcome {
    bool pass = true;
    std::vector<std::string> notes;
    std::vector<std::string> info;

    void expect(bool ok, const std::string& what)
    {
        if (!ok) {
            pass = false;
            notes.push_back(what);
        }
    }
};

// Folds the named checks of a report into an outcome; every name must exist.
void take(Outcome& out, const Report& r, const std::vector<std::string>& names)
{
    for (const auto& name : names) {
        auto it = std::find_if(r.checks.begin(), r.checks.end(), [&](const Check& c) { return c.name == name; });
        if (it == r.checks.end()) {
            out.expect(false, r.target + ": missing check '" + name + "'");
            continue;
        }
        out.expect(it->pass, r.target + ": " + name + " expected " + it->expected.dump() + ", got " +
                                 it->actual.dump());
    }
}

void take_all(Outcome& out, const Report& r)
{
    for (const auto& c : r.checks)
        out.expect(c.pass, r.target + ": " + c.name + " expected " + c.expected.dump() + ", got " + c.actual.dump());
}

int failures = 0;

void print(int n, const std::string& title, const Outcome& o)
{
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << n << ": " << title << '\n';
    for (const auto& note : o.notes)
        std::cout << "    " << note << '\n';
    for (const auto& line : o.info)
        std::cout << "    note: " << line << '\n';
    std::cout.flush();
    failures += o.pass ? 0 : 1;
}

std::vector<SmallGraph> all_graphs(int lo, int hi)
{
    std::vector<SmallGraph> out;
    for (int n = lo; n <= hi; ++n) {
        auto part = enumerate_graphs(EnumSpec::slice(n, 0, n * (n - 1) / 2), 1);
        out.insert(out.end(), part.begin(), part.end());
    }
    return out;
}

Outcome property_suites(const VerifyOptions& opt)
{
    Outcome o;
    std::size_t hits = 0, verified = 0;

    // graph6 round trip
    for (const auto& ng : catalog().graphs)
        o.expect(from_graph6(to_graph6(ng.graph)) == ng.graph, "graph6 round trip failed for " + ng.name);
    {
        std::mt19937_64 rng(6006);
        std::uniform_int_distribution<int> order(0, kMaxOrder);
        std::uniform_real_distribution<double> density(0.0, 1.0);
        int bad = 0;
        for (int i = 0; i < 10000; ++i) {
            SmallGraph g = oracle::random_graph(rng, order(rng), density(rng));
            bad += from_graph6(to_graph6(g)) == g ? 0 : 1;
        }
        o.expect(bad == 0, std::to_string(bad) + " random graphs failed the graph6 round trip");
    }

    // canonical form against brute force, every labeled graph of order <= 6
    for (int n = 0; n <= 6; ++n) {
        std::map<std::uint64_t, CanonKey> by_brute;
        std::map<CanonKey, std::uint64_t> by_key;
        bool ok = true;
        oracle::for_each_labeled(n, [&](const SmallGraph& g) {
            const std::uint64_t b = oracle::brute_key(g);
            const CanonKey k = canonical_key(g);
            auto [it, fresh] = by_brute.emplace(b, k);
            ok = ok && (fresh || it->second == k);
            auto [jt, fresh2] = by_key.emplace(k, b);
            ok = ok && (fresh2 || jt->second == b);
        });
        o.expect(ok, "canonical form disagrees with brute force at order " + std::to_string(n));
    }

    // planarity against the minor oracle on full slices
    for (auto [n, m] : {std::pair{7, 12}, {8, 15}, {8, 16}}) {
        int bad = 0;
        for (const auto& g : enumerate_graphs(EnumSpec::slice(n, m), opt.jobs)) {
            const auto r = is_planar(g);
            bad += r.planar == kuratowski_oracle(g) ? 0 : 1;
            if (!r.planar) {
                ++hits;
                verified += r.obstruction && verify_obstruction(g, *r.obstruction) ? 1 : 0;
            }
        }
        o.expect(bad == 0, "planarity disagrees with the minor oracle on " + std::to_string(bad) + " (" +
                               std::to_string(n) + "," + std::to_string(m) + ") graphs");
    }

    // minor and subgraph search against deletion/contraction, hosts <= 6, patterns <= 5
    {
        const auto hosts = all_graphs(1, 6);
        const auto patterns = all_graphs(1, 5);
        int bad = 0;
        for (const auto& h : hosts)
            for (const auto& p : patterns) {
                const auto w = has_minor(h, p);
                bad += w.has_value() == oracle::brute_minor(h, p) ? 0 : 1;
                if (w) {
                    ++hits;
                    verified += verify_witness(h, p, *w) ? 1 : 0;
                }
                const auto s = has_subgraph(h, p);
                bad += s.has_value() == oracle::brute_subgraph(h, p) ? 0 : 1;
                if (s) {
                    ++hits;
                    verified += verify_witness(h, p, *s) ? 1 : 0;
                }
            }
        o.expect(bad == 0, std::to_string(bad) + " minor/subgraph answers disagree with the oracles");
    }
    o.expect(hits == verified, std::to_string(hits - verified) + " of " + std::to_string(hits) +
                                   " containment witnesses failed re-verification");
    o.info.push_back(std::to_string(hits) + " containment witnesses re-verified");

    // determinism across worker counts
    {
        VerifyOptions a = opt, b = opt;
        a.jobs = 1;
        b.jobs = 3;
        const std::string ja = to_json(verify_prop28(a), true).dump();
        const std::string jb = to_json(verify_prop28(b), true).dump();
        o.expect(ja == jb, "prop28 report differs between 1 and 3 workers");
        const std::string ea = to_json(verify_mmn2a(a), true).dump();
        const std::string eb = to_json(verify_mmn2a(b), true).dump();
        o.expect(ea == eb, "mmn2a report differs between 1 and 3 workers");
        auto spec = EnumSpec::slice(9, 24).with_min_degree(3);
        o.expect(enumerate_graphs(spec, 1) == enumerate_graphs(spec, 3), "(9,24) enumeration differs across workers");
    }
    return o;
}

} // namespace

int main()
{
    const auto start = std::chrono::steady_clock::now();
    VerifyOptions opt;
    opt.jobs = default_jobs();
    opt.verify = true;

    const Report p28 = verify_prop28(opt);
    const Report p22 = verify_prop22(opt);
    const Report range = verify_range_23_27(opt);
    const Report mm = verify_mmn2a(opt);

    {
        Outcome o;
        take(o, p28, {"(9,30) graphs", "(9,29) graphs", "(9,28) connected graphs"});
        print(1, "enumeration counts (9,30)=63, (9,29)=148, connected (9,28)=344", o);
    }
    {
        Outcome o;
        for (const char* key : {"(9,30)", "(9,29)", "(9,28)"})
            take(o, p28, {std::string(key) + " category counts", std::string(key) + " residue",
                          std::string(key) + " categories partition the slice"});
        print(2, "census partitions with exact category counts and zero residue", o);
    }
    {
        Outcome o;
        take(o, p28, {"(9,28) min degree > 3 graphs whose complement has three components",
                      "... of those, graphs with an F9 subgraph"});
        print(3, "97 three-component complements; 56 F9-subgraph graphs with two isolated complement vertices", o);
    }
    {
        Outcome o;
        take(o, p28, {"(9,31) graphs with a K7 minor"});
        print(4, "every (9,31) graph has a verified K7 minor", o);
    }
    {
        Outcome o;
        take(o, p22, {"nonplanar (7,12) graphs, max degree 5, min degree >= 2, <= 1 degree-2 vertex",
                      "triangle-free (8,10) graphs with degree sequence 3^4 2^4",
                      "non-apex (8,15) graphs with min degree >= 2", "... identified", "K4,4-e vertex orbits",
                      "P8 vertex orbits"});
        const json d = p22.details.value("max_degree_6", json::object());
        o.info.push_back("(8,16) non-apex candidates: " + d.value("candidates", json()).dump() + " = " +
                         d.value("petersen_8_15_plus_edge", json()).dump() + " Petersen-plus-edge + " +
                         d.value("other", json()).dump() + " other (reported, not enforced)");
        print(5, "side counts 6, 10, {K4,4-e, P8}, vertex orbits 2 and 4", o);
    }
    {
        Outcome o;
        take_all(o, p22);
        print(6, "(9,22) survivors are exactly A9, B9, E9+e, Cousin12, Cousin41; residue 0", o);
    }
    {
        Outcome o;
        take_all(o, mm);
        print(7, "12 MMN2A graphs through order 9, split 5/5/1/1", o);
    }
    {
        Outcome o;
        take(o, range, {"pipeline verdicts failing re-verification", "indeterminate connected (9,23..27) graphs",
                        "indeterminate graphs that are subgraphs of 260910",
                        "indeterminate graphs with a proper E9+e minor"});
        print(8, "24 indeterminate graphs: 4 inside 260910, 20 with a proper E9+e minor", o);
    }
    {
        Outcome o;
        take(o, range, {"E9 non-edge orbits", "E9 extensions (isomorphic to E9+e, F9 subgraph)",
                        "G9,26 non-edge orbits besides those of {1,3} and {2,4}",
                        "... each named by exactly one of {2,3}, {8,9}, {5,7}, {1,6}",
                        "G9,26 listed edges reach every non-edge orbit", "G9,26 extensions certified",
                        "G9,27 is a subgraph of 260910"});
        const std::size_t g926 = orbits(catalog()["G9,26"], ElementKind::non_edge).size();
        o.expect(g926 == 6, "G9,26 non-edge orbits expected 6, got " + std::to_string(g926));
        print(9, "edge-addition ledger for E9, G9,26 and G9,27", o);
    }
    {
        Outcome o;
        const Report th = verify_theorem(TheoremInputs{});
        take_all(o, th);
        std::size_t axioms = th.details["axioms"].size();
        o.expect(axioms > 0, "no axioms declared");
        o.info.push_back(std::to_string(th.details["graphs"].size()) + " graphs, " + std::to_string(axioms) +
                         " axioms; upstream verifiers are reported under their own criteria");
        print(10, "theorem assembly lists 8 graphs with sizes 21,21,22,22,22,22,22,28 and the axioms", o);
    }
    {
        Outcome o = property_suites(opt);
        print(11, "property suites and determinism across worker counts", o);
    }

    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << " in "
              << secs << " s\n";
    return failures == 0 ? 0 : 1;
}
