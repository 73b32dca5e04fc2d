// Command-line front end: compute invariants, verify certificates, generate
// families, run tree sweeps, evaluate cut-set bounds.
//
// Exit codes: 0 ok, 1 check failed, 2 input error, 3 inconclusive (budget),
// 4 resource cap exceeded.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "powerdom/bounds.hpp"
#include "powerdom/families.hpp"
#include "powerdom/graph_io.hpp"
#include "powerdom/json_io.hpp"
#include "powerdom/observe.hpp"
#include "powerdom/partition.hpp"
#include "powerdom/solve.hpp"
#include "powerdom/trees.hpp"

using nlohmann::json;
using namespace powerdom;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitInputError = 2;
constexpr int kExitInconclusive = 3;
constexpr int kExitResourceCap = 4;

struct CommonOpts {
    std::string format;
    int threads = 1;
    uint64_t max_checks = 0;
    int64_t budget_ms = -1;  // -1: unset, fall back to POWERDOM_BUDGET_MS
    int max_depth = -1;
    bool prune_dominated = false;
    bool as_json = false;
    std::string out;
};

void add_common(CLI::App* sub, CommonOpts& c, bool with_solver = true) {
    sub->add_option("--format", c.format, "input format override: el, g6, json");
    sub->add_flag("--json", c.as_json, "machine-readable JSON output");
    sub->add_option("--out", c.out, "write the main result to this file");
    if (with_solver) {
        sub->add_option("--threads", c.threads, "worker threads for the search")
            ->check(CLI::PositiveNumber);
        sub->add_option("--max-checks", c.max_checks,
                        "abort after this many candidate sets (0: unlimited)");
        sub->add_option("--budget-ms", c.budget_ms,
                        "wall-clock budget in ms (0: unlimited); results under a "
                        "budget can be inconclusive and are not byte-reproducible");
        sub->add_option("--max-depth", c.max_depth, "largest set size to try (-1: unlimited)");
        sub->add_flag("--prune-dominated", c.prune_dominated,
                      "drop vertices whose closed neighborhood another vertex covers");
    }
}

SolveOptions solver_options(const CommonOpts& c) {
    SolveOptions o;
    o.threads = c.threads;
    o.max_checks = c.max_checks;
    if (c.budget_ms >= 0) {
        o.wall_ms = c.budget_ms;
    } else if (const char* env = std::getenv("POWERDOM_BUDGET_MS")) {
        o.wall_ms = std::strtoll(env, nullptr, 10);
    }
    o.max_depth = c.max_depth;
    o.dominance_pruning = c.prune_dominated;
    return o;
}

void emit(const CommonOpts& c, const std::string& text) {
    if (c.out.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << '\n';
    } else {
        std::ofstream f(c.out);
        if (!f) throw ParseError("cannot write " + c.out);
        f << text;
        if (!text.empty() && text.back() != '\n') f << '\n';
        std::cout << "wrote " << c.out << "\n";
    }
}

std::string label_row(const Graph& g, const VertexSet& s) {
    std::string row;
    for (int v : s) {
        if (!row.empty()) row += ' ';
        row += g.label(v);
    }
    return row;
}

std::string witness_human(const Graph& g, const SearchWitness& w) {
    std::ostringstream os;
    if (w.conclusive) {
        os << w.invariant << " = " << w.value << "\n";
        if (!w.witness.empty()) {
            os << "witness = " << w.witness.to_string() << "\n";
            if (g.has_labels()) os << "labels: " << label_row(g, w.witness) << "\n";
        }
        if (w.partition) {
            os << "parts:\n";
            for (const auto& part : w.partition->parts) {
                os << "  " << part.to_string();
                if (g.has_labels()) os << "   " << label_row(g, part);
                os << "\n";
            }
        }
        if (w.exhaustive) os << "search: exhaustive\n";
    } else {
        os << w.invariant << " >= " << w.lower;
        if (w.upper >= 0) os << ", <= " << w.upper;
        os << " (inconclusive: budget)\n";
    }
    return os.str();
}

int report_exit(const BoundReport& r) {
    if (!r.all_hold()) return kExitCheckFailed;
    if (r.partial) return kExitInconclusive;
    return kExitOk;
}

std::string report_human(const BoundReport& r) {
    std::ostringstream os;
    for (const auto& b : r.bounds) os << b.name << " = " << b.value << "   (" << b.rule << ")\n";
    if (r.exact)
        os << r.exact_name << " = " << *r.exact << "\n";
    else
        os << r.exact_name << " not computed\n";
    for (const auto& [name, ok] : r.holds) os << name << ": " << (ok ? "holds" : "FAILS") << "\n";
    if (r.partial) os << "partial report: some subcomputation hit its budget\n";
    return os.str();
}

std::vector<int> parse_vertex_list(const Graph& g, const std::string& csv) {
    std::vector<int> out;
    std::string item;
    std::istringstream ss(csv);
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        int v = g.find_vertex(item);
        if (v < 0) throw ParseError("unknown vertex '" + item + "'");
        out.push_back(v);
    }
    if (out.empty()) throw ParseError("empty vertex list '" + csv + "'");
    return out;
}

std::vector<int> parse_int_list(const std::string& csv) {
    std::vector<int> out;
    std::string item;
    std::istringstream ss(csv);
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        size_t used = 0;
        int v = std::stoi(item, &used);
        if (used != item.size()) throw ParseError("bad integer '" + item + "'");
        out.push_back(v);
    }
    return out;
}

// ---------------------------------------------------------------- invariants

int cmd_invariant(const std::string& name, const std::string& path, const CommonOpts& c) {
    Graph g = read_graph_file(path, c.format);
    auto opt = solver_options(c);
    SearchWitness w;
    if (name == "pd") {
        w = power_domination_number(g, opt);
    } else if (name == "zf") {
        w = zero_forcing_number(g, opt);
    } else if (name == "dom") {
        w = domination_number(g, opt);
    } else if (name == "sp") {
        w = spider_cover_number(g, opt);
    } else {
        EllOptions eo;
        eo.solver = opt;
        eo.blocking.max_n = 20;
        auto mode = name == "ell" ? ProcessMode::PowerDomination : ProcessMode::ZeroForcing;
        w = compute_ell(g, mode, eo);
    }
    emit(c, c.as_json ? witness_to_json_text(w) : witness_human(g, w));
    return w.conclusive ? kExitOk : kExitInconclusive;
}

// ------------------------------------------------------------------- product

int cmd_product(const std::string& path_g, const std::string& path_h, const std::string& check,
                const std::string& write_to, int max_vertices, int exact_max, const CommonOpts& c) {
    Graph g = read_graph_file(path_g, c.format);
    Graph h = read_graph_file(path_h, c.format);
    auto prod = cartesian_product(g, h, max_vertices);
    std::cout << "product: " << prod.graph.order() << " vertices, " << prod.graph.size()
              << " edges\n";
    if (!write_to.empty()) {
        write_graph_file(prod.graph, write_to, c.format);
        std::cout << "wrote " << write_to << "\n";
    }
    if (check.empty()) return kExitOk;

    ProductBoundOptions po;
    po.solver = solver_options(c);
    po.max_vertices = max_vertices;
    po.exact_max_vertices = exact_max;
    BoundReport r;
    std::vector<std::string> require;
    if (check == "factors") {
        r = check_product_bounds(g, h, po);
        require = {"factor_bound"};
    } else if (check == "partition") {
        r = check_product_bounds(g, h, po);
        require = {"partition_bound"};
    } else if (check == "vizing") {
        r = check_product_bounds(g, h, po);
        require = {"tree_product_bound"};
    } else if (check == "forcing") {
        r = check_product_forcing_bounds(g, h, po);
        require = {"ell_le_forcing", "forcing_product_bound"};
    } else {
        throw ParseError("unknown check '" + check + "'");
    }
    emit(c, c.as_json ? bound_report_to_json_text(r) : report_human(r));
    for (const auto& key : require) {
        bool found = false;
        for (const auto& [name, ok] : r.holds)
            if (name == key) {
                found = true;
                if (!ok) return kExitCheckFailed;
            }
        if (!found) return kExitInconclusive;  // bound not established under budget
    }
    return report_exit(r);
}

// ----------------------------------------------------------------------- gen

struct GenOpts {
    int m = 2, s = 1, k = 3, n = 3, p = 2, q = 2, a = 3, b = 3;
    std::string legs = "1,1,1";
    std::string base = "p3";
    std::string flags;
};

Graph named_small_graph(const std::string& name, const std::string& format) {
    if (name.size() > 1 && (name[0] == 'p' || name[0] == 'P')) {
        bool digits = true;
        for (size_t i = 1; i < name.size(); ++i) digits = digits && std::isdigit(name[i]);
        if (digits) return gen_path(std::stoi(name.substr(1)));
    }
    return read_graph_file(name, format);
}

int cmd_gen(const std::string& family, const GenOpts& go, const CommonOpts& c) {
    FamilyInstance inst;
    bool bundled = true;
    if (family == "gallery14") {
        inst = gen_gallery14();
    } else if (family == "gallery19") {
        inst = gen_gallery19();
    } else if (family == "gms") {
        inst = gen_gms(go.m, go.s);
    } else if (family == "necklace") {
        inst = gen_necklace(go.k);
    } else if (family == "familyF") {
        std::vector<bool> flags;
        if (!go.flags.empty())
            for (int f : parse_int_list(go.flags)) flags.push_back(f != 0);
        inst = gen_family_f(named_small_graph(go.base, c.format), flags);
    } else if (family == "overlap") {
        inst = gen_overlap_example(go.n);
    } else {
        bundled = false;
        if (family == "spider") {
            inst.graph = gen_spider(parse_int_list(go.legs));
        } else if (family == "path") {
            inst.graph = gen_path(go.n);
        } else if (family == "star") {
            inst.graph = gen_star(go.n);
        } else if (family == "doublestar") {
            inst.graph = gen_doublestar(go.p, go.q);
        } else if (family == "complete_bipartite") {
            inst.graph = gen_complete_bipartite(go.a, go.b);
        } else {
            throw ParseError("unknown family '" + family + "'");
        }
    }

    std::string prefix = c.out.empty() ? family : c.out;
    std::string fmt = c.format.empty() ? "el" : c.format;
    std::string graph_path = prefix + "." + fmt;
    write_graph_file(inst.graph, graph_path, fmt);
    std::cout << "wrote " << graph_path << " (" << inst.graph.order() << " vertices, "
              << inst.graph.size() << " edges)\n";

    if (bundled && !inst.partition.parts.empty()) {
        std::string text;
        if (!inst.u_sets.empty()) {
            text = local_blocking_to_json_text(inst.partition, inst.u_sets,
                                               ProcessMode::PowerDomination);
        } else {
            auto outcome =
                check_failed_partition(inst.graph, inst.partition, ProcessMode::PowerDomination);
            if (const auto* cert = std::get_if<FailedPartitionCertificate>(&outcome))
                text = certificate_to_json_text(*cert);
            else
                text = partition_to_json_text(inst.partition);
        }
        std::ofstream f(prefix + ".partition.json");
        f << text << "\n";
        std::cout << "wrote " << prefix << ".partition.json\n";
    }
    if (!inst.cut.empty()) {
        json j;
        j["kind"] = "cut";
        j["cut"] = inst.cut;
        j["choices"] = inst.cut_choice;
        std::ofstream f(prefix + ".cut.json");
        f << j.dump(2) << "\n";
        std::cout << "wrote " << prefix << ".cut.json\n";
    }
    return kExitOk;
}

// -------------------------------------------------------------------- verify

VertexSet set_from_json(const json& a, int n) {
    std::vector<int> vs;
    for (const auto& v : a) vs.push_back(v.get<int>());
    return VertexSet::of(n, vs);
}

VertexPartition partition_from_json(const json& parts, int n) {
    std::vector<std::vector<int>> lists;
    for (const auto& p : parts) lists.push_back(p.get<std::vector<int>>());
    return VertexPartition::of(n, lists);
}

int fail_check(const std::string& why) {
    std::cout << "FAIL: " << why << "\n";
    return kExitCheckFailed;
}

int verify_witness(const Graph& g, const json& j) {
    std::string invariant = j.at("invariant").get<std::string>();
    if (j.at("value").is_null()) {
        std::cout << "ok: inconclusive witness carries no claim to verify\n";
        return kExitOk;
    }
    int value = j.at("value").get<int>();
    VertexSet s = set_from_json(j.at("witness"), g.order());
    if (invariant == "gamma_P") {
        if (int(s.count()) != value) return fail_check("witness size differs from value");
        if (!is_power_dominating_set(g, s)) return fail_check("witness does not power dominate");
    } else if (invariant == "Z") {
        if (int(s.count()) != value) return fail_check("witness size differs from value");
        if (!is_zero_forcing_set(g, s)) return fail_check("witness does not force");
    } else if (invariant == "gamma") {
        if (int(s.count()) != value) return fail_check("witness size differs from value");
        if (!domination_step(g, s).covers(g)) return fail_check("witness does not dominate");
    } else if (invariant == "sp") {
        if (!is_tree(g)) return fail_check("graph is not a tree");
        if (!j.contains("partition")) throw ParseError("sp witness needs a partition");
        auto p = partition_from_json(j.at("partition"), g.order());
        p.validate();
        if (int(p.parts.size()) != value) return fail_check("part count differs from value");
        for (const auto& part : p.parts) {
            auto sub = induced_subgraph(g, part);
            if (!is_connected(sub.graph)) return fail_check("part does not induce a subtree");
            if (!is_spider(sub.graph)) return fail_check("part does not induce a spider");
        }
    } else if (invariant == "ell" || invariant == "zell") {
        auto mode = invariant == "ell" ? ProcessMode::PowerDomination : ProcessMode::ZeroForcing;
        if (value >= 2) {
            if (!j.contains("partition")) throw ParseError("ell witness needs a partition");
            auto p = partition_from_json(j.at("partition"), g.order());
            if (int(p.parts.size()) != value) return fail_check("part count differs from value");
            if (!certified(check_failed_partition(g, p, mode)))
                return fail_check("partition does not certify failure");
        }
    } else {
        throw ParseError("unknown invariant '" + invariant + "'");
    }
    std::cout << "ok: " << invariant << " witness verified\n";
    return kExitOk;
}

int verify_failed_partition(const Graph& g, const json& j) {
    auto mode = j.at("mode").get<std::string>() == "zf" ? ProcessMode::ZeroForcing
                                                        : ProcessMode::PowerDomination;
    auto p = partition_from_json(j.at("parts"), g.order());
    auto outcome = check_failed_partition(g, p, mode);
    if (const auto* ref = std::get_if<PartitionRefutation>(&outcome))
        return fail_check("part " + std::to_string(ref->part_index) +
                          " does not block: complement observes everything");
    const auto& cert = std::get<FailedPartitionCertificate>(outcome);
    const auto& stored = j.at("witnesses");
    if (stored.size() != cert.witnesses.size()) return fail_check("witness count differs");
    for (size_t i = 0; i < cert.witnesses.size(); ++i)
        if (set_from_json(stored[i], g.order()) != cert.witnesses[i])
            return fail_check("witness " + std::to_string(i) +
                              " differs from the recomputed unobserved set");
    std::cout << "ok: failed partition certificate verified (" << cert.witnesses.size()
              << " parts)\n";
    return kExitOk;
}

int verify_local_blocking(const Graph& g, const json& j) {
    auto p = partition_from_json(j.at("parts"), g.order());
    std::vector<VertexSet> u_sets;
    for (const auto& u : j.at("u_sets")) u_sets.push_back(set_from_json(u, g.order()));
    if (!check_local_blocking(g, p, u_sets)) return fail_check("local blocking condition does not hold");
    std::cout << "ok: local blocking certificate verified (" << p.parts.size() << " parts)\n";
    return kExitOk;
}

int verify_leaf_path(const Graph& g, const json& j) {
    if (!is_tree(g)) return fail_check("graph is not a tree");
    auto p = partition_from_json(j.at("parts"), g.order());
    p.validate();
    for (const auto& rep : j.at("reports")) {
        int idx = rep.at("part").get<int>();
        if (idx < 0 || idx >= int(p.parts.size())) return fail_check("report part out of range");
        int w = rep.at("leaves")[0].get<int>();
        int x = rep.at("leaves")[1].get<int>();
        if (p.parts.size() == 1 && w == x) continue;  // single-part instances are vacuous
        auto fresh = check_leaf_path(g, p.parts[size_t(idx)], w, x);
        if (!fresh.verdict)
            return fail_check("part " + std::to_string(idx) + " fails the leaf path condition");
        if (fresh.path != rep.at("path").get<std::vector<int>>())
            return fail_check("stored path differs from the tree path");
        if (fresh.pd_status != rep.at("pd_status").get<std::vector<bool>>())
            return fail_check("stored observation pattern differs from recomputation");
    }
    std::cout << "ok: leaf path condition verified (" << p.parts.size() << " parts)\n";
    return kExitOk;
}

int verify_cut(const Graph& g, const json& j) {
    auto cut = j.at("cut").get<std::vector<int>>();
    auto dec = decompose_along_cut(g, cut);
    if (j.contains("choices") && !j.at("choices").empty()) {
        auto choices = j.at("choices").get<std::vector<std::vector<int>>>();
        if (choices.size() != dec.parts.size())
            return fail_check("need one cut choice per component");
        VertexSet c = VertexSet::of(g.order(), cut);
        for (const auto& ci : choices)
            for (int v : ci)
                if (v < 0 || v >= g.order() || !c.contains(v))
                    return fail_check("cut choice vertex not in the cut-set");
    }
    std::cout << "ok: cut-set verified (" << dec.parts.size() << " components)\n";
    return kExitOk;
}

int cmd_verify(const std::string& graph_path, const std::string& cert_path, const CommonOpts& c) {
    Graph g = read_graph_file(graph_path, c.format);
    std::ifstream f(cert_path);
    if (!f) throw ParseError("cannot read " + cert_path);
    std::stringstream buf;
    buf << f.rdbuf();
    json j;
    try {
        j = json::parse(buf.str());
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("bad certificate JSON: ") + e.what());
    }
    try {
        std::string kind = j.at("kind").get<std::string>();
        if (kind == "witness") return verify_witness(g, j);
        if (kind == "failed_partition") return verify_failed_partition(g, j);
        if (kind == "local_blocking") return verify_local_blocking(g, j);
        if (kind == "leaf_path_condition") return verify_leaf_path(g, j);
        if (kind == "cut") return verify_cut(g, j);
        if (kind == "partition") {
            auto p = partition_from_json(j.at("parts"), g.order());
            p.validate();
            std::cout << "ok: partition verified (" << p.parts.size() << " parts)\n";
            return kExitOk;
        }
        throw ParseError("unknown certificate kind '" + kind + "'");
    } catch (const json::exception& e) {
        throw ParseError(std::string("bad certificate JSON: ") + e.what());
    } catch (const std::invalid_argument& e) {
        // Semantically broken content (say, a tampered partition) is a failed
        // check, not an input error.
        return fail_check(e.what());
    }
}

// --------------------------------------------------------------- sweep-trees

struct SweepOpts {
    int max_n = 7;
    std::vector<std::string> checks;
    std::string out;
    bool resume = false;
};

json tree_record(const std::string& check, const std::vector<const Graph*>& ts) {
    json j;
    j["check"] = check;
    json g6 = json::array();
    json ns = json::array();
    for (const Graph* t : ts) {
        g6.push_back(write_graph6(*t));
        ns.push_back(t->order());
    }
    j["g6"] = g6;
    j["n"] = ns;
    return j;
}

std::string record_key(const json& j) {
    std::string key = j.at("check").get<std::string>();
    for (const auto& s : j.at("g6")) key += "|" + s.get<std::string>();
    return key;
}

int cmd_sweep(const SweepOpts& so, const CommonOpts& c) {
    for (const auto& check : so.checks) {
        bool pair_check = check == "vizing";
        if (check != "vizing" && check != "ellT_eq_sp" && check != "leaf_path_exists" &&
            check != "degree_ratio")
            throw ParseError("unknown check '" + check + "'");
        if (pair_check && so.max_n > 9)
            throw std::length_error("pair sweeps are capped at max-n 9");
        if (!pair_check && so.max_n > 10)
            throw std::length_error("single-tree sweeps are capped at max-n 10");
    }
    if (so.max_n < 2) throw ParseError("sweep needs max-n >= 2");

    std::set<std::string> done;
    if (so.resume && !so.out.empty()) {
        std::ifstream f(so.out);
        std::string line;
        while (std::getline(f, line)) {
            if (line.empty()) continue;
            try {
                done.insert(record_key(json::parse(line)));
            } catch (...) {
                throw ParseError("unreadable resume line in " + so.out);
            }
        }
    }
    std::ofstream out_file;
    if (!so.out.empty()) {
        out_file.open(so.out, so.resume ? std::ios::app : std::ios::trunc);
        if (!out_file) throw ParseError("cannot write " + so.out);
    }

    std::vector<Graph> trees;
    for (int n = 2; n <= so.max_n; ++n)
        for (auto& t : enumerate_trees(n)) trees.push_back(std::move(t));

    auto opt = solver_options(c);
    long instances = 0, failures = 0, skipped = 0;
    std::vector<json> counterexamples;

    auto run_one = [&](const std::string& check, json rec, bool ok, json values) {
        rec["values"] = std::move(values);
        rec["ok"] = ok;
        ++instances;
        if (!ok) {
            ++failures;
            counterexamples.push_back(rec);
        }
        if (out_file.is_open()) out_file << rec.dump() << "\n";
    };

    for (const auto& check : so.checks) {
        if (check == "vizing") {
            ProductBoundOptions po;
            po.solver = opt;
            po.exact_max_vertices = 0;  // refutation route for every pair
            for (const auto& t1 : trees)
                for (const auto& t2 : trees) {
                    json rec = tree_record(check, {&t1, &t2});
                    if (done.count(record_key(rec))) {
                        ++skipped;
                        continue;
                    }
                    auto r = check_product_bounds(t1, t2, po);
                    bool ok = false;
                    json values;
                    for (const auto& b : r.bounds) values[b.name] = b.value;
                    for (const auto& [name, holds] : r.holds)
                        if (name == "tree_product_bound") ok = holds;
                    if (r.partial) ok = false;
                    run_one(check, std::move(rec), ok, std::move(values));
                }
            continue;
        }
        for (const auto& t : trees) {
            json rec = tree_record(check, {&t});
            if (done.count(record_key(rec))) {
                ++skipped;
                continue;
            }
            bool ok = false;
            json values;
            if (check == "ellT_eq_sp") {
                auto pd = power_domination_number(t, opt);
                auto sp = spider_cover_number(t, opt);
                EllOptions eo;
                eo.solver = opt;
                auto ell = compute_ell(t, ProcessMode::PowerDomination, eo);
                values["gamma_P"] = pd.value;
                values["sp"] = sp.value;
                values["ell"] = ell.value;
                ok = pd.conclusive && sp.conclusive && ell.conclusive && pd.value == sp.value &&
                     sp.value == ell.value;
            } else if (check == "leaf_path_exists") {
                auto sp = spider_cover_number(t, opt);
                auto res = tree_leaf_path_partition(t, opt);
                bool all = true;
                for (const auto& rep : res.reports) all = all && rep.verdict;
                values["sp"] = sp.value;
                values["parts"] = int(res.partition.parts.size());
                values["verified"] = all;
                ok = sp.conclusive && all && int(res.partition.parts.size()) == sp.value;
            } else {  // degree_ratio
                auto r = check_degree_ratio_bound(t, opt);
                for (const auto& b : r.bounds) values[b.name] = b.value;
                if (r.exact) values["gamma_P"] = *r.exact;
                ok = !r.partial && r.all_hold();
            }
            run_one(check, std::move(rec), ok, std::move(values));
        }
    }

    std::cout << "instances: " << instances << "  failures: " << failures;
    if (skipped) std::cout << "  skipped (resume): " << skipped;
    std::cout << "\n";
    for (const auto& ce : counterexamples) std::cout << "counterexample: " << ce.dump() << "\n";
    return failures ? kExitCheckFailed : kExitOk;
}

// -------------------------------------------------------------------- cutset

int cmd_cutset(const std::string& path, const std::string& cut_csv,
               const std::vector<std::string>& ci, const std::string& blocks_arg,
               const CommonOpts& c) {
    Graph g = read_graph_file(path, c.format);
    auto cut = parse_vertex_list(g, cut_csv);
    auto opt = solver_options(c);
    BoundReport r;
    if (!ci.empty()) {
        std::vector<std::vector<int>> c_sub;
        for (const auto& s : ci) c_sub.push_back(parse_vertex_list(g, s));
        r = generalized_upper(g, cut, c_sub, opt);
    } else {
        std::vector<std::vector<int>> blocks;
        if (!blocks_arg.empty()) {
            std::string group;
            std::istringstream ss(blocks_arg);
            while (std::getline(ss, group, ';')) blocks.push_back(parse_int_list(group));
        }
        r = cutset_bounds(g, cut, blocks, opt);
    }
    emit(c, c.as_json ? bound_report_to_json_text(r) : report_human(r));
    return report_exit(r);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact toolkit for power domination, zero forcing, and their partition bounds"};
    app.require_subcommand(1);
    int rc = kExitOk;

    CommonOpts inv_c;
    std::string inv_path;
    for (const char* name : {"pd", "zf", "dom", "sp", "ell", "zell"}) {
        auto* sub = app.add_subcommand(
            name, std::string("compute ") +
                      (std::string(name) == "pd"    ? "the power domination number"
                       : std::string(name) == "zf"  ? "the zero forcing number"
                       : std::string(name) == "dom" ? "the domination number"
                       : std::string(name) == "sp"  ? "the spider cover number of a tree"
                       : std::string(name) == "ell"
                           ? "the largest failed power dominating partition size"
                           : "the largest failed zero forcing partition size"));
        sub->add_option("graph", inv_path, "input graph file")->required();
        add_common(sub, inv_c);
        sub->callback([&rc, name, &inv_path, &inv_c] { rc = cmd_invariant(name, inv_path, inv_c); });
    }

    CommonOpts prod_c;
    std::string prod_g, prod_h, prod_check, prod_write;
    int prod_cap = 4096, prod_exact = 20;
    auto* prod = app.add_subcommand("product", "build G box H and check product bounds");
    prod->add_option("G", prod_g, "first factor")->required();
    prod->add_option("H", prod_h, "second factor")->required();
    prod->add_option("--check", prod_check, "factors, partition, vizing, or forcing");
    prod->add_option("--write", prod_write, "write the product graph to this file");
    prod->add_option("--max-vertices", prod_cap, "product order cap");
    prod->add_option("--exact-max", prod_exact, "exact product search below this order");
    add_common(prod, prod_c);
    prod->callback([&] {
        rc = cmd_product(prod_g, prod_h, prod_check, prod_write, prod_cap, prod_exact, prod_c);
    });

    CommonOpts gen_c;
    GenOpts gen_o;
    std::string gen_family;
    auto* gen = app.add_subcommand("gen", "generate a named graph family");
    gen->add_option("family", gen_family,
                    "gallery14, gallery19, gms, necklace, familyF, overlap, spider, path, star, "
                    "doublestar, complete_bipartite")
        ->required();
    gen->add_option("--m", gen_o.m, "copies (gms)");
    gen->add_option("--s", gen_o.s, "cut size (gms)");
    gen->add_option("--k", gen_o.k, "diamonds (necklace)");
    gen->add_option("--n", gen_o.n, "order parameter (overlap, path, star)");
    gen->add_option("--p", gen_o.p, "first center leaves (doublestar)");
    gen->add_option("--q", gen_o.q, "second center leaves (doublestar)");
    gen->add_option("--a", gen_o.a, "first side (complete_bipartite)");
    gen->add_option("--b", gen_o.b, "second side (complete_bipartite)");
    gen->add_option("--legs", gen_o.legs, "comma list of leg lengths (spider)");
    gen->add_option("--base", gen_o.base, "base graph for familyF: pN or a graph file");
    gen->add_option("--flags", gen_o.flags, "comma list of 0/1 pendant edge flags (familyF)");
    add_common(gen, gen_c, false);
    gen->callback([&] { rc = cmd_gen(gen_family, gen_o, gen_c); });

    CommonOpts ver_c;
    std::string ver_graph, ver_cert;
    auto* ver = app.add_subcommand("verify", "revalidate a certificate against its graph");
    ver->add_option("graph", ver_graph, "input graph file")->required();
    ver->add_option("certificate", ver_cert, "certificate JSON file")->required();
    add_common(ver, ver_c, false);
    ver->callback([&] { rc = cmd_verify(ver_graph, ver_cert, ver_c); });

    CommonOpts sweep_c;
    SweepOpts sweep_o;
    auto* sweep = app.add_subcommand("sweep-trees", "run checks over all trees up to a size");
    sweep->add_option("--max-n", sweep_o.max_n, "largest tree order")->required();
    sweep->add_option("--check", sweep_o.checks,
                      "ellT_eq_sp, vizing, leaf_path_exists, degree_ratio")
        ->required();
    sweep->add_flag("--resume", sweep_o.resume, "skip instances already in the results file");
    add_common(sweep, sweep_c);
    sweep->callback([&] {
        sweep_o.out = sweep_c.out;  // the common --out is the JSON-lines results file
        rc = cmd_sweep(sweep_o, sweep_c);
    });

    CommonOpts cut_c;
    std::string cut_path, cut_csv, cut_blocks;
    std::vector<std::string> cut_ci;
    auto* cut = app.add_subcommand("cutset", "sandwich bounds along a cut-set");
    cut->add_option("graph", cut_path, "input graph file")->required();
    cut->add_option("--cut", cut_csv, "comma list of cut vertices (labels or indices)")
        ->required();
    cut->add_option("--ci", cut_ci, "per-component cut subset (repeatable)");
    cut->add_option("--blocks", cut_blocks, "component grouping, e.g. '0,1;2'");
    add_common(cut, cut_c);
    cut->callback([&] { rc = cmd_cutset(cut_path, cut_csv, cut_ci, cut_blocks, cut_c); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInputError;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::length_error& e) {
        std::cerr << "resource cap: " << e.what() << "\n";
        return kExitResourceCap;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInputError;
    }
    return rc;
}
