#include "powerdom/partition.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>

#include "detail.hpp"

namespace powerdom {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
    return std::chrono::duration_cast<std::chrono::duration<double, std::milli>>(Clock::now() - t0)
        .count();
}

}  // namespace

FailedPartitionOutcome check_failed_partition(const Graph& g, const VertexPartition& p,
                                              ProcessMode mode) {
    if (p.n != g.order())
        throw std::invalid_argument("partition universe does not match graph order");
    p.validate();
    if (p.size() < 2)
        throw std::invalid_argument("failed partitions need at least 2 parts, got " +
                                    std::to_string(p.size()));
    FailedPartitionCertificate cert{mode, p, {}};
    for (int i = 0; i < p.size(); ++i) {
        VertexSet rest = p.parts[size_t(i)].complement();
        ObservationState st =
            mode == ProcessMode::PowerDomination ? power_dominate(g, rest) : zero_force(g, rest);
        if (st.covers(g)) return PartitionRefutation{i, std::move(st)};
        cert.witnesses.push_back(st.observed.complement());
    }
    return cert;
}

std::vector<VertexSet> minimal_blocking_sets(const Graph& g, ProcessMode mode,
                                             const BlockingSetOptions& opt) {
    int n = g.order();
    if (n < 1) throw std::invalid_argument("blocking sets need a nonempty graph");
    if (n > opt.max_n)
        throw std::length_error("blocking set enumeration needs n <= " + std::to_string(opt.max_n) +
                                ", got " + std::to_string(n));
    uint64_t total = uint64_t(1) << n;
    uint64_t full = total - 1;
    std::vector<bool> fails(total);
    VertexSet rest(n), obs(n);
    for (uint64_t mask = 0; mask < total; ++mask) {
        rest.word(0) = full & ~mask;
        if (mode == ProcessMode::PowerDomination)
            power_dominate_into(g, rest, obs);
        else
            zero_force_into(g, rest, obs);
        fails[mask] = obs.count() != n;
    }
    std::vector<VertexSet> out;
    for (uint64_t mask = 1; mask < total; ++mask) {
        if (!fails[mask]) continue;
        bool minimal = true;
        for (uint64_t rem = mask; rem; rem &= rem - 1)
            if (fails[mask ^ (rem & -rem)]) {
                minimal = false;
                break;
            }
        if (minimal) {
            VertexSet b(n);
            b.word(0) = mask;
            out.push_back(std::move(b));
        }
    }
    return out;
}

namespace {

struct PackingSearch {
    const std::vector<uint64_t>& blocks;
    const std::vector<int>& sizes;  // popcounts, ascending
    int n;
    int stop_at;  // early exit when a packing this large is found; <0 disables
    uint64_t budget;
    uint64_t nodes = 0;
    bool complete = true;
    int best = 0;
    std::vector<int> best_pick;
    std::vector<int> pick;

    void run(size_t idx, uint64_t used, int count) {
        if (count > best) {
            best = count;
            best_pick = pick;
        }
        if (stop_at >= 0 && best >= stop_at) return;
        if (++nodes > budget) {
            complete = false;
            return;
        }
        int free = n - std::popcount(used);
        for (size_t i = idx; i < blocks.size(); ++i) {
            if (int(blocks.size() - i) + count <= best) return;  // not enough candidates left
            if (count + free / sizes[i] <= best) return;         // sizes ascend; no room
            if (blocks[i] & used) continue;
            pick.push_back(int(i));
            run(i + 1, used | blocks[i], count + 1);
            pick.pop_back();
            if (!complete || (stop_at >= 0 && best >= stop_at)) return;
        }
    }
};

VertexPartition partition_from_packing(int n, const std::vector<VertexSet>& sets) {
    std::vector<VertexSet> parts = sets;
    VertexSet covered(n);
    for (const auto& s : parts) covered |= s;
    VertexSet rest = covered.complement();
    if (!rest.empty()) parts[0] |= rest;
    VertexPartition p(n, std::move(parts));
    p.canonicalize();
    return p;
}

}  // namespace

SearchWitness compute_ell(const Graph& g, ProcessMode mode, const EllOptions& opt) {
    if (g.order() == 0) throw std::invalid_argument("ell needs a graph on at least one vertex");
    auto t0 = Clock::now();
    SearchWitness w;
    w.invariant = mode == ProcessMode::PowerDomination ? "ell" : "z_ell";
    w.witness = VertexSet(g.order());
    w.lower = 1;

    SearchWitness bound = mode == ProcessMode::PowerDomination
                              ? power_domination_number(g, opt.solver)
                              : zero_forcing_number(g, opt.solver);
    int upper = bound.conclusive ? bound.value : g.order();

    for (const auto& hint : opt.hints) {
        if (hint.size() < 2) continue;
        auto outcome = check_failed_partition(g, hint, mode);
        if (certified(outcome) && hint.size() > w.lower) {
            w.lower = hint.size();
            w.partition = hint;
            w.partition->canonicalize();
        }
    }

    if (w.lower == upper && bound.conclusive) {
        w.conclusive = true;
        w.value = upper;
        w.upper = upper;
        w.exhaustive = true;  // cannot exceed the matching upper bound
        w.elapsed_ms = ms_since(t0);
        return w;
    }

    if (g.order() <= opt.blocking.max_n) {
        auto blocks = minimal_blocking_sets(g, mode, opt.blocking);
        std::vector<uint64_t> masks;
        std::vector<int> sizes;
        std::vector<size_t> order(blocks.size());
        for (size_t i = 0; i < order.size(); ++i) order[i] = i;
        std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
            int ca = blocks[a].count(), cb = blocks[b].count();
            return ca != cb ? ca < cb : blocks[a].word(0) < blocks[b].word(0);
        });
        for (size_t i : order) {
            masks.push_back(blocks[i].word(0));
            sizes.push_back(blocks[i].count());
        }
        PackingSearch search{masks, sizes, g.order(), bound.conclusive ? upper : -1,
                             opt.packing_node_budget};
        search.run(0, 0, 0);
        int found = std::max(search.best, w.lower);
        if (search.complete || (bound.conclusive && search.best >= upper)) {
            w.conclusive = true;
            w.value = found;
            w.lower = found;
            w.upper = found;
            w.exhaustive = true;
            if (search.best >= w.lower && search.best >= 2) {
                std::vector<VertexSet> sets;
                for (int i : search.best_pick) {
                    VertexSet b(g.order());
                    b.word(0) = masks[size_t(i)];
                    sets.push_back(std::move(b));
                }
                w.partition = partition_from_packing(g.order(), sets);
            }
            if (w.value == 1) w.partition.reset();
        } else {
            w.conclusive = false;
            w.lower = found;
            w.upper = upper;
        }
    } else {
        w.conclusive = false;
        w.upper = upper;
    }

    if (w.partition) {
        auto outcome = check_failed_partition(g, *w.partition, mode);
        if (!certified(outcome))
            throw std::logic_error("assembled partition failed to certify; packing logic is wrong");
    }
    w.elapsed_ms = ms_since(t0);
    return w;
}

bool check_local_blocking(const Graph& g, const VertexPartition& p, const std::vector<VertexSet>& u_sets) {
    if (p.n != g.order())
        throw std::invalid_argument("partition universe does not match graph order");
    p.validate();
    if (p.size() < 2) throw std::invalid_argument("needs at least 2 parts");
    if (u_sets.size() != size_t(p.size()))
        throw std::invalid_argument("need exactly one witness set per part");
    for (size_t i = 0; i < u_sets.size(); ++i) {
        if (u_sets[i].universe() != g.order())
            throw std::invalid_argument("witness set " + std::to_string(i) + " has wrong universe");
        if (u_sets[i].empty())
            throw std::invalid_argument("witness set " + std::to_string(i) + " is empty");
        if (!u_sets[i].is_subset_of(p.parts[i]))
            throw std::invalid_argument("witness set " + std::to_string(i) + " leaves its part");
    }
    for (size_t i = 0; i < u_sets.size(); ++i) {
        const VertexSet& u = u_sets[i];
        const VertexSet& part = p.parts[i];
        VertexSet closed = u;
        for (int v : u) closed |= g.neighbors(v);
        if (!closed.is_subset_of(part)) return false;
        for (int x : part - u) {
            int t = (g.neighbors(x) & u).count();
            if (t == 1) return false;
        }
    }
    return true;
}

ProductPartitionResult product_failed_partition(const Graph& g, const VertexPartition& pg,
                                                const Graph& h, const VertexPartition& ph,
                                                ProcessMode mode, int max_vertices) {
    VertexPartition a = pg;
    VertexPartition b = ph;
    a.canonicalize();
    b.canonicalize();
    auto oa = check_failed_partition(g, a, mode);
    if (!certified(oa))
        throw std::invalid_argument(
            "first factor partition is not failed: part " +
            std::to_string(std::get<PartitionRefutation>(oa).part_index) +
            " leaves a set that observes everything");
    auto ob = check_failed_partition(h, b, mode);
    if (!certified(ob))
        throw std::invalid_argument(
            "second factor partition is not failed: part " +
            std::to_string(std::get<PartitionRefutation>(ob).part_index) +
            " leaves a set that observes everything");
    const auto& ua = std::get<FailedPartitionCertificate>(oa).witnesses;
    const auto& ub = std::get<FailedPartitionCertificate>(ob).witnesses;

    ProductGraph prod = cartesian_product(g, h, max_vertices);
    int n = prod.graph.order();
    std::vector<VertexSet> parts;
    for (int i = 0; i < a.size(); ++i)
        for (int j = 0; j < b.size(); ++j) {
            VertexSet part(n);
            for (int x : a.parts[size_t(i)])
                for (int y : b.parts[size_t(j)]) part.add(prod.labeling.index(x, y));
            parts.push_back(std::move(part));
        }
    VertexPartition p(n, std::move(parts));
    auto outcome = check_failed_partition(prod.graph, p, mode);
    if (!certified(outcome))
        throw std::logic_error("product of failed partitions did not certify as failed");
    auto cert = std::get<FailedPartitionCertificate>(std::move(outcome));
    for (int i = 0; i < a.size(); ++i)
        for (int j = 0; j < b.size(); ++j) {
            const VertexSet& wit = cert.witnesses[size_t(i * b.size() + j)];
            for (int x : ua[size_t(i)])
                for (int y : ub[size_t(j)])
                    if (!wit.contains(prod.labeling.index(x, y)))
                        throw std::logic_error("product witness misses a block vertex");
        }
    return {std::move(prod), std::move(p), std::move(cert)};
}

namespace {

LeafPathReport leaf_path_against(const Graph& tree, const VertexSet& observed, int w, int x) {
    LeafPathReport rep;
    rep.w = w;
    rep.x = x;
    rep.path = tree_path(tree, w, x);
    rep.pd_status.resize(rep.path.size());
    for (size_t i = 0; i < rep.path.size(); ++i)
        rep.pd_status[i] = observed.contains(rep.path[i]);
    rep.verdict = true;
    for (size_t i = 0; i < rep.path.size() && rep.verdict; ++i) {
        if (!rep.pd_status[i]) continue;
        if (i > 0 && rep.pd_status[i - 1]) rep.verdict = false;
        if (i + 1 < rep.path.size() && rep.pd_status[i + 1]) rep.verdict = false;
    }
    return rep;
}

}  // namespace

LeafPathReport check_leaf_path(const Graph& tree, const VertexSet& part, int w, int x) {
    if (!is_tree(tree)) throw std::invalid_argument("condition check is defined on trees");
    if (part.universe() != tree.order())
        throw std::invalid_argument("part universe does not match tree order");
    if (w == x) throw std::invalid_argument("the two leaves must be distinct");
    for (int v : {w, x}) {
        if (v < 0 || v >= tree.order()) throw std::invalid_argument("leaf index out of range");
        if (tree.degree(v) != 1)
            throw std::invalid_argument("vertex " + std::to_string(v) + " is not a leaf");
        if (!part.contains(v))
            throw std::invalid_argument("vertex " + std::to_string(v) + " is outside the part");
    }
    VertexSet observed = power_dominate(tree, part.complement()).observed;
    return leaf_path_against(tree, observed, w, x);
}

TreePartitionResult tree_leaf_path_partition(const Graph& tree, const SolveOptions& opt) {
    if (!is_tree(tree)) throw std::invalid_argument("needs a tree");
    if (tree.order() < 2) throw std::invalid_argument("needs a tree on at least 2 vertices");
    int n = tree.order();
    SearchWitness sp = spider_cover_number(tree, opt);
    if (!sp.conclusive) throw std::runtime_error("budget too small to fix the part count");
    int k = sp.value;
    VertexSet lvs = leaves(tree);

    if (k == 1) {
        VertexPartition p(n, {VertexSet::full(n)});
        int w = lvs.first();
        LeafPathReport rep = check_leaf_path(tree, VertexSet::full(n), w, lvs.next(w));
        rep.part_index = 0;
        return {std::move(p), {std::move(rep)}};
    }

    auto edges = tree.edges();
    int m = int(edges.size());
    std::vector<int> cut(size_t(k - 1), 0);
    for (int i = 0; i < k - 1; ++i) cut[size_t(i)] = i;
    std::vector<VertexSet> parts;
    bool more = true;
    while (more) {
        detail::cut_components(tree, edges, cut, parts);
        bool ok = true;
        std::vector<LeafPathReport> reports;
        for (size_t i = 0; i < parts.size() && ok; ++i) {
            VertexSet part_leaves = parts[i] & lvs;
            if (part_leaves.count() < 2) {
                ok = false;
                break;
            }
            VertexSet observed = power_dominate(tree, parts[i].complement()).observed;
            bool part_ok = false;
            for (int w = part_leaves.first(); w != -1 && !part_ok; w = part_leaves.next(w))
                for (int x = part_leaves.next(w); x != -1 && !part_ok; x = part_leaves.next(x)) {
                    LeafPathReport rep = leaf_path_against(tree, observed, w, x);
                    if (rep.verdict) {
                        rep.part_index = int(i);
                        reports.push_back(std::move(rep));
                        part_ok = true;
                    }
                }
            ok = part_ok;
        }
        if (ok) {
            VertexPartition p(n, parts);
            return {std::move(p), std::move(reports)};
        }
        more = detail::next_combination(cut, m);
    }
    throw std::logic_error("no connected partition of the computed size passes the path condition");
}

}  // namespace powerdom
