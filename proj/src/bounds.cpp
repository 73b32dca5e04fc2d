#include "powerdom/bounds.hpp"

#include <algorithm>
#include <stdexcept>

#include "powerdom/observe.hpp"
#include "powerdom/partition.hpp"

namespace powerdom {

const BoundEntry* BoundReport::find(const std::string& name) const {
    for (const auto& b : bounds)
        if (b.name == name) return &b;
    return nullptr;
}

bool BoundReport::all_hold() const {
    for (const auto& [name, ok] : holds)
        if (!ok) return false;
    return true;
}

CutDecomposition decompose_along_cut(const Graph& g, const std::vector<int>& cut,
                                     const std::vector<std::vector<int>>& blocks) {
    int n = g.order();
    if (cut.empty()) throw std::invalid_argument("cut-set is empty");
    VertexSet c(n);
    for (int v : cut) {
        if (v < 0 || v >= n) throw std::invalid_argument("cut vertex out of range");
        if (c.contains(v)) throw std::invalid_argument("cut vertex repeated");
        c.add(v);
    }
    if (c.count() == size_t(n)) throw std::invalid_argument("cut-set swallows the whole graph");

    auto rest = remove_vertices(g, c);
    auto comps = components(rest.graph);
    if (comps.size() < 2) throw std::invalid_argument("not a cut-set: removal leaves one piece");

    CutDecomposition dec;
    dec.cut = cut;
    // Components map back through the kept list; kept is increasing, so the
    // smallest-member order survives.
    std::vector<VertexSet> comp_sets;
    for (const auto& comp : comps) {
        VertexSet part(n);
        for (int v : comp) part.add(rest.kept[size_t(v)]);
        comp_sets.push_back(part);
    }
    if (blocks.empty()) {
        dec.parts = comp_sets;
    } else {
        if (blocks.size() < 2) throw std::invalid_argument("need at least two component blocks");
        std::vector<int> seen(comp_sets.size(), 0);
        for (const auto& block : blocks) {
            if (block.empty()) throw std::invalid_argument("empty component block");
            VertexSet part(n);
            for (int idx : block) {
                if (idx < 0 || idx >= int(comp_sets.size()))
                    throw std::invalid_argument("component index out of range");
                if (seen[size_t(idx)]++) throw std::invalid_argument("component grouped twice");
                part |= comp_sets[size_t(idx)];
            }
            dec.parts.push_back(part);
        }
        for (int s : seen)
            if (!s) throw std::invalid_argument("component left out of the grouping");
    }
    for (const auto& part : dec.parts) {
        dec.h.push_back(induced_subgraph(g, part));
        dec.k.push_back(induced_subgraph(g, part | c));
    }
    return dec;
}

BoundReport cutset_bounds(const Graph& g, const std::vector<int>& cut,
                          const std::vector<std::vector<int>>& blocks, const SolveOptions& opt) {
    auto dec = decompose_along_cut(g, cut, blocks);
    int m = int(dec.parts.size());
    int s = int(dec.cut.size());

    BoundReport r;
    r.exact_name = "gamma_P";
    long lower = -long(m - 1) * s;
    long upper = s;
    bool lower_ok = true, upper_ok = true;
    for (int i = 0; i < m; ++i) {
        auto wk = power_domination_number(dec.k[size_t(i)].graph, opt);
        if (wk.conclusive)
            lower += wk.value;
        else
            lower_ok = false;
        auto wh = power_domination_number(dec.h[size_t(i)].graph, opt);
        if (wh.conclusive)
            upper += wh.value;
        else
            upper_ok = false;
    }
    if (lower_ok) r.bounds.push_back({"cut_lower", "sum gamma_P(K_i) - (m-1)|C|", int(lower)});
    if (upper_ok) r.bounds.push_back({"cut_upper", "sum gamma_P(H_i) + |C|", int(upper)});
    auto we = power_domination_number(g, opt);
    if (we.conclusive) r.exact = we.value;
    r.partial = !lower_ok || !upper_ok || !we.conclusive;
    if (lower_ok && upper_ok) r.holds.push_back({"lower_le_upper", lower <= upper});
    if (lower_ok && r.exact) r.holds.push_back({"lower_le_exact", int(lower) <= *r.exact});
    if (upper_ok && r.exact) r.holds.push_back({"exact_le_upper", *r.exact <= int(upper)});
    return r;
}

BoundReport generalized_upper(const Graph& g, const std::vector<int>& cut,
                              const std::vector<std::vector<int>>& c_sub,
                              const SolveOptions& opt) {
    auto dec = decompose_along_cut(g, cut, {});
    if (c_sub.size() != dec.parts.size())
        throw std::invalid_argument("need one cut subset per component");
    int n = g.order();
    VertexSet c = VertexSet::of(n, cut);

    VertexSet assembled = c;
    long total = long(cut.size());
    bool ok = true;
    for (size_t i = 0; i < dec.parts.size(); ++i) {
        VertexSet li = dec.parts[i];
        for (int v : c_sub[i]) {
            if (v < 0 || v >= n || !c.contains(v))
                throw std::invalid_argument("cut subset vertex not in the cut-set");
            li.add(v);
        }
        auto sub = induced_subgraph(g, li);
        auto w = power_domination_number(sub.graph, opt);
        if (!w.conclusive) {
            ok = false;
            break;
        }
        total += w.value;
        for (int v : w.witness) assembled.add(sub.kept[size_t(v)]);
    }

    BoundReport r;
    r.exact_name = "gamma_P";
    if (ok) {
        if (!is_power_dominating_set(g, assembled))
            throw std::logic_error("assembled cut witness fails to power dominate");
        r.bounds.push_back({"local_upper", "sum gamma_P(L_i) + |C|", int(total)});
        r.holds.push_back({"construction_is_pds", true});
    }
    auto we = power_domination_number(g, opt);
    if (we.conclusive) r.exact = we.value;
    r.partial = !ok || !we.conclusive;
    if (ok && r.exact) r.holds.push_back({"exact_le_upper", *r.exact <= int(total)});
    return r;
}

BoundReport check_degree_ratio_bound(const Graph& g, const SolveOptions& opt) {
    if (g.size() == 0) throw std::invalid_argument("degree ratio bound needs at least one edge");
    int delta = g.max_degree();

    BoundReport r;
    r.exact_name = "gamma_P";
    r.bounds.push_back({"max_degree", "max degree of G", delta});
    auto wz = zero_forcing_number(g, opt);
    auto wp = power_domination_number(g, opt);
    if (wp.conclusive) r.exact = wp.value;
    if (wz.conclusive) {
        int ratio = (wz.value + delta - 1) / delta;
        r.bounds.push_back({"zero_forcing", "Z(G)", wz.value});
        r.bounds.push_back({"ratio_lower", "ceil(Z(G) / max degree)", ratio});
        if (r.exact) r.holds.push_back({"ratio_le_pd", ratio <= *r.exact});
    }
    r.partial = !wz.conclusive || !wp.conclusive;
    return r;
}

BoundReport check_product_bounds(const Graph& g, const Graph& h, const ProductBoundOptions& opt) {
    auto prod = cartesian_product(g, h, opt.max_vertices);
    const Graph& p = prod.graph;

    BoundReport r;
    r.exact_name = "gamma_P(G box H)";
    auto pg = power_domination_number(g, opt.solver);
    auto ph = power_domination_number(h, opt.solver);
    EllOptions eo;
    eo.solver = opt.solver;
    auto lg = compute_ell(g, ProcessMode::PowerDomination, eo);
    auto lh = compute_ell(h, ProcessMode::PowerDomination, eo);
    if (pg.conclusive) r.bounds.push_back({"pd_g", "gamma_P(G)", pg.value});
    if (ph.conclusive) r.bounds.push_back({"pd_h", "gamma_P(H)", ph.value});
    if (lg.conclusive) r.bounds.push_back({"ell_g", "ell_G", lg.value});
    if (lh.conclusive) r.bounds.push_back({"ell_h", "ell_H", lh.value});
    r.partial = !(pg.conclusive && ph.conclusive && lg.conclusive && lh.conclusive);

    // The candidate lower bounds, each with its applicability condition.
    std::vector<std::pair<std::string, int>> lower_bounds;
    if (pg.conclusive && ph.conclusive && is_connected(g) && is_connected(h)) {
        int v = std::max(pg.value, ph.value);
        r.bounds.push_back({"factor_lower", "max(gamma_P(G), gamma_P(H)), connected factors", v});
        lower_bounds.push_back({"factor_bound", v});
    }
    if (lg.conclusive && lh.conclusive) {
        int v = lg.value * lh.value;
        r.bounds.push_back({"partition_lower", "ell_G * ell_H", v});
        lower_bounds.push_back({"partition_bound", v});
    }
    if (pg.conclusive && ph.conclusive && is_tree(g) && is_tree(h)) {
        int v = pg.value * ph.value;
        r.bounds.push_back({"tree_lower", "gamma_P(T1) * gamma_P(T2), tree factors", v});
        lower_bounds.push_back({"tree_product_bound", v});
    }

    int needed = 1;
    for (const auto& [name, v] : lower_bounds) needed = std::max(needed, v);

    if (p.order() <= opt.exact_max_vertices) {
        auto wp = power_domination_number(p, opt.solver);
        if (wp.conclusive) {
            r.exact = wp.value;
            for (const auto& [name, v] : lower_bounds) r.holds.push_back({name, v <= wp.value});
        } else {
            r.partial = true;
        }
    } else if (needed <= 1) {
        for (const auto& [name, v] : lower_bounds) r.holds.push_back({name, true});
    } else {
        SolveOptions refute = opt.solver;
        refute.max_depth = needed - 1;
        auto wp = power_domination_number(p, refute);
        if (wp.conclusive) {
            // A set below the largest bound exists: its size settles every
            // inequality (and is the exact value).
            r.exact = wp.value;
            for (const auto& [name, v] : lower_bounds) r.holds.push_back({name, v <= wp.value});
        } else {
            r.bounds.push_back({"product_lower", "all smaller sets refuted", wp.lower});
            for (const auto& [name, v] : lower_bounds)
                if (wp.proves_at_least(v))
                    r.holds.push_back({name, true});
                else
                    r.partial = true;
        }
    }
    return r;
}

BoundReport check_product_forcing_bounds(const Graph& g, const Graph& h,
                                         const ProductBoundOptions& opt) {
    auto prod = cartesian_product(g, h, opt.max_vertices);
    const Graph& p = prod.graph;

    BoundReport r;
    r.exact_name = "Z(G box H)";
    EllOptions eo;
    eo.solver = opt.solver;
    auto lg = compute_ell(g, ProcessMode::PowerDomination, eo);
    auto lh = compute_ell(h, ProcessMode::PowerDomination, eo);
    auto zg = compute_ell(g, ProcessMode::ZeroForcing, eo);
    auto zh = compute_ell(h, ProcessMode::ZeroForcing, eo);
    if (lg.conclusive) r.bounds.push_back({"ell_g", "ell_G", lg.value});
    if (lh.conclusive) r.bounds.push_back({"ell_h", "ell_H", lh.value});
    if (zg.conclusive) r.bounds.push_back({"zell_g", "z_G", zg.value});
    if (zh.conclusive) r.bounds.push_back({"zell_h", "z_H", zh.value});
    r.partial = !(lg.conclusive && lh.conclusive && zg.conclusive && zh.conclusive);

    if (lg.conclusive && lh.conclusive && zg.conclusive && zh.conclusive)
        r.holds.push_back({"ell_le_forcing", lg.value * lh.value <= zg.value * zh.value});

    if (!zg.conclusive || !zh.conclusive) return r;
    int zz = zg.value * zh.value;
    r.bounds.push_back({"forcing_lower", "z_G * z_H", zz});

    if (p.order() <= opt.exact_max_vertices) {
        auto wz = zero_forcing_number(p, opt.solver);
        if (wz.conclusive) {
            r.exact = wz.value;
            r.holds.push_back({"forcing_product_bound", zz <= wz.value});
        } else {
            r.partial = true;
        }
        return r;
    }
    if (zg.value >= 2 && zh.value >= 2 && zg.partition && zh.partition) {
        // The product partition is itself the proof: every forcing set must
        // meet each of its zz parts.
        auto pp = product_failed_partition(g, *zg.partition, h, *zh.partition,
                                           ProcessMode::ZeroForcing, opt.max_vertices);
        r.bounds.push_back(
            {"product_partition_parts", "parts of the product failed partition",
             int(pp.partition.parts.size())});
        r.holds.push_back({"product_partition_certified", true});
        r.holds.push_back({"forcing_product_bound",
                           int(pp.partition.parts.size()) >= zz});
        return r;
    }
    if (zz <= 1) {
        r.holds.push_back({"forcing_product_bound", true});
        return r;
    }
    SolveOptions refute = opt.solver;
    refute.max_depth = zz - 1;
    auto wz = zero_forcing_number(p, refute);
    if (wz.conclusive) {
        r.exact = wz.value;
        r.holds.push_back({"forcing_product_bound", zz <= wz.value});
    } else if (wz.proves_at_least(zz)) {
        r.bounds.push_back({"product_lower", "all smaller sets refuted", wz.lower});
        r.holds.push_back({"forcing_product_bound", true});
    } else {
        r.partial = true;
    }
    return r;
}

}  // namespace powerdom
