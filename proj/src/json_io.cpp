#include "powerdom/json_io.hpp"

#include <json.hpp>

#include "powerdom/graph_io.hpp"

namespace powerdom {

using nlohmann::json;

std::string graph_to_json_text(const Graph& g) {
    json j;
    j["n"] = g.order();
    auto& edges = j["edges"] = json::array();
    for (const auto& [u, v] : g.edges()) edges.push_back(json::array({u, v}));
    if (g.has_labels()) j["labels"] = g.labels();
    return j.dump(2);
}

Graph graph_from_json_text(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("bad JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("n") || !j.contains("edges"))
        throw ParseError("graph JSON needs 'n' and 'edges'");
    try {
        int n = j.at("n").get<int>();
        std::vector<Edge> edges;
        for (const auto& e : j.at("edges")) {
            if (!e.is_array() || e.size() != 2) throw ParseError("edge entries must be pairs");
            edges.emplace_back(e[0].get<int>(), e[1].get<int>());
        }
        std::vector<std::string> labels;
        if (j.contains("labels")) labels = j.at("labels").get<std::vector<std::string>>();
        return Graph(n, edges, std::move(labels));
    } catch (const json::exception& e) {
        throw ParseError(std::string("bad graph JSON: ") + e.what());
    }
}

namespace {

json set_to_json(const VertexSet& s) {
    json a = json::array();
    for (int v : s) a.push_back(v);
    return a;
}

json parts_to_json(const VertexPartition& p) {
    json a = json::array();
    for (const auto& part : p.parts) a.push_back(set_to_json(part));
    return a;
}

}  // namespace

std::string observation_to_json_text(const ObservationState& st) {
    json j;
    j["kind"] = "observation";
    j["n"] = int(st.round.size());
    j["observed"] = set_to_json(st.observed);
    j["round"] = st.round;
    j["rounds_used"] = st.rounds_used;
    return j.dump(2);
}

std::string witness_to_json_text(const SearchWitness& w) {
    json j;
    j["kind"] = "witness";
    j["invariant"] = w.invariant;
    j["conclusive"] = w.conclusive;
    if (w.conclusive)
        j["value"] = w.value;
    else
        j["value"] = nullptr;
    j["lower"] = w.lower;
    if (w.upper >= 0) j["upper"] = w.upper;
    j["exhaustive"] = w.exhaustive;
    j["witness"] = set_to_json(w.witness);
    if (w.partition) j["partition"] = parts_to_json(*w.partition);
    return j.dump(2);
}

std::string partition_to_json_text(const VertexPartition& p) {
    json j;
    j["kind"] = "partition";
    j["n"] = p.n;
    j["parts"] = parts_to_json(p);
    return j.dump(2);
}

std::string certificate_to_json_text(const FailedPartitionCertificate& c) {
    json j;
    j["kind"] = "failed_partition";
    j["mode"] = mode_name(c.mode);
    j["n"] = c.partition.n;
    j["parts"] = parts_to_json(c.partition);
    json w = json::array();
    for (const auto& s : c.witnesses) w.push_back(set_to_json(s));
    j["witnesses"] = w;
    return j.dump(2);
}

std::string local_blocking_to_json_text(const VertexPartition& p,
                                        const std::vector<VertexSet>& u_sets, ProcessMode mode) {
    json j;
    j["kind"] = "local_blocking";
    j["mode"] = mode_name(mode);
    j["n"] = p.n;
    j["parts"] = parts_to_json(p);
    json u = json::array();
    for (const auto& s : u_sets) u.push_back(set_to_json(s));
    j["u_sets"] = u;
    return j.dump(2);
}

std::string leaf_path_to_json_text(const TreePartitionResult& r) {
    json j;
    j["kind"] = "leaf_path_condition";
    j["n"] = r.partition.n;
    j["parts"] = parts_to_json(r.partition);
    json reports = json::array();
    for (const auto& rep : r.reports) {
        json e;
        e["part"] = rep.part_index;
        e["leaves"] = json::array({rep.w, rep.x});
        e["path"] = rep.path;
        e["pd_status"] = rep.pd_status;
        e["verdict"] = rep.verdict;
        reports.push_back(e);
    }
    j["reports"] = reports;
    return j.dump(2);
}

std::string bound_report_to_json_text(const BoundReport& r) {
    json j;
    j["kind"] = "bound_report";
    json bounds = json::array();
    for (const auto& b : r.bounds) {
        json e;
        e["name"] = b.name;
        e["rule"] = b.rule;
        e["value"] = b.value;
        bounds.push_back(e);
    }
    j["bounds"] = bounds;
    if (r.exact)
        j["exact"] = *r.exact;
    else
        j["exact"] = nullptr;
    j["exact_name"] = r.exact_name;
    json holds = json::object();
    for (const auto& [name, ok] : r.holds) holds[name] = ok;
    j["holds"] = holds;
    j["partial"] = r.partial;
    return j.dump(2);
}

}  // namespace powerdom
