#include "macq/json_io.hpp"

#include "macq/error.hpp"

#include <fstream>

namespace macq {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorKind::InvalidInput, what); }

int int_field(const json& j, const char* name) {
    if (!j.contains(name) || !j.at(name).is_number_integer()) bad(std::string("missing integer field '") + name + "'");
    return j.at(name).get<int>();
}

std::vector<int> int_list(const json& j, const std::string& what) {
    if (!j.is_array()) bad(what + " must be an array");
    std::vector<int> out;
    for (const auto& x : j) {
        if (!x.is_number_integer()) bad(what + " must hold integers");
        out.push_back(x.get<int>());
    }
    return out;
}

Partition partition_from_key(const std::string& key) {
    // "[2,1]"
    if (key.size() < 2 || key.front() != '[' || key.back() != ']') bad("bad partition key '" + key + "'");
    return partition_from_json(json::parse(key, nullptr, false));
}

} // namespace

json to_json(const MPoly& p) {
    json out = json::array();
    for (const auto& [e, c] : p.terms()) out.push_back({{"q", e.q}, {"t", e.t}, {"u", e.u}, {"c", c.get_str()}});
    return out;
}

MPoly mpoly_from_json(const json& j) {
    if (j.is_string()) return MPoly::parse(j.get<std::string>());
    if (!j.is_array()) bad("polynomial must be a term list or a string");
    MPoly p;
    for (const auto& term : j) {
        if (!term.is_object() || !term.contains("c")) bad("polynomial term needs a coefficient");
        Exponent e{term.value("q", 0), term.value("t", 0), term.value("u", 0)};
        if (e.q < 0 || e.t < 0 || e.u < 0) bad("negative exponent");
        const json& c = term.at("c");
        mpz_class value;
        if (c.is_string()) {
            if (value.set_str(c.get<std::string>(), 10) != 0) bad("bad coefficient '" + c.get<std::string>() + "'");
        } else if (c.is_number_integer()) {
            value = static_cast<long>(c.get<long long>());
        } else {
            bad("coefficient must be a decimal string");
        }
        p.add_term(value, e);
    }
    return p;
}

json to_json(const Partition& p) { return p.parts(); }

Partition partition_from_json(const json& j) { return Partition(int_list(j, "partition")); }

json to_json(const Filling& f) { return {{"shape", to_json(f.shape)}, {"rows", f.rows}}; }

Filling filling_from_json(const json& j) {
    if (!j.is_object() || !j.contains("shape") || !j.contains("rows")) bad("filling needs 'shape' and 'rows'");
    std::vector<std::vector<int>> rows;
    for (const auto& row : j.at("rows")) rows.push_back(int_list(row, "filling row"));
    return Filling(partition_from_json(j.at("shape")), std::move(rows));
}

json to_json(const Multigraph& g) {
    json edges = json::array();
    for (auto [i, j] : g.edges()) edges.push_back({i, j});
    return {{"vertices", g.vertex_count()}, {"edges", edges}, {"root", g.root()}};
}

Multigraph multigraph_from_json(const json& j) {
    if (!j.is_object()) bad("graph must be a JSON object");
    int r = int_field(j, "vertices");
    if (r < 1 || r > 30) bad("vertex count must be between 1 and 30");
    int root = j.contains("root") ? int_field(j, "root") : 1;
    std::vector<std::pair<int, int>> edges;
    if (j.contains("edges")) {
        if (!j.at("edges").is_array()) bad("'edges' must be an array");
        for (const auto& e : j.at("edges")) {
            auto pair = int_list(e, "edge");
            if (pair.size() != 2) bad("an edge has two endpoints");
            edges.emplace_back(pair[0], pair[1]);
        }
    }
    return Multigraph(r, edges, root);
}

Multigraph load_multigraph(const std::string& path) {
    std::ifstream in(path);
    if (!in) bad("cannot open '" + path + "'");
    json j = json::parse(in, nullptr, false);
    if (j.is_discarded()) bad("'" + path + "' is not valid JSON");
    return multigraph_from_json(j);
}

json to_json(const SymFunc& f) {
    json coeffs = json::object();
    for (const auto& [p, c] : f.coeffs) coeffs[p.to_string()] = c.to_string();
    return {{"degree", f.degree}, {"basis", to_string(f.basis)}, {"coeffs", coeffs}};
}

SymFunc symfunc_from_json(const json& j) {
    if (!j.is_object()) bad("symmetric function must be a JSON object");
    SymFunc f(int_field(j, "degree"), parse_basis(j.value("basis", std::string("m"))));
    if (j.contains("coeffs")) {
        for (const auto& [key, value] : j.at("coeffs").items()) f.add(partition_from_key(key), mpoly_from_json(value));
    }
    return f;
}

json to_json(const CumulantProblem& p) {
    json parts = json::array();
    for (const auto& x : p.partitions()) parts.push_back(to_json(x));
    return {{"partitions", parts}};
}

json to_json(const QSymExpansion& f) {
    json coeffs = json::object();
    for (const auto& [d, c] : f.coeffs) {
        std::string key = "{";
        for (int j = 1; j < f.degree; ++j)
            if ((d >> (j - 1)) & 1U) key += (key.size() > 1 ? "," : "") + std::to_string(j);
        coeffs[key + "}"] = c.to_string();
    }
    return {{"degree", f.degree}, {"basis", "F"}, {"coeffs", coeffs}};
}

} // namespace macq
