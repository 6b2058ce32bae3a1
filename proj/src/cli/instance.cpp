#include "bdc/cli/instance.hpp"

#include "bdc/error.hpp"

namespace bdc::cli {

namespace {

std::vector<int> int_list(const json& j, const char* what) {
    if (!j.is_array()) throw Error(ErrorCode::ParseError, std::string(what) + " must be an array");
    std::vector<int> out;
    for (const auto& x : j) {
        if (!x.is_number_integer()) {
            throw Error(ErrorCode::ParseError, std::string(what) + " entries must be integers");
        }
        const auto v = x.get<long long>();
        if (v < 0 || v > 1'000'000) {
            throw Error(ErrorCode::ParseError, std::string(what) + " entries must be in [0, 1e6]");
        }
        out.push_back(static_cast<int>(v));
    }
    return out;
}

std::size_t count_field(const json& obj, const char* key) {
    if (!obj.contains(key) || !obj[key].is_number_integer() || obj[key].get<long long>() < 0) {
        throw Error(ErrorCode::ParseError, std::string("\"") + key + "\" must be a non-negative integer");
    }
    return obj[key].get<std::size_t>();
}

const json& field(const json& obj, const char* key) {
    if (!obj.contains(key)) throw Error(ErrorCode::ParseError, std::string("missing \"") + key + "\"");
    return obj[key];
}

}  // namespace

ParsedInstance parse_instance(const json& j) {
    if (!j.is_object()) throw Error(ErrorCode::ParseError, "instance must be a JSON object");
    ParsedInstance p;
    p.source = j;

    if (j.contains("caterpillar")) {
        const json& c = j["caterpillar"];
        if (!c.is_object()) throw Error(ErrorCode::ParseError, "\"caterpillar\" must be an object");
        CaterpillarSpec spec{int_list(field(c, "m"), "m"), int_list(field(c, "lambda"), "lambda")};
        p.kind = InstanceKind::Caterpillar;
        p.instance = gen_caterpillar(spec);
        p.caterpillar = std::move(spec);
        return p;
    }
    if (j.contains("cycle")) {
        const json& c = j["cycle"];
        if (!c.is_object()) throw Error(ErrorCode::ParseError, "\"cycle\" must be an object");
        const std::size_t n = count_field(c, "n");
        p.kind = InstanceKind::Cycle;
        p.instance.graph = gen_cycle(n);
        p.instance.bounds = DegreeBounds(int_list(field(c, "lambda"), "lambda"));
        check_bounds(p.instance.graph, p.instance.bounds);
        return p;
    }

    const std::size_t n = count_field(j, "n");
    const json& edges = field(j, "edges");
    if (!edges.is_array()) throw Error(ErrorCode::ParseError, "\"edges\" must be an array");
    std::vector<Edge> list;
    for (const auto& e : edges) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer() ||
            e[0].get<long long>() < 0 || e[1].get<long long>() < 0) {
            throw Error(ErrorCode::ParseError, "each edge must be a pair of non-negative integers");
        }
        list.push_back({e[0].get<std::size_t>(), e[1].get<std::size_t>()});
    }
    p.instance.graph = Graph(n, std::move(list));
    p.instance.bounds = DegreeBounds(int_list(field(j, "lambda"), "lambda"));
    check_bounds(p.instance.graph, p.instance.bounds);
    return p;
}

ParsedInstance parse_instance_text(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw Error(ErrorCode::ParseError, e.what());
    }
    return parse_instance(j);
}

json explicit_json(const Graph& g, const DegreeBounds& b) {
    json edges = json::array();
    for (const auto& e : g.edges()) edges.push_back({e.u, e.v});
    return {{"n", g.num_vertices()}, {"edges", edges}, {"lambda", b.values()}};
}

json caterpillar_json(const CaterpillarSpec& spec) {
    return {{"caterpillar", {{"m", spec.leaves}, {"lambda", spec.spine_bounds}}}};
}

json cycle_json(std::size_t n, const DegreeBounds& b) {
    return {{"cycle", {{"n", n}, {"lambda", b.values()}}}};
}

}  // namespace bdc::cli
