#ifndef BDC_CLI_INSTANCE_HPP
#define BDC_CLI_INSTANCE_HPP

#include <json.hpp>
#include <optional>

#include "bdc/graph.hpp"

namespace bdc::cli {

using nlohmann::json;

enum class InstanceKind { Explicit, Caterpillar, Cycle };

/// A validated instance plus the shorthand it came from.
struct ParsedInstance {
    InstanceKind kind = InstanceKind::Explicit;
    Instance instance;
    std::optional<CaterpillarSpec> caterpillar;
    json source;  // echoed into results
};

/// Accepts {"n","edges","lambda"}, {"caterpillar":{"m","lambda"}} or
/// {"cycle":{"n","lambda"}}. Throws Error(ParseError) on malformed input and
/// the graph module's errors on invalid graphs.
ParsedInstance parse_instance(const json& j);
ParsedInstance parse_instance_text(const std::string& text);

json explicit_json(const Graph& g, const DegreeBounds& b);
json caterpillar_json(const CaterpillarSpec& spec);
json cycle_json(std::size_t n, const DegreeBounds& b);

}  // namespace bdc::cli

#endif  // BDC_CLI_INSTANCE_HPP
