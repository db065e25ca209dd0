#pragma once

#include <nlohmann/json.hpp>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace trirec::cli {

enum class OutputFormat { plain, json, csv };

/// Throws trirec::ParseError for anything but plain, json or csv.
OutputFormat parse_format(std::string_view name);

using Json = nlohmann::ordered_json;

/// Everything one invocation prints. JSON emits it as a single object
/// {"command", "params", "records", ["summary"], ["meta"]}; csv and plain
/// flatten nested record fields into dotted column names.
struct Document {
    std::string command;
    Json params = Json::object();
    std::vector<std::string> columns;  // flattened, in output order
    std::vector<Json> records;
    std::optional<Json> summary;
    std::optional<Json> meta;
};

std::string render(const Document& doc, OutputFormat format);

}  // namespace trirec::cli
