#include "render.hpp"

#include "trirec/errors.hpp"

#include <algorithm>
#include <sstream>

namespace trirec::cli {
namespace {

void flatten(const Json& value, const std::string& prefix, Json& out) {
    if (value.is_object()) {
        for (const auto& [key, child] : value.items()) {
            flatten(child, prefix.empty() ? key : prefix + "." + key, out);
        }
        return;
    }
    out[prefix] = value;
}

std::string scalar_text(const Json& value, std::string_view null_text) {
    if (value.is_null()) return std::string(null_text);
    if (value.is_string()) return value.get<std::string>();
    return value.dump();
}

std::string cell_text(const Json& value, OutputFormat format) {
    const std::string_view null_text = format == OutputFormat::csv ? "" : "-";
    if (!value.is_array()) return scalar_text(value, null_text);
    std::string out = format == OutputFormat::csv ? "" : "[";
    for (std::size_t i = 0; i < value.size(); ++i) {
        if (i > 0) out += format == OutputFormat::csv ? ";" : ", ";
        out += scalar_text(value[i], null_text);
    }
    if (format != OutputFormat::csv) out += "]";
    return out;
}

std::string csv_escape(const std::string& field) {
    if (field.find_first_of(",\"\n") == std::string::npos) return field;
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

std::vector<std::vector<std::string>> table_rows(const Document& doc, OutputFormat format) {
    std::vector<std::vector<std::string>> rows;
    for (const auto& record : doc.records) {
        Json flat = Json::object();
        flatten(record, "", flat);
        std::vector<std::string> row;
        for (const auto& column : doc.columns) {
            row.push_back(flat.contains(column) ? cell_text(flat[column], format)
                                                : (format == OutputFormat::csv ? "" : "-"));
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

std::string key_values(const Json& object) {
    Json flat = Json::object();
    flatten(object, "", flat);
    std::string out;
    for (const auto& [key, value] : flat.items()) {
        if (!out.empty()) out += ' ';
        out += key + "=" + cell_text(value, OutputFormat::plain);
    }
    return out;
}

std::string render_json(const Document& doc) {
    Json root = Json::object();
    root["command"] = doc.command;
    root["params"] = doc.params;
    root["records"] = Json::array();
    for (const auto& record : doc.records) root["records"].push_back(record);
    if (doc.summary) root["summary"] = *doc.summary;
    if (doc.meta) root["meta"] = *doc.meta;
    return root.dump(2) + "\n";
}

std::string render_csv(const Document& doc) {
    std::ostringstream os;
    if (doc.meta) os << "# " << key_values(*doc.meta) << '\n';
    for (std::size_t i = 0; i < doc.columns.size(); ++i) {
        os << (i > 0 ? "," : "") << csv_escape(doc.columns[i]);
    }
    os << '\n';
    for (const auto& row : table_rows(doc, OutputFormat::csv)) {
        for (std::size_t i = 0; i < row.size(); ++i) os << (i > 0 ? "," : "") << csv_escape(row[i]);
        os << '\n';
    }
    return os.str();
}

std::string render_plain(const Document& doc) {
    std::ostringstream os;
    if (doc.meta) os << "# " << key_values(*doc.meta) << '\n';
    os << "# " << doc.command;
    if (!doc.params.empty()) os << ' ' << key_values(doc.params);
    os << '\n';

    const auto rows = table_rows(doc, OutputFormat::plain);
    std::vector<std::size_t> width(doc.columns.size());
    for (std::size_t i = 0; i < doc.columns.size(); ++i) width[i] = doc.columns[i].size();
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
    }
    auto emit = [&](const std::vector<std::string>& cells) {
        std::string line;
        for (std::size_t i = 0; i < cells.size(); ++i) {
            if (i > 0) line += "  ";
            line += cells[i];
            if (i + 1 < cells.size()) line += std::string(width[i] - cells[i].size(), ' ');
        }
        os << line << '\n';
    };
    emit(doc.columns);
    for (const auto& row : rows) emit(row);
    if (doc.summary) os << "# summary " << key_values(*doc.summary) << '\n';
    return os.str();
}

}  // namespace

OutputFormat parse_format(std::string_view name) {
    if (name == "plain") return OutputFormat::plain;
    if (name == "json") return OutputFormat::json;
    if (name == "csv") return OutputFormat::csv;
    throw ParseError("unknown format '" + std::string(name) + "' (plain, json, csv)");
}

std::string render(const Document& doc, OutputFormat format) {
    switch (format) {
        case OutputFormat::json: return render_json(doc);
        case OutputFormat::csv: return render_csv(doc);
        case OutputFormat::plain: return render_plain(doc);
    }
    return {};
}

}  // namespace trirec::cli
