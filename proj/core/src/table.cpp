#include "stree/table.hpp"

#include <charconv>
#include <json.hpp>

#include "stree/error.hpp"

namespace stree {

Format parse_format(std::string_view name) {
    if (name == "csv") return Format::csv;
    if (name == "json") return Format::json;
    throw ConfigError("unknown format '" + std::string(name) + "' (expected csv or json)");
}

Table::Table(std::vector<Column> columns) : columns_(std::move(columns)) {}

void Table::add_row(std::vector<std::string> cells) {
    if (cells.size() != columns_.size()) {
        throw ConfigError("row has " + std::to_string(cells.size()) + " cells, header has " +
                          std::to_string(columns_.size()));
    }
    rows_.push_back(std::move(cells));
}

namespace {

void append_cell(std::string& out, const std::string& cell) {
    if (cell.find_first_of(",\"\n\r") == std::string::npos) {
        out += cell;
        return;
    }
    out += '"';
    for (char c : cell) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
}

void append_line(std::string& out, const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i != 0) out += ',';
        append_cell(out, cells[i]);
    }
    out += '\n';
}

std::vector<std::vector<std::string>> parse_records(std::string_view text) {
    std::vector<std::vector<std::string>> records;
    std::vector<std::string> record;
    std::string cell;
    bool quoted = false;
    bool any = false;
    for (std::size_t i = 0; i < text.size(); ++i) {
        char c = text[i];
        if (quoted) {
            if (c == '"') {
                if (i + 1 < text.size() && text[i + 1] == '"') {
                    cell += '"';
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                cell += c;
            }
            continue;
        }
        any = true;
        if (c == '"') {
            quoted = true;
        } else if (c == ',') {
            record.push_back(std::move(cell));
            cell.clear();
        } else if (c == '\n') {
            record.push_back(std::move(cell));
            cell.clear();
            records.push_back(std::move(record));
            record.clear();
            any = false;
        } else if (c != '\r') {
            cell += c;
        }
    }
    if (quoted) throw ConfigError("unterminated quoted CSV cell");
    if (any) {
        record.push_back(std::move(cell));
        records.push_back(std::move(record));
    }
    return records;
}

}  // namespace

std::string Table::to_csv() const {
    std::string out;
    std::vector<std::string> header;
    header.reserve(columns_.size());
    for (const auto& c : columns_) header.push_back(c.name);
    append_line(out, header);
    for (const auto& row : rows_) append_line(out, row);
    return out;
}

std::string Table::to_json() const {
    auto array = nlohmann::ordered_json::array();
    for (const auto& row : rows_) {
        nlohmann::ordered_json obj = nlohmann::ordered_json::object();
        for (std::size_t i = 0; i < columns_.size(); ++i) {
            const std::string& cell = row[i];
            auto& slot = obj[columns_[i].name];
            if (cell.empty() && columns_[i].kind != ColumnKind::text) {
                slot = nullptr;
                continue;
            }
            switch (columns_[i].kind) {
                case ColumnKind::integer: slot = std::stoll(cell); break;
                case ColumnKind::real: slot = std::stod(cell); break;
                case ColumnKind::boolean: slot = (cell == "true"); break;
                case ColumnKind::big_integer:
                case ColumnKind::text: slot = cell; break;
            }
        }
        array.push_back(std::move(obj));
    }
    return array.dump(2) + "\n";
}

std::string Table::render(Format format) const {
    return format == Format::csv ? to_csv() : to_json();
}

Table Table::from_csv(std::string_view text, std::vector<Column> columns) {
    auto records = parse_records(text);
    if (records.empty()) throw ConfigError("CSV input has no header");
    const auto& header = records.front();
    bool match = header.size() == columns.size();
    for (std::size_t i = 0; match && i < header.size(); ++i) match = header[i] == columns[i].name;
    if (!match) throw ConfigError("CSV header does not match the expected columns");
    Table table(std::move(columns));
    for (std::size_t r = 1; r < records.size(); ++r) table.add_row(std::move(records[r]));
    return table;
}

std::string format_real(double value) {
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), value);
    if (ec != std::errc()) return "nan";
    return std::string(buf, end);
}

}  // namespace stree
