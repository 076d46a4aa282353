#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace stree {

/// How a cell is typed in JSON output. CSV is untyped text.
enum class ColumnKind { integer, big_integer, real, boolean, text };

struct Column {
    std::string name;
    ColumnKind kind = ColumnKind::text;

    friend bool operator==(const Column&, const Column&) = default;
};

enum class Format { csv, json };

Format parse_format(std::string_view name);

/// A rectangular result set with a fixed header. Every harness command
/// produces one; rendering is deterministic.
class Table {
public:
    Table() = default;
    explicit Table(std::vector<Column> columns);

    const std::vector<Column>& columns() const noexcept { return columns_; }
    const std::vector<std::vector<std::string>>& rows() const noexcept { return rows_; }

    /// Throws ConfigError if the cell count does not match the header.
    void add_row(std::vector<std::string> cells);

    /// Header line followed by one line per row, '\n' terminated.
    std::string to_csv() const;

    /// Array of objects. big_integer cells are emitted as decimal strings.
    std::string to_json() const;

    std::string render(Format format) const;

    /// Parses CSV produced by to_csv(). The header must name exactly the
    /// given columns.
    static Table from_csv(std::string_view text, std::vector<Column> columns);

    friend bool operator==(const Table&, const Table&) = default;

private:
    std::vector<Column> columns_;
    std::vector<std::vector<std::string>> rows_;
};

/// Shortest round-trip decimal form.
std::string format_real(double value);

inline std::string format_bool(bool value) { return value ? "true" : "false"; }

}  // namespace stree
