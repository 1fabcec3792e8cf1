///
/// \file table.hpp
///
/// Rectangular result tables and their CSV / JSON serialisation.
///

#ifndef LIGHTNING_TABLE_HPP
#define LIGHTNING_TABLE_HPP

#include <cstdint>
#include <filesystem>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

namespace lightning
{

using Cell = std::variant<double, std::int64_t, std::string>;

class ResultTable
{
public:
    ResultTable() = default;
    explicit ResultTable(std::vector<std::string> columns);

    const std::vector<std::string>& columns() const noexcept { return columns_; }
    const std::vector<std::vector<Cell>>& rows() const noexcept { return rows_; }
    std::size_t size() const noexcept { return rows_.size(); }

    /// Appends a row; throws InputError unless it has one cell per column.
    void add_row(std::vector<Cell> row);

    std::size_t column_index(const std::string& name) const;
    const Cell& at(std::size_t row, const std::string& column) const;
    double number(std::size_t row, const std::string& column) const;
    std::string text(std::size_t row, const std::string& column) const;

    nlohmann::ordered_json& metadata() noexcept { return metadata_; }
    const nlohmann::ordered_json& metadata() const noexcept { return metadata_; }

private:
    std::vector<std::string> columns_;
    std::vector<std::vector<Cell>> rows_;
    nlohmann::ordered_json metadata_ = nlohmann::ordered_json::object();
};

enum class TableFormat
{
    Csv,
    Json
};

/// 17 significant digits, "nan"/"inf"/"-inf" for non-finite values.
std::string format_double(double x);

std::string to_csv(const ResultTable& t);
std::string to_json(const ResultTable& t);

/// Parses CSV written by to_csv. Numeric-looking fields come back as double
/// (or int64 when they have no '.', 'e' or non-finite marker).
ResultTable parse_csv(const std::string& text);

/// Writes the table; I/O failures throw std::runtime_error naming the path.
void write_table(const ResultTable& t, TableFormat format, const std::filesystem::path& path);

} // namespace lightning

#endif /* LIGHTNING_TABLE_HPP */
