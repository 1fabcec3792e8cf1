#include <lightning/table.hpp>

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>

#include <lightning/core.hpp>

namespace lightning
{

ResultTable::ResultTable(std::vector<std::string> columns) : columns_(std::move(columns)) {}

void ResultTable::add_row(std::vector<Cell> row)
{
    if (row.size() != columns_.size())
    {
        throw InputError("result table: row has " + std::to_string(row.size()) +
                         " cells, expected " + std::to_string(columns_.size()));
    }
    rows_.push_back(std::move(row));
}

std::size_t ResultTable::column_index(const std::string& name) const
{
    for (std::size_t i = 0; i < columns_.size(); ++i)
    {
        if (columns_[i] == name)
        {
            return i;
        }
    }
    throw InputError("result table: no column named '" + name + "'");
}

const Cell& ResultTable::at(std::size_t row, const std::string& column) const
{
    return rows_.at(row).at(column_index(column));
}

double ResultTable::number(std::size_t row, const std::string& column) const
{
    const Cell& c = at(row, column);
    if (const auto* d = std::get_if<double>(&c))
    {
        return *d;
    }
    if (const auto* i = std::get_if<std::int64_t>(&c))
    {
        return static_cast<double>(*i);
    }
    throw InputError("result table: column '" + column + "' is not numeric");
}

std::string ResultTable::text(std::size_t row, const std::string& column) const
{
    const Cell& c = at(row, column);
    if (const auto* s = std::get_if<std::string>(&c))
    {
        return *s;
    }
    throw InputError("result table: column '" + column + "' is not text");
}

//------------------------------------------------------------------------------
// CSV
//------------------------------------------------------------------------------

std::string format_double(double x)
{
    if (std::isnan(x))
    {
        return "nan";
    }
    if (std::isinf(x))
    {
        return x > 0 ? "inf" : "-inf";
    }
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    std::string s(buf);
    // Keep doubles recognisable as such when they happen to be integral.
    if (s.find_first_of(".eE") == std::string::npos)
    {
        s += ".0";
    }
    return s;
}

namespace
{

std::string quote_field(const std::string& s)
{
    if (s.find_first_of(",\"\r\n") == std::string::npos)
    {
        return s;
    }
    std::string out = "\"";
    for (char c : s)
    {
        if (c == '"')
        {
            out += '"';
        }
        out += c;
    }
    out += '"';
    return out;
}

std::string cell_text(const Cell& c)
{
    return std::visit(
        [](const auto& v) -> std::string {
            using V = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<V, double>)
            {
                return format_double(v);
            }
            else if constexpr (std::is_same_v<V, std::int64_t>)
            {
                return std::to_string(v);
            }
            else
            {
                return quote_field(v);
            }
        },
        c);
}

Cell parse_cell(const std::string& field, bool quoted)
{
    if (quoted || field.empty())
    {
        return field;
    }
    if (field == "nan")
    {
        return std::nan("");
    }
    if (field == "inf")
    {
        return HUGE_VAL;
    }
    if (field == "-inf")
    {
        return -HUGE_VAL;
    }
    const char* first = field.data();
    const char* last  = field.data() + field.size();
    if (field.find_first_of(".eE") == std::string::npos)
    {
        std::int64_t i = 0;
        auto [p, ec]   = std::from_chars(first, last, i);
        if (ec == std::errc() && p == last)
        {
            return i;
        }
    }
    else
    {
        double d     = 0.0;
        auto [p, ec] = std::from_chars(first, last, d);
        if (ec == std::errc() && p == last)
        {
            return d;
        }
    }
    return field;
}

} // namespace

std::string to_csv(const ResultTable& t)
{
    std::string out;
    for (std::size_t i = 0; i < t.columns().size(); ++i)
    {
        out += (i ? "," : "") + quote_field(t.columns()[i]);
    }
    out += "\r\n";
    for (const auto& row : t.rows())
    {
        for (std::size_t i = 0; i < row.size(); ++i)
        {
            out += (i ? "," : "") + cell_text(row[i]);
        }
        out += "\r\n";
    }
    return out;
}

ResultTable parse_csv(const std::string& text)
{
    std::vector<std::vector<std::pair<std::string, bool>>> records;
    std::vector<std::pair<std::string, bool>> record;
    std::string field;
    bool quoted    = false;
    bool in_quotes = false;
    bool any       = false;
    for (std::size_t i = 0; i < text.size(); ++i)
    {
        const char c = text[i];
        if (in_quotes)
        {
            if (c == '"')
            {
                if (i + 1 < text.size() && text[i + 1] == '"')
                {
                    field += '"';
                    ++i;
                }
                else
                {
                    in_quotes = false;
                }
            }
            else
            {
                field += c;
            }
            continue;
        }
        any = true;
        if (c == '"')
        {
            in_quotes = true;
            quoted    = true;
        }
        else if (c == ',')
        {
            record.emplace_back(std::move(field), quoted);
            field.clear();
            quoted = false;
        }
        else if (c == '\r' || c == '\n')
        {
            if (c == '\r' && i + 1 < text.size() && text[i + 1] == '\n')
            {
                ++i;
            }
            record.emplace_back(std::move(field), quoted);
            records.push_back(std::move(record));
            record.clear();
            field.clear();
            quoted = false;
            any    = false;
        }
        else
        {
            field += c;
        }
    }
    if (in_quotes)
    {
        throw InputError("parse_csv: unterminated quoted field");
    }
    if (any)
    {
        record.emplace_back(std::move(field), quoted);
        records.push_back(std::move(record));
    }
    if (records.empty())
    {
        return ResultTable{};
    }
    std::vector<std::string> cols;
    for (auto& [name, q] : records.front())
    {
        cols.push_back(name);
    }
    ResultTable t(std::move(cols));
    for (std::size_t r = 1; r < records.size(); ++r)
    {
        std::vector<Cell> row;
        for (auto& [f, q] : records[r])
        {
            row.push_back(parse_cell(f, q));
        }
        t.add_row(std::move(row));
    }
    return t;
}

//------------------------------------------------------------------------------
// JSON
//------------------------------------------------------------------------------

std::string to_json(const ResultTable& t)
{
    nlohmann::ordered_json doc;
    doc["metadata"] = t.metadata();
    doc["columns"]  = t.columns();
    auto rows       = nlohmann::ordered_json::array();
    for (const auto& row : t.rows())
    {
        nlohmann::ordered_json obj = nlohmann::ordered_json::object();
        for (std::size_t i = 0; i < row.size(); ++i)
        {
            std::visit(
                [&](const auto& v) {
                    using V = std::decay_t<decltype(v)>;
                    if constexpr (std::is_same_v<V, double>)
                    {
                        if (std::isfinite(v))
                        {
                            obj[t.columns()[i]] = v;
                        }
                        else
                        {
                            obj[t.columns()[i]] = format_double(v);
                        }
                    }
                    else
                    {
                        obj[t.columns()[i]] = v;
                    }
                },
                row[i]);
        }
        rows.push_back(std::move(obj));
    }
    doc["rows"] = std::move(rows);
    return doc.dump(2) + "\n";
}

void write_table(const ResultTable& t, TableFormat format, const std::filesystem::path& path)
{
    std::ofstream os(path, std::ios::binary | std::ios::trunc);
    if (!os)
    {
        throw std::runtime_error("write_table: cannot open '" + path.string() + "' for writing");
    }
    os << (format == TableFormat::Csv ? to_csv(t) : to_json(t));
    os.flush();
    if (!os)
    {
        throw std::runtime_error("write_table: write to '" + path.string() + "' failed");
    }
}

} // namespace lightning
