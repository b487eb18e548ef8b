#include "phaselock/table.hpp"

#include <cstdio>
#include <stdexcept>

namespace phaselock {

std::string format_double(double v) {
    if (v == 0.0) v = 0.0;  // drop the sign of negative zero
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

namespace {

std::string render(const std::variant<long long, double, std::string>& cell) {
    if (std::holds_alternative<long long>(cell))
        return std::to_string(std::get<long long>(cell));
    if (std::holds_alternative<double>(cell)) return format_double(std::get<double>(cell));
    return std::get<std::string>(cell);
}

std::string json_quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out + "\"";
}

}  // namespace

void Table::add_row(std::vector<std::variant<long long, double, std::string>> row) {
    if (row.size() != columns.size())
        throw std::invalid_argument("Table: row width does not match columns");
    rows.push_back(std::move(row));
}

void Table::write_csv(std::ostream& os) const {
    for (std::size_t c = 0; c < columns.size(); ++c)
        os << columns[c] << (c + 1 < columns.size() ? "," : "");
    os << "\n";
    for (const auto& row : rows) {
        for (std::size_t c = 0; c < row.size(); ++c)
            os << render(row[c]) << (c + 1 < row.size() ? "," : "");
        os << "\n";
    }
}

void Table::write_json(std::ostream& os) const {
    os << "[";
    for (std::size_t r = 0; r < rows.size(); ++r) {
        os << (r ? ",\n " : "\n ") << "{";
        for (std::size_t c = 0; c < columns.size(); ++c) {
            os << (c ? "," : "") << json_quote(columns[c]) << ":";
            const auto& cell = rows[r][c];
            if (std::holds_alternative<std::string>(cell))
                os << json_quote(std::get<std::string>(cell));
            else
                os << render(cell);
        }
        os << "}";
    }
    os << "\n]\n";
}

}  // namespace phaselock
