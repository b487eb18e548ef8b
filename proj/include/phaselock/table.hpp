#pragma once

#include <ostream>
#include <string>
#include <variant>
#include <vector>

namespace phaselock {

// Keyed result table; doubles render with 12 significant digits and '.'
// decimal separator in both formats.
struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<std::variant<long long, double, std::string>>> rows;

    void add_row(std::vector<std::variant<long long, double, std::string>> row);
    void write_csv(std::ostream& os) const;
    void write_json(std::ostream& os) const;
};

std::string format_double(double v);

}  // namespace phaselock
