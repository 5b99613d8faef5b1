#ifndef INCGAMMA_TOOLS_RECORD_HPP
#define INCGAMMA_TOOLS_RECORD_HPP

#include <string>
#include <vector>

namespace incgamma::cli {

// Flat output table: one schema per subcommand, stringly-typed cells with
// canonical numeric formatting so the CSV and JSON renderings carry
// identical payloads.  An empty cell means "absent" (omitted from JSON).
struct Table {
    std::vector<std::string> cols;
    std::vector<std::vector<std::string>> rows;

    void add_row(std::vector<std::string> row) { rows.push_back(std::move(row)); }
};

// 17 significant digits: binary64 round-trip
std::string fmt_double(double v);

std::string emit_csv(const Table& t);
std::string emit_json(const Table& t);

Table parse_csv(const std::string& text);
Table parse_json(const std::string& text);

} // namespace incgamma::cli

#endif
