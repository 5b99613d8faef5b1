#include "record.hpp"

#include <cstdio>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace incgamma::cli {

std::string fmt_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

namespace {

bool looks_numeric(const std::string& s) {
    if (s.empty()) return false;
    char* end = nullptr;
    std::strtod(s.c_str(), &end);
    return end && *end == '\0';
}

} // namespace

std::string emit_csv(const Table& t) {
    std::ostringstream os;
    for (size_t c = 0; c < t.cols.size(); ++c) os << (c ? "," : "") << t.cols[c];
    os << "\n";
    for (const auto& row : t.rows) {
        for (size_t c = 0; c < row.size(); ++c) os << (c ? "," : "") << row[c];
        os << "\n";
    }
    return os.str();
}

std::string emit_json(const Table& t) {
    std::ostringstream os;
    os << "[\n";
    for (size_t r = 0; r < t.rows.size(); ++r) {
        os << "  {";
        bool first = true;
        for (size_t c = 0; c < t.cols.size() && c < t.rows[r].size(); ++c) {
            const std::string& v = t.rows[r][c];
            if (v.empty()) continue; // absent cell
            if (!first) os << ", ";
            first = false;
            os << "\"" << t.cols[c] << "\": ";
            if (looks_numeric(v))
                os << v;
            else
                os << "\"" << v << "\"";
        }
        os << "}" << (r + 1 < t.rows.size() ? "," : "") << "\n";
    }
    os << "]\n";
    return os.str();
}

Table parse_csv(const std::string& text) {
    Table t;
    std::istringstream is(text);
    std::string line;
    bool header = true;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        std::vector<std::string> cells;
        std::string cell;
        std::istringstream ls(line);
        while (std::getline(ls, cell, ',')) cells.push_back(cell);
        if (line.back() == ',') cells.push_back("");
        if (header) {
            t.cols = cells;
            header = false;
        } else {
            cells.resize(t.cols.size());
            t.add_row(std::move(cells));
        }
    }
    return t;
}

Table parse_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    if (!j.is_array()) throw std::runtime_error("parse_json: expected an array of objects");
    Table t;
    for (const auto& obj : j) {
        for (auto it = obj.begin(); it != obj.end(); ++it) {
            bool known = false;
            for (const auto& c : t.cols) known = known || c == it.key();
            if (!known) t.cols.push_back(it.key());
        }
    }
    for (const auto& obj : j) {
        std::vector<std::string> row(t.cols.size());
        for (size_t c = 0; c < t.cols.size(); ++c) {
            if (!obj.contains(t.cols[c])) continue;
            const auto& v = obj.at(t.cols[c]);
            if (v.is_string())
                row[c] = v.get<std::string>();
            else
                row[c] = fmt_double(v.get<double>());
        }
        t.add_row(std::move(row));
    }
    return t;
}

} // namespace incgamma::cli
