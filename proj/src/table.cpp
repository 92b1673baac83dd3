#include "helionics/table.hpp"

#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace helionics {

std::string format_sig(double v, int digits) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*g", digits, v);
    return buf;
}

std::string Table::to_csv() const {
    std::ostringstream os;
    for (std::size_t c = 0; c < columns.size(); ++c) {
        if (c) os << ',';
        os << columns[c];
    }
    os << '\n';
    for (const auto& row : rows) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c) os << ',';
            os << row[c];
        }
        os << '\n';
    }
    return os.str();
}

namespace {

std::vector<std::string> split_line(const std::string& line) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : line) {
        if (ch == ',') {
            out.push_back(cur);
            cur.clear();
        } else if (ch != '\r') {
            cur.push_back(ch);
        }
    }
    out.push_back(cur);
    return out;
}

} // namespace

Table Table::from_csv(const std::string& text) {
    Table t;
    std::istringstream is(text);
    std::string line;
    bool header = true;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        if (header) {
            t.columns = split_line(line);
            header = false;
        } else {
            t.rows.push_back(split_line(line));
        }
    }
    if (t.columns.empty()) throw std::runtime_error("CSV has no header");
    return t;
}

int Table::column_index(const std::string& name) const {
    for (std::size_t i = 0; i < columns.size(); ++i)
        if (columns[i] == name) return static_cast<int>(i);
    return -1;
}

} // namespace helionics
