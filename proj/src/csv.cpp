#include "evochain/csv.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <string_view>
#include <system_error>

#include "evochain/errors.hpp"

namespace evochain {

namespace {

bool is_cell_space(char c) {
    return c == ' ' || c == '\t' || c == '\r';
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && is_cell_space(s.front()))
        s.remove_prefix(1);
    while (!s.empty() && is_cell_space(s.back()))
        s.remove_suffix(1);
    return s;
}

// Split a line on commas, trimming each piece. `starts` receives the 1-based
// column of each trimmed cell (or of the empty slot).
std::vector<std::string_view> split_cells(std::string_view line, std::vector<int>& starts) {
    std::vector<std::string_view> cells;
    starts.clear();
    size_t pos = 0;
    while (true) {
        size_t comma = line.find(',', pos);
        size_t end = (comma == std::string_view::npos) ? line.size() : comma;
        std::string_view raw = line.substr(pos, end - pos);
        size_t lead = 0;
        while (lead < raw.size() && is_cell_space(raw[lead]))
            ++lead;
        cells.push_back(trim(raw));
        starts.push_back(static_cast<int>(pos + lead) + 1);
        if (comma == std::string_view::npos)
            break;
        pos = comma + 1;
    }
    return cells;
}

double parse_cell(std::string_view cell, int line_number, int column) {
    if (cell.empty())
        throw ParseError(line_number, column, "empty cell");
    double value = 0.0;
    auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), value);
    if (ec != std::errc{} || ptr != cell.data() + cell.size()) {
        std::ostringstream os;
        os << "cannot parse \"" << cell << "\" as a number";
        throw ParseError(line_number, column, os.str());
    }
    return value;
}

}  // namespace

StructureMatrix parse_matrix_csv(const std::string& text) {
    std::vector<std::vector<double>> rows;
    std::vector<std::string> labels;

    std::istringstream in(text);
    std::string line;
    int line_number = 0;
    bool seen_content = false;
    std::vector<int> starts;
    while (std::getline(in, line)) {
        ++line_number;
        std::string_view content = trim(line);
        if (content.empty())
            continue;

        if (!seen_content && content.starts_with("labels:")) {
            seen_content = true;
            std::string_view rest = content.substr(std::string_view("labels:").size());
            size_t pos = 0;
            while (true) {
                size_t comma = rest.find(',', pos);
                size_t end = (comma == std::string_view::npos) ? rest.size() : comma;
                labels.emplace_back(trim(rest.substr(pos, end - pos)));
                if (comma == std::string_view::npos)
                    break;
                pos = comma + 1;
            }
            continue;
        }
        seen_content = true;

        std::vector<std::string_view> cells = split_cells(line, starts);
        std::vector<double> row;
        row.reserve(cells.size());
        for (size_t c = 0; c < cells.size(); ++c)
            row.push_back(parse_cell(cells[c], line_number, starts[c]));
        rows.push_back(std::move(row));
    }

    if (rows.empty())
        throw ParseError(line_number > 0 ? line_number : 1, 1, "no matrix rows found");
    return StructureMatrix(rows, std::move(labels));
}

StructureMatrix load_matrix_csv(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw IoError("cannot open \"" + path + "\" for reading");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    if (in.bad())
        throw IoError("error while reading \"" + path + "\"");
    return parse_matrix_csv(buffer.str());
}

std::string render_matrix_csv(const StructureMatrix& m) {
    std::string out = "labels: ";
    for (int i = 0; i < m.dim(); ++i) {
        if (i)
            out += ',';
        out += m.labels()[i];
    }
    out += '\n';

    char buf[64];
    for (int i = 0; i < m.dim(); ++i) {
        for (int j = 0; j < m.dim(); ++j) {
            if (j)
                out += ',';
            auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, m.at(i, j));
            out.append(buf, ptr);
            (void)ec;
        }
        out += '\n';
    }
    return out;
}

}  // namespace evochain
