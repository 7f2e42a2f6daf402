#include "dcov/csv.hpp"

#include <charconv>
#include <fstream>
#include <stdexcept>

namespace dcov {

std::string fmt_double(double v) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

double parse_double(const std::string& token) {
    double v = 0.0;
    const char* first = token.data();
    const char* last = token.data() + token.size();
    while (first < last && (*first == ' ' || *first == '\t')) ++first;
    while (last > first && (last[-1] == ' ' || last[-1] == '\t' || last[-1] == '\r')) --last;
    auto res = std::from_chars(first, last, v);
    if (res.ec != std::errc{} || res.ptr != last)
        throw std::runtime_error("csv: malformed number '" + token + "'");
    return v;
}

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        std::size_t pos = line.find(',', start);
        if (pos == std::string::npos) {
            out.push_back(line.substr(start));
            break;
        }
        out.push_back(line.substr(start, pos - start));
        start = pos + 1;
    }
    return out;
}

PointSet read_point_set(std::istream& in) {
    PointSet p;
    std::string line;
    bool first_row = true;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (line[0] == '#') continue;  // "# d=.. n=.." header is advisory
        auto cells = split_csv_line(line);
        if (first_row) {
            p.d = static_cast<int>(cells.size());
            first_row = false;
        } else if (static_cast<int>(cells.size()) != p.d) {
            throw std::runtime_error("point set: inconsistent column count");
        }
        for (const auto& c : cells) p.x.push_back(parse_double(c));
    }
    if (p.x.empty()) throw std::runtime_error("point set: no rows");
    p.validate();
    return p;
}

PointSet read_point_set_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open point set file: " + path);
    return read_point_set(in);
}

void write_point_set(std::ostream& out, const PointSet& p, bool header) {
    if (header) out << "# d=" << p.d << " n=" << p.n() << "\n";
    for (std::size_t i = 0; i < p.n(); ++i) {
        for (int j = 0; j < p.d; ++j) {
            if (j) out << ',';
            out << fmt_double(p.at(i, j));
        }
        out << '\n';
    }
}

void write_point_set_file(const std::string& path, const PointSet& p, bool header) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write point set file: " + path);
    write_point_set(out, p, header);
}

}  // namespace dcov
