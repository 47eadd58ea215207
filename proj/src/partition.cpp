#include "outpart/partition.hpp"

#include <algorithm>
#include <sstream>

namespace outpart {

Partition::Partition(int p, std::vector<int> assignment) : parts(p), part_of(std::move(assignment)) {
    if (p < 0) throw std::invalid_argument("negative part count");
    for (int q : part_of)
        if (q < 0 || q >= parts) throw std::invalid_argument("part id out of range");
}

Partition parse_partition(const std::string& text, int parts_override) {
    std::istringstream is(text);
    std::string line;
    std::vector<std::pair<long long, long long>> rows;
    while (std::getline(is, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        std::istringstream ls(line);
        long long v, part;
        char extra;
        if (!(ls >> v >> part) || (ls >> extra) || v < 0 || part < 0)
            throw parse_error(parse_error::kind::bad_partition, "malformed partition line: \"" + line + "\"");
        rows.emplace_back(v, part);
    }
    const int n = static_cast<int>(rows.size());
    std::vector<int> part_of(n, -1);
    int max_part = -1;
    for (auto [v, part] : rows) {
        if (v >= n)
            throw parse_error(parse_error::kind::bad_partition, "vertex id " + std::to_string(v) + " out of range");
        if (part_of[v] != -1)
            throw parse_error(parse_error::kind::bad_partition, "vertex " + std::to_string(v) + " assigned twice");
        part_of[v] = static_cast<int>(part);
        max_part = std::max(max_part, static_cast<int>(part));
    }
    int parts = max_part + 1;
    if (parts_override >= 0) {
        if (parts_override < parts)
            throw parse_error(parse_error::kind::bad_partition, "part id exceeds declared part count");
        parts = parts_override;
    }
    if (parts == 0) parts = 1;
    return Partition(parts, std::move(part_of));
}

std::string serialize_partition(const Partition& p) {
    std::ostringstream os;
    for (int v = 0; v < p.size(); ++v) os << v << ' ' << p.part_of[v] << '\n';
    return os.str();
}

std::vector<int> parse_vertex_set(const std::string& text) {
    std::istringstream is(text);
    std::vector<int> vs;
    long long v;
    while (is >> v) {
        if (v < 0) throw parse_error(parse_error::kind::bad_partition, "negative vertex id");
        vs.push_back(static_cast<int>(v));
    }
    if (!is.eof()) throw parse_error(parse_error::kind::bad_partition, "malformed vertex set");
    std::sort(vs.begin(), vs.end());
    if (std::adjacent_find(vs.begin(), vs.end()) != vs.end())
        throw parse_error(parse_error::kind::bad_partition, "duplicate vertex id in set");
    return vs;
}

std::string serialize_vertex_set(const std::vector<int>& vs) {
    std::ostringstream os;
    for (size_t i = 0; i < vs.size(); ++i) {
        if (i) os << ' ';
        os << vs[i];
    }
    os << '\n';
    return os.str();
}

}  // namespace outpart
