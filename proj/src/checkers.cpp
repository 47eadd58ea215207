#include "outpart/checkers.hpp"

#include <algorithm>

namespace outpart {

namespace {

void require_cover(const Digraph& d, const Partition& p) {
    if (p.size() != d.vertex_count())
        throw std::invalid_argument("partition covers " + std::to_string(p.size()) +
                                    " vertices, digraph has " + std::to_string(d.vertex_count()));
    for (int q : p.part_of)
        if (q < 0 || q >= p.parts) throw std::invalid_argument("part id out of range");
}

int same_part_out_degree(const Digraph& d, const Partition& p, int v) {
    int count = 0;
    for (int w : d.out(v))
        if (p.part_of[w] == p.part_of[v]) ++count;
    return count;
}

}  // namespace

std::optional<AllReducingViolation> check_all_reducing(const Digraph& d, const Partition& p, int k) {
    require_cover(d, p);
    if (k <= 0) throw std::invalid_argument("k must be positive");
    for (int v = 0; v < d.vertex_count(); ++v) {
        const int inside = same_part_out_degree(d, p, v);
        const int cap = std::max(0, d.out_degree(v) - k);
        if (inside > cap) return AllReducingViolation{v, p.part_of[v], inside};
    }
    return std::nullopt;
}

std::optional<MaxReducingViolation> check_max_reducing(const Digraph& d, const Partition& p, int k) {
    require_cover(d, p);
    if (k <= 0) throw std::invalid_argument("k must be positive");
    const int cap = std::max(0, degree_profile(d).max_out - k);
    std::vector<int> induced_max(p.parts, 0);
    for (int v = 0; v < d.vertex_count(); ++v)
        induced_max[p.part_of[v]] = std::max(induced_max[p.part_of[v]], same_part_out_degree(d, p, v));
    for (int part = 0; part < p.parts; ++part)
        if (induced_max[part] > cap) return MaxReducingViolation{part, induced_max[part]};
    return std::nullopt;
}

std::optional<DeltaBoundedViolation> check_delta_bounded(const Digraph& d, const Partition& p,
                                                         int k1, int k2) {
    require_cover(d, p);
    if (p.parts != 2) throw std::invalid_argument("check_delta_bounded needs exactly 2 parts");
    if (k1 < 0 || k2 < 0) throw std::invalid_argument("caps must be non-negative");
    const int caps[2] = {k1, k2};
    int induced_max[2] = {0, 0};
    for (int v = 0; v < d.vertex_count(); ++v) {
        const int part = p.part_of[v];
        induced_max[part] = std::max(induced_max[part], same_part_out_degree(d, p, v));
    }
    for (int part = 0; part < 2; ++part)
        if (induced_max[part] > caps[part])
            return DeltaBoundedViolation{part, induced_max[part], caps[part]};
    return std::nullopt;
}

std::string KernelCheckResult::to_string() const {
    switch (status) {
        case kind::valid:
            return "Valid";
        case kind::not_independent:
            return "NotIndependent " + std::to_string(u) + " " + std::to_string(v);
        case kind::not_dominated:
            return "NotDominated " + std::to_string(v);
    }
    return "?";
}

KernelCheckResult check_kernel(const Digraph& d, const std::vector<int>& kernel) {
    std::vector<char> in_kernel(d.vertex_count(), 0);
    for (int v : kernel) {
        if (v < 0 || v >= d.vertex_count())
            throw std::invalid_argument("kernel contains unknown vertex id " + std::to_string(v));
        in_kernel[v] = 1;
    }
    for (int u = 0; u < d.vertex_count(); ++u) {
        if (!in_kernel[u]) continue;
        for (int w : d.out(u))
            if (in_kernel[w]) return {KernelCheckResult::kind::not_independent, u, w};
    }
    for (int v = 0; v < d.vertex_count(); ++v) {
        if (in_kernel[v]) continue;
        bool dominated = false;
        for (int w : d.out(v))
            if (in_kernel[w]) {
                dominated = true;
                break;
            }
        if (!dominated) return {KernelCheckResult::kind::not_dominated, -1, v};
    }
    return {};
}

std::optional<MajorityViolation> check_majority_2coloring(const Digraph& d, const Partition& p) {
    require_cover(d, p);
    if (p.parts != 2) throw std::invalid_argument("majority check needs exactly 2 parts");
    for (int v = 0; v < d.vertex_count(); ++v) {
        const int inside = same_part_out_degree(d, p, v);
        if (2 * inside > d.out_degree(v)) return MajorityViolation{v, inside};
    }
    return std::nullopt;
}

}  // namespace outpart
