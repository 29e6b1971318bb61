#include "optic/kind.hpp"

#include <algorithm>
#include <bitset>
#include <deque>
#include <stdexcept>

#include "optic/errors.hpp"

namespace optic {

namespace {

using K = OpticKind;

std::size_t idx(K k) { return static_cast<std::size_t>(k); }

const std::vector<std::pair<K, K>> kEdges = {
    {K::Adapter, K::Grate},    {K::Adapter, K::Prism},       {K::Adapter, K::ListLens},
    {K::ListLens, K::Lens},    {K::ListLens, K::Kaleidoscope},
    {K::Lens, K::Affine},      {K::Lens, K::Glass},
    {K::Prism, K::Affine},     {K::Grate, K::Glass},
    {K::Affine, K::Traversal}, {K::Glass, K::Setter},
    {K::Traversal, K::Setter}, {K::Kaleidoscope, K::Setter},
};

struct Graph {
    std::array<std::vector<K>, kKindCount> succ;
    // reach[i] bit j set when kind j is reachable from kind i.
    std::array<std::bitset<kKindCount>, kKindCount> reach;

    Graph() {
        for (auto [from, to] : kEdges) succ[idx(from)].push_back(to);
        for (K k : all_kinds) {
            auto& bits = reach[idx(k)];
            std::deque<K> queue{k};
            while (!queue.empty()) {
                K cur = queue.front();
                queue.pop_front();
                if (bits.test(idx(cur))) continue;
                bits.set(idx(cur));
                for (K next : succ[idx(cur)]) queue.push_back(next);
            }
        }
    }
};

const Graph& graph() {
    static const Graph g;
    return g;
}

} // namespace

const std::string& kind_name(OpticKind k) {
    static const std::array<std::string, kKindCount> names{
        "Adapter", "Grate",  "Prism",        "ListLens",  "Lens",
        "Affine",  "Glass",  "Kaleidoscope", "Traversal", "Setter",
    };
    return names[idx(k)];
}

const std::vector<std::pair<OpticKind, OpticKind>>& kind_edges() { return kEdges; }

const std::vector<OpticKind>& kind_successors(OpticKind k) { return graph().succ[idx(k)]; }

bool kind_reaches(OpticKind from, OpticKind to) { return graph().reach[idx(from)].test(idx(to)); }

OpticKind join(OpticKind k1, OpticKind k2) {
    const auto common = graph().reach[idx(k1)] & graph().reach[idx(k2)];
    std::vector<K> minimal;
    for (K u : all_kinds) {
        if (!common.test(idx(u))) continue;
        bool has_lower = false;
        for (K v : all_kinds) {
            if (v != u && common.test(idx(v)) && kind_reaches(v, u)) {
                has_lower = true;
                break;
            }
        }
        if (!has_lower) minimal.push_back(u);
    }
    if (minimal.size() != 1)
        throw std::logic_error("join(" + kind_name(k1) + ", " + kind_name(k2) +
                               "): minimal upper bound is not unique");
    return minimal.front();
}

std::vector<OpticKind> kind_path(OpticKind from, OpticKind to) {
    if (!kind_reaches(from, to))
        throw NoPathError("no inclusion path from " + kind_name(from) + " to " + kind_name(to));
    std::array<int, kKindCount> prev;
    prev.fill(-1);
    std::deque<K> queue{from};
    std::bitset<kKindCount> seen;
    seen.set(idx(from));
    while (!queue.empty()) {
        K cur = queue.front();
        queue.pop_front();
        if (cur == to) break;
        for (K next : graph().succ[idx(cur)]) {
            if (seen.test(idx(next))) continue;
            seen.set(idx(next));
            prev[idx(next)] = static_cast<int>(idx(cur));
            queue.push_back(next);
        }
    }
    std::vector<K> path{to};
    while (path.back() != from) path.push_back(static_cast<K>(prev[idx(path.back())]));
    std::reverse(path.begin(), path.end());
    return path;
}

std::vector<std::vector<OpticKind>> all_kind_paths(OpticKind from, OpticKind to) {
    std::vector<std::vector<K>> out;
    std::vector<K> stack{from};
    auto dfs = [&](auto&& self, K cur) -> void {
        if (cur == to) {
            out.push_back(stack);
            return;
        }
        for (K next : graph().succ[idx(cur)]) {
            stack.push_back(next);
            self(self, next);
            stack.pop_back();
        }
    };
    dfs(dfs, from);
    return out;
}

} // namespace optic
