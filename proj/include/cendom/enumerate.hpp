#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "cendom/graph.hpp"

namespace cendom {

/// One representative per isomorphism class of graphs on n labeled vertices,
/// n ≤ 7. Sweeps all 2^(n choose 2) adjacency masks in ascending order and
/// marks each new graph's whole permutation orbit, so the representative is
/// the orbit's minimum mask and the output order is deterministic.
inline std::vector<Graph> nonisomorphic_graphs(int n, bool connected_only = false) {
    if (n < 0 || n > 7)
        throw std::invalid_argument("nonisomorphic_graphs: supported for 0 <= n <= 7");
    if (n == 0) return connected_only ? std::vector<Graph>{} : std::vector<Graph>{Graph(0)};

    const int slots = n * (n - 1) / 2;
    std::vector<std::pair<int, int>> slot_edge;
    std::vector<std::vector<int>> slot_of(static_cast<std::size_t>(n),
                                          std::vector<int>(static_cast<std::size_t>(n), -1));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            slot_of[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                static_cast<int>(slot_edge.size());
            slot_of[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] =
                static_cast<int>(slot_edge.size());
            slot_edge.emplace_back(i, j);
        }

    // slot permutation tables induced by all vertex permutations
    std::vector<std::vector<int>> slot_maps;
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    do {
        std::vector<int> map(static_cast<std::size_t>(slots));
        for (int s = 0; s < slots; ++s) {
            auto [i, j] = slot_edge[static_cast<std::size_t>(s)];
            map[static_cast<std::size_t>(s)] =
                slot_of[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])]
                       [static_cast<std::size_t>(perm[static_cast<std::size_t>(j)])];
        }
        slot_maps.push_back(std::move(map));
    } while (std::next_permutation(perm.begin(), perm.end()));

    const std::uint32_t total = 1u << slots;
    std::vector<bool> seen(total, false);
    std::vector<Graph> out;
    for (std::uint32_t mask = 0; mask < total; ++mask) {
        if (seen[mask]) continue;
        for (const auto& map : slot_maps) {
            std::uint32_t image = 0;
            std::uint32_t bits = mask;
            while (bits) {
                int s = __builtin_ctz(bits);
                bits &= bits - 1;
                image |= 1u << map[static_cast<std::size_t>(s)];
            }
            seen[image] = true;
        }
        Graph g(n);
        for (int s = 0; s < slots; ++s)
            if ((mask >> s) & 1u)
                g.add_edge(slot_edge[static_cast<std::size_t>(s)].first,
                           slot_edge[static_cast<std::size_t>(s)].second);
        if (connected_only && !is_connected(g)) continue;
        out.push_back(std::move(g));
    }
    return out;
}

}  // namespace cendom
