// Test-only combinatorial oracles, independent of the library code paths
// they cross-check.
#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <vector>

namespace oracles {

// Count of semistandard Young tableaux of the given shape with entries 1..n:
// rows weakly increase left to right, columns strictly increase downward.
// Recursive fill, cell by cell in reading order.
inline std::uint64_t ssyt_count_rec(const std::vector<int>& shape,
                                    std::vector<std::vector<int>>& fill,
                                    std::size_t row, std::size_t col, int n) {
    if (row == shape.size()) return 1;
    const std::size_t next_row = col + 1 < static_cast<std::size_t>(shape[row])
                                     ? row
                                     : row + 1;
    const std::size_t next_col =
        col + 1 < static_cast<std::size_t>(shape[row]) ? col + 1 : 0;
    int lo = 1;
    if (col > 0) lo = std::max(lo, fill[row][col - 1]);
    if (row > 0 && static_cast<std::size_t>(shape[row - 1]) > col)
        lo = std::max(lo, fill[row - 1][col] + 1);
    std::uint64_t total = 0;
    for (int v = lo; v <= n; ++v) {
        fill[row][col] = v;
        total += ssyt_count_rec(shape, fill, next_row, next_col, n);
    }
    return total;
}

inline std::uint64_t ssyt_count(const std::vector<int>& shape, int n) {
    std::vector<std::vector<int>> fill;
    for (int len : shape) fill.emplace_back(len, 0);
    return ssyt_count_rec(shape, fill, 0, 0, n);
}

// Strict dominance by brute force: b is reachable from a through single-box
// moves from an upper row to a lower one, every intermediate shape a valid
// partition. BFS over all partitions of the box count.
inline bool dominates_by_box_moves(const std::vector<int>& a,
                                   const std::vector<int>& b) {
    if (a == b) return false;
    std::set<std::vector<int>> seen;
    std::vector<std::vector<int>> frontier{a};
    seen.insert(a);
    while (!frontier.empty()) {
        std::vector<std::vector<int>> next;
        for (const auto& shape : frontier) {
            for (std::size_t i = 0; i < shape.size(); ++i) {
                // Take the last box of row i, append to a row below (possibly
                // a new one).
                for (std::size_t j = i + 1; j <= shape.size(); ++j) {
                    std::vector<int> moved = shape;
                    moved[i] -= 1;
                    if (j == shape.size())
                        moved.push_back(1);
                    else
                        moved[j] += 1;
                    // Non-ascending with the emptied row still in place: a
                    // zero row may only sit at the bottom.
                    bool valid = true;
                    for (std::size_t k = 1; k < moved.size(); ++k)
                        if (moved[k] > moved[k - 1]) valid = false;
                    if (!valid) continue;
                    while (!moved.empty() && moved.back() == 0)
                        moved.pop_back();
                    if (moved == b) return true;
                    if (seen.insert(moved).second) next.push_back(moved);
                }
            }
        }
        frontier = std::move(next);
    }
    return false;
}

// All partitions of m (any number of parts), descending lexicographic.
inline void partitions_of(int m, int max_part, std::vector<int>& acc,
                          std::vector<std::vector<int>>& out) {
    if (m == 0) {
        out.push_back(acc);
        return;
    }
    for (int p = std::min(m, max_part); p >= 1; --p) {
        acc.push_back(p);
        partitions_of(m - p, p, acc, out);
        acc.pop_back();
    }
}

inline std::vector<std::vector<int>> all_partitions(int m) {
    std::vector<std::vector<int>> out;
    std::vector<int> acc;
    partitions_of(m, m, acc, out);
    return out;
}

}  // namespace oracles
