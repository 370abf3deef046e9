#pragma once

#include <atomic>
#include <mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "schurcover/skew_chain.hpp"

namespace schurcover {

namespace detail {

/// Backtracking enumeration over cells in reverse reading order (rows top to
/// bottom, right to left within a row). In this order the lattice condition,
/// row weak increase and column strict increase are all O(1) per cell.
struct LrSearch {
    const SkewChain& shape;
    const Partition& type;
    int num_labels;
    std::vector<int> used;

    // per cell, in visit order:
    std::vector<int> row_of, col_of;
    std::vector<int> right_idx;  // visit index of the cell to the right, or -1
    std::vector<int> above_idx;  // visit index of the cell above, or -1
    std::vector<int> below_cnt;  // cells strictly below in the same column
    std::vector<int> assigned;

    LrSearch(const SkewChain& s, const Partition& t) : shape(s), type(t) {
        num_labels = type.length();
        used.assign(num_labels + 1, 0);
        std::unordered_map<long long, int> index_of;
        for (int r = 1; r <= shape.row_count(); ++r)
            for (int c = shape.rows[r - 1].hi; c >= shape.rows[r - 1].lo; --c) {
                int idx = static_cast<int>(row_of.size());
                index_of[(static_cast<long long>(r) << 20) | c] = idx;
                row_of.push_back(r);
                col_of.push_back(c);
                auto look = [&](int rr, int cc) {
                    auto it = index_of.find((static_cast<long long>(rr) << 20) | cc);
                    return it == index_of.end() ? -1 : it->second;
                };
                right_idx.push_back(shape.has_cell(r, c + 1) ? look(r, c + 1) : -1);
                above_idx.push_back(shape.has_cell(r - 1, c) ? look(r - 1, c) : -1);
                int below = 0;
                for (int rr = r + 1; rr <= shape.row_count(); ++rr)
                    if (shape.has_cell(rr, c)) ++below;
                below_cnt.push_back(below);
            }
        assigned.assign(row_of.size(), 0);
    }

    /// Visits every LR filling; sink returns false to abort the search.
    template <typename Sink>
    bool run(Sink&& sink) {
        if (static_cast<long long>(row_of.size()) != type.weight()) return true;
        return rec(0, sink);
    }

    template <typename Sink>
    bool rec(int idx, Sink& sink) {
        if (idx == static_cast<int>(row_of.size())) return sink(assigned);
        int lo = above_idx[idx] >= 0 ? assigned[above_idx[idx]] + 1 : 1;
        int hi = right_idx[idx] >= 0 ? assigned[right_idx[idx]] : num_labels;
        hi = std::min(hi, num_labels - below_cnt[idx]);
        for (int v = lo; v <= hi; ++v) {
            if (used[v] >= type.part(v)) continue;
            if (v > 1 && used[v - 1] <= used[v]) continue;  // lattice prefix
            assigned[idx] = v;
            ++used[v];
            bool keep_going = rec(idx + 1, sink);
            --used[v];
            assigned[idx] = 0;
            if (!keep_going) return false;
        }
        return true;
    }
};

inline std::atomic<bool> lr_memo_enabled{true};

inline std::unordered_map<std::string, long long>& lr_memo() {
    static std::unordered_map<std::string, long long> memo;
    return memo;
}
inline std::mutex& lr_memo_mutex() {
    static std::mutex m;
    return m;
}

}  // namespace detail

/// Toggle the transparent count_lr cache (results must not change).
inline void set_lr_memo_enabled(bool on) { detail::lr_memo_enabled = on; }
inline void clear_lr_memo() {
    std::lock_guard<std::mutex> lock(detail::lr_memo_mutex());
    detail::lr_memo().clear();
}

inline std::vector<Tableau> enumerate_lr(const SkewChain& shape, const Partition& type) {
    if (shape.total_cells != type.weight())
        throw std::invalid_argument("enumerate_lr: shape has " +
                                    std::to_string(shape.total_cells) + " cells but type " +
                                    to_string(type) + " has weight " +
                                    std::to_string(type.weight()));
    std::vector<Tableau> out;
    detail::LrSearch search(shape, type);
    search.run([&](const std::vector<int>& assigned) {
        Tableau t(shape);
        for (std::size_t i = 0; i < assigned.size(); ++i)
            t.set_label(search.row_of[i], search.col_of[i], assigned[i]);
        out.push_back(std::move(t));
        return true;
    });
    return out;
}

inline long long count_lr(const SkewChain& shape, const Partition& type) {
    if (shape.total_cells != type.weight())
        throw std::invalid_argument("count_lr: shape has " + std::to_string(shape.total_cells) +
                                    " cells but type " + to_string(type) + " has weight " +
                                    std::to_string(type.weight()));
    std::string memo_key;
    if (detail::lr_memo_enabled) {
        memo_key = shape.key() + "|" + to_string(type);
        std::lock_guard<std::mutex> lock(detail::lr_memo_mutex());
        auto it = detail::lr_memo().find(memo_key);
        if (it != detail::lr_memo().end()) return it->second;
    }
    long long count = 0;
    detail::LrSearch search(shape, type);
    search.run([&](const std::vector<int>&) {
        ++count;
        return true;
    });
    if (detail::lr_memo_enabled) {
        std::lock_guard<std::mutex> lock(detail::lr_memo_mutex());
        detail::lr_memo().emplace(std::move(memo_key), count);
    }
    return count;
}

/// Remark-1 check: peeling rows of t bottom-up must remove successive
/// horizontal strips from the superstandard tableau of `type`. For an SSYT of
/// the right type this is equivalent to the lattice-word condition.
inline bool validate_horizontal_strips(const Tableau& t, const Partition& type) {
    std::vector<int> remaining = type.parts;  // current ν^{(j)} row lengths
    for (int r = t.shape.row_count(); r >= 1; --r) {
        std::vector<int> removed(type.length(), 0);
        for (int v : t.labels[r - 1]) {
            if (v < 1 || v > type.length()) return false;
            ++removed[v - 1];
        }
        for (int l = 0; l < type.length(); ++l) {
            if (removed[l] > remaining[l]) return false;
            int new_len = remaining[l] - removed[l];
            int next = l + 1 < type.length() ? remaining[l + 1] : 0;
            if (new_len < next) return false;  // not a horizontal strip
        }
        for (int l = 0; l < type.length(); ++l) remaining[l] -= removed[l];
    }
    for (int v : remaining)
        if (v != 0) return false;
    return true;
}

}  // namespace schurcover
