#pragma once

#include <string>
#include <vector>

#include "schurcover/partition.hpp"

namespace schurcover {

/// One block of a chained shape. A block is a skew diagram outer/inner,
/// optionally rotated by 180 degrees. Straight shapes are skew with inner = ∅.
struct Block {
    bool rotated = false;
    Partition outer;
    Partition inner;

    Block(bool rot, Partition out, Partition in)
        : rotated(rot), outer(std::move(out)), inner(std::move(in)) {
        if (!contains(outer, inner))
            throw std::invalid_argument("skew block: inner " + to_string(inner) +
                                        " not contained in outer " + to_string(outer));
    }

    int width() const { return outer.first(); }
    long long cells() const { return outer.weight() - inner.weight(); }
};

inline Block skew_block(Partition outer, Partition inner = Partition{}) {
    return Block(false, std::move(outer), std::move(inner));
}

/// The 180-degree rotation of outer/inner as a chain block.
inline Block rotate180(Partition outer, Partition inner = Partition{}) {
    return Block(true, std::move(outer), std::move(inner));
}

/// Ordered list of blocks laid out from north-east to south-west: every row of
/// an earlier block lies above every row of a later block, and the column
/// ranges of distinct blocks are disjoint. Rows are materialized top to bottom
/// with global column coordinates; empty rows and empty blocks are dropped.
struct SkewChain {
    struct Row {
        int lo = 0;        // leftmost global column
        int hi = 0;        // rightmost global column
        int block = 0;     // index into blocks
        int orig_row = 0;  // row of the block's outer partition this row came from
    };

    std::vector<Block> blocks;
    std::vector<int> col_offsets;  // per block: global col = local col + offset
    std::vector<Row> rows;
    long long total_cells = 0;

    explicit SkewChain(std::vector<Block> in_blocks) {
        for (auto& b : in_blocks)
            if (b.cells() > 0) blocks.push_back(std::move(b));
        int total_width = 0;
        for (const auto& b : blocks) total_width += b.width();
        int off = total_width;
        for (int bi = 0; bi < static_cast<int>(blocks.size()); ++bi) {
            const Block& b = blocks[bi];
            off -= b.width();
            col_offsets.push_back(off);
            int len = b.outer.length();
            for (int r = 1; r <= len; ++r) {
                int orig = b.rotated ? len + 1 - r : r;
                int lo_local, hi_local;
                if (b.rotated) {
                    lo_local = b.width() - b.outer.part(orig) + 1;
                    hi_local = b.width() - b.inner.part(orig);
                } else {
                    lo_local = b.inner.part(orig) + 1;
                    hi_local = b.outer.part(orig);
                }
                if (hi_local < lo_local) continue;
                rows.push_back({lo_local + off, hi_local + off, bi, orig});
            }
            total_cells += b.cells();
        }
    }

    int row_count() const { return static_cast<int>(rows.size()); }

    bool has_cell(int r, int c) const {
        return r >= 1 && r <= row_count() && c >= rows[r - 1].lo && c <= rows[r - 1].hi;
    }

    /// (block index, row and column of the block's outer partition) for a cell.
    struct OrigCell {
        int block;
        int row;
        int col;
        auto operator<=>(const OrigCell&) const = default;
    };
    OrigCell orig_cell(int r, int c) const {
        const Row& row = rows[r - 1];
        const Block& b = blocks[row.block];
        int local = c - col_offsets[row.block];
        int orig_col = b.rotated ? b.width() - local + 1 : local;
        return {row.block, row.orig_row, orig_col};
    }

    /// Inverse of orig_cell; returns {0,0} if the cell is not in the shape.
    std::pair<int, int> find_cell(const OrigCell& oc) const {
        for (int r = 1; r <= row_count(); ++r) {
            const Row& row = rows[r - 1];
            if (row.block != oc.block || row.orig_row != oc.row) continue;
            for (int c = row.lo; c <= row.hi; ++c)
                if (orig_cell(r, c).col == oc.col) return {r, c};
        }
        return {0, 0};
    }

    /// Canonical text key used for memoization.
    std::string key() const {
        std::string s;
        for (const auto& b : blocks) {
            s += b.rotated ? 'R' : 'S';
            s += to_string(b.outer);
            s += '/';
            s += to_string(b.inner);
            s += ';';
        }
        return s;
    }
};

inline SkewChain make_chain(std::vector<Block> blocks) { return SkewChain(std::move(blocks)); }

/// A filling of a SkewChain; labels stored per row, left to right.
struct Tableau {
    SkewChain shape;
    std::vector<std::vector<int>> labels;

    explicit Tableau(SkewChain s) : shape(std::move(s)) {
        labels.resize(shape.row_count());
        for (int r = 1; r <= shape.row_count(); ++r)
            labels[r - 1].assign(shape.rows[r - 1].hi - shape.rows[r - 1].lo + 1, 0);
    }

    int label(int r, int c) const { return labels[r - 1][c - shape.rows[r - 1].lo]; }
    void set_label(int r, int c, int v) { labels[r - 1][c - shape.rows[r - 1].lo] = v; }

    bool operator==(const Tableau& other) const { return labels == other.labels; }

    /// Multiplicity vector of labels, trailing zeros trimmed (the type).
    std::vector<int> type_counts() const {
        std::vector<int> counts;
        for (const auto& row : labels)
            for (int v : row) {
                if (v > static_cast<int>(counts.size())) counts.resize(v, 0);
                ++counts[v - 1];
            }
        return counts;
    }

    bool is_ssyt() const {
        for (int r = 1; r <= shape.row_count(); ++r) {
            const auto& row = shape.rows[r - 1];
            for (int c = row.lo; c <= row.hi; ++c) {
                if (label(r, c) < 1) return false;
                if (c > row.lo && label(r, c - 1) > label(r, c)) return false;
                if (shape.has_cell(r - 1, c) && label(r - 1, c) >= label(r, c)) return false;
            }
        }
        return true;
    }
};

inline std::vector<int> reverse_reading_word(const Tableau& t) {
    std::vector<int> word;
    word.reserve(static_cast<std::size_t>(t.shape.total_cells));
    for (int r = 1; r <= t.shape.row_count(); ++r)
        for (int c = t.shape.rows[r - 1].hi; c >= t.shape.rows[r - 1].lo; --c)
            word.push_back(t.label(r, c));
    return word;
}

inline bool is_lattice(const std::vector<int>& word) {
    std::vector<int> counts;
    for (int v : word) {
        if (v < 1) return false;
        if (v > static_cast<int>(counts.size())) counts.resize(v, 0);
        ++counts[v - 1];
        if (v > 1 && counts[v - 1] > counts[v - 2]) return false;
    }
    return true;
}

/// SSYT of shape nu and type nu: row k filled with label k.
inline Tableau superstandard(const Partition& nu) {
    Tableau t(make_chain({skew_block(nu)}));
    for (int r = 1; r <= t.shape.row_count(); ++r)
        for (int c = t.shape.rows[r - 1].lo; c <= t.shape.rows[r - 1].hi; ++c)
            t.set_label(r, c, t.shape.rows[r - 1].orig_row);
    return t;
}

/// Row-per-line rendering with dots for absent leading cells.
inline std::string render(const Tableau& t) {
    std::string out;
    for (int r = 1; r <= t.shape.row_count(); ++r) {
        const auto& row = t.shape.rows[r - 1];
        std::string line;
        for (int c = 1; c < row.lo; ++c) {
            if (!line.empty()) line += ' ';
            line += '.';
        }
        for (int c = row.lo; c <= row.hi; ++c) {
            if (!line.empty()) line += ' ';
            line += std::to_string(t.label(r, c));
        }
        out += line;
        out += '\n';
    }
    return out;
}

}  // namespace schurcover
