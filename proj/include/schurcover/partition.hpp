#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace schurcover {

/// Integer partition: weakly decreasing positive parts, no zeros stored.
/// The empty vector is the empty partition.
struct Partition {
    std::vector<int> parts;

    Partition() = default;
    Partition(std::initializer_list<int> init) : parts(init) { normalize_check(); }
    explicit Partition(std::vector<int> p) : parts(std::move(p)) { normalize_check(); }

    auto operator<=>(const Partition&) const = default;

    int length() const { return static_cast<int>(parts.size()); }
    long long weight() const { return std::accumulate(parts.begin(), parts.end(), 0LL); }
    bool empty() const { return parts.empty(); }

    /// 1-based part access; indices past the end read as 0.
    int part(int k) const {
        if (k < 1) throw std::invalid_argument("partition index must be >= 1");
        return k <= length() ? parts[k - 1] : 0;
    }
    int first() const { return parts.empty() ? 0 : parts.front(); }

private:
    void normalize_check() {
        // Trailing zeros are tolerated on construction and trimmed.
        while (!parts.empty() && parts.back() == 0) parts.pop_back();
        for (std::size_t k = 0; k < parts.size(); ++k) {
            if (parts[k] <= 0)
                throw std::invalid_argument("partition parts must be positive");
            if (k > 0 && parts[k] > parts[k - 1])
                throw std::invalid_argument("partition parts must be weakly decreasing");
        }
    }
};

/// 1-based box coordinates in a Young diagram.
struct Cell {
    int row = 1;
    int col = 1;
    auto operator<=>(const Cell&) const = default;
};

inline std::string to_string(const Partition& p) {
    std::string s = "[";
    for (int k = 0; k < p.length(); ++k) {
        if (k) s += ',';
        s += std::to_string(p.parts[k]);
    }
    s += ']';
    return s;
}

/// Parses the canonical "[6,4,3,1]" form; "[]" is the empty partition.
/// Rejections carry the character position of the offending token.
inline Partition parse_partition(const std::string& s) {
    auto fail = [&](std::size_t pos, const std::string& what) {
        throw std::invalid_argument("bad partition \"" + s + "\" at position " +
                                    std::to_string(pos) + ": " + what);
    };
    if (s.empty() || s.front() != '[') fail(0, "expected '['");
    if (s.back() != ']') fail(s.size() - 1, "expected ']'");
    std::vector<int> parts;
    std::size_t i = 1;
    if (s.size() > 2) {
        while (true) {
            std::size_t start = i;
            long long v = 0;
            if (i >= s.size() - 1 || !std::isdigit(static_cast<unsigned char>(s[i])))
                fail(i, "expected digit");
            while (i < s.size() - 1 && std::isdigit(static_cast<unsigned char>(s[i]))) {
                v = v * 10 + (s[i] - '0');
                if (v > 1'000'000) fail(start, "part too large");
                ++i;
            }
            if (v <= 0) fail(start, "parts must be positive");
            if (!parts.empty() && v > parts.back()) fail(start, "parts must be weakly decreasing");
            parts.push_back(static_cast<int>(v));
            if (i == s.size() - 1) break;
            if (s[i] != ',') fail(i, "expected ',' or ']'");
            ++i;
        }
    }
    return Partition(std::move(parts));
}

inline Partition conjugate(const Partition& p) {
    std::vector<int> out;
    out.reserve(p.first());
    for (int j = 1; j <= p.first(); ++j) {
        int cnt = 0;
        for (int v : p.parts) {
            if (v >= j) ++cnt;
            else break;
        }
        out.push_back(cnt);
    }
    return Partition(std::move(out));
}

inline bool contains(const Partition& p, const Partition& q) {
    if (q.length() > p.length()) return false;
    for (int k = 0; k < q.length(); ++k)
        if (q.parts[k] > p.parts[k]) return false;
    return true;
}

inline bool fits_in_square(const Partition& p, int m) {
    return p.length() <= m && p.first() <= m;
}

/// Complement in the m x m square: ((m^m)/p) rotated by 180 degrees.
inline Partition complement(const Partition& p, int m) {
    if (m < 1) throw std::invalid_argument("square side must be positive");
    if (p.length() > m)
        throw std::invalid_argument("complement: partition has " + std::to_string(p.length()) +
                                    " parts, exceeds square side " + std::to_string(m));
    if (p.first() > m)
        throw std::invalid_argument("complement: first part " + std::to_string(p.first()) +
                                    " exceeds square side " + std::to_string(m));
    std::vector<int> out(m);
    for (int k = 1; k <= m; ++k) out[k - 1] = m - p.part(m + 1 - k);
    return Partition(std::move(out));
}

inline std::vector<Cell> outer_corners(const Partition& p) {
    std::vector<Cell> out;
    out.push_back({1, p.first() + 1});
    for (int k = 2; k <= p.length(); ++k)
        if (p.parts[k - 1] < p.parts[k - 2]) out.push_back({k, p.parts[k - 1] + 1});
    if (p.length() > 0) out.push_back({p.length() + 1, 1});
    return out;
}

inline bool is_outer_corner(const Partition& p, Cell c) {
    auto cs = outer_corners(p);
    return std::find(cs.begin(), cs.end(), c) != cs.end();
}

inline Partition add_box(const Partition& p, Cell c) {
    if (!is_outer_corner(p, c))
        throw std::invalid_argument("add_box: (" + std::to_string(c.row) + "," +
                                    std::to_string(c.col) + ") is not an outer corner of " +
                                    to_string(p));
    std::vector<int> out = p.parts;
    if (c.row == p.length() + 1) out.push_back(1);
    else out[c.row - 1] += 1;
    return Partition(std::move(out));
}

inline Partition strip_columns(const Partition& p, int k) {
    if (k < 0 || k > p.first())
        throw std::invalid_argument("strip_columns: k out of range for " + to_string(p));
    std::vector<int> out;
    for (int v : p.parts)
        if (v > k) out.push_back(v - k);
    return Partition(std::move(out));
}

inline Partition strip_rows(const Partition& p, int s) {
    if (s < 0 || s > p.length())
        throw std::invalid_argument("strip_rows: s out of range for " + to_string(p));
    return Partition(std::vector<int>(p.parts.begin() + s, p.parts.end()));
}

/// Lexicographic comparison with absent parts read as 0.
inline std::strong_ordering lex_compare(const Partition& p, const Partition& q) {
    int n = std::max(p.length(), q.length());
    for (int k = 1; k <= n; ++k) {
        if (p.part(k) != q.part(k)) return p.part(k) <=> q.part(k);
    }
    return std::strong_ordering::equal;
}

/// Componentwise sum, shorter sequence zero-padded.
inline Partition pointwise_add(const Partition& p, const Partition& q) {
    int n = std::max(p.length(), q.length());
    std::vector<int> out(n);
    for (int k = 1; k <= n; ++k) out[k - 1] = p.part(k) + q.part(k);
    return Partition(std::move(out));
}

// --- enumeration helpers ------------------------------------------------

/// All partitions of n with part sizes <= max_part and at most max_len parts.
inline void for_each_partition(int n, int max_part, int max_len,
                               const std::function<void(const Partition&)>& fn) {
    std::vector<int> cur;
    auto rec = [&](auto&& self, int rem, int cap, int len_left) -> void {
        if (rem == 0) {
            fn(Partition(std::vector<int>(cur)));
            return;
        }
        if (len_left == 0) return;
        for (int v = std::min(rem, cap); v >= 1; --v) {
            if (static_cast<long long>(v) * len_left < rem) break;
            cur.push_back(v);
            self(self, rem - v, v, len_left - 1);
            cur.pop_back();
        }
    };
    rec(rec, n, std::min(n, max_part), std::min(n, max_len));
}

inline std::vector<Partition> partitions_of(int n, int max_part = -1, int max_len = -1) {
    std::vector<Partition> out;
    for_each_partition(n, max_part < 0 ? n : max_part, max_len < 0 ? n : max_len,
                       [&](const Partition& p) { out.push_back(p); });
    return out;
}

/// All subpartitions q with q contained in p.
inline std::vector<Partition> subpartitions(const Partition& p) {
    std::vector<Partition> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int row) -> void {
        out.push_back(Partition(std::vector<int>(cur)));
        if (row > p.length()) return;
        int prev = row == 1 ? p.part(1) : cur.back();
        for (int v = 1; v <= std::min(p.part(row), prev); ++v) {
            cur.push_back(v);
            self(self, row + 1);
            cur.pop_back();
        }
    };
    rec(rec, 1);
    return out;
}

struct PartitionHash {
    std::size_t operator()(const Partition& p) const {
        std::size_t h = 1469598103934665603ull;
        for (int v : p.parts) {
            h ^= static_cast<std::size_t>(v);
            h *= 1099511628211ull;
        }
        return h;
    }
};

}  // namespace schurcover
