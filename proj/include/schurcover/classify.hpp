#pragma once

#include <optional>
#include <string>
#include <vector>

#include "schurcover/partition.hpp"

namespace schurcover {

enum class Side { Direct, Conjugate, Both };

/// Structural classification of a partition under the cover criterion:
/// type 1 means the partition itself has the form beta with
/// (i, i, i-1, ..., 1) ⊆ beta for i = beta_1; type 2 means it decomposes as
/// beta + (s^s) + alpha with s ≥ 1, alpha ≠ ∅ and (i^{s+1}, i, i-1, ..., 1) ⊆
/// beta for i = beta_1 (beta = ∅ allowed). The side records whether the
/// partition, its conjugate, or both admit such a reading.
struct TypeClass {
    enum class Kind { NotC1, Type1, Type2 };
    Kind kind = Kind::NotC1;
    Partition beta;
    int s = 0;            // square side, 0 for type 1
    Partition alpha;      // ∅ for type 1
    Side side = Side::Direct;
};

namespace detail {

/// (i^{s+1}, i, i-1, ..., 1): the containment profile required of beta.
inline Partition beta_profile(int i, int s) {
    std::vector<int> parts;
    for (int k = 0; k < s + 1; ++k) parts.push_back(i);
    for (int v = i; v >= 1; --v) parts.push_back(v);
    return Partition(std::move(parts));
}

struct Reading {
    TypeClass::Kind kind;
    Partition beta;
    int s;
    Partition alpha;
};

/// The unique decomposition of p (not of its conjugate), if any.
inline std::optional<Reading> read_direct(const Partition& p) {
    if (p.empty()) return std::nullopt;
    int i1 = p.part(1);
    if (contains(p, beta_profile(i1, 0)))
        return Reading{TypeClass::Kind::Type1, p, 0, Partition{}};
    for (int s = p.length(); s >= 1; --s) {
        // Rows s+1.. belong to beta, so i = beta_1 is forced to p[s+1].
        int i = p.part(s + 1);
        std::vector<int> beta_parts(s, i);
        for (int k = s + 1; k <= p.length(); ++k) beta_parts.push_back(p.part(k));
        std::vector<int> alpha_parts;
        bool ok = true;
        for (int k = 1; k <= s; ++k) {
            int a = p.part(k) - i - s;
            if (a < 0) {
                ok = false;
                break;
            }
            alpha_parts.push_back(a);
        }
        if (!ok) continue;
        while (!alpha_parts.empty() && alpha_parts.back() == 0) alpha_parts.pop_back();
        if (alpha_parts.empty()) continue;  // s ≠ 0 requires alpha ≠ ∅
        Partition beta(std::move(beta_parts));
        if (i > 0 && !contains(beta, beta_profile(i, s))) continue;
        return Reading{TypeClass::Kind::Type2, std::move(beta), s,
                       Partition(std::move(alpha_parts))};
    }
    return std::nullopt;
}

}  // namespace detail

inline TypeClass classify(const Partition& nu) {
    if (nu.empty()) throw std::invalid_argument("classify: empty partition");
    auto direct = detail::read_direct(nu);
    auto conj = detail::read_direct(conjugate(nu));
    TypeClass out;
    if (direct) {
        out.kind = direct->kind;
        out.beta = direct->beta;
        out.s = direct->s;
        out.alpha = direct->alpha;
        out.side = conj ? Side::Both : Side::Direct;
    } else if (conj) {
        out.kind = conj->kind;
        out.beta = conj->beta;
        out.s = conj->s;
        out.alpha = conj->alpha;
        out.side = Side::Conjugate;
    }
    return out;
}

/// The conjectured unique cover of nu, when nu (or its conjugate) satisfies
/// the classification: type 1 adds a box to the first row (first column for a
/// conjugate reading); type 2 adds the box at corner (s+1, beta_1 + 1) of the
/// decomposed side.
inline std::optional<Partition> predicted_cover(const Partition& nu) {
    if (nu.empty()) return std::nullopt;
    auto direct = detail::read_direct(nu);
    if (direct) {
        if (direct->kind == TypeClass::Kind::Type1)
            return add_box(nu, Cell{1, nu.part(1) + 1});
        return add_box(nu, Cell{direct->s + 1, direct->beta.part(1) + 1});
    }
    auto conj = detail::read_direct(conjugate(nu));
    if (conj) {
        Partition nup = conjugate(nu);
        Partition cover = conj->kind == TypeClass::Kind::Type1
                              ? add_box(nup, Cell{1, nup.part(1) + 1})
                              : add_box(nup, Cell{conj->s + 1, conj->beta.part(1) + 1});
        return conjugate(cover);
    }
    return std::nullopt;
}

inline bool is_self_conjugate(const Partition& nu) { return conjugate(nu) == nu; }

struct CornerWitness {
    Cell corner;
    Partition eta;
};

/// Corner symmetry: every outer corner (k,j) with k > 1 must admit a
/// non-empty eta ⊆ nu such that nu/eta is a straight self-conjugate shape
/// whose columns start at j and whose rows end at k-1 (so it contains the
/// box (k-1, j)). The removed rows are t..k-1 for some t, each cut down to
/// j-1 cells; searching over t is exhaustive.
inline std::pair<bool, std::vector<CornerWitness>> is_corner_symmetric(const Partition& nu) {
    if (nu.empty()) throw std::invalid_argument("is_corner_symmetric: empty partition");
    std::vector<CornerWitness> witnesses;
    for (Cell corner : outer_corners(nu)) {
        if (corner.row == 1) continue;
        int k = corner.row, j = corner.col;
        std::optional<CornerWitness> found;
        for (int t = 1; t <= k - 1 && !found; ++t) {
            std::vector<int> delta;
            for (int r = t; r <= k - 1; ++r) delta.push_back(nu.part(r) - (j - 1));
            Partition d(std::move(delta));
            if (d.empty() || conjugate(d) != d) continue;
            std::vector<int> eta_parts;
            for (int r = 1; r <= t - 1; ++r) eta_parts.push_back(nu.part(r));
            for (int r = t; r <= k - 1; ++r) eta_parts.push_back(j - 1);
            for (int r = k; r <= nu.length(); ++r) eta_parts.push_back(nu.part(r));
            Partition eta(std::move(eta_parts));
            if (eta.empty()) continue;
            found = CornerWitness{corner, std::move(eta)};
        }
        if (!found) return {false, {}};
        witnesses.push_back(std::move(*found));
    }
    return {true, std::move(witnesses)};
}

inline std::string to_string(const TypeClass& tc) {
    std::string side = tc.side == Side::Direct      ? "(direct)"
                       : tc.side == Side::Conjugate ? "(conjugate)"
                                                    : "(both)";
    switch (tc.kind) {
        case TypeClass::Kind::NotC1:
            return "none";
        case TypeClass::Kind::Type1:
            return "type1 beta=" + to_string(tc.beta) + " " + side;
        case TypeClass::Kind::Type2:
            return "type2 beta=" + to_string(tc.beta) + " s=" + std::to_string(tc.s) +
                   " alpha=" + to_string(tc.alpha) + " " + side;
    }
    return "none";
}

}  // namespace schurcover
