#include <catch2/catch_amalgamated.hpp>

#include "schurcover/classify.hpp"

using namespace schurcover;

namespace {

/// Brute-force (C1) oracle for one side: p = beta + (s^s) + alpha.
bool c1_side_oracle(const Partition& p) {
    int i1 = p.part(1);
    if (contains(p, detail::beta_profile(i1, 0))) return true;  // type 1
    for (int s = 1; s <= p.length(); ++s) {
        for (int i = 0; i <= p.part(1); ++i) {
            std::vector<int> beta_parts;
            for (int k = 0; k < s; ++k) beta_parts.push_back(i);
            for (int k = s + 1; k <= p.length(); ++k) beta_parts.push_back(p.part(k));
            std::vector<int> alpha_parts;
            bool ok = true;
            for (int k = 1; k <= s; ++k) {
                int a = p.part(k) - i - s;
                if (a < 0) ok = false;
                alpha_parts.push_back(a);
            }
            if (!ok) continue;
            while (!alpha_parts.empty() && alpha_parts.back() == 0) alpha_parts.pop_back();
            if (alpha_parts.empty()) continue;
            if (alpha_parts.size() > static_cast<std::size_t>(s)) continue;
            try {
                Partition beta(beta_parts);
                Partition alpha(alpha_parts);
                if (pointwise_add(pointwise_add(beta, Partition(std::vector<int>(s, s))),
                                  alpha) != p)
                    continue;
                if (i > 0 && !contains(beta, detail::beta_profile(i, s))) continue;
                return true;
            } catch (const std::invalid_argument&) {
                continue;
            }
        }
    }
    return false;
}

/// Brute-force corner-symmetry oracle: search all eta ⊆ nu per corner.
bool corner_symmetric_oracle(const Partition& nu) {
    for (Cell corner : outer_corners(nu)) {
        if (corner.row == 1) continue;
        int k = corner.row, j = corner.col;
        bool found = false;
        for (const Partition& eta : subpartitions(nu)) {
            if (eta.empty() || eta == nu) continue;
            // nu/eta straight and self-conjugate after shifting left by j-1 columns
            std::vector<int> rows;
            int top = 0;
            bool gap = false;
            bool valid = true;
            for (int r = 1; r <= nu.length() && valid; ++r) {
                if (eta.part(r) == nu.part(r)) {
                    if (!rows.empty()) gap = true;
                    continue;
                }
                if (gap) valid = false;                   // removal rows must be contiguous
                if (eta.part(r) != j - 1) valid = false;  // must start at column j
                rows.push_back(nu.part(r) - (j - 1));
                if (rows.size() == 1) top = r;
            }
            if (!valid || rows.empty()) continue;
            int last_row = top + static_cast<int>(rows.size()) - 1;
            if (last_row != k - 1) continue;  // must contain box (k-1, j)
            try {
                Partition d(rows);
                if (conjugate(d) == d) {
                    found = true;
                    break;
                }
            } catch (const std::invalid_argument&) {
            }
        }
        if (!found) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("classify examples") {
    TypeClass a = classify(Partition{6, 5, 3, 3, 3, 1});
    CHECK(a.kind == TypeClass::Kind::Type2);
    CHECK(a.beta == Partition{3, 3, 3, 3, 3, 1});
    CHECK(a.s == 2);
    CHECK(a.alpha == Partition{1});
    CHECK(a.side == Side::Both);
    CHECK(to_string(a) == "type2 beta=[3,3,3,3,3,1] s=2 alpha=[1] (both)");

    TypeClass b = classify(Partition{3, 2, 1});
    CHECK(b.kind == TypeClass::Kind::NotC1);
    CHECK(to_string(b) == "none");

    // (2,2,1) is type 1 directly; its conjugate (3,2) = (2,2)+(1) also
    // satisfies (C1), so the side is reported as both.
    TypeClass c = classify(Partition{2, 2, 1});
    CHECK(c.kind == TypeClass::Kind::Type1);
    CHECK(c.beta == Partition{2, 2, 1});
    CHECK(c.side == Side::Both);

    CHECK_THROWS_AS(classify(Partition{}), std::invalid_argument);
}

TEST_CASE("classify agrees with the brute-force (C1) oracle") {
    for (int n = 1; n <= 12; ++n)
        for (const auto& nu : partitions_of(n)) {
            bool direct = c1_side_oracle(nu);
            bool conj = c1_side_oracle(conjugate(nu));
            TypeClass tc = classify(nu);
            if (!direct && !conj) {
                CHECK(tc.kind == TypeClass::Kind::NotC1);
            } else {
                CHECK(tc.kind != TypeClass::Kind::NotC1);
                Side want = direct ? (conj ? Side::Both : Side::Direct) : Side::Conjugate;
                CHECK(tc.side == want);
            }
        }
}

TEST_CASE("type 2 decomposition reconstructs the input") {
    for (int n = 1; n <= 14; ++n)
        for (const auto& nu : partitions_of(n)) {
            auto r = detail::read_direct(nu);
            if (!r || r->kind != TypeClass::Kind::Type2) continue;
            CHECK(r->s >= 1);
            CHECK_FALSE(r->alpha.empty());
            CHECK(r->alpha.length() <= r->s);
            Partition square(std::vector<int>(r->s, r->s));
            CHECK(pointwise_add(pointwise_add(r->beta, square), r->alpha) == nu);
            int i = r->beta.part(1);
            if (i > 0) CHECK(contains(r->beta, detail::beta_profile(i, r->s)));
        }
}

TEST_CASE("a partition is never both type 1 and type 2 and conjugates are consistent") {
    for (int n = 1; n <= 18; ++n)
        for (const auto& nu : partitions_of(n)) {
            auto direct = detail::read_direct(nu);
            if (!direct) continue;
            auto conj = detail::read_direct(conjugate(nu));
            // type 1 conjugate is never type 1
            if (direct->kind == TypeClass::Kind::Type1 && conj)
                CHECK(conj->kind == TypeClass::Kind::Type2);
            // beta = ∅ type 2 ⇔ conjugate type 1 with (nu_1^{nu_1}) ⊆ nu'
            if (direct->kind == TypeClass::Kind::Type2 && direct->beta.empty()) {
                REQUIRE(conj.has_value());
                CHECK(conj->kind == TypeClass::Kind::Type1);
                Partition nup = conjugate(nu);
                CHECK(contains(nup, Partition(std::vector<int>(nup.part(1), nup.part(1)))));
            }
        }
}

TEST_CASE("predicted_cover examples") {
    CHECK(predicted_cover(Partition{6, 5, 3, 3, 3, 1}) == Partition{6, 5, 4, 3, 3, 1});
    CHECK_FALSE(predicted_cover(Partition{2, 2}).has_value());
    CHECK(predicted_cover(Partition{2, 2, 1}) == Partition{3, 2, 1});
    CHECK_FALSE(predicted_cover(Partition{3, 2, 1}).has_value());
    // conjugate-side type 1: (1,1) reads as (2) after conjugation
    CHECK(predicted_cover(Partition{1, 1}) == Partition{2, 1});
}

TEST_CASE("both-sided readings predict the same cover") {
    for (int n = 1; n <= 16; ++n)
        for (const auto& nu : partitions_of(n)) {
            auto direct = detail::read_direct(nu);
            auto conj = detail::read_direct(conjugate(nu));
            if (!direct || !conj) continue;
            Partition nup = conjugate(nu);
            Partition from_conj = conj->kind == TypeClass::Kind::Type1
                                      ? add_box(nup, Cell{1, nup.part(1) + 1})
                                      : add_box(nup, Cell{conj->s + 1, conj->beta.part(1) + 1});
            CHECK(predicted_cover(nu) == conjugate(from_conj));
        }
}

TEST_CASE("predicted covers are themselves never covered") {
    for (int n = 1; n <= 13; ++n)
        for (const auto& nu : partitions_of(n)) {
            auto mu = predicted_cover(nu);
            if (mu) CHECK_FALSE(predicted_cover(*mu).has_value());
        }
}

TEST_CASE("is_self_conjugate") {
    CHECK(is_self_conjugate(Partition{3, 2, 1}));
    CHECK_FALSE(is_self_conjugate(Partition{6, 5, 3, 3, 3, 1}));
    CHECK_FALSE(is_self_conjugate(Partition{6, 5, 5, 2, 2, 1}));
    CHECK(conjugate(Partition{6, 5, 3, 3, 3, 1}) == Partition{6, 5, 5, 2, 2, 1});
    CHECK(is_self_conjugate(Partition{1}));
}

TEST_CASE("corner symmetry examples") {
    auto [ok_a, wit_a] = is_corner_symmetric(Partition{5, 5, 4, 4, 2, 2});
    REQUIRE(ok_a);
    REQUIRE(wit_a.size() == 3);
    CHECK(wit_a[0].corner == Cell{3, 5});
    CHECK(wit_a[0].eta == Partition{5, 4, 4, 4, 2, 2});
    CHECK(wit_a[1].corner == Cell{5, 3});
    CHECK(wit_a[1].eta == Partition{5, 5, 2, 2, 2, 2});
    CHECK(wit_a[2].corner == Cell{7, 1});
    CHECK(wit_a[2].eta == Partition{5, 5});

    auto [ok_b, wit_b] = is_corner_symmetric(Partition{5, 5, 4, 4, 3});
    CHECK_FALSE(ok_b);
    CHECK(wit_b.empty());

    CHECK(is_corner_symmetric(Partition{3, 2, 1}).first);
    CHECK_THROWS_AS(is_corner_symmetric(Partition{}), std::invalid_argument);
}

TEST_CASE("corner witnesses satisfy their invariants") {
    for (int n = 1; n <= 12; ++n)
        for (const auto& nu : partitions_of(n)) {
            auto [ok, wits] = is_corner_symmetric(nu);
            if (!ok) continue;
            for (const auto& w : wits) {
                CHECK_FALSE(w.eta.empty());
                CHECK(contains(nu, w.eta));
                int k = w.corner.row, j = w.corner.col;
                // straight: removed rows contiguous, each cut to exactly j-1 cells
                std::vector<int> delta;
                int first = 0;
                for (int r = 1; r <= nu.length(); ++r) {
                    if (w.eta.part(r) == nu.part(r)) continue;
                    if (first == 0) first = r;
                    CHECK(w.eta.part(r) == j - 1);
                    delta.push_back(nu.part(r) - (j - 1));
                }
                REQUIRE(first > 0);
                CHECK(first + static_cast<int>(delta.size()) - 1 == k - 1);
                Partition d(delta);
                CHECK(conjugate(d) == d);
            }
        }
}

TEST_CASE("corner symmetry agrees with the brute-force oracle") {
    for (int n = 1; n <= 12; ++n)
        for (const auto& nu : partitions_of(n))
            CHECK(is_corner_symmetric(nu).first == corner_symmetric_oracle(nu));
}
