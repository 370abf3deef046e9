#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "schurcover/classify.hpp"
#include "schurcover/expand.hpp"
#include "schurcover/parallel.hpp"
#include "schurcover/partition.hpp"

namespace schurcover {

struct CoverVerdict {
    Partition mu;
    Partition nu;
    int m = 0;
    bool positive = false;
    std::optional<Partition> witness;  // lex-least negative term when not positive
};

inline CoverVerdict covers(const Partition& mu, const Partition& nu, int m = 0,
                           const ExpandOptions& opts = {}) {
    if (m == 0) m = mu.first() + mu.length();
    SchurExpansion d = difference(mu, nu, m, opts);
    auto [positive, witness] = is_schur_positive(d);
    return {mu, nu, m, positive, witness};
}

namespace detail {

/// Verdicts for every one-box extension of nu, sharing nu's product expansion.
/// m must be in the stable range of every extension; the default
/// nu_1 + length(nu) + 1 always is.
inline std::vector<CoverVerdict> extension_verdicts(const Partition& nu, int m = 0,
                                                    const ExpandOptions& opts = {}) {
    if (m == 0) m = nu.first() + nu.length() + 1;
    SchurExpansion base = product_conj_comp(nu, m, opts);
    std::vector<CoverVerdict> out;
    for (Cell corner : outer_corners(nu)) {
        Partition mu = add_box(nu, corner);
        SchurExpansion d = product_conj_comp(mu, m, opts);
        for (const auto& [p, c] : base.terms) d.add(p, -c);
        auto [positive, witness] = is_schur_positive(d);
        out.push_back({std::move(mu), nu, m, positive, std::move(witness)});
    }
    return out;
}

}  // namespace detail

struct ConjectureViolation {
    Partition nu;
    Partition mu;
    bool predicted = false;
    bool actual = false;
    std::optional<Partition> witness;
};

struct ConjectureReport {
    int n = 0;
    long long pairs_checked = 0;
    long long agreements = 0;
    std::vector<ConjectureViolation> violations;
};

/// Exhaustive sweep at weight n: for every nu ⊢ n and every one-box extension
/// mu, the computed positivity must match the conjecture's prediction.
inline ConjectureReport verify_conjecture(int n, const ExpandOptions& opts = {}) {
    if (n < 1) throw std::invalid_argument("verify_conjecture: n must be positive");
    auto nus = partitions_of(n);
    std::vector<std::vector<ConjectureViolation>> violations(nus.size());
    std::vector<long long> pair_counts(nus.size(), 0);
    ExpandOptions inner = opts;
    inner.jobs = 1;  // parallelism lives at the nu level
    parallel_for(nus.size(), opts.jobs, [&](std::size_t i) {
        const Partition& nu = nus[i];
        auto predicted = predicted_cover(nu);
        for (auto& verdict : detail::extension_verdicts(nu, 0, inner)) {
            ++pair_counts[i];
            bool want = predicted && *predicted == verdict.mu;
            if (want != verdict.positive)
                violations[i].push_back(
                    {nu, verdict.mu, want, verdict.positive, verdict.witness});
        }
    });
    ConjectureReport report;
    report.n = n;
    for (std::size_t i = 0; i < nus.size(); ++i) {
        report.pairs_checked += pair_counts[i];
        for (auto& v : violations[i]) report.violations.push_back(std::move(v));
    }
    report.agreements = report.pairs_checked - static_cast<long long>(report.violations.size());
    return report;
}

inline std::string to_string(const ConjectureReport& r) {
    std::string out = "conjecture-sweep n=" + std::to_string(r.n) +
                      " pairs=" + std::to_string(r.pairs_checked) +
                      " violations=" + std::to_string(r.violations.size()) + "\n";
    for (const auto& v : r.violations) {
        out += "nu=" + to_string(v.nu) + " mu=" + to_string(v.mu) +
               " predicted=" + (v.predicted ? "1" : "0") + " actual=" + (v.actual ? "1" : "0") +
               " witness=" + (v.witness ? to_string(*v.witness) : "none") + "\n";
    }
    return out;
}

// --- lex-minimality -------------------------------------------------------

namespace detail {

inline void require_type1_direct(const Partition& nu, const char* who) {
    auto r = read_direct(nu);
    if (!r || r->kind != TypeClass::Kind::Type1)
        throw std::invalid_argument(std::string(who) + ": " + schurcover::to_string(nu) +
                                    " is not of type 1");
}

}  // namespace detail

/// Conjectured lex-minimal eta: the rows of nu/(nu ∩ nu'), reordered into a
/// partition.
inline Partition lexmin_conjectured(const Partition& nu) {
    detail::require_type1_direct(nu, "lexmin_conjectured");
    Partition nup = conjugate(nu);
    std::vector<int> rows;
    for (int k = 1; k <= nu.length(); ++k) {
        int r = nu.part(k) - std::min(nu.part(k), nup.part(k));
        if (r > 0) rows.push_back(r);
    }
    std::sort(rows.rbegin(), rows.rend());
    return Partition(std::move(rows));
}

struct LexMinResult {
    Partition eta;
    Coeff coeff;  // coefficient at eta^c + eta' (gamma = eta', sigma = ∅)
};

/// Scans eta ⊆ nu in lex-increasing order and returns the first eta with a
/// nonzero product coefficient for some (gamma, sigma), plus the coefficient
/// at the self-paired term eta^c + eta'.
inline LexMinResult lexmin_actual(const Partition& nu, int m = 0,
                                  const ExpandOptions& opts = {}) {
    (void)opts;
    detail::require_type1_direct(nu, "lexmin_actual");
    if (m == 0) m = nu.first() + nu.length();
    Partition nup = conjugate(nu);
    auto etas = subpartitions(nu);
    std::sort(etas.begin(), etas.end(),
              [](const Partition& a, const Partition& b) { return lex_compare(a, b) < 0; });
    for (const Partition& eta : etas) {
        if (eta.empty()) continue;  // eta = ∅ never occurs for type 1
        int w = static_cast<int>(eta.weight());
        bool found = false;
        for (int a = 0; a <= w && !found; ++a) {
            for (const auto& g : partitions_of(a, a, nu.first())) {
                if (!contains(nup, g)) continue;
                for (const auto& s : partitions_of(w - a, nu.length(), w - a)) {
                    if (!assemble_lambda({eta, g, s}, m)) continue;
                    if (count_lr(make_chain({skew_block(g), skew_block(s), rotate180(nu, eta)}),
                                 nup) > 0) {
                        found = true;
                        break;
                    }
                }
                if (found) break;
            }
        }
        if (found) {
            Partition etap = conjugate(eta);
            Coeff c = 0;
            if (assemble_lambda({eta, etap, Partition{}}, m))
                c = count_lr(make_chain({skew_block(etap), rotate180(nu, eta)}), nup);
            return {eta, c};
        }
    }
    return {Partition{}, 0};
}

inline bool check_lexmin(const Partition& nu, int m = 0, const ExpandOptions& opts = {}) {
    LexMinResult actual = lexmin_actual(nu, m, opts);
    return actual.eta == lexmin_conjectured(nu) && actual.coeff == 1;
}

}  // namespace schurcover
