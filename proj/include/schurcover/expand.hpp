#pragma once

#include <map>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "schurcover/lr.hpp"
#include "schurcover/parallel.hpp"
#include "schurcover/partition.hpp"
#include "schurcover/skew_chain.hpp"

namespace schurcover {

using Coeff = boost::multiprecision::cpp_int;

struct LexGreater {
    bool operator()(const Partition& a, const Partition& b) const {
        return lex_compare(a, b) > 0;
    }
};

/// Sparse signed Schur expansion; iteration order is lex-descending, which is
/// also the serialization order. No zero coefficients are stored.
struct SchurExpansion {
    std::map<Partition, Coeff, LexGreater> terms;
    Partition mu;  // meta: set when produced by a product
    int m = 0;

    Coeff coeff(const Partition& p) const {
        auto it = terms.find(p);
        return it == terms.end() ? Coeff(0) : it->second;
    }
    void add(const Partition& p, const Coeff& c) {
        if (c == 0) return;
        auto [it, inserted] = terms.try_emplace(p, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms.erase(it);
        }
    }
    bool operator==(const SchurExpansion& other) const { return terms == other.terms; }
};

/// The (eta, gamma, sigma) coordinates of a product term lambda = (eta^c + gamma, sigma).
struct LambdaIndex {
    Partition eta;
    Partition gamma;
    Partition sigma;
    auto operator<=>(const LambdaIndex&) const = default;
};

/// Assembles lambda: first m entries complement(eta, m) + gamma, then sigma.
/// Returns nothing when the concatenation is not weakly decreasing.
inline std::optional<Partition> assemble_lambda(const LambdaIndex& idx, int m) {
    if (idx.eta.length() > m || idx.eta.first() > m) return std::nullopt;
    if (idx.gamma.length() > m) return std::nullopt;
    std::vector<int> parts(m);
    for (int k = 1; k <= m; ++k) parts[k - 1] = m - idx.eta.part(m + 1 - k) + idx.gamma.part(k);
    for (int k = 1; k <= idx.sigma.length(); ++k) parts.push_back(idx.sigma.part(k));
    for (std::size_t k = 1; k < parts.size(); ++k)
        if (parts[k] > parts[k - 1]) return std::nullopt;
    return Partition(std::move(parts));
}

struct ExpandOptions {
    bool unsafe_m = false;  // allow m below mu_1 + length(mu)
    int jobs = 0;           // 0 = hardware default
};

/// s_{mu'} * s_{mu^c} by direct LR multiplication: enumerate lambda ⊇ mu^c of
/// weight m^2 and count LR tableaux of shape lambda/mu^c and type mu'. Valid
/// for every m with mu ⊆ (m^m); used as the oracle and below the stable bound.
inline SchurExpansion product_generic(const Partition& mu, int m, const ExpandOptions& opts = {}) {
    if (!fits_in_square(mu, m))
        throw std::invalid_argument("product: " + to_string(mu) + " does not fit in (" +
                                    std::to_string(m) + "^" + std::to_string(m) + ")");
    Partition comp = complement(mu, m);
    Partition mup = conjugate(mu);
    int max_len = m + mu.first();
    int max_first = m + mu.length();
    long long target = static_cast<long long>(m) * m;

    std::vector<Partition> lambdas;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int row, long long sum) -> void {
        if (sum == target) {
            if (comp.part(row) == 0)  // the complement must be fully covered
                lambdas.push_back(Partition(std::vector<int>(cur)));
            return;
        }
        if (row > max_len) return;
        int lo = comp.part(row);
        int hi = row == 1 ? max_first : cur[row - 2];
        long long rest = 0;  // complement weight still owed below this row
        for (int r = row + 1; r <= m; ++r) rest += comp.part(r);
        for (int v = hi; v >= std::max(lo, 1); --v) {
            long long s = sum + v;
            if (s + rest > target) continue;
            if (s + static_cast<long long>(max_len - row) * v < target) break;
            cur.push_back(v);
            self(self, row + 1, s);
            cur.pop_back();
        }
    };
    rec(rec, 1, 0);

    SchurExpansion out;
    out.mu = mu;
    out.m = m;
    std::mutex merge_mutex;
    parallel_for(lambdas.size(), opts.jobs, [&](std::size_t i) {
        long long c = count_lr(make_chain({skew_block(lambdas[i], comp)}), mup);
        if (c == 0) return;
        std::lock_guard<std::mutex> lock(merge_mutex);
        out.terms.emplace(lambdas[i], Coeff(c));
    });
    return out;
}

namespace detail {

/// All (eta, gamma, sigma) triples with eta ⊆ mu, |gamma| + |sigma| = |eta|,
/// length(gamma) ≤ mu_1 and sigma_1 ≤ length(mu); these bounds cover every
/// nonzero term in the stable range.
inline std::vector<LambdaIndex> lambda_indices(const Partition& mu) {
    std::vector<LambdaIndex> out;
    for (const Partition& eta : subpartitions(mu)) {
        int w = static_cast<int>(eta.weight());
        for (int a = 0; a <= w; ++a) {
            auto gammas = partitions_of(a, a, mu.first());
            auto sigmas = partitions_of(w - a, mu.length(), w - a);
            for (const auto& g : gammas)
                for (const auto& s : sigmas) out.push_back({eta, g, s});
        }
    }
    return out;
}

struct TripleTerm {
    LambdaIndex idx;
    Partition lambda;
    long long count;
};

inline std::vector<TripleTerm> product_triples(const Partition& mu, int m,
                                               const ExpandOptions& opts) {
    Partition mup = conjugate(mu);
    auto indices = lambda_indices(mu);
    std::vector<std::optional<TripleTerm>> results(indices.size());
    parallel_for(indices.size(), opts.jobs, [&](std::size_t i) {
        const LambdaIndex& idx = indices[i];
        auto lambda = assemble_lambda(idx, m);
        if (!lambda) return;
        // the first chain block is forced superstandard, so gamma ⊆ mu'
        if (!contains(mup, idx.gamma)) return;
        long long c = count_lr(
            make_chain({skew_block(idx.gamma), skew_block(idx.sigma), rotate180(mu, idx.eta)}),
            mup);
        if (c == 0) return;
        results[i] = TripleTerm{idx, std::move(*lambda), c};
    });
    std::vector<TripleTerm> out;
    for (auto& r : results)
        if (r) out.push_back(std::move(*r));
    return out;
}

}  // namespace detail

/// s_{mu'} * s_{mu^c} via the chained-shape formula: the coefficient of
/// lambda = (eta^c + gamma, sigma) is |LR(gamma x sigma x (mu/eta)*, mu')|.
/// Requires the stable range m ≥ mu_1 + length(mu); below it, the unsafe flag
/// switches to the generic product at that m.
inline SchurExpansion product_conj_comp(const Partition& mu, int m,
                                        const ExpandOptions& opts = {}) {
    int bound = mu.first() + mu.length();
    if (m < bound) {
        if (!opts.unsafe_m)
            throw std::invalid_argument(
                "product: m=" + std::to_string(m) + " below the stable bound " +
                std::to_string(bound) + " for mu=" + to_string(mu) +
                " (pass the unsafe flag to compute the unstable expansion)");
        return product_generic(mu, m, opts);
    }
    SchurExpansion out;
    out.mu = mu;
    out.m = m;
    for (auto& term : detail::product_triples(mu, m, opts)) {
        auto [it, inserted] = out.terms.emplace(std::move(term.lambda), Coeff(term.count));
        if (!inserted)
            throw std::logic_error("product: lambda index collision at " + to_string(it->first));
    }
    return out;
}

inline SchurExpansion difference(const Partition& mu, const Partition& nu, int m,
                                 const ExpandOptions& opts = {}) {
    if (!contains(mu, nu))
        throw std::invalid_argument("difference: " + to_string(nu) + " not contained in " +
                                    to_string(mu));
    if (mu.weight() != nu.weight() + 1)
        throw std::invalid_argument("difference: |mu| must equal |nu|+1, got |" + to_string(mu) +
                                    "|=" + std::to_string(mu.weight()) + ", |" + to_string(nu) +
                                    "|=" + std::to_string(nu.weight()));
    SchurExpansion a = product_conj_comp(mu, m, opts);
    SchurExpansion b = product_conj_comp(nu, m, opts);
    SchurExpansion out;
    out.mu = mu;
    out.m = m;
    out.terms = std::move(a.terms);
    for (const auto& [p, c] : b.terms) out.add(p, -c);
    return out;
}

/// Positivity plus, on failure, the lex-least partition with a negative coefficient.
inline std::pair<bool, std::optional<Partition>> is_schur_positive(const SchurExpansion& e) {
    std::optional<Partition> witness;
    // terms iterate lex-descending, so the last negative seen is lex-least
    for (const auto& [p, c] : e.terms)
        if (c < 0) witness = p;
    return {!witness.has_value(), witness};
}

inline SchurExpansion omega(const SchurExpansion& e) {
    SchurExpansion out;
    for (const auto& [p, c] : e.terms) out.terms.emplace(conjugate(p), c);
    return out;
}

inline bool check_symmetry(const Partition& mu, int m, const ExpandOptions& opts = {}) {
    int bound = mu.first() + mu.length();
    if (m < bound)
        throw std::invalid_argument("check_symmetry: m below the stable bound");
    auto triples = detail::product_triples(mu, m, opts);
    SchurExpansion prod;
    for (auto& t : triples) prod.terms.emplace(t.lambda, Coeff(t.count));
    for (const auto& t : triples) {
        auto swapped = assemble_lambda({t.idx.eta, t.idx.sigma, t.idx.gamma}, m);
        if (!swapped) continue;
        if (prod.coeff(*swapped) != t.count) return false;
    }
    return true;
}

/// Triple-indexed coefficients agree at m = mu_1 + length(mu) and m + 1, for
/// both mu and nu.
inline bool check_stability(const Partition& mu, const Partition& nu,
                            const ExpandOptions& opts = {}) {
    if (!contains(mu, nu) || mu.weight() != nu.weight() + 1)
        throw std::invalid_argument("check_stability: mu must cover nu as shapes");
    int m = mu.first() + mu.length();
    auto keyed = [&](const Partition& p, int mm) {
        std::map<LambdaIndex, long long> out;
        for (auto& t : detail::product_triples(p, mm, opts)) out.emplace(t.idx, t.count);
        return out;
    };
    return keyed(mu, m) == keyed(mu, m + 1) && keyed(nu, m) == keyed(nu, m + 1);
}

/// Kronecker product s_{(n-k, 1^k)} * s_{(m^m)} with n = m^2, via the
/// alternating sum over products s_{mu'} s_{mu^c} for |mu| ≤ k. Partitions mu
/// not fitting in the square contribute nothing.
inline SchurExpansion kronecker_hook_square(int m, int k, const ExpandOptions& opts = {}) {
    if (m < 1 || k < 0 || k > m * m - 1)
        throw std::invalid_argument("kronecker_hook_square: need 1 ≤ m and 0 ≤ k ≤ m²−1");
    SchurExpansion out;
    for (int i = 0; i <= k; ++i) {
        int sign = (k - i) % 2 == 0 ? 1 : -1;
        for (const Partition& mu : partitions_of(i, m, m)) {
            SchurExpansion p = product_generic(mu, m, opts);
            for (const auto& [lam, c] : p.terms) out.add(lam, sign * c);
        }
    }
    return out;
}

/// One term per line: "coefficient<TAB>[partition]", lex-descending.
inline std::string to_tsv(const SchurExpansion& e) {
    std::string out;
    for (const auto& [p, c] : e.terms) {
        out += c.str();
        out += '\t';
        out += to_string(p);
        out += '\n';
    }
    return out;
}

inline SchurExpansion parse_expansion(const std::string& text) {
    SchurExpansion out;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        auto tab = line.find('\t');
        if (tab == std::string::npos)
            throw std::invalid_argument("expansion line missing tab: " + line);
        out.add(parse_partition(line.substr(tab + 1)), Coeff(line.substr(0, tab)));
    }
    return out;
}

}  // namespace schurcover
