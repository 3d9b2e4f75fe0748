#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "pcoh/rational.hpp"

namespace pcoh {

struct dimension_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct grading_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Monomial z^alpha w^beta in n z-variables and n w-variables.
struct Monomial {
    std::vector<int> alpha, beta;

    Monomial() = default;
    Monomial(std::vector<int> a, std::vector<int> b) : alpha(std::move(a)), beta(std::move(b)) {
        if (alpha.size() != beta.size()) throw dimension_error("alpha/beta length mismatch");
    }
    static Monomial one(int n) { return Monomial(std::vector<int>(n, 0), std::vector<int>(n, 0)); }

    int n() const { return static_cast<int>(alpha.size()); }
    int degree() const {
        int d = 0;
        for (int a : alpha) d += a;
        for (int b : beta) d += b;
        return d;
    }
    // Flattened zeta-view, variable index 1..2n.
    int exponent(int var) const {
        return var <= n() ? alpha[var - 1] : beta[var - n() - 1];
    }
    Monomial shifted(int var, int delta) const {
        Monomial m = *this;
        int& e = var <= n() ? m.alpha[var - 1] : m.beta[var - n() - 1];
        e += delta;
        if (e < 0) throw grading_error("negative exponent");
        return m;
    }
    Monomial operator*(const Monomial& o) const {
        Monomial m = *this;
        for (std::size_t k = 0; k < alpha.size(); ++k) {
            m.alpha[k] += o.alpha[k];
            m.beta[k] += o.beta[k];
        }
        return m;
    }

    friend bool operator==(const Monomial& a, const Monomial& b) {
        return a.alpha == b.alpha && a.beta == b.beta;
    }
    // Canonical order: total degree ascending, then flattened exponent
    // vector lexicographically descending.
    friend bool operator<(const Monomial& a, const Monomial& b) {
        int da = a.degree(), db = b.degree();
        if (da != db) return da < db;
        if (a.alpha != b.alpha) return a.alpha > b.alpha;
        return a.beta > b.beta;
    }
};

/// Wedge basis element: strictly increasing subset of {1,...,2n}.
/// Index k <= n is d/dz_k, index k > n is d/dw_{k-n}.
struct WedgeIndex {
    std::vector<int> subset;

    WedgeIndex() = default;
    explicit WedgeIndex(std::vector<int> s) : subset(std::move(s)) {
        for (std::size_t k = 1; k < subset.size(); ++k)
            if (subset[k - 1] >= subset[k]) throw dimension_error("wedge subset not increasing");
    }
    int degree() const { return static_cast<int>(subset.size()); }
    bool contains(int var) const {
        return std::binary_search(subset.begin(), subset.end(), var);
    }

    friend bool operator==(const WedgeIndex& a, const WedgeIndex& b) { return a.subset == b.subset; }
    friend bool operator<(const WedgeIndex& a, const WedgeIndex& b) {
        if (a.subset.size() != b.subset.size()) return a.subset.size() < b.subset.size();
        return a.subset < b.subset;
    }
};

struct BasisKey {
    Monomial mon;
    WedgeIndex wedge;

    friend bool operator==(const BasisKey& a, const BasisKey& b) {
        return a.mon == b.mon && a.wedge == b.wedge;
    }
    friend bool operator<(const BasisKey& a, const BasisKey& b) {
        if (!(a.mon == b.mon)) return a.mon < b.mon;
        return a.wedge < b.wedge;
    }
};

namespace detail {

// Merge two increasing index sets; sign is the Koszul sign of sorting the
// concatenation, zero (empty optional semantics via sign==0) on a repeat.
inline int merge_subsets(const std::vector<int>& a, const std::vector<int>& b, std::vector<int>& out) {
    out.clear();
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    int sign = 1;
    while (i < a.size() && j < b.size()) {
        if (a[i] == b[j]) return 0;
        if (a[i] < b[j]) {
            out.push_back(a[i++]);
        } else {
            // b[j] jumps over the remaining a-elements.
            if ((a.size() - i) % 2 == 1) sign = -sign;
            out.push_back(b[j++]);
        }
    }
    while (i < a.size()) out.push_back(a[i++]);
    while (j < b.size()) out.push_back(b[j++]);
    return sign;
}

}  // namespace detail

/// Sparse element of R (x) /\V: finite sum of coefficient * monomial * wedge
/// terms over Q(i). Zero coefficients are never stored.
class MultiVector {
public:
    using TermMap = std::map<BasisKey, GaussianRational>;

    explicit MultiVector(int n) : n_(n) {
        if (n < 1) throw dimension_error("n must be positive");
    }

    int n() const { return n_; }
    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }

    void add_term(const BasisKey& key, const GaussianRational& c) {
        if (c.is_zero()) return;
        if (key.mon.n() != n_) throw dimension_error("term has wrong n");
        auto [it, inserted] = terms_.try_emplace(key, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    GaussianRational coefficient(const BasisKey& key) const {
        auto it = terms_.find(key);
        return it == terms_.end() ? GaussianRational() : it->second;
    }

    friend MultiVector operator+(const MultiVector& a, const MultiVector& b) {
        if (a.n_ != b.n_) throw dimension_error("mismatched n");
        MultiVector r = a;
        for (const auto& [k, c] : b.terms_) r.add_term(k, c);
        return r;
    }
    friend MultiVector operator-(const MultiVector& a, const MultiVector& b) {
        if (a.n_ != b.n_) throw dimension_error("mismatched n");
        MultiVector r = a;
        for (const auto& [k, c] : b.terms_) r.add_term(k, -c);
        return r;
    }
    friend MultiVector operator*(const GaussianRational& s, const MultiVector& x) {
        MultiVector r(x.n_);
        if (s.is_zero()) return r;
        for (const auto& [k, c] : x.terms_) r.terms_.emplace(k, s * c);
        return r;
    }
    friend bool operator==(const MultiVector& a, const MultiVector& b) {
        return a.n_ == b.n_ && a.terms_ == b.terms_;
    }

    static MultiVector term(int n, Monomial mon, WedgeIndex w, GaussianRational c = 1) {
        MultiVector r(n);
        r.add_term(BasisKey{std::move(mon), std::move(w)}, c);
        return r;
    }

private:
    int n_;
    TermMap terms_;
};

inline MultiVector wedge(const MultiVector& x, const MultiVector& y) {
    if (x.n() != y.n()) throw dimension_error("mismatched n");
    MultiVector r(x.n());
    std::vector<int> merged;
    for (const auto& [kx, cx] : x.terms())
        for (const auto& [ky, cy] : y.terms()) {
            int sign = detail::merge_subsets(kx.wedge.subset, ky.wedge.subset, merged);
            if (sign == 0) continue;
            GaussianRational c = cx * cy;
            if (sign < 0) c = -c;
            r.add_term(BasisKey{kx.mon * ky.mon, WedgeIndex{merged}}, c);
        }
    return r;
}

/// Bigrading support: set of (homogeneous degree, wedge degree) present.
inline std::set<std::pair<int, int>> grade(const MultiVector& x) {
    std::set<std::pair<int, int>> s;
    for (const auto& [k, c] : x.terms()) s.emplace(k.mon.degree(), k.wedge.degree());
    return s;
}

inline long long binomial(long long m, long long k) {
    if (k < 0 || k > m) return 0;
    k = std::min(k, m - k);
    long long r = 1;
    for (long long j = 1; j <= k; ++j) r = r * (m - k + j) / j;
    return r;
}

/// dim R_[d] (x) /\^p V = C(d+2n-1, 2n-1) * C(2n, p); zero for degenerate cells.
inline long long cell_dimension(int n, int d, int p) {
    if (d < 0 || p < 0 || p > 2 * n) return 0;
    return binomial(d + 2 * n - 1, 2 * n - 1) * binomial(2 * n, p);
}

namespace detail {

// All exponent vectors of length len summing to d, lex descending.
inline void enumerate_exponents(int len, int d, std::vector<int>& cur,
                                std::vector<std::vector<int>>& out) {
    if (len == 1) {
        cur.push_back(d);
        out.push_back(cur);
        cur.pop_back();
        return;
    }
    for (int e = d; e >= 0; --e) {
        cur.push_back(e);
        enumerate_exponents(len - 1, d - e, cur, out);
        cur.pop_back();
    }
}

inline void enumerate_subsets(int maxv, int p, int from, std::vector<int>& cur,
                              std::vector<std::vector<int>>& out) {
    if (static_cast<int>(cur.size()) == p) {
        out.push_back(cur);
        return;
    }
    for (int v = from; v <= maxv; ++v) {
        cur.push_back(v);
        enumerate_subsets(maxv, p, v + 1, cur, out);
        cur.pop_back();
    }
}

}  // namespace detail

/// The finite space R_[d] (x) /\^p V with its deterministic ordered basis.
struct GradedCell {
    int n = 0, d = 0, p = 0;
    std::vector<BasisKey> basis;

    // Index lookup in the canonical basis; -1 when absent.
    long index_of(const BasisKey& key) const {
        auto it = std::lower_bound(basis.begin(), basis.end(), key);
        if (it == basis.end() || !(*it == key)) return -1;
        return static_cast<long>(it - basis.begin());
    }
};

inline GradedCell enumerate_cell(int n, int d, int p) {
    GradedCell cell;
    cell.n = n;
    cell.d = d;
    cell.p = p;
    if (d < 0 || p < 0 || p > 2 * n) return cell;
    std::vector<std::vector<int>> exps, subs;
    std::vector<int> cur;
    detail::enumerate_exponents(2 * n, d, cur, exps);
    detail::enumerate_subsets(2 * n, p, 1, cur, subs);
    cell.basis.reserve(exps.size() * subs.size());
    for (const auto& e : exps) {
        Monomial m(std::vector<int>(e.begin(), e.begin() + n), std::vector<int>(e.begin() + n, e.end()));
        for (const auto& s : subs) cell.basis.push_back(BasisKey{m, WedgeIndex{s}});
    }
    return cell;
}

/// Partition of a wedge-degree-1 field X = sum c^k_mu zeta^mu d_k into the
/// pieces X_lambda with lambda = mu - e_k. Keys have every coordinate >= -1
/// with at most one coordinate equal to -1.
inline std::map<std::vector<int>, MultiVector> lambda_decompose(const MultiVector& x) {
    std::map<std::vector<int>, MultiVector> parts;
    for (const auto& [k, c] : x.terms()) {
        if (k.wedge.degree() != 1) throw grading_error("lambda_decompose needs wedge degree 1");
        std::vector<int> lambda(k.mon.alpha);
        lambda.insert(lambda.end(), k.mon.beta.begin(), k.mon.beta.end());
        lambda[k.wedge.subset[0] - 1] -= 1;
        auto [it, inserted] = parts.try_emplace(lambda, x.n());
        it->second.add_term(k, c);
    }
    return parts;
}

// --- term text form ----------------------------------------------------

inline std::string variable_name(int n, int var, bool derivative) {
    std::string base = var <= n ? "z" : "w";
    int k = var <= n ? var : var - n;
    std::string name = (derivative ? "d" : "") + base;
    if (n > 1) name += std::to_string(k);
    return name;
}

inline std::string monomial_to_string(const Monomial& m) {
    std::string out;
    int n = m.n();
    for (int var = 1; var <= 2 * n; ++var) {
        int e = m.exponent(var);
        if (e == 0) continue;
        if (!out.empty()) out += "*";
        out += variable_name(n, var, false);
        if (e > 1) out += "^" + std::to_string(e);
    }
    return out;
}

inline std::string term_to_string(int n, const BasisKey& key, const GaussianRational& c) {
    std::string mono = monomial_to_string(key.mon);
    std::string wdg;
    for (int var : key.wedge.subset) {
        if (!wdg.empty()) wdg += "^";
        wdg += variable_name(n, var, true);
    }
    std::string coeff;
    if (c == GaussianRational(1)) {
        coeff = (mono.empty() && wdg.empty()) ? "1" : "";
    } else if (c == GaussianRational(-1) && !(mono.empty() && wdg.empty())) {
        coeff = "-";
    } else {
        coeff = serialize_gq(c);
        if (coeff.find_first_of("+-", 1) != std::string::npos) coeff = "(" + coeff + ")";
        if (!mono.empty()) coeff += "*";
    }
    std::string out = coeff + mono;
    if (!wdg.empty()) {
        if (!mono.empty()) out += " ";
        out += wdg;
    }
    return out;
}

inline std::vector<std::string> to_term_strings(const MultiVector& x) {
    std::vector<std::string> out;
    out.reserve(x.terms().size());
    for (const auto& [k, c] : x.terms()) out.push_back(term_to_string(x.n(), k, c));
    return out;
}

inline std::string to_string(const MultiVector& x) {
    if (x.is_zero()) return "0";
    std::string out;
    for (const auto& s : to_term_strings(x)) {
        if (!out.empty()) out += s[0] == '-' ? " " : " + ";
        out += s;
    }
    return out;
}

}  // namespace pcoh
