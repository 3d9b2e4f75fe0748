#pragma once

#include <string>
#include <utility>
#include <vector>

#include "pcoh/rational.hpp"
#include "pcoh/schouten.hpp"

namespace pcoh {

namespace detail {

// Fraction Gaussian elimination; fine at these sizes (n <= a handful).
inline GaussianRational determinant(GQMatrix m) {
    int n = static_cast<int>(m.size());
    GaussianRational det(1);
    for (int c = 0; c < n; ++c) {
        int pivot = -1;
        for (int r = c; r < n; ++r)
            if (!m[r][c].is_zero()) {
                pivot = r;
                break;
            }
        if (pivot < 0) return GaussianRational();
        if (pivot != c) {
            std::swap(m[pivot], m[c]);
            det = -det;
        }
        det *= m[c][c];
        for (int r = c + 1; r < n; ++r) {
            if (m[r][c].is_zero()) continue;
            GaussianRational f = m[r][c] / m[c][c];
            for (int k = c; k < n; ++k) m[r][k] -= f * m[c][k];
        }
    }
    return det;
}

inline GQMatrix inverse(GQMatrix m) {
    int n = static_cast<int>(m.size());
    GQMatrix inv(n, std::vector<GaussianRational>(n));
    for (int i = 0; i < n; ++i) inv[i][i] = GaussianRational(1);
    for (int c = 0; c < n; ++c) {
        int pivot = -1;
        for (int r = c; r < n; ++r)
            if (!m[r][c].is_zero()) {
                pivot = r;
                break;
            }
        if (pivot < 0) throw division_by_zero();
        std::swap(m[pivot], m[c]);
        std::swap(inv[pivot], inv[c]);
        GaussianRational s = m[c][c].inv();
        for (int k = 0; k < n; ++k) {
            m[c][k] *= s;
            inv[c][k] *= s;
        }
        for (int r = 0; r < n; ++r) {
            if (r == c || m[r][c].is_zero()) continue;
            GaussianRational f = m[r][c];
            for (int k = 0; k < n; ++k) {
                m[r][k] -= f * m[c][k];
                inv[r][k] -= f * inv[c][k];
            }
        }
    }
    return inv;
}

}  // namespace detail

/// n x n coefficient matrix of a quadratic toric Poisson structure. The
/// Hermitian condition gates the real-geometry interpretations only; "raw"
/// construction accepts any square matrix and records the flag.
class HermitianForm {
public:
    explicit HermitianForm(GQMatrix entries, bool raw = false)
        : n_(static_cast<int>(entries.size())), entries_(std::move(entries)) {
        for (const auto& row : entries_)
            if (static_cast<int>(row.size()) != n_) throw dimension_error("matrix must be square");
        hermitian_ = true;
        for (int p = 0; p < n_ && hermitian_; ++p)
            for (int q = 0; q < n_; ++q)
                if (entries_[q][p] != entries_[p][q].conj()) {
                    hermitian_ = false;
                    break;
                }
        if (!hermitian_ && !raw)
            throw std::invalid_argument("matrix is not Hermitian (pass raw mode to accept)");
        det_ = detail::determinant(entries_);
    }

    int n() const { return n_; }
    const GQMatrix& entries() const { return entries_; }
    const GaussianRational& at(int p, int q) const { return entries_[p - 1][q - 1]; }
    bool is_hermitian() const { return hermitian_; }
    bool is_symmetric() const {
        for (int p = 0; p < n_; ++p)
            for (int q = 0; q < n_; ++q)
                if (entries_[p][q] != entries_[q][p] || !entries_[p][q].is_real()) return false;
        return true;
    }
    const GaussianRational& determinant() const { return det_; }
    bool is_invertible() const { return !det_.is_zero(); }

private:
    int n_;
    GQMatrix entries_;
    bool hermitian_;
    GaussianRational det_;
};

inline PoissonBivector build_pi(const HermitianForm& b) { return PoissonBivector(b.entries()); }

/// Chart change B -> P* B P for a unimodular integer matrix P (lattice
/// basis change between fan cones). Preserves Hermitian-ness and det.
inline HermitianForm congruence_transform(const HermitianForm& b,
                                          const std::vector<std::vector<long>>& p_mat) {
    int n = b.n();
    if (static_cast<int>(p_mat.size()) != n) throw dimension_error("P has wrong size");
    GQMatrix p(n, std::vector<GaussianRational>(n));
    for (int r = 0; r < n; ++r) {
        if (static_cast<int>(p_mat[r].size()) != n) throw dimension_error("P has wrong size");
        for (int c = 0; c < n; ++c) p[r][c] = GaussianRational(p_mat[r][c]);
    }
    GaussianRational detp = detail::determinant(p);
    if (detp != GaussianRational(1) && detp != GaussianRational(-1))
        throw std::invalid_argument("P must be unimodular (det = +-1)");
    GQMatrix out(n, std::vector<GaussianRational>(n));
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) {
            GaussianRational acc;
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    acc += p[i][r].conj() * b.entries()[i][j] * p[j][c];
            out[r][c] = acc;
        }
    return HermitianForm(std::move(out), !b.is_hermitian());
}

enum class MomentumClass { SingleValuedTorusValued, FiniteQuotientValued, NotHamiltonian };

inline std::string to_string(MomentumClass c) {
    switch (c) {
        case MomentumClass::SingleValuedTorusValued: return "single_valued_torus_valued";
        case MomentumClass::FiniteQuotientValued: return "finite_quotient_valued";
        default: return "not_hamiltonian";
    }
}

/// Momentum-map exponents conj(B^{-1}) and their rationality class:
/// all integral and real -> torus-valued single-valued map; all real
/// rational -> values in a finite quotient; any nonzero imaginary part is
/// read as not Hamiltonian.
struct HamiltonianClass {
    GQMatrix exponent_matrix;
    MomentumClass classification;
};

inline HamiltonianClass hamiltonian_classify(const HermitianForm& b) {
    if (!b.is_invertible()) throw std::invalid_argument("B is singular: generically non-degenerate hypothesis fails");
    GQMatrix inv = detail::inverse(b.entries());
    bool integral = true, real = true;
    for (auto& row : inv)
        for (auto& e : row) {
            e = e.conj();
            if (!e.is_real()) real = false;
            else if (e.re().get_den() != 1) integral = false;
        }
    MomentumClass c = !real ? MomentumClass::NotHamiltonian
                            : (integral ? MomentumClass::SingleValuedTorusValued
                                        : MomentumClass::FiniteQuotientValued);
    return HamiltonianClass{std::move(inv), c};
}

inline const std::vector<std::string>& preset_names() {
    static const std::vector<std::string> names{"nakanishi", "p1xp1", "p2",
                                                "hirzebruch1", "hirzebruch2", "hirzebruch3"};
    return names;
}

/// The paper's example catalog: zw on C^2, and the local forms on
/// CP^1 x CP^1, CP^2 and the Hirzebruch surfaces X_m.
inline HermitianForm preset(const std::string& name) {
    auto gq = [](long v) { return GaussianRational(v); };
    if (name == "nakanishi") return HermitianForm({{gq(1)}});
    if (name == "p1xp1") return HermitianForm({{gq(1), gq(0)}, {gq(0), gq(1)}});
    if (name == "p2") return HermitianForm({{gq(2), gq(1)}, {gq(1), gq(2)}});
    for (long m = 1; m <= 3; ++m)
        if (name == "hirzebruch" + std::to_string(m))
            return HermitianForm({{gq(2 + m * m), gq(-m)}, {gq(-m), gq(2)}});
    std::string valid;
    for (const auto& s : preset_names()) valid += (valid.empty() ? "" : ", ") + s;
    throw std::invalid_argument("unknown preset '" + name + "' (valid: " + valid + ")");
}

/// Matrix text format: rows separated by ';', entries by ',', each entry in
/// canonical Q(i) form. Example: "2,1;1,2".
inline GQMatrix parse_matrix(const std::string& text) {
    GQMatrix rows;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t semi = text.find(';', pos);
        std::string row = text.substr(pos, semi == std::string::npos ? std::string::npos : semi - pos);
        std::vector<GaussianRational> entries;
        std::size_t rp = 0;
        while (rp <= row.size()) {
            std::size_t comma = row.find(',', rp);
            std::string entry = row.substr(rp, comma == std::string::npos ? std::string::npos : comma - rp);
            entries.push_back(parse_gq(entry));
            if (comma == std::string::npos) break;
            rp = comma + 1;
        }
        rows.push_back(std::move(entries));
        if (semi == std::string::npos) break;
        pos = semi + 1;
    }
    std::size_t width = rows.empty() ? 0 : rows[0].size();
    for (const auto& r : rows)
        if (r.size() != width) throw parse_error("ragged matrix rows", 0);
    return rows;
}

inline std::string matrix_to_string(const GQMatrix& m) {
    std::string out;
    for (std::size_t r = 0; r < m.size(); ++r) {
        if (r) out += ";";
        for (std::size_t c = 0; c < m[r].size(); ++c) {
            if (c) out += ",";
            out += serialize_gq(m[r][c]);
        }
    }
    return out;
}

}  // namespace pcoh
