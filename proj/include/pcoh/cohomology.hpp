#pragma once

#include <map>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "pcoh/exterior.hpp"
#include "pcoh/linalg.hpp"
#include "pcoh/schouten.hpp"

namespace pcoh {

struct invariant_error : std::logic_error {
    using std::logic_error::logic_error;
};

/// Matrix of sigma^p_[d] : R_[d] (x) /\^p V -> R_[d+1] (x) /\^(p+1) V in the
/// canonical bases. Column j is the coordinate vector of sigma(basis[j]).
struct SigmaMatrix {
    GradedCell domain, codomain;
    long rows = 0, cols = 0;
    std::vector<SparseRow> columns;  // column j: (row index, coefficient)
};

inline SigmaMatrix assemble_sigma_matrix(int n, int d, int p, const PoissonBivector& pi) {
    SigmaMatrix m;
    m.domain = enumerate_cell(n, d, p);
    m.codomain = enumerate_cell(n, d + 1, p + 1);
    m.rows = static_cast<long>(m.codomain.basis.size());
    m.cols = static_cast<long>(m.domain.basis.size());
    m.columns.resize(m.cols);
    for (long j = 0; j < m.cols; ++j) {
        const BasisKey& b = m.domain.basis[j];
        MultiVector image = sigma(MultiVector::term(n, b.mon, b.wedge), pi);
        SparseRow& col = m.columns[j];
        for (const auto& [k, c] : image.terms()) {
            long r = m.codomain.index_of(k);
            if (r < 0) throw invariant_error("sigma image left the expected cell");
            col.emplace_back(static_cast<int>(r), c);
        }
        std::sort(col.begin(), col.end(), [](const auto& a, const auto& b2) { return a.first < b2.first; });
    }
    return m;
}

enum class GeneratorType { I, II, III, Untyped };

inline std::string to_string(GeneratorType t) {
    switch (t) {
        case GeneratorType::I: return "I";
        case GeneratorType::II: return "II";
        case GeneratorType::III: return "III";
        default: return "untyped";
    }
}

/// Empirical classification of single-term kernel generators. Type I:
/// exponents equal the wedge incidence vector (z^g w^d dz^g dw^d). Type II:
/// alpha.gamma = 0 and beta.delta = 0. Type III: factors as a wedge of a
/// Type I and a Type II basis term. Multi-term elements are untyped.
inline GeneratorType classify_generator(const MultiVector& x) {
    if (x.terms().size() != 1) return GeneratorType::Untyped;
    const BasisKey& key = x.terms().begin()->first;
    int n = x.n();
    std::vector<int> gamma(2 * n, 0);
    for (int v : key.wedge.subset) gamma[v - 1] = 1;
    std::vector<int> mu(key.mon.alpha);
    mu.insert(mu.end(), key.mon.beta.begin(), key.mon.beta.end());

    auto type1 = [&](const std::vector<int>& e, const std::vector<int>& g) {
        return e == g;
    };
    auto type2 = [&](const std::vector<int>& e, const std::vector<int>& g) {
        long dz = 0, dw = 0;
        for (int k = 0; k < n; ++k) dz += static_cast<long>(e[k]) * g[k];
        for (int k = n; k < 2 * n; ++k) dw += static_cast<long>(e[k]) * g[k];
        return dz == 0 && dw == 0;
    };

    if (type1(mu, gamma)) return GeneratorType::I;
    if (type2(mu, gamma)) return GeneratorType::II;
    // Type III: split the wedge subset into a Type I factor (whose monomial
    // part is forced to its incidence vector) and a Type II remainder.
    int bits = static_cast<int>(key.wedge.subset.size());
    for (int mask = 1; mask < (1 << bits) - 1; ++mask) {
        std::vector<int> g1(2 * n, 0), g2(2 * n, 0);
        for (int j = 0; j < bits; ++j) (mask >> j & 1 ? g1 : g2)[key.wedge.subset[j] - 1] = 1;
        std::vector<int> rest(2 * n);
        bool ok = true;
        for (int k = 0; k < 2 * n; ++k) {
            rest[k] = mu[k] - g1[k];
            if (rest[k] < 0) ok = false;
        }
        if (ok && type2(rest, g2)) return GeneratorType::III;
    }
    return GeneratorType::Untyped;
}

struct CellRecord {
    long dim = 0;
    std::optional<std::vector<MultiVector>> representatives;
    std::optional<std::vector<GeneratorType>> types;
};

struct CohomologySummary {
    int n = 0;
    GQMatrix B;
    int dmax = 0;
    // record(d, p) at [d][p], d = 0..dmax, p = 0..2n
    std::vector<std::vector<CellRecord>> cells;
};

/// Computes ranks, dimensions and representatives of H^p_[d] for a fixed
/// Poisson bivector, memoizing per-cell eliminations. Safe for concurrent
/// queries on disjoint cells.
class CohomologyEngine {
public:
    explicit CohomologyEngine(PoissonBivector pi) : pi_(std::move(pi)) {}

    int n() const { return pi_.n(); }
    const PoissonBivector& pi() const { return pi_; }

    SigmaMatrix matrix(int d, int p) const { return assemble_sigma_matrix(n(), d, p, pi_); }

    /// rank of sigma^p_[d] (0 for degenerate cells), memoized.
    long rank(int d, int p) {
        if (cell_dimension(n(), d, p) == 0 || cell_dimension(n(), d + 1, p + 1) == 0) return 0;
        {
            std::lock_guard lock(mutex_);
            auto it = rank_memo_.find({d, p});
            if (it != rank_memo_.end()) return it->second;
        }
        SigmaMatrix m = matrix(d, p);
        long r = rref(row_major(m), static_cast<int>(m.cols)).rank;
        std::lock_guard lock(mutex_);
        rank_memo_[{d, p}] = r;
        return r;
    }

    long nullity(int d, int p) { return cell_dimension(n(), d, p) - rank(d, p); }

    /// dim H^p_[d] = nullity(sigma^p_[d]) - rank(sigma^{p-1}_[d-1]).
    long cohomology_dim(int d, int p) {
        if (cell_dimension(n(), d, p) == 0) return 0;
        long dim = nullity(d, p) - rank(d - 1, p - 1);
        if (dim < 0) throw invariant_error("image not contained in kernel: sign/bracket bug");
        return dim;
    }

    /// The 4-step Gauss-Jordan procedure: RREF basis of im sigma^{p-1}_[d-1]
    /// (columns of the previous matrix, reduced), canonical RREF basis of
    /// ker sigma^p_[d], then the kernel rows whose pivot is not an image
    /// pivot are the representatives, leading coefficient normalized to 1.
    std::vector<MultiVector> representatives(int d, int p) {
        GradedCell cell = enumerate_cell(n(), d, p);
        int ncols = static_cast<int>(cell.basis.size());
        std::vector<MultiVector> reps;
        if (ncols == 0) return reps;

        RrefResult image{{}, {}, 0, ncols};
        if (cell_dimension(n(), d - 1, p - 1) > 0) {
            SigmaMatrix prev = matrix(d - 1, p - 1);
            image = rref(prev.columns, ncols);
        }
        RrefResult kernel = kernel_basis(d, p, ncols);

        std::vector<bool> im_pivot(ncols, false);
        for (int c : image.pivots) {
            if (pivot_row_index(kernel, c) < 0)
                throw invariant_error("image pivot missing from kernel: image not in kernel");
            im_pivot[c] = true;
        }
        for (int i = 0; i < kernel.rank; ++i) {
            if (im_pivot[kernel.pivots[i]]) continue;
            MultiVector rep(n());
            for (const auto& [c, v] : kernel.rows[i]) rep.add_term(cell.basis[c], v);
            reps.push_back(std::move(rep));
        }
        if (static_cast<long>(reps.size()) != cohomology_dim(d, p))
            throw invariant_error("representative count disagrees with rank/nullity bookkeeping");
        return reps;
    }

    CohomologySummary full_table(int dmax, bool with_representatives, bool classify, int jobs = 1) {
        CohomologySummary s;
        s.n = n();
        s.B = pi_.B();
        s.dmax = dmax;
        s.cells.assign(dmax + 1, std::vector<CellRecord>(2 * n() + 1));
        if (jobs > 1) prewarm_ranks(dmax, jobs);
        for (int d = 0; d <= dmax; ++d)
            for (int p = 0; p <= 2 * n(); ++p) {
                CellRecord& rec = s.cells[d][p];
                rec.dim = cohomology_dim(d, p);
                if (with_representatives && rec.dim > 0) {
                    rec.representatives = representatives(d, p);
                    if (classify) {
                        std::vector<GeneratorType> types;
                        for (const auto& r : *rec.representatives) types.push_back(classify_generator(r));
                        rec.types = std::move(types);
                    }
                }
            }
        return s;
    }

    /// Canonical RREF basis of ker sigma^p_[d] as sparse rows over the cell
    /// basis (exposed for the acceptance suite's membership checks).
    RrefResult kernel_basis(int d, int p, int ncols) {
        if (cell_dimension(n(), d + 1, p + 1) == 0) {
            // sigma is the zero map; the kernel is the whole cell.
            std::vector<SparseRow> id(ncols);
            for (int c = 0; c < ncols; ++c) id[c] = {{c, GaussianRational(1)}};
            return rref(std::move(id), ncols);
        }
        SigmaMatrix m = matrix(d, p);
        return nullspace(rref(row_major(m), ncols));
    }

    static std::vector<SparseRow> row_major(const SigmaMatrix& m) {
        std::vector<SparseRow> rows(m.rows);
        for (long j = 0; j < m.cols; ++j)
            for (const auto& [r, c] : m.columns[j]) rows[r].emplace_back(static_cast<int>(j), c);
        return rows;
    }

private:
    static int pivot_row_index(const RrefResult& red, int col) {
        for (int i = 0; i < red.rank; ++i)
            if (red.pivots[i] == col) return i;
        return -1;
    }

    void prewarm_ranks(int dmax, int jobs) {
        std::vector<std::pair<int, int>> work;
        for (int d = -1; d <= dmax; ++d)
            for (int p = -1; p <= 2 * n(); ++p) work.emplace_back(d, p);
        std::mutex wm;
        std::size_t next = 0;
        auto worker = [&] {
            for (;;) {
                std::size_t i;
                {
                    std::lock_guard lock(wm);
                    if (next >= work.size()) return;
                    i = next++;
                }
                rank(work[i].first, work[i].second);
            }
        };
        std::vector<std::thread> pool;
        for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }

    PoissonBivector pi_;
    std::mutex mutex_;
    std::map<std::pair<int, int>, long> rank_memo_;
};

}  // namespace pcoh
