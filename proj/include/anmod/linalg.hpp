#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <stdexcept>
#include <vector>

#include "anmod/arith.hpp"
#include "anmod/weights.hpp"

namespace anmod {

// Sparse vector: (index, value) pairs, sorted by index, no zero values.
using SVec = std::vector<std::pair<long long, Rat>>;

inline SVec svec_unit(long long i) { return SVec{{i, Rat(1)}}; }

inline const Rat* svec_get(const SVec& v, long long i) {
    auto it = std::lower_bound(v.begin(), v.end(), i,
                               [](const auto& e, long long k) { return e.first < k; });
    if (it != v.end() && it->first == i) return &it->second;
    return nullptr;
}

// a + c*b
inline SVec svec_axpy(const SVec& a, const Rat& c, const SVec& b) {
    SVec r;
    r.reserve(a.size() + b.size());
    size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
            r.push_back(a[i++]);
        } else if (i == a.size() || b[j].first < a[i].first) {
            Rat v = c * b[j].second;
            if (v != 0) r.emplace_back(b[j].first, v);
            ++j;
        } else {
            Rat v = a[i].second + c * b[j].second;
            if (v != 0) r.emplace_back(a[i].first, v);
            ++i, ++j;
        }
    }
    return r;
}

inline void svec_scale(SVec& a, const Rat& c) {
    if (c == 0) {
        a.clear();
        return;
    }
    for (auto& e : a) e.second *= c;
}

// Reduced echelon basis with deterministic pivoting (first nonzero index).
// Optionally tracks each stored row as a combination of the inserted
// vectors, keyed by caller-supplied tags.
class Echelon {
  public:
    explicit Echelon(bool track = false) : track_(track) {}

    // Returns the new row index if the rank grew, -1 if v reduced to zero.
    int insert(SVec v, long long tag = -1) {
        SVec combo;
        if (track_) combo = svec_unit(tag);
        forward_reduce(v, track_ ? &combo : nullptr);
        if (v.empty()) return -1;
        Rat lead = v.front().second;
        Rat inv = Rat(1) / lead;
        svec_scale(v, inv);
        if (track_) svec_scale(combo, inv);
        long long p = v.front().first;
        int idx = static_cast<int>(rows_.size());
        for (int q = 0; q < idx; ++q) {
            const Rat* c = svec_get(rows_[q], p);
            if (!c) continue;
            Rat f = -(*c);
            rows_[q] = svec_axpy(rows_[q], f, v);
            if (track_) combos_[q] = svec_axpy(combos_[q], f, combo);
        }
        rows_.push_back(std::move(v));
        if (track_) combos_.push_back(std::move(combo));
        pivots_[p] = idx;
        return idx;
    }

    // Remainder of v modulo the span.  If combo_out is given the tracked
    // combination satisfies v = remainder + sum_t combo[t] * (vector with tag t).
    SVec reduce(SVec v, SVec* combo_out = nullptr) const {
        if (combo_out) combo_out->clear();
        size_t pos = 0;
        while (pos < v.size()) {
            auto it = pivots_.find(v[pos].first);
            if (it == pivots_.end()) {
                ++pos;
                continue;
            }
            long long p = v[pos].first;
            Rat c = v[pos].second;
            v = svec_axpy(v, -c, rows_[it->second]);
            if (combo_out && track_)
                *combo_out = svec_axpy(*combo_out, c, combos_[it->second]);
            pos = 0;
            while (pos < v.size() && v[pos].first <= p) ++pos;
        }
        return v;
    }

    bool contains(const SVec& v) const { return reduce(v).empty(); }
    int rank() const { return static_cast<int>(rows_.size()); }
    const std::vector<SVec>& rows() const { return rows_; }
    const std::map<long long, int>& pivots() const { return pivots_; }

  private:
    void forward_reduce(SVec& v, SVec* combo) const {
        size_t pos = 0;
        while (pos < v.size()) {
            auto it = pivots_.find(v[pos].first);
            if (it == pivots_.end()) {
                ++pos;
                continue;
            }
            long long p = v[pos].first;
            Rat c = v[pos].second;
            v = svec_axpy(v, -c, rows_[it->second]);
            if (combo) *combo = svec_axpy(*combo, -c, combos_[it->second]);
            pos = 0;
            while (pos < v.size() && v[pos].first <= p) ++pos;
        }
    }

    bool track_;
    std::vector<SVec> rows_;
    std::vector<SVec> combos_;
    std::map<long long, int> pivots_;
};

// Echelon split into independent buckets (weight spaces).  Tags are global,
// so tracked combinations can be read across buckets.
class GradedEchelon {
  public:
    explicit GradedEchelon(bool track = false) : track_(track) {}

    bool insert(const Weight& bucket, SVec v, long long tag = -1) {
        auto it = buckets_.find(bucket);
        if (it == buckets_.end())
            it = buckets_.emplace(bucket, Echelon(track_)).first;
        bool grew = it->second.insert(std::move(v), tag) >= 0;
        if (grew) ++rank_;
        return grew;
    }

    SVec reduce(const Weight& bucket, const SVec& v, SVec* combo_out = nullptr) const {
        auto it = buckets_.find(bucket);
        if (it == buckets_.end()) {
            if (combo_out) combo_out->clear();
            return v;
        }
        return it->second.reduce(v, combo_out);
    }

    int rank() const { return rank_; }
    const std::map<Weight, Echelon>& buckets() const { return buckets_; }

  private:
    bool track_;
    std::map<Weight, Echelon> buckets_;
    int rank_ = 0;
};

// Null space of the sparse constraint rows in ncols unknowns.
inline std::vector<SVec> kernel_basis(const std::vector<SVec>& rows, long long ncols) {
    Echelon ech;
    for (const auto& r : rows) ech.insert(r);
    std::vector<bool> is_pivot(static_cast<size_t>(ncols), false);
    for (const auto& [p, _] : ech.pivots()) is_pivot[static_cast<size_t>(p)] = true;
    std::vector<SVec> kernel;
    for (long long f = 0; f < ncols; ++f) {
        if (is_pivot[static_cast<size_t>(f)]) continue;
        SVec k = svec_unit(f);
        for (const auto& [p, ridx] : ech.pivots()) {
            const Rat* c = svec_get(ech.rows()[ridx], f);
            if (c) k = svec_axpy(k, -(*c), svec_unit(p));
        }
        std::sort(k.begin(), k.end());
        kernel.push_back(std::move(k));
    }
    return kernel;
}

// Sparse matrix, stored by columns.
struct SpMat {
    long long nrows = 0, ncols = 0;
    std::vector<SVec> col;

    SpMat() = default;
    SpMat(long long nr, long long nc) : nrows(nr), ncols(nc), col(static_cast<size_t>(nc)) {}

    static SpMat identity(long long n) {
        SpMat m(n, n);
        for (long long i = 0; i < n; ++i) m.col[static_cast<size_t>(i)] = svec_unit(i);
        return m;
    }

    void add_entry(long long r, long long c, const Rat& v) {
        col[static_cast<size_t>(c)] = svec_axpy(col[static_cast<size_t>(c)], v, svec_unit(r));
    }

    Rat entry(long long r, long long c) const {
        const Rat* p = svec_get(col[static_cast<size_t>(c)], r);
        return p ? *p : Rat(0);
    }

    SVec apply(const SVec& x) const {
        SVec y;
        for (const auto& [c, v] : x) y = svec_axpy(y, v, col[static_cast<size_t>(c)]);
        return y;
    }

    bool zero() const {
        for (const auto& c : col)
            if (!c.empty()) return false;
        return true;
    }

    long long nnz() const {
        long long t = 0;
        for (const auto& c : col) t += static_cast<long long>(c.size());
        return t;
    }
};

inline SpMat mat_mul(const SpMat& a, const SpMat& b) {
    if (a.ncols != b.nrows) throw std::invalid_argument("mat_mul: shape mismatch");
    SpMat r(a.nrows, b.ncols);
    for (long long c = 0; c < b.ncols; ++c) r.col[static_cast<size_t>(c)] = a.apply(b.col[static_cast<size_t>(c)]);
    return r;
}

inline SpMat mat_add(const SpMat& a, const Rat& s, const SpMat& b) {
    if (a.nrows != b.nrows || a.ncols != b.ncols)
        throw std::invalid_argument("mat_add: shape mismatch");
    SpMat r(a.nrows, a.ncols);
    for (long long c = 0; c < a.ncols; ++c)
        r.col[static_cast<size_t>(c)] =
            svec_axpy(a.col[static_cast<size_t>(c)], s, b.col[static_cast<size_t>(c)]);
    return r;
}

inline SpMat commutator(const SpMat& a, const SpMat& b) {
    return mat_add(mat_mul(a, b), Rat(-1), mat_mul(b, a));
}

inline SpMat transpose(const SpMat& a) {
    SpMat r(a.ncols, a.nrows);
    for (long long c = 0; c < a.ncols; ++c)
        for (const auto& [rw, v] : a.col[static_cast<size_t>(c)]) r.col[static_cast<size_t>(rw)].emplace_back(c, v);
    return r;
}

inline Rat trace_of_product(const SpMat& a, const SpMat& b) {
    Rat t(0);
    for (long long c = 0; c < a.ncols; ++c)
        for (const auto& [r, v] : a.col[static_cast<size_t>(c)]) t += v * b.entry(c, r);
    return t;
}

inline int mat_rank(const SpMat& a) {
    Echelon e;
    for (const auto& c : a.col) e.insert(c);
    return e.rank();
}

inline bool is_nilpotent(const SpMat& m, long long* index_out = nullptr) {
    if (m.nrows != m.ncols) return false;
    SpMat p = m;
    for (long long k = 1; k <= m.nrows + 1; ++k) {
        if (p.zero()) {
            if (index_out) *index_out = k;
            return true;
        }
        p = mat_mul(m, p);
    }
    return false;
}

// Inverse via tracked echelon of the columns.
inline SpMat invert(const SpMat& a) {
    if (a.nrows != a.ncols) throw std::invalid_argument("invert: not square");
    Echelon e(true);
    for (long long c = 0; c < a.ncols; ++c)
        if (e.insert(a.col[static_cast<size_t>(c)], c) < 0) throw std::invalid_argument("invert: singular");
    SpMat inv(a.nrows, a.ncols);
    for (long long r = 0; r < a.nrows; ++r) {
        SVec combo;
        SVec rem = e.reduce(svec_unit(r), &combo);
        if (!rem.empty()) throw std::invalid_argument("invert: singular");
        inv.col[static_cast<size_t>(r)] = combo;
    }
    return inv;
}

// Product of random unit lower- and upper-triangular integer matrices:
// invertible with exact rational inverse, entries of modest size.
inline SpMat random_unimodular(long long d, unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> val(-2, 2);
    std::uniform_int_distribution<int> keep(0, 3);
    SpMat l = SpMat::identity(d), u = SpMat::identity(d);
    for (long long c = 0; c < d; ++c)
        for (long long r = 0; r < d; ++r) {
            if (r > c && keep(rng) == 0) {
                int v = val(rng);
                if (v) l.add_entry(r, c, Rat(v));
            }
            if (r < c && keep(rng) == 0) {
                int v = val(rng);
                if (v) u.add_entry(r, c, Rat(v));
            }
        }
    return mat_mul(l, u);
}

}  // namespace anmod
