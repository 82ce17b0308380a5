#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "anmod/errors.hpp"
#include "anmod/linalg.hpp"
#include "anmod/tuples.hpp"
#include "anmod/weights.hpp"

namespace anmod {

struct OpRef {
    char kind;  // 'X', 'Y' or 'H'
    int i;      // 1..n
};

// V(lambda) realized as the cyclic span of an explicit highest vector inside
// a tensor product of exterior powers of the natural representation.  Basis
// keys are mixed-radix encodings of per-factor states; only vectors inside
// the cyclic span are ever materialized.
class TensorModel {
  public:
    TensorModel(Weight lambda, const Int& cap) : n_(static_cast<int>(lambda.size())), lambda_(std::move(lambda)) {
        if (!is_dominant(lambda_)) throw UsageError("tensor model: weight must be dominant");
        weyl_ = weyl_dim(lambda_);
        if (weyl_ > cap)
            throw CapExceeded("module dimension " + weyl_.get_str() + " exceeds cap " + cap.get_str());
        for (int deg = 1; deg <= n_; ++deg)
            if (lambda_[deg - 1] > 0) build_factor(deg);
        for (int deg = 1; deg <= n_; ++deg)
            for (long c = 0; c < lambda_[deg - 1]; ++c) fdeg_.push_back(deg);
        long long stride = 1;
        for (int deg : fdeg_) {
            radix_.push_back(stride);
            stride *= factors_.at(deg).nstates;
        }
    }

    int rank() const { return n_; }
    const Weight& lambda() const { return lambda_; }
    const Int& weyl() const { return weyl_; }

    SVec highest() const {
        long long key = 0;
        for (size_t f = 0; f < fdeg_.size(); ++f) key += factors_.at(fdeg_[f]).hw_state * radix_[f];
        return svec_unit(key);
    }

    Weight key_weight(long long key) const {
        Weight w(n_, 0);
        for (size_t f = 0; f < fdeg_.size(); ++f) {
            const Factor& fac = factors_.at(fdeg_[f]);
            long long loc = (key / radix_[f]) % fac.nstates;
            const Weight& fw = fac.wtab[static_cast<size_t>(loc)];
            for (int i = 0; i < n_; ++i) w[i] += fw[i];
        }
        return w;
    }

    SVec apply(OpRef op, const SVec& v) const {
        std::map<long long, Rat> acc;
        for (const auto& [key, val] : v) {
            if (op.kind == 'H') {
                long eig = 0;
                for (size_t f = 0; f < fdeg_.size(); ++f) {
                    const Factor& fac = factors_.at(fdeg_[f]);
                    long long loc = (key / radix_[f]) % fac.nstates;
                    eig += fac.wtab[static_cast<size_t>(loc)][op.i - 1];
                }
                if (eig) acc[key] += Rat(eig) * val;
                continue;
            }
            for (size_t f = 0; f < fdeg_.size(); ++f) {
                const Factor& fac = factors_.at(fdeg_[f]);
                long long loc = (key / radix_[f]) % fac.nstates;
                const auto& tab = (op.kind == 'X') ? fac.xtab : fac.ytab;
                int tgt = tab[static_cast<size_t>(op.i - 1)][static_cast<size_t>(loc)];
                if (tgt < 0) continue;
                acc[key + (tgt - loc) * radix_[f]] += val;
            }
        }
        SVec out;
        out.reserve(acc.size());
        for (auto& [k, c] : acc)
            if (c != 0) out.emplace_back(k, std::move(c));
        return out;
    }

    // Dimension of the cyclic span of the highest vector under the
    // lowering operators; independent of the monomial basis.
    long long closure_dim() const {
        GradedEchelon ech;
        std::vector<std::pair<SVec, Weight>> queue;
        ech.insert(lambda_, highest());
        queue.emplace_back(highest(), lambda_);
        for (size_t q = 0; q < queue.size(); ++q) {
            auto [v, w] = queue[q];
            for (int i = 1; i <= n_; ++i) {
                SVec u = apply({'Y', i}, v);
                if (u.empty()) continue;
                Weight wu(w);
                subtract_root(wu, i, 1);
                SVec rem = ech.reduce(wu, u);
                if (rem.empty()) continue;
                ech.insert(wu, rem);
                queue.emplace_back(std::move(rem), wu);
            }
        }
        return ech.rank();
    }

  private:
    struct Factor {
        long long nstates = 0;
        long long hw_state = 0;
        std::vector<std::vector<int>> xtab, ytab;  // [i-1][state] -> state or -1
        std::vector<Weight> wtab;
    };

    void build_factor(int deg) {
        Factor fac;
        std::vector<std::vector<int>> states;
        std::vector<int> cur(static_cast<size_t>(deg));
        build_subsets(states, cur, 0, 0, n_);
        fac.nstates = static_cast<long long>(states.size());
        std::map<std::vector<int>, int> index;
        for (size_t s = 0; s < states.size(); ++s) index[states[s]] = static_cast<int>(s);
        std::vector<int> hw(static_cast<size_t>(deg));
        for (int e = 0; e < deg; ++e) hw[static_cast<size_t>(e)] = e;
        fac.hw_state = index.at(hw);
        fac.xtab.assign(static_cast<size_t>(n_), std::vector<int>(states.size(), -1));
        fac.ytab.assign(static_cast<size_t>(n_), std::vector<int>(states.size(), -1));
        fac.wtab.reserve(states.size());
        for (size_t s = 0; s < states.size(); ++s) {
            const auto& st = states[s];
            Weight w(n_, 0);
            for (int i = 1; i <= n_; ++i) {
                bool has_lo = std::binary_search(st.begin(), st.end(), i - 1);
                bool has_hi = std::binary_search(st.begin(), st.end(), i);
                w[i - 1] = (has_lo ? 1 : 0) - (has_hi ? 1 : 0);
                if (has_hi && !has_lo) {
                    std::vector<int> t(st);
                    *std::find(t.begin(), t.end(), i) = i - 1;
                    std::sort(t.begin(), t.end());
                    fac.xtab[static_cast<size_t>(i - 1)][s] = index.at(t);
                }
                if (has_lo && !has_hi) {
                    std::vector<int> t(st);
                    *std::find(t.begin(), t.end(), i - 1) = i;
                    std::sort(t.begin(), t.end());
                    fac.ytab[static_cast<size_t>(i - 1)][s] = index.at(t);
                }
            }
            fac.wtab.push_back(std::move(w));
        }
        factors_[deg] = std::move(fac);
    }

    // Sorted subsets of {0..max_elem} of the size of cur, lexicographic.
    static void build_subsets(std::vector<std::vector<int>>& out, std::vector<int>& cur,
                              size_t pos, int next, int max_elem) {
        if (pos == cur.size()) {
            out.push_back(cur);
            return;
        }
        for (int e = next; e <= max_elem; ++e) {
            cur[pos] = e;
            build_subsets(out, cur, pos + 1, e + 1, max_elem);
        }
    }

    int n_;
    Weight lambda_;
    Int weyl_;
    std::vector<int> fdeg_;
    std::map<int, Factor> factors_;
    std::vector<long long> radix_;
};

}  // namespace anmod
