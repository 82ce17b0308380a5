#pragma once

#include <vector>

#include "anmod/tuples.hpp"
#include "anmod/weights.hpp"

namespace anmod {

// Records hypothesis clauses whose indices fall outside the triangular
// range at the given rank; skipped clauses are logged, never guessed.
struct GuardLog {
    long cond4_row_skips = 0;   // referenced odd row 2j+1 exceeds the rank
    long cond4_col_skips = 0;   // conclusion column 2i-1 exceeds row 2j
    long cond4_coroot_skips = 0;  // H_{2i} exceeds the rank
};

// Membership test for the distinguished generating set: four conditions on
// top of basis membership.  Even diagonal entries are pinned to their
// bounds, odd rows have zero first column, and two implications tie odd
// subdiagonals and degenerate first-column weights to forced values.
inline bool generator_predicate(const Weight& lambda, const Tuple& t, GuardLog* log = nullptr) {
    int n = t.n;
    // (1) a^{2j}_{2j} = lambda^{2j}_{2j-1}(H_{2j})
    for (int j = 1; 2 * j <= n; ++j) {
        Weight w = partial_weight(lambda, t, 2 * j, 2 * j - 1);
        if (t.get(2 * j, 2 * j) != w[2 * j - 1]) return false;
    }
    // (2) a^{2j+1}_{2j} != 0 implies a^{2j}_{2j-1} != 0
    for (int j = 1; 2 * j + 1 <= n; ++j)
        if (t.get(2 * j + 1, 2 * j) != 0 && t.get(2 * j, 2 * j - 1) == 0) return false;
    // (3) a^{2j+1}_1 = 0
    for (int j = 0; 2 * j + 1 <= n; ++j)
        if (t.get(2 * j + 1, 1) != 0) return false;
    // (4) forced first-column saturation in even rows under degenerate
    // higher-row weights
    for (int j = 1; 2 * j <= n + 1; ++j) {
        if (2 * j + 1 > n || 2 * j > n) {
            if (log) log->cond4_row_skips += 1;
            continue;
        }
        for (int i = 1; i <= 2 * j - 1; ++i) {
            if (2 * i - 1 > 2 * j) {
                if (log) log->cond4_col_skips += 1;
                continue;
            }
            if (2 * i > n) {
                if (log) log->cond4_coroot_skips += 1;
                continue;
            }
            Weight hyp = partial_weight(lambda, t, 2 * j + 1, 2 * i - 1);
            if (hyp[2 * i - 1] == 0) continue;
            Weight top = partial_weight(lambda, t, 2 * j + 1, 0);
            if (top[0] != 0) continue;
            bool chain = true;
            for (int r = 1; r < i; ++r) {
                Weight wr = partial_weight(lambda, t, 2 * j + 1, 2 * r - 1);
                if (wr[2 * r - 1] != t.get(2 * j + 1, 2 * r)) {
                    chain = false;
                    break;
                }
            }
            if (!chain) continue;
            Weight concl = partial_weight(lambda, t, 2 * j, 2 * i - 2);
            if (t.get(2 * j, 2 * i - 1) != concl[2 * i - 2]) return false;
        }
    }
    return true;
}

inline std::vector<long long> generator_indices(const Weight& lambda,
                                                const std::vector<Tuple>& basis,
                                                GuardLog* log = nullptr) {
    std::vector<long long> out;
    for (size_t k = 0; k < basis.size(); ++k)
        if (generator_predicate(lambda, basis[k], log)) out.push_back(static_cast<long long>(k));
    return out;
}

// The distinguished element: zero everywhere except the even diagonal,
// where each entry is pinned to its bound (filled top row down so the
// bounds see the rows already chosen).
inline Tuple gbar(const Weight& lambda) {
    int n = static_cast<int>(lambda.size());
    Tuple t(n);
    for (int j = n / 2; j >= 1; --j) {
        Weight w = partial_weight(lambda, t, 2 * j, 2 * j - 1);
        t.set(2 * j, 2 * j, w[2 * j - 1]);
    }
    return t;
}

// Product of the commuting even simple reflections applied to lambda.
inline Weight even_reflection_weight(const Weight& lambda) {
    Weight w(lambda);
    int n = static_cast<int>(lambda.size());
    for (int j = 1; 2 * j <= n; ++j) w = reflect(w, 2 * j);
    return w;
}

// Closed-form generating families for rank 3, lambda = (q, m, p).
// For q > 0 the family is exact; for q = 0 the printed second family
// carries a trailing lowering operator that leaves the basis (corrected
// form drops it).  Tuples are returned as written; callers filter through
// is_member to document invalid entries.
inline std::vector<Tuple> closed_form_rank3(const Weight& lambda, bool corrected) {
    if (lambda.size() != 3) throw std::invalid_argument("closed_form_rank3: rank must be 3");
    long q = lambda[0], m = lambda[1], p = lambda[2];
    std::vector<Tuple> out;
    auto mk = [&](long a22, long a21, long a33, long a32) {
        Tuple t(3);
        t.set(2, 2, a22);
        t.set(2, 1, a21);
        t.set(3, 3, a33);
        t.set(3, 2, a32);
        return t;
    };
    if (q > 0) {
        for (long j = 0; j <= m; ++j)
            for (long h = 0; h <= p; ++h)
                for (long i = 0; i <= j + q; ++i) {
                    if (j != 0 && i == 0) continue;
                    out.push_back(mk(m - j + i + h, i, j + h, j));
                }
        return out;
    }
    for (long h = 0; h <= p; ++h) {
        out.push_back(mk(m + h, 1, 1 + h, 1));
        if (corrected)
            out.push_back(mk(m + h, 0, h, 0));
        else
            out.push_back(mk(m + h, 0, h, 1));
    }
    return out;
}

}  // namespace anmod
