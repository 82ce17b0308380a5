#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

#include "anmod/arith.hpp"

namespace anmod {

// A weight is stored by its values on the coroots, lambda(H_1..H_n).
using Weight = std::vector<long>;

inline long cartan_entry(int i, int j) {
    if (i == j) return 2;
    if (i == j + 1 || j == i + 1) return -1;
    return 0;
}

inline std::vector<std::vector<long>> cartan_matrix(int n) {
    std::vector<std::vector<long>> c(n, std::vector<long>(n, 0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) c[i][j] = cartan_entry(i + 1, j + 1);
    return c;
}

// alpha_i expressed through its coroot values: alpha_i(H_j) = C[i][j].
inline Weight simple_root_weight(int n, int i) {
    Weight w(n, 0);
    for (int j = 1; j <= n; ++j) w[j - 1] = cartan_entry(i, j);
    return w;
}

inline bool is_dominant(const Weight& m) {
    for (long v : m)
        if (v < 0) return false;
    return true;
}

inline bool is_zero_weight(const Weight& m) {
    for (long v : m)
        if (v != 0) return false;
    return true;
}

inline Weight weight_sub(const Weight& a, const Weight& b) {
    Weight r(a);
    for (size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
    return r;
}

// w -= k * alpha_i, in coroot coordinates.
inline void subtract_root(Weight& w, int i, long k) {
    int n = static_cast<int>(w.size());
    w[i - 1] -= 2 * k;
    if (i - 2 >= 0) w[i - 2] += k;
    if (i < n) w[i] += k;
}

// Simple reflection s_i(w) = w - w(H_i) alpha_i.
inline Weight reflect(const Weight& w, int i) {
    Weight r(w);
    subtract_root(r, i, w[i - 1]);
    return r;
}

// Weyl dimension formula for type A: product over positive roots
// alpha_{i..j} of (j - i + 1 + m_i + ... + m_j) / (j - i + 1).
// Individual factors need not be integers; the full product is.
inline Int weyl_dim(const Weight& m) {
    if (!is_dominant(m)) throw std::invalid_argument("weyl_dim: non-dominant weight");
    int n = static_cast<int>(m.size());
    Rat acc(1);
    for (int i = 1; i <= n; ++i) {
        long s = 0;
        for (int j = i; j <= n; ++j) {
            s += m[j - 1];
            long len = j - i + 1;
            acc *= Rat(len + s, len);
        }
    }
    acc.canonicalize();
    if (acc.get_den() != 1)
        throw std::logic_error("weyl_dim: product failed to be an integer");
    return acc.get_num();
}

inline std::string weight_str(const Weight& m) {
    std::string s;
    for (size_t i = 0; i < m.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(m[i]);
    }
    return s;
}

// All dominant weights of the given rank with entries <= coeff_max,
// in lexicographic order, optionally skipping the zero weight.
inline std::vector<Weight> dominant_grid(int rank, long coeff_max, bool include_zero) {
    std::vector<Weight> out;
    Weight w(rank, 0);
    while (true) {
        if (include_zero || !is_zero_weight(w)) out.push_back(w);
        int pos = rank - 1;
        while (pos >= 0 && w[pos] == coeff_max) {
            w[pos] = 0;
            --pos;
        }
        if (pos < 0) break;
        w[pos] += 1;
    }
    return out;
}

}  // namespace anmod
