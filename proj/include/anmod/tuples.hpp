#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "anmod/weights.hpp"

namespace anmod {

// Triangular exponent tuple a^j_i, 1 <= i <= j <= n, stored row-major.
struct Tuple {
    int n = 0;
    std::vector<long> a;

    Tuple() = default;
    explicit Tuple(int rank) : n(rank), a(static_cast<size_t>(rank) * (rank + 1) / 2, 0) {}

    static size_t offset(int j) { return static_cast<size_t>(j) * (j - 1) / 2; }

    long get(int j, int i) const { return a[offset(j) + i - 1]; }
    void set(int j, int i, long v) { a[offset(j) + i - 1] = v; }

    bool operator==(const Tuple& o) const { return n == o.n && a == o.a; }
    bool operator<(const Tuple& o) const { return a < o.a; }
};

// Partial weight after the full rows above row j and the first i entries of
// row j have been subtracted; column 0 means "rows above only".
inline Weight partial_weight(const Weight& lambda, const Tuple& t, int j, int i) {
    Weight w(lambda);
    for (int k = j + 1; k <= t.n; ++k)
        for (int l = 1; l <= k; ++l)
            if (t.get(k, l)) subtract_root(w, l, t.get(k, l));
    for (int l = 1; l <= i; ++l)
        if (t.get(j, l)) subtract_root(w, l, t.get(j, l));
    return w;
}

inline Weight tuple_weight(const Weight& lambda, const Tuple& t) {
    Weight w(lambda);
    for (int j = 1; j <= t.n; ++j)
        for (int l = 1; l <= j; ++l)
            if (t.get(j, l)) subtract_root(w, l, t.get(j, l));
    return w;
}

// Closed form of the entry bound lambda^j_{i-1}(H_i); cross-check for the
// recursive computation, never the primary definition.
inline long expanded_bound(const Weight& lambda, const Tuple& t, int j, int i) {
    long b = lambda[i - 1];
    if (i > 1) b += t.get(j, i - 1);
    for (int k = j + 1; k <= t.n; ++k) {
        long up = (i - 1 >= 1) ? t.get(k, i - 1) : 0;
        long dn = (i + 1 <= k) ? t.get(k, i + 1) : 0;
        b += up - 2 * t.get(k, i) + dn;
    }
    return b;
}

// Membership in the monomial basis: rows weakly increase along storage
// order and every entry respects its partial-weight bound.
inline bool is_member(const Weight& lambda, const Tuple& t) {
    for (int j = t.n; j >= 1; --j) {
        long prev = 0;
        for (int i = 1; i <= j; ++i) {
            long v = t.get(j, i);
            if (v < prev) return false;
            Weight w = partial_weight(lambda, t, j, i - 1);
            if (v > w[i - 1]) return false;
            prev = v;
        }
    }
    return true;
}

namespace detail {

template <typename Fn>
void enumerate_row(const Weight& lambda, Tuple& t, Weight& w, int j, int i, Fn&& emit) {
    if (j == 0) {
        emit(t, w);
        return;
    }
    if (i > j) {
        enumerate_row(lambda, t, w, j - 1, 1, emit);
        return;
    }
    long lo = (i > 1) ? t.get(j, i - 1) : 0;
    long hi = w[i - 1];
    // w currently holds lambda^j_{i-1}; each step below keeps it at
    // lambda^j_i for the chosen entry.
    for (long v = lo; v <= hi; ++v) {
        t.set(j, i, v);
        if (v) subtract_root(w, i, v);
        enumerate_row(lambda, t, w, j, i + 1, emit);
        if (v) subtract_root(w, i, -v);
    }
    t.set(j, i, 0);
}

}  // namespace detail

// Canonical enumeration: rows n down to 1; within a row, columns 1..j, each
// entry ranging over [previous entry, current bound].
template <typename Fn>
void for_each_basis_tuple(const Weight& lambda, Fn&& emit) {
    int n = static_cast<int>(lambda.size());
    Tuple t(n);
    Weight w(lambda);
    detail::enumerate_row(lambda, t, w, n, 1, emit);
}

inline std::vector<Tuple> enumerate_basis(const Weight& lambda) {
    std::vector<Tuple> out;
    for_each_basis_tuple(lambda, [&](const Tuple& t, const Weight&) { out.push_back(t); });
    return out;
}

// Text form: rows in ascending j separated by ';', each row listing
// a^j_j down to a^j_1.
inline std::string format_tuple(const Tuple& t) {
    std::string s;
    for (int j = 1; j <= t.n; ++j) {
        if (j > 1) s += ';';
        for (int i = j; i >= 1; --i) {
            s += std::to_string(t.get(j, i));
            if (i > 1) s += ',';
        }
    }
    return s;
}

inline Tuple parse_tuple(int n, const std::string& s) {
    Tuple t(n);
    int j = 1, i = 1;
    std::vector<long> row;
    size_t pos = 0;
    auto flush_row = [&]() {
        if (static_cast<int>(row.size()) != j)
            throw std::invalid_argument("parse_tuple: row " + std::to_string(j) + " has wrong length");
        for (int c = 0; c < j; ++c) t.set(j, j - c, row[c]);
        row.clear();
        ++j;
        i = 1;
    };
    std::string cur;
    while (pos <= s.size()) {
        char ch = pos < s.size() ? s[pos] : ';';
        if (ch == ',' || ch == ';') {
            if (cur.empty()) throw std::invalid_argument("parse_tuple: empty entry");
            row.push_back(std::stol(cur));
            cur.clear();
            ++i;
            if (ch == ';') flush_row();
        } else {
            cur += ch;
        }
        ++pos;
    }
    if (j != n + 1 || i != 1)
        throw std::invalid_argument("parse_tuple: expected " + std::to_string(n) + " rows");
    (void)i;
    return t;
}

inline std::map<std::vector<long>, long long> index_tuples(const std::vector<Tuple>& basis) {
    std::map<std::vector<long>, long long> idx;
    for (size_t k = 0; k < basis.size(); ++k) idx[basis[k].a] = static_cast<long long>(k);
    return idx;
}

}  // namespace anmod
