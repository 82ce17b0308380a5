#pragma once

#include <functional>
#include <ostream>
#include <string>
#include <vector>

#include "anmod/errors.hpp"
#include "anmod/linalg.hpp"
#include "anmod/tensor_model.hpp"
#include "anmod/tuples.hpp"

namespace anmod {

struct LittelmannData {
    std::vector<Tuple> tuples;
    std::vector<SVec> vectors;  // ambient model coordinates
    std::vector<Weight> weights;
};

namespace detail {

struct LittDfs {
    const TensorModel& model;
    LittelmannData& out;
    Tuple t;
    Weight w;

    LittDfs(const TensorModel& m, LittelmannData& o)
        : model(m), out(o), t(m.rank()), w(m.lambda()) {}

    void run() { row(model.rank(), 1, model.highest()); }

    void row(int j, int i, const SVec& vec) {
        if (j == 0) {
            out.tuples.push_back(t);
            out.vectors.push_back(vec);
            out.weights.push_back(w);
            return;
        }
        if (i > j) {
            row(j - 1, 1, vec);
            return;
        }
        long lo = (i > 1) ? t.get(j, i - 1) : 0;
        long hi = w[i - 1];
        SVec cur = vec;
        for (long k = 1; k <= lo; ++k) {
            cur = model.apply({'Y', i}, cur);
            svec_scale(cur, Rat(1, k));
        }
        for (long v = lo; v <= hi; ++v) {
            t.set(j, i, v);
            if (v) subtract_root(w, i, v);
            row(j, i + 1, cur);
            if (v) subtract_root(w, i, -v);
            if (v < hi) {
                cur = model.apply({'Y', i}, cur);
                svec_scale(cur, Rat(1, v + 1));
            }
        }
        t.set(j, i, 0);
    }
};

}  // namespace detail

// Divided-power monomials applied to the highest vector, in canonical
// enumeration order; prefixes are shared across the enumeration tree.
inline LittelmannData littelmann_vectors(const TensorModel& model) {
    LittelmannData data;
    detail::LittDfs dfs(model, data);
    dfs.run();
    for (const auto& v : data.vectors)
        if (v.empty()) throw InconsistencyError("littelmann vector vanished");
    return data;
}

struct ModuleRealization {
    int n = 0;
    Weight lambda;
    long long dim = 0;
    std::vector<Tuple> tuples;
    std::vector<Weight> wt;
    std::vector<SpMat> X, Y, H;  // index i-1 holds the operator for i
    long long hw_index = 0;
};

// Change of basis into monomial coordinates; every generator action is
// solved exactly against the tracked span of the monomial vectors.
inline ModuleRealization to_littelmann_coordinates(const TensorModel& model,
                                                   const LittelmannData& data) {
    ModuleRealization real;
    real.n = model.rank();
    real.lambda = model.lambda();
    real.dim = static_cast<long long>(data.tuples.size());
    real.tuples = data.tuples;
    real.wt = data.weights;
    real.hw_index = 0;
    if (!(data.tuples[0] == Tuple(real.n)))
        throw InconsistencyError("first enumerated tuple is not the zero tuple");

    GradedEchelon span(true);
    for (long long t = 0; t < real.dim; ++t)
        if (!span.insert(data.weights[static_cast<size_t>(t)], data.vectors[static_cast<size_t>(t)], t))
            throw InconsistencyError("monomial vectors are linearly dependent");

    auto solve = [&](const SVec& v, const Weight& bucket) {
        SVec combo;
        SVec rem = span.reduce(bucket, v, &combo);
        if (!rem.empty())
            throw InconsistencyError("vector left the monomial span");
        return combo;
    };

    real.X.assign(static_cast<size_t>(real.n), SpMat(real.dim, real.dim));
    real.Y.assign(static_cast<size_t>(real.n), SpMat(real.dim, real.dim));
    real.H.assign(static_cast<size_t>(real.n), SpMat(real.dim, real.dim));
    for (int i = 1; i <= real.n; ++i) {
        for (long long c = 0; c < real.dim; ++c) {
            const SVec& w = data.vectors[static_cast<size_t>(c)];
            const Weight& wc = data.weights[static_cast<size_t>(c)];
            SVec xv = model.apply({'X', i}, w);
            if (!xv.empty()) {
                Weight bx(wc);
                subtract_root(bx, i, -1);
                real.X[static_cast<size_t>(i - 1)].col[static_cast<size_t>(c)] = solve(xv, bx);
            }
            SVec yv = model.apply({'Y', i}, w);
            if (!yv.empty()) {
                Weight by(wc);
                subtract_root(by, i, 1);
                real.Y[static_cast<size_t>(i - 1)].col[static_cast<size_t>(c)] = solve(yv, by);
            }
            SVec hv = model.apply({'H', i}, w);
            SVec expect = w;
            svec_scale(expect, Rat(wc[i - 1]));
            if (hv != expect)
                throw InconsistencyError("coroot action is not the labeled scalar");
            if (wc[i - 1] != 0)
                real.H[static_cast<size_t>(i - 1)].add_entry(c, c, Rat(wc[i - 1]));
        }
    }
    return real;
}

inline ModuleRealization build_realization(const Weight& lambda, const Int& cap) {
    TensorModel model(lambda, cap);
    LittelmannData data = littelmann_vectors(model);
    if (Int(static_cast<long>(data.tuples.size())) != model.weyl())
        throw InconsistencyError("enumeration count disagrees with the dimension formula");
    return to_littelmann_coordinates(model, data);
}

// Exact check of all defining relations among the realized generators.
inline bool verify_chevalley(const ModuleRealization& r, std::string* first_fail = nullptr) {
    auto fail = [&](const std::string& what) {
        if (first_fail) *first_fail = what;
        return false;
    };
    for (int i = 1; i <= r.n; ++i)
        for (int j = 1; j <= r.n; ++j) {
            SpMat c = commutator(r.X[static_cast<size_t>(i - 1)], r.Y[static_cast<size_t>(j - 1)]);
            if (i == j) {
                if (!mat_add(c, Rat(-1), r.H[static_cast<size_t>(i - 1)]).zero())
                    return fail("[X_" + std::to_string(i) + ",Y_" + std::to_string(i) + "] != H_" + std::to_string(i));
            } else if (!c.zero()) {
                return fail("[X_" + std::to_string(i) + ",Y_" + std::to_string(j) + "] != 0");
            }
        }
    for (int i = 1; i <= r.n; ++i)
        for (int j = 1; j <= r.n; ++j) {
            long a = cartan_entry(j, i);
            SpMat cx = commutator(r.H[static_cast<size_t>(i - 1)], r.X[static_cast<size_t>(j - 1)]);
            if (!mat_add(cx, Rat(-a), r.X[static_cast<size_t>(j - 1)]).zero())
                return fail("[H_" + std::to_string(i) + ",X_" + std::to_string(j) + "] != " + std::to_string(a) + " X_" + std::to_string(j));
            SpMat cy = commutator(r.H[static_cast<size_t>(i - 1)], r.Y[static_cast<size_t>(j - 1)]);
            if (!mat_add(cy, Rat(a), r.Y[static_cast<size_t>(j - 1)]).zero())
                return fail("[H_" + std::to_string(i) + ",Y_" + std::to_string(j) + "] != -" + std::to_string(a) + " Y_" + std::to_string(j));
            SpMat ch = commutator(r.H[static_cast<size_t>(i - 1)], r.H[static_cast<size_t>(j - 1)]);
            if (!ch.zero()) return fail("[H_" + std::to_string(i) + ",H_" + std::to_string(j) + "] != 0");
        }
    return true;
}

inline ModuleRealization direct_sum(const ModuleRealization& a, const ModuleRealization& b) {
    if (a.n != b.n) throw UsageError("direct_sum: rank mismatch");
    ModuleRealization s;
    s.n = a.n;
    s.lambda = a.lambda;
    s.dim = a.dim + b.dim;
    s.tuples = a.tuples;
    s.tuples.insert(s.tuples.end(), b.tuples.begin(), b.tuples.end());
    s.wt = a.wt;
    s.wt.insert(s.wt.end(), b.wt.begin(), b.wt.end());
    s.hw_index = a.hw_index;
    auto block = [&](const SpMat& top, const SpMat& bot) {
        SpMat m(s.dim, s.dim);
        for (long long c = 0; c < a.dim; ++c) m.col[static_cast<size_t>(c)] = top.col[static_cast<size_t>(c)];
        for (long long c = 0; c < b.dim; ++c) {
            SVec col = bot.col[static_cast<size_t>(c)];
            for (auto& [rw, v] : col) rw += a.dim;
            m.col[static_cast<size_t>(a.dim + c)] = std::move(col);
        }
        return m;
    };
    for (int i = 0; i < s.n; ++i) {
        s.X.push_back(block(a.X[static_cast<size_t>(i)], b.X[static_cast<size_t>(i)]));
        s.Y.push_back(block(a.Y[static_cast<size_t>(i)], b.Y[static_cast<size_t>(i)]));
        s.H.push_back(block(a.H[static_cast<size_t>(i)], b.H[static_cast<size_t>(i)]));
    }
    return s;
}

// One line per nonzero entry "op row col num/den" under a fixed header;
// indices are zero-based, operators listed X1..Xn, Y1..Yn, H1..Hn.
inline void dump_matrices(const ModuleRealization& r, std::ostream& os) {
    os << "dim " << r.dim << " rank " << r.n << " weight " << weight_str(r.lambda) << "\n";
    auto emit = [&](const std::string& name, const SpMat& m) {
        for (long long c = 0; c < m.ncols; ++c)
            for (const auto& [row, v] : m.col[static_cast<size_t>(c)])
                os << name << " " << row << " " << c << " " << v.get_num().get_str() << "/"
                   << v.get_den().get_str() << "\n";
    };
    for (int i = 1; i <= r.n; ++i) emit("X" + std::to_string(i), r.X[static_cast<size_t>(i - 1)]);
    for (int i = 1; i <= r.n; ++i) emit("Y" + std::to_string(i), r.Y[static_cast<size_t>(i - 1)]);
    for (int i = 1; i <= r.n; ++i) emit("H" + std::to_string(i), r.H[static_cast<size_t>(i - 1)]);
}

}  // namespace anmod
