#pragma once

#include <algorithm>
#include <map>
#include <vector>

#include "anmod/abelian.hpp"
#include "anmod/errors.hpp"
#include "anmod/linalg.hpp"

namespace anmod {

struct MatrixAlgebra {
    long long d = 0;
    std::vector<SpMat> basis;
    std::vector<Weight> shifts;  // weight shift per element; empty when ungraded

    long long dim() const { return static_cast<long long>(basis.size()); }
};

namespace detail {

// Solve [M, g] = 0 for all generators over matrices supported on
// coordinate pairs whose weights differ by nu; one independent block of
// the full commutant system.
struct GradedCommutantSolver {
    const AbelianAction& act;
    std::vector<Weight> space_keys;
    std::vector<std::vector<long long>> space_coords;
    std::vector<int> space_of;
    std::vector<int> pos_of;
    std::map<Weight, int> space_index;
    std::vector<SpMat> gen_t;

    explicit GradedCommutantSolver(const AbelianAction& a) : act(a) {
        std::map<Weight, std::vector<long long>> spaces;
        for (long long c = 0; c < act.dim; ++c) spaces[act.wt[static_cast<size_t>(c)]].push_back(c);
        space_of.assign(static_cast<size_t>(act.dim), -1);
        pos_of.assign(static_cast<size_t>(act.dim), -1);
        for (auto& [w, coords] : spaces) {
            int idx = static_cast<int>(space_keys.size());
            space_index[w] = idx;
            for (size_t p = 0; p < coords.size(); ++p) {
                space_of[static_cast<size_t>(coords[p])] = idx;
                pos_of[static_cast<size_t>(coords[p])] = static_cast<int>(p);
            }
            space_keys.push_back(w);
            space_coords.push_back(std::move(coords));
        }
        for (const auto& g : act.gens) gen_t.push_back(transpose(g));
    }

    std::vector<Weight> all_shifts() const {
        std::map<Weight, bool> seen;
        for (const auto& wa : space_keys)
            for (const auto& wb : space_keys) seen[weight_sub(wa, wb)] = true;
        std::vector<Weight> out;
        for (const auto& [w, _] : seen) out.push_back(w);
        return out;
    }

    // Basis of the nu-block of the commutant.
    std::vector<SpMat> solve_block(const Weight& nu) const {
        // Unknowns: M entries on pairs (r, s) with wt(r) = wt(s) + nu.
        std::vector<long long> offset(space_keys.size(), -1);
        std::vector<int> partner(space_keys.size(), -1);  // per column space: row space
        long long nunk = 0;
        struct PairInfo {
            int a, b;
            long long off;
        };
        std::vector<PairInfo> pairs;
        for (size_t b = 0; b < space_keys.size(); ++b) {
            Weight wa(space_keys[b]);
            for (size_t i = 0; i < wa.size(); ++i) wa[i] += nu[i];
            auto it = space_index.find(wa);
            if (it == space_index.end()) continue;
            int a = it->second;
            partner[b] = a;
            offset[b] = nunk;
            pairs.push_back({a, static_cast<int>(b), nunk});
            nunk += static_cast<long long>(space_coords[static_cast<size_t>(a)].size()) *
                    static_cast<long long>(space_coords[b].size());
        }
        if (nunk == 0) return {};

        auto unknown_id = [&](long long r, long long s) -> long long {
            int bs = space_of[static_cast<size_t>(s)];
            if (offset[static_cast<size_t>(bs)] < 0 || partner[static_cast<size_t>(bs)] != space_of[static_cast<size_t>(r)])
                return -1;
            long long bsz = static_cast<long long>(space_coords[static_cast<size_t>(bs)].size());
            return offset[static_cast<size_t>(bs)] + static_cast<long long>(pos_of[static_cast<size_t>(r)]) * bsz +
                   pos_of[static_cast<size_t>(s)];
        };

        std::vector<SVec> rows;
        for (size_t g = 0; g < act.gens.size(); ++g) {
            Weight tau = weight_sub(act.shifted(nu, g), Weight(nu.size(), 0));
            for (size_t bs = 0; bs < space_keys.size(); ++bs) {
                Weight wr(space_keys[bs]);
                for (size_t i = 0; i < wr.size(); ++i) wr[i] += tau[i];
                auto it = space_index.find(wr);
                if (it == space_index.end()) continue;
                const auto& rowsp = space_coords[static_cast<size_t>(it->second)];
                for (long long s : space_coords[bs])
                    for (long long r : rowsp) {
                        std::map<long long, Rat> row;
                        for (const auto& [t, v] : act.gens[g].col[static_cast<size_t>(s)]) {
                            long long id = unknown_id(r, t);
                            if (id >= 0) row[id] += v;
                        }
                        for (const auto& [t, v] : gen_t[g].col[static_cast<size_t>(r)]) {
                            long long id = unknown_id(t, s);
                            if (id >= 0) row[id] -= v;
                        }
                        SVec rv;
                        for (auto& [id, v] : row)
                            if (v != 0) rv.emplace_back(id, std::move(v));
                        if (!rv.empty()) rows.push_back(std::move(rv));
                    }
            }
        }

        std::vector<SpMat> out;
        for (const auto& k : kernel_basis(rows, nunk)) {
            SpMat m(act.dim, act.dim);
            for (const auto& [id, v] : k) {
                const PairInfo* pi = nullptr;
                for (const auto& p : pairs)
                    if (p.off <= id) pi = &p;
                long long bsz = static_cast<long long>(space_coords[static_cast<size_t>(pi->b)].size());
                long long local = id - pi->off;
                long long r = space_coords[static_cast<size_t>(pi->a)][static_cast<size_t>(local / bsz)];
                long long s = space_coords[static_cast<size_t>(pi->b)][static_cast<size_t>(local % bsz)];
                m.add_entry(r, s, v);
            }
            out.push_back(std::move(m));
        }
        return out;
    }
};

}  // namespace detail

// Exact solution space of [M, g] = 0 for all generators (plus any extra
// constraint matrices); block-diagonal over weight shifts when graded.
// With include_cartan on a graded action only the shift-zero block
// survives, because commuting with every coroot matrix is exactly
// weight-space preservation.
inline MatrixAlgebra commutant(const AbelianAction& act, bool include_cartan = false,
                               const std::vector<SpMat>* extra = nullptr) {
    MatrixAlgebra alg;
    alg.d = act.dim;
    if (act.graded()) {
        if (extra)
            throw UsageError("graded commutant takes no extra constraints");
        detail::GradedCommutantSolver solver(act);
        std::vector<Weight> blocks;
        if (include_cartan)
            blocks.push_back(Weight(static_cast<size_t>(act.rank), 0));
        else
            blocks = solver.all_shifts();
        for (const auto& nu : blocks)
            for (auto& m : solver.solve_block(nu)) {
                alg.basis.push_back(std::move(m));
                alg.shifts.push_back(nu);
            }
        return alg;
    }
    long long d = act.dim;
    std::vector<SpMat> constraints = act.gens;
    if (include_cartan) {
        if (!extra) throw UsageError("ungraded commutant with cartan needs explicit matrices");
        constraints.insert(constraints.end(), extra->begin(), extra->end());
    }
    std::vector<SVec> rows;
    std::vector<SpMat> trans;
    for (const auto& g : constraints) trans.push_back(transpose(g));
    for (size_t g = 0; g < constraints.size(); ++g)
        for (long long r = 0; r < d; ++r)
            for (long long s = 0; s < d; ++s) {
                std::map<long long, Rat> row;
                for (const auto& [t, v] : constraints[g].col[static_cast<size_t>(s)]) row[r * d + t] += v;
                for (const auto& [t, v] : trans[g].col[static_cast<size_t>(r)]) row[t * d + s] -= v;
                SVec rv;
                for (auto& [id, v] : row)
                    if (v != 0) rv.emplace_back(id, std::move(v));
                if (!rv.empty()) rows.push_back(std::move(rv));
            }
    for (const auto& k : kernel_basis(rows, d * d)) {
        SpMat m(d, d);
        for (const auto& [id, v] : k) m.add_entry(id / d, id % d, v);
        alg.basis.push_back(std::move(m));
    }
    return alg;
}

struct RadicalInfo {
    long long dim = 0;
    std::vector<SVec> coords;  // kernel of the trace form, over the algebra basis
};

// Jacobson radical in characteristic zero: null space of the trace form
// t(x, y) = tr(xy) on the algebra.
inline RadicalInfo algebra_radical(const MatrixAlgebra& a) {
    size_t m = a.basis.size();
    bool graded = !a.shifts.empty();
    std::vector<SVec> rows(m);
    for (size_t i = 0; i < m; ++i) {
        for (size_t j = 0; j < m; ++j) {
            if (graded) {
                bool opposite = true;
                for (size_t k = 0; k < a.shifts[i].size(); ++k)
                    if (a.shifts[i][k] + a.shifts[j][k] != 0) {
                        opposite = false;
                        break;
                    }
                if (!opposite) continue;
            }
            Rat t = trace_of_product(a.basis[i], a.basis[j]);
            if (t != 0) rows[i].emplace_back(static_cast<long long>(j), std::move(t));
        }
    }
    RadicalInfo info;
    info.coords = kernel_basis(rows, static_cast<long long>(m));
    info.dim = static_cast<long long>(info.coords.size());
    return info;
}

struct DecompReport {
    long long commutant_dim = 0;
    long long radical_dim = 0;
    bool indecomposable = false;
};

// Module is indecomposable over a splitting field exactly when its
// commutant is local: one dimension survives the radical.
inline DecompReport decide_indecomposable(const AbelianAction& act, bool include_cartan = false,
                                          const std::vector<SpMat>* extra = nullptr) {
    MatrixAlgebra c = commutant(act, include_cartan, extra);
    RadicalInfo r = algebra_radical(c);
    DecompReport rep;
    rep.commutant_dim = c.dim();
    rep.radical_dim = r.dim;
    rep.indecomposable = (c.dim() - r.dim == 1);
    return rep;
}

inline SVec vectorize(const SpMat& m) {
    SVec v;
    for (long long c = 0; c < m.ncols; ++c)
        for (const auto& [r, val] : m.col[static_cast<size_t>(c)]) v.emplace_back(r * m.ncols + c, val);
    std::sort(v.begin(), v.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    return v;
}

inline bool algebra_contains_identity(const MatrixAlgebra& a) {
    Echelon e;
    for (const auto& b : a.basis) e.insert(vectorize(b));
    return e.contains(vectorize(SpMat::identity(a.d)));
}

inline bool algebra_closed_under_product(const MatrixAlgebra& a) {
    Echelon e;
    for (const auto& b : a.basis) e.insert(vectorize(b));
    for (const auto& x : a.basis)
        for (const auto& y : a.basis)
            if (!e.contains(vectorize(mat_mul(x, y)))) return false;
    return true;
}

inline SpMat radical_element(const MatrixAlgebra& a, const SVec& coords) {
    SpMat m(a.d, a.d);
    for (const auto& [j, v] : coords) m = mat_add(m, v, a.basis[static_cast<size_t>(j)]);
    return m;
}

inline std::vector<long long> jordan_type(const SpMat& m) {
    if (m.nrows != m.ncols) throw UsageError("jordan_type: matrix must be square");
    if (!is_nilpotent(m)) throw UsageError("jordan_type: matrix is not nilpotent");
    std::vector<long long> ranks{m.nrows};
    SpMat p = m;
    while (true) {
        long long r = mat_rank(p);
        ranks.push_back(r);
        if (r == 0) break;
        p = mat_mul(p, m);
    }
    std::vector<long long> parts;
    for (size_t k = 1; k < ranks.size(); ++k) {
        long long ge_k = ranks[k - 1] - ranks[k];
        long long ge_next = (k + 1 < ranks.size()) ? ranks[k] - ranks[k + 1] : 0;
        for (long long i = 0; i < ge_k - ge_next; ++i) parts.push_back(static_cast<long long>(k));
    }
    std::sort(parts.rbegin(), parts.rend());
    long long total = 0;
    for (long long p_ : parts) total += p_;
    if (total != m.nrows) throw InconsistencyError("jordan_type: partition does not sum to the dimension");
    return parts;
}

}  // namespace anmod
