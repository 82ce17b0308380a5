#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "anmod/errors.hpp"
#include "anmod/linalg.hpp"
#include "anmod/realization.hpp"

namespace anmod {

// Action of the fixed abelian subalgebra: alternating lowering and raising
// generators in the canonical order Y1, X2, Y3, X4, ...
struct AbelianAction {
    int rank = 0;
    long long dim = 0;
    std::vector<SpMat> gens;
    std::vector<std::string> names;
    std::vector<Weight> shifts;  // weight shift of each generator
    std::vector<Weight> wt;      // per-coordinate weights; empty when ungraded

    bool graded() const { return !wt.empty(); }
    Weight coord_weight(long long c) const {
        return graded() ? wt[static_cast<size_t>(c)] : Weight{};
    }
    Weight shifted(const Weight& w, size_t g) const {
        if (!graded()) return Weight{};
        Weight r(w);
        for (size_t i = 0; i < r.size(); ++i) r[i] += shifts[g][i];
        return r;
    }
};

inline AbelianAction an_generators(const ModuleRealization& real) {
    AbelianAction act;
    act.rank = real.n;
    act.dim = real.dim;
    act.wt = real.wt;
    for (int i = 1; i <= real.n; ++i) {
        Weight sh = simple_root_weight(real.n, i);
        if (i % 2 == 1) {
            act.gens.push_back(real.Y[static_cast<size_t>(i - 1)]);
            act.names.push_back("Y" + std::to_string(i));
            for (auto& v : sh) v = -v;
        } else {
            act.gens.push_back(real.X[static_cast<size_t>(i - 1)]);
            act.names.push_back("X" + std::to_string(i));
        }
        act.shifts.push_back(std::move(sh));
    }
    for (size_t a = 0; a < act.gens.size(); ++a) {
        if (!is_nilpotent(act.gens[a]))
            throw InconsistencyError("abelian generator " + act.names[a] + " is not nilpotent");
        for (size_t b = a + 1; b < act.gens.size(); ++b)
            if (!commutator(act.gens[a], act.gens[b]).zero())
                throw InconsistencyError("generators " + act.names[a] + " and " + act.names[b] + " do not commute");
    }
    return act;
}

inline AbelianAction conjugate_action(const AbelianAction& act, const SpMat& p) {
    SpMat pinv = invert(p);
    AbelianAction out;
    out.rank = act.rank;
    out.dim = act.dim;
    out.names = act.names;
    out.shifts = act.shifts;
    for (const auto& g : act.gens) out.gens.push_back(mat_mul(p, mat_mul(g, pinv)));
    return out;  // wt left empty: conjugation destroys the grading
}

// Smallest invariant subspace containing the seeds: worklist fixpoint,
// generators applied in their canonical order to newly added vectors only.
inline GradedEchelon closure_span(const AbelianAction& act, const std::vector<SVec>& seeds,
                                  const std::vector<Weight>& seed_wts) {
    GradedEchelon ech;
    std::vector<std::pair<SVec, Weight>> queue;
    for (size_t s = 0; s < seeds.size(); ++s) {
        Weight w = act.graded() ? seed_wts[s] : Weight{};
        SVec rem = ech.reduce(w, seeds[s]);
        if (rem.empty()) continue;
        ech.insert(w, rem);
        queue.emplace_back(std::move(rem), std::move(w));
    }
    for (size_t q = 0; q < queue.size(); ++q) {
        auto [v, w] = queue[q];
        for (size_t g = 0; g < act.gens.size(); ++g) {
            SVec u = act.gens[g].apply(v);
            if (u.empty()) continue;
            Weight wu = act.shifted(w, g);
            SVec rem = ech.reduce(wu, u);
            if (rem.empty()) continue;
            ech.insert(wu, rem);
            queue.emplace_back(std::move(rem), std::move(wu));
        }
    }
    return ech;
}

inline long long closure_dim_of(const AbelianAction& act, const std::vector<long long>& coords) {
    std::vector<SVec> seeds;
    std::vector<Weight> wts;
    for (long long c : coords) {
        seeds.push_back(svec_unit(c));
        wts.push_back(act.coord_weight(c));
    }
    return closure_span(act, seeds, wts).rank();
}

inline bool generates(const AbelianAction& act, const std::vector<long long>& coords) {
    return closure_dim_of(act, coords) == act.dim;
}

// Span of the images of all generators.
inline GradedEchelon image_span(const AbelianAction& act) {
    GradedEchelon ech;
    for (size_t g = 0; g < act.gens.size(); ++g)
        for (long long c = 0; c < act.dim; ++c) {
            const SVec& col = act.gens[g].col[static_cast<size_t>(c)];
            if (col.empty()) continue;
            ech.insert(act.shifted(act.coord_weight(c), g), col);
        }
    return ech;
}

// Least size of a generating set: codimension of the image span.  Valid
// because the generators are commuting nilpotents, which is re-verified.
inline long long min_generator_count(const AbelianAction& act) {
    for (size_t g = 0; g < act.gens.size(); ++g)
        if (!is_nilpotent(act.gens[g]))
            throw InconsistencyError("minimal-count oracle requires nilpotent generators");
    return act.dim - image_span(act).rank();
}

struct QuotientImages {
    long long quotient_dim = 0;
    long long image_dim = 0;
    std::vector<SVec> residues;  // representatives modulo the image span
};

inline QuotientImages quotient_images(const AbelianAction& act, const std::vector<SVec>& vecs,
                                      const std::vector<Weight>& wts) {
    GradedEchelon u = image_span(act);
    QuotientImages out;
    out.quotient_dim = act.dim - u.rank();
    GradedEchelon im;
    for (size_t k = 0; k < vecs.size(); ++k) {
        Weight w = act.graded() ? wts[k] : Weight{};
        SVec rem = u.reduce(w, vecs[k]);
        out.residues.push_back(rem);
        if (!rem.empty()) im.insert(w, rem);
    }
    out.image_dim = im.rank();
    return out;
}

struct MinimalityReport {
    bool generates_all = false;
    long long set_size = 0;
    long long min_count = 0;
    bool minimal_by_count = false;
    bool minimal_by_deletion = false;
    bool minimal = false;
    std::vector<long long> redundant;  // members whose deletion still generates
};

// Two independent minimality methods plus the quotient-image cross-check;
// any disagreement between routes is fatal.
inline MinimalityReport check_minimal(const AbelianAction& act, const std::vector<long long>& g) {
    MinimalityReport rep;
    rep.set_size = static_cast<long long>(g.size());
    rep.generates_all = generates(act, g);
    std::vector<SVec> vecs;
    std::vector<Weight> wts;
    for (long long c : g) {
        vecs.push_back(svec_unit(c));
        wts.push_back(act.coord_weight(c));
    }
    QuotientImages qi = quotient_images(act, vecs, wts);
    rep.min_count = qi.quotient_dim;
    bool gen_by_quotient = qi.image_dim == qi.quotient_dim;
    if (rep.generates_all != gen_by_quotient)
        throw InconsistencyError("closure and quotient generation tests disagree");
    rep.minimal_by_count = rep.generates_all && rep.set_size == rep.min_count;
    for (size_t k = 0; k < g.size(); ++k) {
        std::vector<long long> rest;
        for (size_t l = 0; l < g.size(); ++l)
            if (l != k) rest.push_back(g[l]);
        if (generates(act, rest)) rep.redundant.push_back(g[k]);
    }
    rep.minimal_by_deletion = rep.generates_all && rep.redundant.empty();
    if (rep.generates_all && rep.minimal_by_count != rep.minimal_by_deletion)
        throw InconsistencyError("cardinality and deletion minimality tests disagree");
    rep.minimal = rep.minimal_by_count;
    return rep;
}

struct RepairResult {
    bool repaired = false;
    std::vector<long long> added;  // diagnostic only; not part of the studied set
};

// Diagnostic fallback when a candidate set fails to generate: greedily add
// basis tuples, largest even-diagonal entries first, until generation holds.
inline RepairResult greedy_repair(const AbelianAction& act, const ModuleRealization& real,
                                  std::vector<long long> g) {
    RepairResult out;
    std::vector<long long> cands;
    for (long long c = 0; c < act.dim; ++c)
        if (std::find(g.begin(), g.end(), c) == g.end()) cands.push_back(c);
    auto even_diag = [&](long long c) {
        long s = 0;
        const Tuple& t = real.tuples[static_cast<size_t>(c)];
        for (int j = 1; 2 * j <= t.n; ++j) s += t.get(2 * j, 2 * j);
        return s;
    };
    std::stable_sort(cands.begin(), cands.end(),
                     [&](long long a, long long b) { return even_diag(a) > even_diag(b); });
    while (!generates(act, g)) {
        std::vector<SVec> seeds;
        std::vector<Weight> wts;
        for (long long c : g) {
            seeds.push_back(svec_unit(c));
            wts.push_back(act.coord_weight(c));
        }
        GradedEchelon cl = closure_span(act, seeds, wts);
        bool found = false;
        for (long long c : cands) {
            if (std::find(g.begin(), g.end(), c) != g.end()) continue;
            if (!cl.reduce(act.coord_weight(c), svec_unit(c)).empty()) {
                g.push_back(c);
                out.added.push_back(c);
                found = true;
                break;
            }
        }
        if (!found) throw InconsistencyError("repair search exhausted the basis");
    }
    out.repaired = !out.added.empty();
    return out;
}

}  // namespace anmod
