#include <algorithm>
#include <atomic>
#include <fstream>
#include <iostream>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "anmod/report.hpp"

namespace {

using namespace anmod;

Weight parse_weight(const std::string& s, int rank) {
    Weight w;
    std::string cur;
    for (size_t i = 0; i <= s.size(); ++i) {
        char ch = i < s.size() ? s[i] : ',';
        if (ch == ',') {
            if (cur.empty()) throw UsageError("empty weight entry");
            try {
                w.push_back(std::stol(cur));
            } catch (const std::exception&) {
                throw UsageError("bad weight entry '" + cur + "'");
            }
            cur.clear();
        } else {
            cur += ch;
        }
    }
    if (static_cast<int>(w.size()) != rank)
        throw UsageError("weight has " + std::to_string(w.size()) + " entries, rank is " + std::to_string(rank));
    if (!is_dominant(w)) throw UsageError("weight must be dominant (all entries >= 0)");
    return w;
}

int cmd_basis(int rank, const std::string& weight_arg, bool count_only, bool json) {
    Weight w = parse_weight(weight_arg, rank);
    std::vector<Tuple> basis = enumerate_basis(w);
    if (count_only && !json) {
        std::cout << basis.size() << "\n";
        return 0;
    }
    if (json) {
        Json j;
        j["schema"] = "anmod.basis.v1";
        j["algebra"] = Json{{"type", "A"}, {"rank", rank}};
        j["weight"] = w;
        j["count"] = basis.size();
        if (!count_only) {
            Json rows = Json::array();
            for (const auto& t : basis)
                rows.push_back(Json{{"tuple", format_tuple(t)}, {"weight", tuple_weight(w, t)}});
            j["tuples"] = rows;
        }
        std::cout << j.dump(2) << "\n";
        return 0;
    }
    for (const auto& t : basis)
        std::cout << format_tuple(t) << "\t" << weight_str(tuple_weight(w, t)) << "\n";
    return 0;
}

void print_human_report(const RunReport& rep, bool with_cartan) {
    std::cout << "rank " << rep.rank << " weight " << weight_str(rep.weight) << " dim " << rep.dim << "\n";
    std::cout << "  basis " << rep.basis_count << ", generators " << rep.generator_count
              << ", minimal count " << rep.min_generator_count << "\n";
    std::cout << "  generates " << (rep.generates ? "yes" : "NO") << ", minimal "
              << (rep.minimal ? "yes" : "NO") << "\n";
    std::cout << "  commutant dim " << rep.commutant_dim << ", radical " << rep.radical_dim
              << ", indecomposable " << (rep.indecomposable ? "yes" : "NO") << "\n";
    if (with_cartan)
        std::cout << "  with cartan: commutant dim " << rep.commutant_dim_cartan << ", radical "
                  << rep.radical_dim_cartan << ", indecomposable "
                  << (rep.indecomposable_cartan ? "yes" : "NO") << "\n";
    for (const auto& c : rep.checks)
        if (!c.pass) std::cout << "  CHECK FAILED " << c.name << ": " << c.detail << "\n";
    for (const auto& n : rep.notes) std::cout << "  note: " << n << "\n";
    std::cout << (rep.pass() ? "PASS" : "FAIL") << "\n";
}

int cmd_verify(int rank, const std::string& weight_arg, long dim_cap, bool json, bool stable,
               bool with_cartan, const std::string& dump_path) {
    Weight w = parse_weight(weight_arg, rank);
    VerifyOptions opts;
    opts.dim_cap = Int(dim_cap);
    opts.with_cartan = with_cartan;
    opts.stable_json = stable;
    RunReport rep = verify_weight(rank, w, opts);
    if (!dump_path.empty()) {
        ModuleRealization real = build_realization(w, opts.dim_cap);
        std::ofstream os(dump_path);
        if (!os) throw UsageError("cannot open dump path " + dump_path);
        dump_matrices(real, os);
    }
    if (json)
        std::cout << rep.to_json(stable).dump(2) << "\n";
    else
        print_human_report(rep, with_cartan);
    return rep.pass() ? 0 : 1;
}

int cmd_counterexample(bool json) {
    Sl3Counterexample ce = counterexample_sl3(Int(2000));
    bool ok = ce.natural_single_block && ce.adjoint_splits && ce.fifth_power_zero;
    if (json) {
        Json j;
        j["schema"] = "anmod.sl3.v1";
        j["natural"] = Json{{"dim", 3}, {"jordan", ce.natural_type}, {"blocks", ce.natural_type.size()}};
        j["adjoint"] = Json{{"dim", 8},
                            {"jordan", ce.adjoint_type},
                            {"blocks", ce.adjoint_type.size()},
                            {"fifth_power_zero", ce.fifth_power_zero}};
        j["pass"] = ok;
        std::cout << j.dump(2) << "\n";
    } else {
        auto fmt = [](const std::vector<long long>& p) {
            std::string s = "(";
            for (size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + std::to_string(p[i]);
            return s + ")";
        };
        std::cout << "natural module, dim 3: single operator Y1+Y2 has jordan type " << fmt(ce.natural_type)
                  << ", blocks " << ce.natural_type.size() << "\n";
        std::cout << "adjoint module, dim 8: jordan type " << fmt(ce.adjoint_type) << ", blocks "
                  << ce.adjoint_type.size() << ", fifth power zero: " << (ce.fifth_power_zero ? "yes" : "no")
                  << "\n";
        std::cout << (ok ? "PASS" : "FAIL") << "\n";
    }
    if (!ok) throw InconsistencyError("single-operator scenario did not reproduce the expected block data");
    return 0;
}

int cmd_sweep(int rank_max, long coeff_max, long dim_cap, int jobs, bool stable) {
    if (rank_max < 1 || rank_max > 4) throw UsageError("rank-max must lie in 1..4");
    std::vector<std::pair<int, Weight>> work;
    for (int n = 1; n <= rank_max; ++n)
        for (const auto& w : dominant_grid(n, coeff_max, true)) work.emplace_back(n, w);
    std::vector<Json> lines(work.size());
    std::vector<int> fails;
    std::mutex mu;
    std::atomic<size_t> next{0};
    auto run = [&]() {
        while (true) {
            size_t k = next.fetch_add(1);
            if (k >= work.size()) break;
            VerifyOptions opts;
            opts.dim_cap = Int(dim_cap);
            opts.stable_json = stable;
            RunReport rep = verify_weight(work[k].first, work[k].second, opts);
            std::lock_guard<std::mutex> lock(mu);
            lines[k] = rep.to_json(stable);
            if (!rep.pass()) fails.push_back(static_cast<int>(k));
        }
    };
    if (jobs <= 1) {
        run();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < jobs; ++t) pool.emplace_back(run);
        for (auto& t : pool) t.join();
    }
    for (const auto& l : lines) std::cout << l.dump() << "\n";
    Json agg;
    agg["schema"] = "anmod.sweep.v1";
    agg["total"] = work.size();
    agg["passed"] = work.size() - fails.size();
    Json failed = Json::array();
    std::sort(fails.begin(), fails.end());
    for (int k : fails)
        failed.push_back(Json{{"rank", work[static_cast<size_t>(k)].first},
                              {"weight", work[static_cast<size_t>(k)].second}});
    agg["failed"] = failed;
    std::cout << agg.dump() << "\n";
    return fails.empty() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact computations for restricted highest-weight modules"};
    app.require_subcommand(1);

    int rank = 0;
    std::string weight;
    bool count_only = false, json = false, stable = false, with_cartan = false;
    long dim_cap = 2000;
    std::string dump_path;
    int rank_max = 2, jobs = 1;
    long coeff_max = 1;

    auto* basis = app.add_subcommand("basis", "list the monomial basis tuples");
    basis->add_option("--rank", rank, "rank of the algebra")->required();
    basis->add_option("--weight", weight, "comma-separated dominant weight")->required();
    basis->add_flag("--count-only", count_only, "print only the cardinality");
    basis->add_flag("--json", json, "machine-readable output");

    auto* verify = app.add_subcommand("verify", "run the full verification pipeline");
    verify->add_option("--rank", rank, "rank of the algebra")->required();
    verify->add_option("--weight", weight, "comma-separated dominant weight")->required();
    verify->add_flag("--json", json, "machine-readable output");
    verify->add_flag("--stable-json", stable, "omit timings for byte-stable output");
    verify->add_flag("--with-cartan", with_cartan, "echo the with-cartan commutant block");
    verify->add_option("--dim-cap", dim_cap, "dimension cap (default 2000)");
    verify->add_option("--dump-matrices", dump_path, "write generator matrices to this path");

    auto* ce = app.add_subcommand("counterexample-sl3", "single-operator restriction scenario");
    ce->add_flag("--json", json, "machine-readable output");

    auto* sweep = app.add_subcommand("sweep", "verify a grid of dominant weights");
    sweep->add_option("--rank-max", rank_max, "largest rank to sweep (1..4)");
    sweep->add_option("--coeff-max", coeff_max, "largest weight entry");
    sweep->add_option("--dim-cap", dim_cap, "dimension cap (default 2000)");
    sweep->add_option("--jobs", jobs, "worker threads");
    sweep->add_flag("--stable-json", stable, "omit timings for byte-stable output");

    try {
        app.parse(argc, argv);
        if (basis->parsed()) return cmd_basis(rank, weight, count_only, json);
        if (verify->parsed()) return cmd_verify(rank, weight, dim_cap, json, stable, with_cartan, dump_path);
        if (ce->parsed()) return cmd_counterexample(json);
        if (sweep->parsed()) return cmd_sweep(rank_max, coeff_max, dim_cap, jobs, stable);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const anmod::UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const anmod::CapExceeded& e) {
        std::cerr << "cap exceeded: " << e.what() << "\n";
        return 3;
    } catch (const anmod::InconsistencyError& e) {
        std::cerr << "internal inconsistency: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 4;
    }
    return 2;
}
