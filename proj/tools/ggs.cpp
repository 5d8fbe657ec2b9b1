// Command-line driver: enumerate/count triple catalogs, construct and print
// r0_tilde and R for a chosen triple, and run batch verification with a
// worker pool and JSON reports.

#include "ggs/bd_triple.hpp"
#include "ggs/r0_solver.hpp"
#include "ggs/r_matrix.hpp"
#include "ggs/verifier.hpp"

#include <CLI11.hpp>

#include <atomic>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <thread>

namespace {

int default_jobs() {
    if (const char* env = std::getenv("GGS_JOBS")) {
        int j = std::atoi(env);
        if (j >= 1) return j;
    }
    return 1;
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    out << content;
    if (!out.flush()) throw std::runtime_error("write failed: " + path);
}

void check_n_guard(int n, bool allow_large) {
    if (n < 2) throw CLI::ValidationError("--n must be at least 2");
    if (n > 13 && !allow_large)
        throw CLI::ValidationError("--n above 13 is untested; pass --allow-large to override");
}

ggs::BDTriple select_triple(int n, int triple_index, const std::string& literal) {
    if (!literal.empty()) return ggs::triple_from_json(n, literal);
    ggs::TripleCatalog cat = ggs::enumerate_canonical(n);
    if (triple_index < 0 || (std::size_t)triple_index >= cat.count())
        throw std::invalid_argument("--triple-index out of range for n=" + std::to_string(n));
    return cat.triples[triple_index];
}

void print_r0(const ggs::CartanTensor& r0) {
    std::cout << "r0_tilde (" << r0.n << "x" << r0.n << "):\n";
    for (int i = 1; i <= r0.n; ++i) {
        for (int k = 1; k <= r0.n; ++k) std::cout << (k > 1 ? " " : "") << ggs::rat_str(r0.at(i, k));
        std::cout << "\n";
    }
}

void print_R(const ggs::BandedOperator& R) {
    std::cout << "R (" << R.nonzero_count() << " entries, i j k l : value):\n";
    for (const auto& [k, p] : R.entries())
        std::cout << k.i << " " << k.j << " " << k.k << " " << (k.i + k.k - k.j) << " : " << p.str()
                  << "\n";
}

std::vector<ggs::VerificationReport> run_batch(const std::vector<ggs::BDTriple>& triples, int jobs,
                                               const std::optional<ggs::FaultSpec>& fault,
                                               bool verbose) {
    std::vector<ggs::VerificationReport> reports(triples.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t idx; (idx = next.fetch_add(1)) < triples.size();)
            reports[idx] = ggs::verify_triple(triples[idx], fault, verbose);
    };
    jobs = std::max(1, std::min<int>(jobs, (int)triples.size()));
    std::vector<std::thread> pool;
    for (int w = 1; w < jobs; ++w) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();
    return reports;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Belavin-Drinfeld triple enumeration and GGS R-matrix verification"};
    app.require_subcommand(1);

    int n = 0;
    int triple_index = -1;
    std::string triple_literal;
    std::string out_path;
    int jobs = default_jobs();
    bool verbose = false;
    bool use_dense = false;
    bool allow_large = false;
    int fault_index = -1;

    auto add_common = [&](CLI::App* cmd, bool with_out) {
        cmd->add_option("--n", n, "rank parameter n (root system A_{n-1})")->required();
        cmd->add_flag("--allow-large", allow_large, "permit n beyond 13");
        if (with_out) cmd->add_option("--out", out_path, "output file path");
    };

    CLI::App* cmd_enum = app.add_subcommand("enumerate", "enumerate canonical triples");
    add_common(cmd_enum, true);
    CLI::App* cmd_count = app.add_subcommand("count", "print the canonical triple count");
    add_common(cmd_count, false);

    CLI::App* cmd_construct = app.add_subcommand("construct", "print r0_tilde and R for one triple");
    add_common(cmd_construct, false);
    cmd_construct->add_option("--triple-index", triple_index, "index into the canonical catalog");
    cmd_construct->add_option("--triple", triple_literal, "inline triple literal, e.g. [[1,2]]");

    CLI::App* cmd_verify = app.add_subcommand("verify", "run QYBE + Hecke checks");
    add_common(cmd_verify, true);
    cmd_verify->add_option("--triple-index", triple_index, "verify a single triple by index");
    cmd_verify->add_option("--triple", triple_literal, "verify a single inline triple");
    cmd_verify->add_option("--jobs", jobs, "worker count (default from GGS_JOBS, else 1)")
        ->check(CLI::PositiveNumber);
    cmd_verify->add_flag("--verbose", verbose, "collect all failure witnesses");
    cmd_verify->add_flag("--dense-oracle", use_dense,
                         "cross-check against the dense brute-force oracle (n <= 4)");
    cmd_verify->add_option("--inject-fault", fault_index,
                           "test hook: perturb one coefficient of R before checking")
        ->group("");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*cmd_enum || *cmd_count) {
            check_n_guard(n, allow_large);
            ggs::TripleCatalog cat = ggs::enumerate_canonical(n);
            if (*cmd_enum && !out_path.empty()) write_file(out_path, ggs::catalog_to_json(cat));
            std::cout << cat.count() << "\n";
            return 0;
        }

        if (*cmd_construct) {
            check_n_guard(n, allow_large);
            if (triple_index >= 0 && !triple_literal.empty())
                throw std::invalid_argument("choose one of --triple-index / --triple");
            if (triple_index < 0 && triple_literal.empty())
                throw std::invalid_argument("construct needs --triple-index or --triple");
            ggs::BDTriple t = select_triple(n, triple_index, triple_literal);
            ggs::CartanTensor r0 = ggs::r0_tilde(t);
            print_r0(r0);
            print_R(ggs::build_R(t, r0));
            return 0;
        }

        // verify
        check_n_guard(n, allow_large);
        std::vector<ggs::BDTriple> triples;
        if (triple_index >= 0 && !triple_literal.empty())
            throw std::invalid_argument("choose one of --triple-index / --triple");
        if (triple_index >= 0 || !triple_literal.empty())
            triples.push_back(select_triple(n, triple_index, triple_literal));
        else
            triples = ggs::enumerate_canonical(n).triples;

        std::optional<ggs::FaultSpec> fault;
        if (fault_index >= 0) fault = ggs::FaultSpec{(std::size_t)fault_index};

        std::vector<ggs::VerificationReport> reports = run_batch(triples, jobs, fault, verbose);

        if (use_dense) {
            for (std::size_t i = 0; i < triples.size(); ++i) {
                if (!reports[i].error.empty()) continue;
                ggs::BandedOperator R = ggs::build_R(triples[i], reports[i].r0);
                if (fault) R = ggs::inject_fault(R, *fault);
                auto [dq, dh] = ggs::dense_oracle(R);
                if (dq != reports[i].qybe_ok || dh != reports[i].hecke_ok) {
                    std::cerr << "dense oracle disagrees with banded checks on triple "
                              << triples[i].str() << "\n";
                    return 2;
                }
            }
            std::cout << "dense-oracle: agreement on " << triples.size() << " matrices\n";
        }

        if (!out_path.empty()) write_file(out_path, ggs::reports_to_json(n, reports));

        std::size_t passed = 0;
        bool infra_error = false;
        for (const auto& r : reports) {
            if (r.passed()) ++passed;
            if (!r.error.empty()) infra_error = true;
        }
        std::cout << "n=" << n << " total=" << reports.size() << " passed=" << passed
                  << " failed=" << (reports.size() - passed) << "\n";
        if (verbose) {
            for (const auto& r : reports)
                if (!r.passed()) {
                    std::cout << "FAILED " << r.triple.str();
                    if (!r.error.empty()) std::cout << " error: " << r.error;
                    if (r.witness) std::cout << " [" << r.witness_check << "]";
                    std::cout << "\n";
                }
        }
        if (infra_error) return 2;
        return passed == reports.size() ? 0 : 1;
    } catch (const std::invalid_argument& ex) {
        std::cerr << "usage error: " << ex.what() << "\n";
        return 2;
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 2;
    }
}
