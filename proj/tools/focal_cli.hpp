#pragma once

#include <atomic>
#include <chrono>
#include <csignal>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "focal/focal.hpp"

namespace focal::cli {

enum ExitCode : int { kSuccess = 0, kHypothesisFailure = 1, kUsageError = 2 };

inline std::atomic<bool>& stop_flag() {
    static std::atomic<bool> flag{false};
    return flag;
}

struct SystemInput {
    std::string file;
    std::string coeffs;
    std::optional<std::uint32_t> prime;

    void add_to(CLI::App* cmd) {
        cmd->add_option("system", file, "System file (format = focal-system/1)");
        cmd->add_option("--coeffs", coeffs,
                        "Inline coefficients q20,q11,q02,q30,q21,q12,q03,p20,p11,p02,p30,p21,p12,p03");
        cmd->add_option("--prime", prime, "Prime modulus (overrides the file)");
    }

    SystemFile load() const {
        SystemFile sys;
        if (!file.empty() && !coeffs.empty()) throw FormatError("give either a system file or --coeffs, not both");
        if (!file.empty()) {
            std::ifstream in(file);
            if (!in) throw FormatError("cannot open system file '" + file + "'");
            sys = SystemFile::parse(in);
        } else if (!coeffs.empty()) {
            std::string text = coeffs;
            for (char& c : text)
                if (c == ',') c = ' ';
            std::istringstream in(text);
            std::vector<std::string> tokens;
            for (std::string t; in >> t;) tokens.push_back(t);
            if (tokens.size() != kNumCoefficients)
                throw FormatError("--coeffs: expected 14 values, got " + std::to_string(tokens.size()));
            for (std::size_t i = 0; i < kNumCoefficients; ++i) sys.coefficients[i] = Rational::parse(tokens[i]);
        } else {
            throw FormatError("no system given (pass a system file or --coeffs)");
        }
        if (prime) sys.prime = *prime;
        return sys;
    }

    PrimeField field(const SystemFile& sys) const {
        if (!sys.prime) throw FormatError("a prime is required (set 'prime' in the file or pass --prime)");
        return PrimeField(*sys.prime);
    }
};

inline void print_matrix(std::ostream& out, const JacobianMatrix& m) {
    out << "columns:";
    for (auto* n : kCoefficientNames) out << " " << std::setw(3) << n;
    out << "\n";
    for (std::size_t r = 0; r < m.rows; ++r) {
        out << "s_" << std::left << std::setw(6) << r + 1 << std::right;
        for (std::size_t c = 0; c < m.cols; ++c) out << " " << std::setw(3) << m.at(r, c);
        out << "\n";
    }
}

inline void print_stats(std::ostream& out, const SearchStats& s, double seconds) {
    out << "trials = " << s.trials << "\n";
    out << "accepted = " << s.accepted << "\n";
    out << "rejected = " << s.rejected << "\n";
    out << "hits = " << s.hits << "\n";
    for (std::size_t d = 0; d < s.survivors.size(); ++d) {
        out << "survivors_" << d + 1 << " = " << s.survivors[d];
        if (s.trials) out << " (" << std::setprecision(6) << static_cast<double>(s.survivors[d]) / s.trials << ")";
        out << "\n";
    }
    out << "throughput = " << std::fixed << std::setprecision(0) << (seconds > 0 ? s.trials / seconds : 0.0)
        << " trials/s\n"
        << std::defaultfloat;
}

/// Entry point shared by the executable and the tests. Exit codes: 0
/// success or certified, 1 a checked hypothesis failed, 2 usage or input
/// error.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Focal values of plane polynomial systems over exchangeable rings"};
    app.require_subcommand(1);
    app.set_version_flag("--version", kVersion);

    // eval
    auto* eval = app.add_subcommand("eval", "Compute s_1..s_N for one system");
    SystemInput eval_in;
    eval_in.add_to(eval);
    int eval_n = 12;
    std::string eval_conv = "N1";
    std::string eval_ring;
    std::string eval_write;
    eval->add_option("-N,--count", eval_n, "Number of focal values")->check(CLI::PositiveNumber);
    eval->add_option("--convention", eval_conv, "Normalization convention N1 or N2");
    eval->add_option("--ring", eval_ring, "fp (prime field) or q (exact rationals); default from input")
        ->check(CLI::IsMember({"fp", "q"}));
    eval->add_option("--write-system", eval_write, "Also write the parsed system to this file");

    // verify-paper
    auto* verify = app.add_subcommand("verify-paper", "Certify the embedded cubic focus over F_29");
    int verify_depth = kCubicFocusDepth;
    std::string verify_conv = "N1";
    verify->add_option("--depth", verify_depth, "Vanishing depth k to certify")->check(CLI::PositiveNumber);
    verify->add_option("--convention", verify_conv, "Normalization convention N1 or N2");

    // jacobian
    auto* jac = app.add_subcommand("jacobian", "Jacobian of s_1..s_k over F_p and its rank");
    SystemInput jac_in;
    jac_in.add_to(jac);
    int jac_k = kCubicFocusDepth;
    std::string jac_conv = "N1";
    jac->add_option("-k,--depth", jac_k, "Number of focal values (rows)")->check(CLI::PositiveNumber);
    jac->add_option("--convention", jac_conv, "Normalization convention N1 or N2");

    // certify
    auto* cert = app.add_subcommand("certify", "Issue or re-check a lifting certificate");
    SystemInput cert_in;
    cert_in.add_to(cert);
    int cert_k = kCubicFocusDepth;
    std::string cert_conv = "N1";
    std::string cert_out;
    std::string cert_recheck;
    cert->add_option("-k,--depth", cert_k, "Vanishing depth k")->check(CLI::PositiveNumber);
    cert->add_option("--convention", cert_conv, "Normalization convention N1 or N2");
    cert->add_option("--out", cert_out, "Write the certificate to this file");
    cert->add_option("--recheck", cert_recheck, "Re-verify an existing certificate file");

    // search
    auto* search = app.add_subcommand("search", "Random search for systems with vanishing focal prefix");
    SearchConfig cfg;
    std::string strategy = "rejection";
    std::string coords = "q30,p03";
    std::string search_conv = "N1";
    std::string checkpoint, hits;
    bool quiet = false;
    search->add_option("--prime,-p", cfg.prime, "Prime modulus");
    search->add_option("--strategy", strategy, "rejection or parametrized")
        ->check(CLI::IsMember({"rejection", "parametrized"}));
    search->add_option("--target", cfg.target, "Required vanishing depth t")->check(CLI::PositiveNumber);
    search->add_option("--budget", cfg.budget, "Total number of trials (including resumed ones)");
    search->add_option("--workers", cfg.workers, "Worker threads")->check(CLI::PositiveNumber);
    search->add_option("--seed", cfg.seed, "PRNG seed");
    search->add_option("--coords", coords, "Two solve coordinates for the parametrized strategy");
    search->add_option("--convention", search_conv, "Normalization convention N1 or N2");
    search->add_option("--max-depth", cfg.max_depth, "Deepest focal value evaluated per survivor");
    search->add_option("--checkpoint", checkpoint, "Checkpoint file");
    search->add_option("--checkpoint-every", cfg.checkpoint_every, "Trials between checkpoints");
    search->add_option("--hits", hits, "Append-only hit log (one JSON record per line)");
    search->add_flag("--resume", cfg.resume, "Continue from the checkpoint");
    search->add_flag("--quiet", quiet, "No progress output");

    // symbolic
    auto* sym = app.add_subcommand("symbolic", "Focal values as polynomials in the coefficients");
    int sym_n = 3;
    int sym_d = 3;
    std::string sym_conv = "N1";
    std::size_t max_terms = 5'000'000;
    bool sym_print = false;
    sym->add_option("-N,--count", sym_n, "Number of focal values")->check(CLI::PositiveNumber);
    sym->add_option("-d,--degree", sym_d, "System degree (2 or 3)")->check(CLI::IsMember({2, 3}));
    sym->add_option("--convention", sym_conv, "Normalization convention N1 or N2");
    sym->add_option("--max-terms", max_terms, "Abort when a polynomial exceeds this many terms");
    sym->add_flag("--print", sym_print, "Print the polynomials");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << (e.get_name() == "CallForVersion" ? std::string(kVersion) + "\n" : app.help());
            return kSuccess;
        }
        err << "error: " << e.what() << "\n";
        return kUsageError;
    }

    try {
        if (eval->parsed()) {
            auto sysfile = eval_in.load();
            const auto conv = parse_convention(eval_conv);
            std::string ring = eval_ring.empty() ? (sysfile.prime ? "fp" : "q") : eval_ring;
            if (!eval_write.empty()) {
                std::ofstream f(eval_write);
                if (!f) throw FormatError("cannot write '" + eval_write + "'");
                sysfile.write(f);
            }
            if (ring == "fp") {
                auto field = eval_in.field(sysfile);
                if (field.modulus() < static_cast<std::uint32_t>(2 * eval_n + 5))
                    throw RingError("p = " + std::to_string(field.modulus()) + " too small for N = " +
                                    std::to_string(eval_n) + ": need p >= 2N+5 = " + std::to_string(2 * eval_n + 5));
                auto seq = focal_values(field, cubic_system(sysfile.residues(field)), eval_n, conv);
                out << "ring = " << seq.ring << "\nconvention = " << to_string(conv) << "\n";
                for (int j = 1; j <= eval_n; ++j) out << "s_" << j << " = " << seq.s(j) << "\n";
                out << "first_nonzero = " << (seq.first_nonzero ? std::to_string(*seq.first_nonzero) : "none") << "\n";
            } else {
                RationalField q;
                auto seq = focal_values(q, cubic_system(sysfile.coefficients), eval_n, conv);
                out << "ring = Q\nconvention = " << to_string(conv) << "\n";
                for (int j = 1; j <= eval_n; ++j) out << "s_" << j << " = " << seq.s(j) << "\n";
                out << "first_nonzero = " << (seq.first_nonzero ? std::to_string(*seq.first_nonzero) : "none") << "\n";
            }
            return kSuccess;
        }

        if (verify->parsed()) {
            PrimeField field(kCubicFocusPrime);
            CubicCoefficients<Residue> point;
            for (std::size_t i = 0; i < kNumCoefficients; ++i) point[i] = field.from_int(kCubicFocus[i]);
            try {
                auto c = certify_point(field, point, verify_depth, parse_convention(verify_conv));
                out << c.str() << "result = PASS\n";
                return kSuccess;
            } catch (const CertificationError& e) {
                out << "result = FAIL\nreason = " << e.what() << "\n";
                return kHypothesisFailure;
            }
        }

        if (jac->parsed()) {
            auto sysfile = jac_in.load();
            auto field = jac_in.field(sysfile);
            auto m = jacobian(field, sysfile.residues(field), jac_k, parse_convention(jac_conv));
            print_matrix(out, m);
            out << "rank = " << rank_mod_p(field, m) << "\n";
            return kSuccess;
        }

        if (cert->parsed()) {
            if (!cert_recheck.empty()) {
                std::ifstream in(cert_recheck);
                if (!in) throw FormatError("cannot open certificate '" + cert_recheck + "'");
                try {
                    auto c = recheck_certificate(in);
                    out << "recheck = PASS\nprime = " << c.prime() << "\ndepth = " << c.depth() << "\n";
                    return kSuccess;
                } catch (const CertificationError& e) {
                    out << "recheck = FAIL\nreason = " << e.what() << "\n";
                    return kHypothesisFailure;
                }
            }
            auto sysfile = cert_in.load();
            auto field = cert_in.field(sysfile);
            try {
                auto c = certify_point(field, sysfile.residues(field), cert_k, parse_convention(cert_conv));
                if (!cert_out.empty()) {
                    std::ofstream f(cert_out, std::ios::binary);
                    if (!f) throw FormatError("cannot write '" + cert_out + "'");
                    c.write(f);
                }
                out << c.str() << "result = PASS\n";
                return kSuccess;
            } catch (const CertificationError& e) {
                out << "result = FAIL\nreason = " << e.what() << "\n";
                return kHypothesisFailure;
            }
        }

        if (search->parsed()) {
            cfg.strategy = parse_strategy(strategy);
            cfg.convention = parse_convention(search_conv);
            auto comma = coords.find(',');
            if (comma == std::string::npos) throw FormatError("--coords: expected two names like q30,p03");
            cfg.solve_first = coefficient_index(coords.substr(0, comma));
            cfg.solve_second = coefficient_index(coords.substr(comma + 1));
            cfg.checkpoint_path = checkpoint;
            cfg.hit_log_path = hits;
            cfg.validate();

            stop_flag() = false;
            auto previous = std::signal(SIGINT, [](int) { stop_flag() = true; });
            SearchCallbacks cb;
            cb.stop = &stop_flag();
            if (!quiet) {
                cb.on_progress = [&err](const SearchStats& s) {
                    err << "[search] trials=" << s.trials << " survivors=";
                    for (std::size_t d = 0; d < s.survivors.size(); ++d) err << (d ? "," : "") << s.survivors[d];
                    err << " hits=" << s.hits << " rate="
                        << static_cast<std::uint64_t>(s.elapsed_seconds > 0 ? s.trials / s.elapsed_seconds : 0)
                        << "/s\n";
                };
            }
            auto t0 = std::chrono::steady_clock::now();
            auto result = search_run(cfg, cb);
            std::signal(SIGINT, previous);
            double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
            out << "config_digest = " << config_digest(cfg) << "\n";
            print_stats(out, result.stats, secs);
            if (result.interrupted) out << "interrupted = yes (resume with --resume)\n";
            for (const auto& h : result.hits) out << "hit " << h.to_line() << "\n";
            return kSuccess;
        }

        if (sym->parsed()) {
            const auto conv = parse_convention(sym_conv);
            try {
                auto seq = symbolic_focal_values(sym_d, sym_n, conv, max_terms);
                out << "degree = " << sym_d << "\nconvention = " << to_string(conv) << "\n";
                for (int j = 1; j <= sym_n; ++j) {
                    const auto& s = seq.s(j);
                    out << "s_" << j << ": terms = " << s.size() << ", weighted_homogeneous_degree_" << 2 * j << " = "
                        << (s.is_weighted_homogeneous(2 * j) ? "yes" : "no") << "\n";
                    if (sym_print) out << "s_" << j << " = " << s.str() << "\n";
                }
                return kSuccess;
            } catch (const ResourceLimit& e) {
                err << "error: " << e.what() << "\n";
                return kUsageError;
            }
        }
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kUsageError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kUsageError;
    }
    return kUsageError;
}

}  // namespace focal::cli
