#pragma once

// Command-line front end.  Subcommands: basis, cycle, rays, param, check,
// validate.  Input is either a matrix file (--matrix) or a built-in family
// (--family KIND:PARAMS).  Exit codes: 0 success, 1 invalid input,
// 2 resource limit, 3 oracle mismatch, 64 usage error.

#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "lipman/divisor_model.hpp"
#include "lipman/errors.hpp"
#include "lipman/families.hpp"
#include "lipman/hilbert_engine.hpp"
#include "lipman/json_render.hpp"
#include "lipman/lipman_api.hpp"
#include "lipman/matrix_io.hpp"

namespace lipman::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalidInput = 1;
inline constexpr int kExitResourceLimit = 2;
inline constexpr int kExitOracleMismatch = 3;
inline constexpr int kExitUsage = 64;

namespace detail {

inline std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::string cur;
    for (char ch : s) {
        if (ch == sep) {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    parts.push_back(cur);
    return parts;
}

inline long parse_long(const std::string& tok, const std::string& what) {
    try {
        std::size_t pos = 0;
        const long v = std::stol(tok, &pos);
        if (pos != tok.size()) throw std::invalid_argument(tok);
        return v;
    } catch (const std::exception&) {
        throw InvalidParamsError("cannot parse " + what + ": '" + tok + "'");
    }
}

inline std::vector<long> parse_weight_list(const std::string& s,
                                           const std::string& what) {
    std::vector<long> weights;
    for (const std::string& tok : split(s, ','))
        weights.push_back(parse_long(tok, what));
    return weights;
}

// KIND:PARAMS, e.g. a:3, d:5, e8, chain:2,3,4, star:2:2,2:2,2:2
inline IntersectionMatrix family_matrix(const std::string& spec) {
    const std::size_t colon = spec.find(':');
    const std::string kind = spec.substr(0, colon);
    const std::string params =
        colon == std::string::npos ? "" : spec.substr(colon + 1);
    if (kind == "a" || kind == "d") {
        if (params.empty())
            throw InvalidParamsError("family '" + kind + "' needs a size, e.g. " +
                                     kind + ":4");
        const long n = parse_long(params, "family size");
        if (n < 1) throw InvalidParamsError("family size must be >= 1");
        return kind == "a" ? a_family(static_cast<std::size_t>(n))
                           : d_family(static_cast<std::size_t>(n));
    }
    if (kind == "e6" || kind == "e7" || kind == "e8") {
        if (!params.empty())
            throw InvalidParamsError("family '" + kind + "' takes no parameters");
        return e_family(static_cast<std::size_t>(kind[1] - '0'));
    }
    if (kind == "chain") {
        if (params.empty())
            throw InvalidParamsError("family 'chain' needs weights, e.g. chain:2,3");
        return chain_matrix(parse_weight_list(params, "chain weight"));
    }
    if (kind == "star") {
        const std::vector<std::string> parts = split(params, ':');
        if (parts.size() < 2 || parts[0].empty())
            throw InvalidParamsError(
                "family 'star' needs a center weight and arms, e.g. star:2:2,2:2");
        const long center = parse_long(parts[0], "star center weight");
        std::vector<std::vector<long>> arms;
        for (std::size_t i = 1; i < parts.size(); ++i)
            arms.push_back(parse_weight_list(parts[i], "star arm weight"));
        return star_matrix(center, arms);
    }
    throw InvalidParamsError("unknown family kind '" + kind +
                             "' (expected a, d, e6, e7, e8, chain, star)");
}

inline std::string render_vector(const IntVector& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ' ';
        s += v[i].get_str();
    }
    return s;
}

inline std::string render_rational(const Rational& r) {
    std::string s = r.get_num().get_str();
    if (r.get_den() != 1) s += "/" + r.get_den().get_str();
    return s;
}

inline std::string render_monomial(const IntVector& exponents) {
    std::string s;
    for (std::size_t i = 0; i < exponents.size(); ++i) {
        if (exponents[i] == 0) continue;
        if (!s.empty()) s += "*";
        s += "u" + std::to_string(i + 1);
        if (exponents[i] != 1) s += "^" + exponents[i].get_str();
    }
    return s.empty() ? "1" : s;
}

inline void render_rays_text(const RaySystem& rays, std::ostream& out) {
    const std::size_t n = rays.multipliers.size();
    for (std::size_t i = 0; i < n; ++i) {
        out << "F_" << (i + 1) << " = (";
        for (std::size_t j = 0; j < n; ++j) {
            if (j) out << ", ";
            out << render_rational(rays.rays(j, i));
        }
        out << ")  g_" << (i + 1) << " = " << rays.multipliers[i].get_str()
            << "  g_" << (i + 1) << "*F_" << (i + 1) << " = ("
            << [&] {
                   std::string s;
                   const IntVector& ir = rays.integer_rays[i].coeffs;
                   for (std::size_t j = 0; j < ir.size(); ++j) {
                       if (j) s += ", ";
                       s += ir[j].get_str();
                   }
                   return s;
               }()
            << ")\n";
    }
}

inline void render_report_text(const LipmanReport& report, bool timing,
                               std::int64_t wall_ms, std::ostream& out) {
    const std::size_t n = report.matrix.n();
    out << "n: " << n << "\n";
    out << "fundamental cycle: " << render_vector(report.fundamental_cycle.coeffs)
        << "\n";
    out << "rays:\n";
    std::ostringstream rays_buf;
    render_rays_text(report.rays, rays_buf);
    std::istringstream rays_in(rays_buf.str());
    std::string line;
    while (std::getline(rays_in, line)) out << "  " << line << "\n";
    out << "hilbert basis of S (m | d):\n";
    for (const SolutionVector& v : report.hilbert_S.elements) {
        out << "  ";
        for (std::size_t j = 0; j < n; ++j) {
            if (j) out << ' ';
            out << v.v[j].get_str();
        }
        out << " | ";
        for (std::size_t j = 0; j < n; ++j) {
            if (j) out << ' ';
            out << v.v[n + j].get_str();
        }
        out << "\n";
    }
    out << "lipman semigroup generators:\n";
    for (const Divisor& g : report.generators)
        out << "  " << render_vector(g.coeffs) << "\n";
    out << "parametrization of the toric variety:\n";
    for (const IntVector& e : report.parametrization.exponent_vectors)
        out << "  " << render_monomial(e) << "\n";
    out << "stats: " << report.stats.node_expansions << " node expansions";
    if (timing) out << ", " << wall_ms << " ms";
    out << "\n";
}

struct CommonArgs {
    std::string matrix_path;
    std::string family;
    bool json = false;
    bool allow_disconnected = false;
    bool timing = false;
    std::optional<std::uint64_t> node_budget;  // flag value, wins over env
    std::optional<unsigned> threads;
    std::optional<std::int64_t> bound;  // check only
};

inline void add_common_options(CLI::App* cmd, CommonArgs& args,
                               bool with_bound) {
    cmd->add_option("--matrix", args.matrix_path,
                    "path to a matrix file (line 1: n; then n rows; # comments)");
    cmd->add_option("--family", args.family,
                    "built-in family KIND:PARAMS (a:N, d:N, e6, e7, e8, "
                    "chain:W1,W2,..., star:CENTER:ARM1:ARM2:...)");
    cmd->add_flag("--json", args.json, "emit JSON instead of text");
    cmd->add_flag("--allow-disconnected", args.allow_disconnected,
                  "accept disconnected intersection graphs (skips positivity "
                  "and fundamental-cycle assertions)");
    cmd->add_flag("--timing", args.timing,
                  "include wall time in output (makes output non-reproducible)");
    cmd->add_option("--node-budget", args.node_budget,
                    "engine node budget (default 10000000; env "
                    "LIPMAN_NODE_BUDGET; the flag wins)");
    cmd->add_option("--threads", args.threads,
                    "engine worker threads (default 1; env LIPMAN_THREADS; "
                    "the flag wins)");
    if (with_bound)
        cmd->add_option("--bound", args.bound,
                        "coordinate-sum bound for the brute-force oracle "
                        "(default: max(25, 2 * max basis coordinate sum))");
}

inline std::uint64_t env_or(const char* name, std::uint64_t fallback) {
    const char* raw = std::getenv(name);
    if (!raw || !*raw) return fallback;
    try {
        std::size_t pos = 0;
        const unsigned long long v = std::stoull(raw, &pos);
        if (pos != std::string(raw).size()) throw std::invalid_argument(raw);
        return v;
    } catch (const std::exception&) {
        throw InvalidParamsError(std::string("invalid ") + name + ": '" + raw +
                                 "'");
    }
}

inline IntersectionMatrix load_matrix(const CommonArgs& args) {
    const bool have_matrix = !args.matrix_path.empty();
    const bool have_family = !args.family.empty();
    if (have_matrix == have_family)
        throw InvalidParamsError(
            "exactly one of --matrix and --family is required");
    if (have_family) return family_matrix(args.family);
    return validate(read_matrix_file(args.matrix_path), args.allow_disconnected);
}

inline AnalyzeOptions analyze_options(const CommonArgs& args) {
    AnalyzeOptions options;
    options.node_budget =
        args.node_budget ? *args.node_budget : env_or("LIPMAN_NODE_BUDGET", 10'000'000);
    options.threads = args.threads
                          ? *args.threads
                          : static_cast<unsigned>(env_or("LIPMAN_THREADS", 1));
    if (options.threads < 1) options.threads = 1;
    return options;
}

inline Int max_coordinate_sum(const HilbertBasis& basis) {
    Int best = 0;
    for (const SolutionVector& v : basis.elements) {
        Int s = 0;
        for (const Int& x : v.v) s += x;
        if (s > best) best = s;
    }
    return best;
}

inline int run_validate(const CommonArgs& args, std::ostream& out) {
    // run the checks one at a time so the diagnostics show how far the
    // matrix got; order matches validate()
    IntMatrix raw;
    try {
        if (!args.family.empty()) {
            raw = family_matrix(args.family).matrix();
        } else {
            raw = read_matrix_file(args.matrix_path);
        }
    } catch (const InvalidParamsError&) {
        throw;
    } catch (const Error& e) {
        if (args.json) {
            nlohmann::json j;
            j["valid"] = false;
            j["error"] = e.what();
            out << dump_json(j);
        } else {
            out << "invalid: " << e.what() << "\n";
        }
        return kExitInvalidInput;
    }
    std::string failure;
    try {
        validate(raw, args.allow_disconnected);
    } catch (const Error& e) {
        failure = e.what();
    }
    const std::size_t n = raw.rows();
    if (args.json) {
        nlohmann::json j;
        j["n"] = static_cast<std::int64_t>(n);
        j["valid"] = failure.empty();
        if (!failure.empty()) j["error"] = failure;
        out << dump_json(j);
    } else {
        out << "n: " << n << "\n";
        if (failure.empty()) {
            out << "valid intersection matrix\n";
        } else {
            out << "invalid: " << failure << "\n";
        }
    }
    return failure.empty() ? kExitOk : kExitInvalidInput;
}

inline int run_check(const CommonArgs& args, std::ostream& out) {
    const IntersectionMatrix M = load_matrix(args);
    const AnalyzeOptions options = analyze_options(args);
    const LipmanReport report = analyze(M, options);

    Int bound;
    if (args.bound) {
        if (*args.bound < 1) throw InvalidParamsError("--bound must be >= 1");
        bound = Int(static_cast<long>(*args.bound));
    } else {
        const Int maxsum = max_coordinate_sum(report.hilbert_S);
        bound = maxsum * 2;
        if (bound < 25) bound = 25;
    }

    const KernelProblem problem = doubled_matrix(M);
    const HilbertBasis brute = brute_force_basis(problem, bound);

    // compare against the engine basis truncated to the bound: brute force
    // cannot see elements whose coordinate sum exceeds it
    std::vector<IntVector> engine_within;
    for (const SolutionVector& v : report.hilbert_S.elements) {
        Int s = 0;
        for (const Int& x : v.v) s += x;
        if (s <= bound) engine_within.push_back(v.v);
    }
    std::vector<IntVector> brute_vecs;
    for (const SolutionVector& v : brute.elements) brute_vecs.push_back(v.v);

    const bool agree = engine_within == brute_vecs;
    if (args.json) {
        nlohmann::json j;
        j["agree"] = agree;
        j["bound"] = lipman::detail::json_int(bound);
        j["engine_total"] = static_cast<std::int64_t>(report.hilbert_S.elements.size());
        j["engine_within_bound"] = static_cast<std::int64_t>(engine_within.size());
        j["brute_within_bound"] = static_cast<std::int64_t>(brute_vecs.size());
        out << dump_json(j);
    } else {
        out << "engine basis: " << report.hilbert_S.elements.size()
            << " elements, " << engine_within.size() << " within bound "
            << bound.get_str() << "\n";
        out << "brute-force basis within bound: " << brute_vecs.size()
            << " elements\n";
        if (agree) {
            out << "agreement: yes\n";
        } else {
            out << "agreement: NO\n";
            for (const IntVector& v : brute_vecs)
                if (std::find(engine_within.begin(), engine_within.end(), v) ==
                    engine_within.end())
                    out << "  only in brute force: " << render_vector(v) << "\n";
            for (const IntVector& v : engine_within)
                if (std::find(brute_vecs.begin(), brute_vecs.end(), v) ==
                    brute_vecs.end())
                    out << "  only in engine: " << render_vector(v) << "\n";
        }
    }
    return agree ? kExitOk : kExitOracleMismatch;
}

}  // namespace detail

// Entry point shared by main() and the tests.  Returns the process exit code.
inline int run(const std::vector<std::string>& args, std::ostream& out,
               std::ostream& err) {
    CLI::App app{
        "Hilbert basis of the Lipman semigroup and toric parametrization\n"
        "from the intersection matrix of a resolution, via the doubled\n"
        "kernel system [M | I]."};
    app.require_subcommand(1);
    app.fallthrough(false);

    detail::CommonArgs args_basis, args_cycle, args_rays, args_param,
        args_check, args_validate;
    CLI::App* cmd_basis =
        app.add_subcommand("basis", "full report: basis, generators, rays, "
                                    "cycle, parametrization");
    detail::add_common_options(cmd_basis, args_basis, false);
    CLI::App* cmd_cycle =
        app.add_subcommand("cycle", "fundamental cycle only");
    detail::add_common_options(cmd_cycle, args_cycle, false);
    CLI::App* cmd_rays = app.add_subcommand("rays", "cone rays and multipliers");
    detail::add_common_options(cmd_rays, args_rays, false);
    CLI::App* cmd_param =
        app.add_subcommand("param", "toric parametrization exponents");
    detail::add_common_options(cmd_param, args_param, false);
    CLI::App* cmd_check = app.add_subcommand(
        "check", "diff the engine against the brute-force oracle");
    detail::add_common_options(cmd_check, args_check, true);
    CLI::App* cmd_validate =
        app.add_subcommand("validate", "matrix diagnostics only");
    detail::add_common_options(cmd_validate, args_validate, false);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return kExitOk;
        }
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (cmd_validate->parsed()) {
            // validate handles matrix errors itself (they are its output)
            const detail::CommonArgs& a = args_validate;
            const bool have_matrix = !a.matrix_path.empty();
            const bool have_family = !a.family.empty();
            if (have_matrix == have_family)
                throw InvalidParamsError(
                    "exactly one of --matrix and --family is required");
            return detail::run_validate(a, out);
        }
        if (cmd_cycle->parsed()) {
            const IntersectionMatrix M = detail::load_matrix(args_cycle);
            const Divisor z = fundamental_cycle(M);
            if (args_cycle.json) {
                nlohmann::json j;
                j["n"] = static_cast<std::int64_t>(M.n());
                j["fundamental_cycle"] = lipman::detail::json_vector(z.coeffs);
                out << dump_json(j);
            } else {
                out << detail::render_vector(z.coeffs) << "\n";
            }
            return kExitOk;
        }
        if (cmd_rays->parsed()) {
            const IntersectionMatrix M = detail::load_matrix(args_rays);
            const RaySystem rays = ray_system(M);
            if (args_rays.json) {
                nlohmann::json j;
                j["n"] = static_cast<std::int64_t>(M.n());
                j["rays"] = lipman::detail::json_rays(rays);
                j["multipliers"] = lipman::detail::json_multipliers(rays);
                nlohmann::json irs = nlohmann::json::array();
                for (const Divisor& d : rays.integer_rays)
                    irs.push_back(lipman::detail::json_vector(d.coeffs));
                j["integer_rays"] = std::move(irs);
                out << dump_json(j);
            } else {
                detail::render_rays_text(rays, out);
            }
            return kExitOk;
        }
        if (cmd_basis->parsed() || cmd_param->parsed()) {
            const detail::CommonArgs& a =
                cmd_basis->parsed() ? args_basis : args_param;
            const IntersectionMatrix M = detail::load_matrix(a);
            const AnalyzeOptions options = detail::analyze_options(a);
            const auto t0 = std::chrono::steady_clock::now();
            const LipmanReport report = analyze(M, options);
            const auto t1 = std::chrono::steady_clock::now();
            const std::int64_t wall_ms =
                std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0)
                    .count();
            if (cmd_param->parsed()) {
                if (a.json) {
                    nlohmann::json j;
                    j["n"] = static_cast<std::int64_t>(M.n());
                    nlohmann::json par = nlohmann::json::array();
                    for (const IntVector& e :
                         report.parametrization.exponent_vectors)
                        par.push_back(lipman::detail::json_vector(e));
                    j["parametrization"] = std::move(par);
                    out << dump_json(j);
                } else {
                    for (const IntVector& e :
                         report.parametrization.exponent_vectors)
                        out << detail::render_monomial(e) << "\n";
                }
            } else {
                if (a.json) {
                    out << dump_json(report_to_json(report, a.timing, wall_ms));
                } else {
                    detail::render_report_text(report, a.timing, wall_ms, out);
                }
            }
            return kExitOk;
        }
        if (cmd_check->parsed()) return detail::run_check(args_check, out);
        err << "error: no subcommand\n";
        return kExitUsage;
    } catch (const ResourceLimitError& e) {
        err << "error: " << e.what() << "\n";
        return kExitResourceLimit;
    } catch (const InvalidParamsError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kExitInvalidInput;
    }
}

inline int run_main(int argc, char** argv) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    return run(args, std::cout, std::cerr);
}

}  // namespace lipman::cli
