#include <algorithm>
#include <chrono>
#include <cstdint>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "euclidzi/expansion.hpp"
#include "euclidzi/gaussian.hpp"
#include "euclidzi/growth.hpp"
#include "euclidzi/mixer.hpp"
#include "euclidzi/oracle.hpp"
#include "euclidzi/phi.hpp"
#include "euclidzi/regions.hpp"
#include "euclidzi/render.hpp"

namespace {

using euclidzi::GaussianInt;
using json = nlohmann::ordered_json;

// Exit codes shared by all subcommands.
constexpr int kExitMismatch = 1;  // a cross-check found a counterexample
constexpr int kExitParse = 2;     // bad command line or gaussian literal
constexpr int kExitDomain = 3;    // operation undefined at the given value
constexpr int kExitDigits = 4;    // digit text outside the 0/1/n/i/m alphabet
constexpr int kExitBudget = 5;    // enumeration, oracle or range budget exceeded

std::optional<GaussianInt> parse_checked(const std::string& text) {
    try {
        return euclidzi::parse_gaussian(text);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return std::nullopt;
    }
}

/*
 * Renders the j / p,m / branch steps of a phi evaluation, one line each, in
 * the same order a by-hand computation runs: strip the common power of two,
 * place A+2 against the surrounding powers of two, then compare the
 * coordinate sum against w_{m+1} to pick the branch.
 */
std::string explain_text(GaussianInt g, const euclidzi::PhiBreakdown& bd) {
    const std::int64_t scale = std::int64_t{1} << bd.j;
    const GaussianInt reduced = euclidzi::make_gaussian(g.re / scale, g.im / scale);
    const std::uint64_t big =
        std::max(euclidzi::abs_coord(reduced.re), euclidzi::abs_coord(reduced.im));
    const std::uint64_t small =
        std::min(euclidzi::abs_coord(reduced.re), euclidzi::abs_coord(reduced.im));
    const std::uint64_t t = big + 2;
    const std::uint64_t pow_p = std::uint64_t{1} << bd.p;

    std::ostringstream out;
    out << euclidzi::format_gaussian(g) << " = 2^" << bd.j << " * ("
        << euclidzi::format_gaussian(reduced) << "), so j = " << bd.j << "\n";

    if (t == pow_p) {
        out << big << " + 2 = " << t << " = 2^" << bd.p << ", so p = " << bd.p
            << ", m = " << bd.m << "\n";
    } else if (t <= pow_p + pow_p / 2) {
        out << "2^" << bd.p << " = " << pow_p << " < " << big << " + 2 = " << t
            << " <= " << (pow_p + pow_p / 2) << " = 2^" << bd.p << " + 2^"
            << (bd.p - 1) << ", so p = " << bd.p << ", m = " << bd.m << "\n";
    } else {
        out << "2^" << bd.p << " + 2^" << (bd.p - 1) << " = " << (pow_p + pow_p / 2)
            << " < " << big << " + 2 = " << t << " < " << 2 * pow_p << " = 2^"
            << (bd.p + 1) << ", so p = " << bd.p << ", m = " << bd.m << "\n";
    }

    const std::uint64_t lhs = big + small + 3;
    const std::uint64_t bound = euclidzi::w(bd.m + 1);
    if (bd.branch == euclidzi::PhiBranch::low) {
        out << big << " + " << small << " + 3 = " << lhs << " <= " << bound
            << " = w_" << (bd.m + 1) << ", so the low branch applies\n";
        out << "phi = m + 2*j = " << bd.m << " + " << 2 * bd.j << " = " << bd.phi
            << "\n";
    } else {
        out << big << " + " << small << " + 3 = " << lhs << " > " << bound
            << " = w_" << (bd.m + 1) << ", so the high branch applies\n";
        out << "phi = m + 2*j + 1 = " << bd.m << " + " << 2 * bd.j << " + 1 = "
            << bd.phi << "\n";
    }
    return out.str();
}

int cmd_phi(const std::string& text, bool explain, const std::string& format) {
    const auto g = parse_checked(text);
    if (!g) return kExitParse;

    euclidzi::PhiBreakdown bd;
    try {
        bd = euclidzi::phi_breakdown(*g);
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomain;
    }

    if (format == "json") {
        json out;
        out["value"] = euclidzi::format_gaussian(*g);
        out["phi"] = bd.phi;
        if (explain) {
            out["breakdown"] = {
                {"j", bd.j},
                {"m", bd.m},
                {"p", bd.p},
                {"branch", bd.branch == euclidzi::PhiBranch::low ? "LOW" : "HIGH"}};
        }
        std::cout << out.dump() << "\n";
    } else if (explain) {
        std::cout << explain_text(*g, bd);
    } else {
        std::cout << bd.phi << "\n";
    }
    return 0;
}

int cmd_expand(const std::string& text, const std::string& format) {
    const auto g = parse_checked(text);
    if (!g) return kExitParse;

    const euclidzi::Expansion e = euclidzi::minimal_expansion(*g);
    if (format == "json") {
        json out;
        out["value"] = euclidzi::format_gaussian(*g);
        if (g->is_zero())
            out["phi"] = nullptr;
        else
            out["phi"] = static_cast<int>(e.digits.size()) - 1;
        out["digits"] = euclidzi::digits_to_text(e);
        std::cout << out.dump() << "\n";
    } else {
        std::cout << euclidzi::digits_to_text(e) << "\n";
    }
    return 0;
}

int cmd_eval(const std::string& text, const std::string& format) {
    euclidzi::Expansion e;
    try {
        e = euclidzi::text_to_digits(text);
    } catch (const std::invalid_argument& err) {
        std::cerr << "error: " << err.what() << "\n";
        return kExitDigits;
    }

    GaussianInt value;
    try {
        value = euclidzi::eval_expansion(e);
    } catch (const std::overflow_error& err) {
        std::cerr << "error: " << err.what() << "\n";
        return kExitBudget;
    }

    if (format == "json") {
        json out;
        out["value"] = euclidzi::format_gaussian(value);
        if (value.is_zero())
            out["phi"] = nullptr;
        else
            out["phi"] = euclidzi::phi(value);
        out["digits"] = text;
        std::cout << out.dump() << "\n";
    } else {
        std::cout << euclidzi::format_gaussian(value) << "\n";
    }
    return 0;
}

int cmd_region(euclidzi::RegionKind kind, int n,
               std::optional<euclidzi::DecompScheme> scheme,
               const std::string& format) {
    if (scheme && kind != euclidzi::RegionKind::B) {
        std::cerr << "error: --scheme applies only to --kind B\n";
        return kExitParse;
    }

    const euclidzi::RegionSpec spec{kind, n};
    std::vector<GaussianInt> points;
    try {
        points = euclidzi::enumerate_region(spec);
    } catch (const std::length_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBudget;
    }

    if (format == "svg") {
        std::cout << euclidzi::render_region_svg(spec, scheme);
    } else if (format == "json") {
        json arr = json::array();
        for (const GaussianInt g : points) {
            int layer = -1;
            if (scheme && !g.is_zero())
                layer = euclidzi::decomposition_layer(g, n, *scheme);
            arr.push_back({{"re", g.re}, {"im", g.im}, {"layer", layer}});
        }
        std::cout << arr.dump() << "\n";
    } else {
        for (const GaussianInt g : points)
            std::cout << euclidzi::format_gaussian(g) << "\n";
    }
    return 0;
}

bool check_phi(const euclidzi::LevelMap& levels) {
    std::size_t checked = 0;
    for (const auto& [g, level] : levels.sorted_entries()) {
        if (g.is_zero()) continue;
        const int reference = euclidzi::phi(g);
        const int fast = euclidzi::phi_fast(g);
        if (reference != level || fast != level) {
            std::cout << "phi mismatch at " << euclidzi::format_gaussian(g)
                      << ": formula " << reference << ", fast " << fast
                      << ", oracle " << level << "\n";
            return false;
        }
        ++checked;
    }
    std::cout << "phi: " << checked << " points agree with the formula\n";
    return true;
}

bool check_decomp(const euclidzi::LevelMap& levels) {
    std::vector<GaussianInt> accumulated;
    for (int n = 0; n <= levels.max_level(); ++n) {
        for (const GaussianInt g : levels.points_at_level(n)) accumulated.push_back(g);
        std::sort(accumulated.begin(), accumulated.end());

        const auto enumerated =
            euclidzi::enumerate_region({euclidzi::RegionKind::B, n});
        if (enumerated != accumulated) {
            std::cout << "decomp mismatch: enumerate_region(B, " << n
                      << ") disagrees with the level sets\n";
            return false;
        }

        std::vector<GaussianInt> nonzero;
        nonzero.reserve(accumulated.size() - 1);
        for (const GaussianInt g : accumulated)
            if (!g.is_zero()) nonzero.push_back(g);

        for (const auto scheme :
             {euclidzi::DecompScheme::snowflake, euclidzi::DecompScheme::doily}) {
            std::vector<GaussianInt> covered;
            for (const auto& term : euclidzi::layer_decomposition(n, scheme))
                for (const GaussianInt p : euclidzi::enumerate_region(term.spec))
                    covered.push_back(euclidzi::apply_layer_scale(term, p));
            std::sort(covered.begin(), covered.end());
            if (std::adjacent_find(covered.begin(), covered.end()) != covered.end()) {
                std::cout << "decomp mismatch: overlapping layers at n = " << n << "\n";
                return false;
            }
            if (covered != nonzero) {
                std::cout << "decomp mismatch: layers do not cover B_" << n
                          << " \\ 0\n";
                return false;
            }
        }
    }
    std::cout << "decomp: enumeration and both layerings match at every level\n";
    return true;
}

bool check_expansion(const euclidzi::LevelMap& levels) {
    std::size_t checked = 0;
    for (const auto& [g, level] : levels.sorted_entries()) {
        if (g.is_zero()) continue;
        const auto expected = static_cast<std::size_t>(level) + 1;
        const euclidzi::Expansion e = euclidzi::minimal_expansion(g);
        if (euclidzi::eval_expansion(e) != g || e.digits.size() != expected) {
            std::cout << "expansion mismatch at " << euclidzi::format_gaussian(g)
                      << ": got length " << e.digits.size() << ", oracle wants "
                      << expected << "\n";
            return false;
        }
        const euclidzi::Expansion cert = levels.certificate(g);
        if (euclidzi::eval_expansion(cert) != g || cert.digits.size() != expected) {
            std::cout << "expansion mismatch: bad oracle certificate at "
                      << euclidzi::format_gaussian(g) << "\n";
            return false;
        }
        ++checked;
    }
    std::cout << "expansion: " << checked << " minimal lengths match the oracle\n";
    return true;
}

int cmd_oracle(int max_n, const std::string& check) {
    euclidzi::LevelMap levels;
    try {
        levels = euclidzi::bfs_levels(max_n);
    } catch (const std::length_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBudget;
    }

    const auto totals = levels.cumulative_counts();
    std::cout << "level      new    total\n";
    std::size_t previous = 0;
    for (std::size_t n = 0; n < totals.size(); ++n) {
        std::cout << std::setw(5) << n << std::setw(9) << totals[n] - previous
                  << std::setw(9) << totals[n] << "\n";
        previous = totals[n];
    }

    bool ok = true;
    if (check == "phi" || check == "all") ok = check_phi(levels) && ok;
    if (check == "decomp" || check == "all") ok = check_decomp(levels) && ok;
    if (check == "expansion" || check == "all") ok = check_expansion(levels) && ok;
    return ok ? 0 : kExitMismatch;
}

int cmd_bench(std::int64_t count, std::uint64_t seed) {
    if (count == 0) return 0;

    std::vector<GaussianInt> inputs;
    inputs.reserve(static_cast<std::size_t>(count));
    euclidzi::SplitMix64 rng(seed);
    std::uint64_t checksum = 0;
    for (std::int64_t k = 0; k < count; ++k) {
        const std::uint64_t a = rng.next();
        const std::uint64_t b = rng.next();
        checksum = (checksum ^ a) * 0x100000001b3ULL;
        checksum = (checksum ^ b) * 0x100000001b3ULL;
        // 60-bit signed coordinates; nudge the rare origin off zero.
        std::int64_t re = static_cast<std::int64_t>(a >> 4) - (std::int64_t{1} << 59);
        const std::int64_t im =
            static_cast<std::int64_t>(b >> 4) - (std::int64_t{1} << 59);
        if (re == 0 && im == 0) re = 1;
        inputs.push_back(euclidzi::make_gaussian(re, im));
    }
    std::cout << "count " << count << " seed " << seed << " checksum 0x"
              << std::hex << checksum << std::dec << "\n";

    using clock = std::chrono::steady_clock;

    auto t0 = clock::now();
    std::uint64_t phi_digest = 0;
    for (const GaussianInt g : inputs)
        phi_digest += static_cast<std::uint64_t>(euclidzi::phi_fast(g));
    double elapsed = std::chrono::duration<double>(clock::now() - t0).count();
    elapsed = std::max(elapsed, 1e-9);
    std::cout << "phi_fast " << count << " evals in " << elapsed << " s, "
              << static_cast<std::uint64_t>(static_cast<double>(count) / elapsed)
              << " evals/s (digest " << phi_digest << ")\n";

    t0 = clock::now();
    std::uint64_t digit_digest = 0;
    for (const GaussianInt g : inputs)
        digit_digest += euclidzi::minimal_expansion(g).digits.size();
    elapsed = std::max(std::chrono::duration<double>(clock::now() - t0).count(), 1e-9);
    std::cout << "minimal_expansion " << count << " evals in " << elapsed << " s, "
              << static_cast<std::uint64_t>(static_cast<double>(count) / elapsed)
              << " evals/s (digest " << digit_digest << ")\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"minimal Euclidean function and base-(1+i) expansions on Z[i]"};
    app.require_subcommand(1);

    std::string phi_value;
    bool phi_explain = false;
    std::string phi_format = "plain";
    auto* phi_cmd = app.add_subcommand("phi", "compute phi of a gaussian integer");
    phi_cmd->add_option("value", phi_value, "gaussian literal, e.g. 90+44i (put -- first for negative values)")
        ->required();
    phi_cmd->add_flag("--explain", phi_explain, "print the j, p, m and branch steps");
    phi_cmd->add_option("--format", phi_format, "plain or json")
        ->check(CLI::IsMember({"plain", "json"}));

    std::string expand_value;
    std::string expand_format = "plain";
    auto* expand_cmd =
        app.add_subcommand("expand", "shortest base-(1+i) digit string of a value");
    expand_cmd->add_option("value", expand_value, "gaussian literal")->required();
    expand_cmd->add_option("--format", expand_format, "plain or json")
        ->check(CLI::IsMember({"plain", "json"}));

    std::string eval_digits;
    std::string eval_format = "plain";
    auto* eval_cmd =
        app.add_subcommand("eval", "evaluate a digit string back to a value");
    eval_cmd->add_option("digits", eval_digits, "digit text over 0/1/n/i/m, most significant first")
        ->required();
    eval_cmd->add_option("--format", eval_format, "plain or json")
        ->check(CLI::IsMember({"plain", "json"}));

    std::string region_kind;
    int region_n = 0;
    std::string region_scheme;
    std::string region_format = "plain";
    auto* region_cmd = app.add_subcommand("region", "enumerate or draw a lattice region");
    region_cmd->add_option("--kind", region_kind, "S, D or B")
        ->required()
        ->check(CLI::IsMember({"S", "D", "B"}));
    region_cmd->add_option("--n", region_n, "region index")
        ->required()
        ->check(CLI::NonNegativeNumber);
    region_cmd->add_option("--scheme", region_scheme, "layer B by snowflake or doily copies")
        ->check(CLI::IsMember({"snowflake", "doily"}));
    region_cmd->add_option("--format", region_format, "plain, json or svg")
        ->check(CLI::IsMember({"plain", "json", "svg"}));

    int oracle_max_n = 8;
    std::string oracle_check = "all";
    auto* oracle_cmd =
        app.add_subcommand("oracle", "cross-check the formulas against brute force");
    oracle_cmd->add_option("--max-n", oracle_max_n, "deepest level to build (at most 16)")
        ->check(CLI::NonNegativeNumber);
    oracle_cmd->add_option("--check", oracle_check, "phi, decomp, expansion or all")
        ->check(CLI::IsMember({"phi", "decomp", "expansion", "all"}));

    std::int64_t bench_count = 1000000;
    std::uint64_t bench_seed = 1;
    auto* bench_cmd =
        app.add_subcommand("bench", "throughput of phi_fast and minimal_expansion");
    bench_cmd->add_option("--count", bench_count, "number of random inputs")
        ->check(CLI::NonNegativeNumber);
    bench_cmd->add_option("--seed", bench_seed, "stream seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitParse;
    }

    if (app.got_subcommand(phi_cmd)) return cmd_phi(phi_value, phi_explain, phi_format);
    if (app.got_subcommand(expand_cmd)) return cmd_expand(expand_value, expand_format);
    if (app.got_subcommand(eval_cmd)) return cmd_eval(eval_digits, eval_format);
    if (app.got_subcommand(region_cmd)) {
        const euclidzi::RegionKind kind = region_kind == "S"   ? euclidzi::RegionKind::S
                                          : region_kind == "D" ? euclidzi::RegionKind::D
                                                               : euclidzi::RegionKind::B;
        std::optional<euclidzi::DecompScheme> scheme;
        if (region_scheme == "snowflake") scheme = euclidzi::DecompScheme::snowflake;
        if (region_scheme == "doily") scheme = euclidzi::DecompScheme::doily;
        return cmd_region(kind, region_n, scheme, region_format);
    }
    if (app.got_subcommand(oracle_cmd)) return cmd_oracle(oracle_max_n, oracle_check);
    if (app.got_subcommand(bench_cmd)) return cmd_bench(bench_count, bench_seed);
    return 0;
}
