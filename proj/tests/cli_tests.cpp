#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <algorithm>
#include <cstdio>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "euclidzi/gaussian.hpp"
#include "euclidzi/phi.hpp"

// EUCLIDZI_BIN is injected by the build as the path of the CLI executable.

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output;  // stdout and stderr interleaved
};

RunResult run_cli(const std::string& args) {
    const std::string command = std::string(EUCLIDZI_BIN) + " " + args + " 2>&1";
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult result;
    char buffer[4096];
    std::size_t got = 0;
    while ((got = fread(buffer, 1, sizeof buffer, pipe)) > 0)
        result.output.append(buffer, got);
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> lines;
    std::string current;
    for (const char c : text) {
        if (c == '\n') {
            lines.push_back(current);
            current.clear();
        } else {
            current += c;
        }
    }
    if (!current.empty()) lines.push_back(current);
    return lines;
}

bool contains(const std::string& text, const std::string& needle) {
    return text.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("phi command prints values and maps errors to exit codes") {
    CHECK(run_cli("phi 90+44i").output == "11\n");
    CHECK(run_cli("phi 5").output == "3\n");
    CHECK(run_cli("phi -- -5").output == "3\n");

    const RunResult zero = run_cli("phi 0");
    CHECK(zero.exit_code == 3);
    CHECK(contains(zero.output, "phi undefined at 0"));

    const RunResult malformed = run_cli("phi 4+");
    CHECK(malformed.exit_code == 2);

    const RunResult huge = run_cli("phi 4611686018427387904");
    CHECK(huge.exit_code == 2);
}

TEST_CASE("phi --explain walks the evaluation steps") {
    const RunResult r = run_cli("phi 90+44i --explain");
    CHECK(r.exit_code == 0);
    CHECK(r.output ==
          "90+44i = 2^1 * (45+22i), so j = 1\n"
          "2^5 = 32 < 45 + 2 = 47 <= 48 = 2^5 + 2^4, so p = 5, m = 8\n"
          "45 + 22 + 3 = 70 > 64 = w_9, so the high branch applies\n"
          "phi = m + 2*j + 1 = 8 + 2 + 1 = 11\n");

    const RunResult low = run_cli("phi 5 --explain");
    CHECK(contains(low.output, "so the low branch applies"));
    CHECK(contains(low.output, "phi = m + 2*j = 3 + 0 = 3"));
}

TEST_CASE("phi json output carries the breakdown") {
    const RunResult r = run_cli("phi 90+44i --format json --explain");
    CHECK(r.exit_code == 0);
    const auto j = nlohmann::json::parse(r.output);
    CHECK(j["value"] == "90+44i");
    CHECK(j["phi"] == 11);
    CHECK(j["breakdown"]["j"] == 1);
    CHECK(j["breakdown"]["m"] == 8);
    CHECK(j["breakdown"]["p"] == 5);
    CHECK(j["breakdown"]["branch"] == "HIGH");

    const auto plain = nlohmann::json::parse(run_cli("phi 5 --format json").output);
    CHECK(plain["phi"] == 3);
    CHECK_FALSE(plain.contains("breakdown"));
}

TEST_CASE("expand and eval are mutual inverses") {
    CHECK(run_cli("expand 5").output == "mmmm\n");
    CHECK(run_cli("expand 90+44i").output == "m0111inn0m00\n");
    CHECK(run_cli("expand 0").output == "0\n");
    CHECK(run_cli("eval mmmm").output == "5\n");
    CHECK(run_cli("eval 100").output == "2i\n");
    CHECK(run_cli("eval m0111inn0m00").output == "90+44i\n");

    // Shell-level composition, digits flowing through a substitution.
    const std::string nested =
        std::string("eval $(") + EUCLIDZI_BIN + " expand 90+44i)";
    CHECK(run_cli(nested).output == "90+44i\n");

    const RunResult bad = run_cli("eval 10x1");
    CHECK(bad.exit_code == 4);
    CHECK(contains(bad.output, "bad digit character"));
}

TEST_CASE("expand and eval json follows the declared schema") {
    const auto j = nlohmann::json::parse(
        run_cli("expand 90+44i --format json").output);
    CHECK(j["value"] == "90+44i");
    CHECK(j["phi"] == 11);
    CHECK(j["digits"] == "m0111inn0m00");

    const auto zero = nlohmann::json::parse(run_cli("expand 0 --format json").output);
    CHECK(zero["value"] == "0");
    CHECK(zero["phi"].is_null());
    CHECK(zero["digits"] == "0");

    const auto back = nlohmann::json::parse(
        run_cli("eval m0111inn0m00 --format json").output);
    CHECK(back["value"] == "90+44i");
    CHECK(back["phi"] == 11);
    CHECK(back["digits"] == "m0111inn0m00");
}

TEST_CASE("region listings, layers and budgets") {
    const RunResult b1 = run_cli("region --kind B --n 1 --format plain");
    CHECK(b1.exit_code == 0);
    CHECK(lines_of(b1.output).size() == 17);

    const RunResult s0 = run_cli("region --kind S --n 0");
    CHECK(lines_of(s0.output) ==
          std::vector<std::string>{"-1", "-i", "i", "1"});

    const auto arr = nlohmann::json::parse(
        run_cli("region --kind B --n 3 --scheme doily --format json").output);
    REQUIRE(arr.is_array());
    CHECK(arr.size() == 125);
    int origin_count = 0;
    for (const auto& item : arr) {
        REQUIRE(item.size() == 3);
        CHECK(item.at("re").is_number_integer());
        CHECK(item.at("im").is_number_integer());
        const int layer = item.at("layer").get<int>();
        if (layer == -1) {
            ++origin_count;
            CHECK(item.at("re") == 0);
            CHECK(item.at("im") == 0);
        } else {
            CHECK(layer >= 0);
            CHECK(layer <= 3);
        }
    }
    CHECK(origin_count == 1);

    CHECK(run_cli("region --kind S --n 22").exit_code == 5);
    CHECK(run_cli("region --kind S --n 1 --scheme doily").exit_code == 2);
    CHECK(run_cli("region --kind X --n 1").exit_code == 2);
    CHECK(run_cli("region --kind B").exit_code == 2);
}

// The points with phi exactly n are the difference of consecutive B
// listings; the sorted plain output makes that a line-set difference.
TEST_CASE("consecutive region listings enumerate a phi preimage") {
    const RunResult inner = run_cli("region --kind B --n 0");
    const RunResult outer = run_cli("region --kind B --n 1");
    REQUIRE(inner.exit_code == 0);
    REQUIRE(outer.exit_code == 0);

    const auto small = lines_of(inner.output);
    std::vector<std::string> fresh;
    for (const std::string& line : lines_of(outer.output))
        if (std::find(small.begin(), small.end(), line) == small.end())
            fresh.push_back(line);

    CHECK(fresh.size() == 12);
    for (const std::string& line : fresh)
        CHECK(euclidzi::phi(euclidzi::parse_gaussian(line)) == 1);
}

TEST_CASE("region svg uses one fill per layer") {
    const RunResult r =
        run_cli("region --kind B --n 3 --scheme doily --format svg");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "<svg"));
    CHECK(contains(r.output, "</svg>"));

    std::set<std::string> fills;
    const std::string key = "fill=\"#";
    for (std::size_t pos = r.output.find(key); pos != std::string::npos;
         pos = r.output.find(key, pos + 1)) {
        fills.insert(r.output.substr(pos + 7, 6));
    }
    fills.erase("ffffff");  // canvas background
    CHECK(fills.size() == 4);
}

TEST_CASE("oracle command validates and reports counts") {
    const RunResult r = run_cli("oracle --max-n 3 --check all");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "125"));
    CHECK(contains(r.output, "phi:"));
    CHECK(contains(r.output, "decomp:"));
    CHECK(contains(r.output, "expansion:"));

    const RunResult units = run_cli("oracle --max-n 0 --check phi");
    CHECK(units.exit_code == 0);
    CHECK(contains(units.output, "4 points"));

    CHECK(run_cli("oracle --max-n 17").exit_code == 5);
}

TEST_CASE("bench streams are reproducible and an empty run is silent") {
    const RunResult a = run_cli("bench --count 12 --seed 9");
    const RunResult b = run_cli("bench --count 12 --seed 9");
    REQUIRE(a.exit_code == 0);
    REQUIRE(!lines_of(a.output).empty());
    const std::string first = lines_of(a.output).front();
    CHECK(first == lines_of(b.output).front());
    CHECK(first.rfind("count 12 seed 9 checksum 0x", 0) == 0);
    CHECK(lines_of(a.output).size() == 3);

    const RunResult empty = run_cli("bench --count 0");
    CHECK(empty.exit_code == 0);
    CHECK(empty.output.empty());
}

TEST_CASE("usage errors and help") {
    CHECK(run_cli("").exit_code == 2);
    CHECK(run_cli("frobnicate").exit_code == 2);
    CHECK(run_cli("phi").exit_code == 2);
    CHECK(run_cli("phi 5 --format yaml").exit_code == 2);

    const RunResult help = run_cli("--help");
    CHECK(help.exit_code == 0);
    CHECK(contains(help.output, "phi"));
    CHECK(contains(help.output, "region"));
}
