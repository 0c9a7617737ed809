// End-to-end checks of the installed command-line surface: exit codes, printed
// f-vectors, emitted files, and byte-identical reruns.

#include <catch2/catch_amalgamated.hpp>

#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <unistd.h>

namespace {

namespace fs = std::filesystem;

struct RunResult {
    int exit_code;
    std::string output;
};

const fs::path& work_dir() {
    static const fs::path dir = [] {
        auto d = fs::temp_directory_path() / ("halo_cli_test_" + std::to_string(::getpid()));
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

RunResult run_cli(const std::string& args, const std::string& env_prefix = "") {
    const fs::path out_file = work_dir() / "stdout.txt";
    const std::string cmd = env_prefix + (env_prefix.empty() ? "" : " ") +
                            std::string(HALO_CLI_PATH) + " " + args + " > " + out_file.string() +
                            " 2>&1";
    const int status = std::system(cmd.c_str());
    RunResult result;
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    std::ifstream in(out_file);
    std::stringstream buffer;
    buffer << in.rdbuf();
    result.output = buffer.str();
    return result;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

}  // namespace

TEST_CASE("cli build prints f-vectors") {
    auto r = run_cli("build --object halo --n 2");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "5 5\n");

    r = run_cli("build --object k --n 5");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "14 21 9\n");

    r = run_cli("build --object w --n 3");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "6 6\n");
}

TEST_CASE("cli build accepts graph files") {
    const fs::path g1 = work_dir() / "path1.json";
    std::ofstream(g1) << R"({"family": "path", "n": 1})";
    auto r = run_cli("build --object graph-cube --graph " + g1.string());
    CHECK(r.exit_code == 0);
    CHECK(r.output == "2\n");

    const fs::path g2 = work_dir() / "triangle.json";
    std::ofstream(g2) << R"({"nodes": 3, "edges": [[1,2],[2,3],[1,3]]})";
    r = run_cli("build --object graph-assoc --graph " + g2.string());
    CHECK(r.exit_code == 0);
    CHECK(r.output == "6 6\n");
}

TEST_CASE("cli build writes poset and geometry files deterministically") {
    const fs::path prefix = work_dir() / "k5";
    const auto r = run_cli("build --object k --n 5 --realize --out " + prefix.string());
    REQUIRE(r.exit_code == 0);

    const auto poset = slurp(prefix.string() + ".poset.json");
    const auto geometry = slurp(prefix.string() + ".geometry.json");
    const auto off = slurp(prefix.string() + ".off");
    REQUIRE_FALSE(poset.empty());
    REQUIRE_FALSE(geometry.empty());
    CHECK(off.substr(0, 4) == "OFF\n");
    CHECK(off.find("14 9 21\n") != std::string::npos);

    const auto pj = nlohmann::json::parse(poset);
    CHECK(pj["object"] == "K_5");
    CHECK(pj["f_vector"] == std::vector<long long>{14, 21, 9});
    const auto gj = nlohmann::json::parse(geometry);
    CHECK(gj["vertices"].size() == 14);
    CHECK(gj["facets"].size() == 9);
    CHECK(gj["labels"].size() == 9);

    const fs::path prefix2 = work_dir() / "k5_again";
    REQUIRE(run_cli("build --object k --n 5 --realize --out " + prefix2.string()).exit_code == 0);
    CHECK(slurp(prefix2.string() + ".poset.json") == poset);
    CHECK(slurp(prefix2.string() + ".geometry.json") == geometry);
    CHECK(slurp(prefix2.string() + ".off") == off);
}

TEST_CASE("cli export writes geometry") {
    const fs::path prefix = work_dir() / "y3";
    const auto r = run_cli("export --object halo --n 3 --out " + prefix.string());
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("16 vertices, 10 facets") != std::string::npos);
    CHECK(slurp(prefix.string() + ".off").find("16 10 24\n") != std::string::npos);
    CHECK_FALSE(slurp(prefix.string() + ".geometry.json").empty());
}

TEST_CASE("cli classify") {
    auto r = run_cli("classify 0 2 0 3,0");
    CHECK(r.exit_code == 0);
    const auto j = nlohmann::json::parse(r.output);
    CHECK(j["verdict"] == "polytope");
    CHECK(j["family"] == "Y_3");
    CHECK(j["dimension"] == 3);

    r = run_cli("classify 1 0 0");
    CHECK(r.exit_code == 0);
    CHECK(nlohmann::json::parse(r.output)["verdict"] == "unstable");
}

TEST_CASE("cli verify") {
    auto r = run_cli("verify catalan --bound 6");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("all checks passed") != std::string::npos);

    r = run_cli("verify facet-count --bound 6");
    CHECK(r.exit_code == 0);

    r = run_cli("verify no-such-suite");
    CHECK(r.exit_code == 2);
}

TEST_CASE("cli geometric bound override") {
    const fs::path prefix = work_dir() / "k6";
    // K_6 is four-dimensional; the default geometric bound (5) admits it.
    CHECK(run_cli("build --object k --n 6 --realize --out " + prefix.string()).exit_code == 0);
    // A lowered bound rejects the same build; a raised one is accepted again.
    CHECK(run_cli("build --object k --n 6 --realize --out " + prefix.string(),
                  "HALO_MAX_DIM=3").exit_code == 2);
    CHECK(run_cli("build --object k --n 6 --realize --out " + prefix.string(),
                  "HALO_MAX_DIM=5").exit_code == 0);
}

TEST_CASE("cli usage errors exit with code 2") {
    CHECK(run_cli("build --object nope --n 3").exit_code == 2);
    CHECK(run_cli("build --object k").exit_code == 2);             // missing --n
    CHECK(run_cli("build --object k --n 9").exit_code == 2);       // above default bound
    CHECK(run_cli("build --object k --n 9 --max-n 8").exit_code == 0);
    CHECK(run_cli("classify 0 2 0 3").exit_code == 2);             // |m| != h
    CHECK(run_cli("classify 0 2 0").exit_code == 2);
    CHECK(run_cli("build --object k --n 4 --realize").exit_code == 2);  // no --out
    CHECK(run_cli("nonsense").exit_code == 2);
}
