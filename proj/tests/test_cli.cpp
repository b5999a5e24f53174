// End-to-end tests of the command-line interface: exit codes, JSON shapes,
// frozen values, and byte-stable caching. The binary path arrives in the
// SYMTORIC_BIN environment variable.

#include <catch2/catch_amalgamated.hpp>
#include <nlohmann/json.hpp>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

struct CmdResult {
    int exit_code = -1;
    std::string output;
};

CmdResult run_cli(const std::string& args, const std::string& env_prefix = "") {
    const char* bin = std::getenv("SYMTORIC_BIN");
    REQUIRE(bin != nullptr);
    std::string cmd = env_prefix + "'" + bin + "' " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    CmdResult res;
    char buf[4096];
    std::size_t n = 0;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) res.output.append(buf, n);
    int status = pclose(pipe);
    REQUIRE(status != -1);
    REQUIRE(WIFEXITED(status));
    res.exit_code = WEXITSTATUS(status);
    return res;
}

json parse(const CmdResult& res) {
    return json::parse(res.output);
}

// scratch directory inside the test working directory
fs::path scratch() {
    fs::path dir = fs::current_path() / "cli_test_scratch";
    fs::create_directories(dir);
    return dir;
}

fs::path write_file(const std::string& name, const std::string& content) {
    fs::path p = scratch() / name;
    std::ofstream out(p);
    out << content;
    return p;
}

}  // namespace

TEST_CASE("validate: builtin fan") {
    CmdResult res = run_cli("validate --fan builtin:p2");
    REQUIRE(res.exit_code == 0);
    json j = parse(res);
    REQUIRE(j["schema_version"] == 1);
    REQUIRE(j["valid"] == true);
    REQUIRE(j["ray_count"] == 3);
    REQUIRE(j["max_cone_count"] == 3);
    REQUIRE(j["problems"].empty());
}

TEST_CASE("validate: fan from a file, valid and invalid") {
    fs::path good = write_file("p1.json",
                               R"({"dim": 1, "rays": [[1], [-1]], "max_cones": [[0], [1]]})");
    CmdResult res = run_cli("validate --fan " + good.string());
    REQUIRE(res.exit_code == 0);
    REQUIRE(parse(res)["valid"] == true);

    fs::path half = write_file("half.json", R"({"dim": 1, "rays": [[1]], "max_cones": [[0]]})");
    CmdResult bad = run_cli("validate --fan " + half.string());
    REQUIRE(bad.exit_code == 0);  // structurally loadable: report, not error
    json jb = parse(bad);
    REQUIRE(jb["valid"] == false);
    REQUIRE_FALSE(jb["problems"].empty());
}

TEST_CASE("dims: frozen values and agreement") {
    CmdResult res = run_cli("dims --fan builtin:bl1p2 --p-max 3");
    REQUIRE(res.exit_code == 0);
    json j = parse(res);
    REQUIRE(j["dims_R"] == json::array({1, 6, 20, 46}));
    REQUIRE(j["dims_Rprime"] == json::array({1, 6, 20, 46}));
    REQUIRE(j["agree"] == true);

    CmdResult single = run_cli("dims --fan builtin:bl1p2 --p-max 3 --presentation R");
    REQUIRE(single.exit_code == 0);
    json js = parse(single);
    REQUIRE(js["scheme"] == "R");
    REQUIRE(js["dims"] == json::array({1, 6, 20, 46}));
}

TEST_CASE("dims: growth diagnostic flag") {
    CmdResult res = run_cli("dims --fan builtin:p1 --p-max 4 --growth");
    REQUIRE(res.exit_code == 0);
    json j = parse(res);
    REQUIRE(j.contains("growth"));
    REQUIRE(j["growth"]["expected_exponent"] == 1.0);
    REQUIRE(j["growth"]["fit_from"] == 2);
    REQUIRE(j["growth"]["fit_to"] == 4);

    // growth needs p-max >= 4: precondition-style input error
    CmdResult low = run_cli("dims --fan builtin:p1 --p-max 3 --growth");
    REQUIRE(low.exit_code == 2);
    REQUIRE(parse(low)["error"]["type"] == "parse");
}

TEST_CASE("argument and file errors exit with code 2") {
    REQUIRE(run_cli("dims --fan builtin:p1").exit_code == 2);          // missing --p-max
    REQUIRE(run_cli("dims --fan builtin:p1 --p-max -1").exit_code == 2);
    REQUIRE(run_cli("dims --fan builtin:nope --p-max 1").exit_code == 2);
    REQUIRE(run_cli("validate --fan /does/not/exist.json").exit_code == 2);
    REQUIRE(run_cli("").exit_code == 2);  // no subcommand

    fs::path broken = write_file("broken.json", "{ not json");
    CmdResult res = run_cli("validate --fan " + broken.string());
    REQUIRE(res.exit_code == 2);
    json j = parse(res);
    REQUIRE(j["error"]["type"] == "parse");
    REQUIRE(j.contains("schema_version"));
}

TEST_CASE("precondition failures exit with code 3") {
    fs::path half = write_file("half2.json", R"({"dim": 1, "rays": [[1]], "max_cones": [[0]]})");
    CmdResult res = run_cli("dims --fan " + half.string() + " --p-max 2");
    REQUIRE(res.exit_code == 3);
    REQUIRE(parse(res)["error"]["type"] == "precondition");
}

TEST_CASE("hypertoric: blow-up of three-space on the wall") {
    CmdResult res = run_cli("hypertoric --fan builtin:bl1p3 --theta 1,-1");
    REQUIRE(res.exit_code == 0);
    json j = parse(res);
    REQUIRE(j["unimodular"] == true);
    REQUIRE(j["genericity"]["generic"] == false);
    REQUIRE(j["components"] == 2);
    REQUIRE(j["central_fiber"]["component_count"] == 2);
    REQUIRE(j["central_fiber"]["perturbed"] == true);
    REQUIRE(j["central_fiber"]["theta_effective"] == json::array({"1/2", "-3/4"}));
    // default degree bound is far below the certificate: flagged, not fatal
    REQUIRE(j.contains("warning"));

    REQUIRE(run_cli("hypertoric --fan builtin:p2 --theta 1,2").exit_code == 2);
    REQUIRE(run_cli("hypertoric --fan builtin:p2 --theta x").exit_code == 2);
    REQUIRE(run_cli("hypertoric --fan builtin:p2").exit_code == 2);  // theta required
}

TEST_CASE("generators: truncation warning and certificate") {
    CmdResult res = run_cli("generators --fan builtin:p1");
    REQUIRE(res.exit_code == 0);
    json j = parse(res);
    REQUIRE(j["count"] == 4);
    REQUIRE(j["certified_complete"] == false);
    REQUIRE(j["certificate_bound"] == "6");
    REQUIRE(j.contains("warning"));

    CmdResult full = run_cli("generators --fan builtin:p1 --degree-bound 6");
    REQUIRE(full.exit_code == 0);
    json jf = parse(full);
    REQUIRE(jf["certified_complete"] == true);
    REQUIRE_FALSE(jf.contains("warning"));
    REQUIRE(jf["count"] == 4);
}

TEST_CASE("cache: warm rerun is byte-identical") {
    fs::path dir = scratch() / "cache";
    fs::remove_all(dir);
    std::string flags = "--cache-dir " + dir.string() + " dims --fan builtin:bl1p2 --p-max 2";
    CmdResult cold = run_cli(flags);
    REQUIRE(cold.exit_code == 0);
    bool produced_file = false;
    for (const auto& entry : fs::directory_iterator(dir))
        if (entry.path().extension() == ".json") produced_file = true;
    REQUIRE(produced_file);

    CmdResult warm = run_cli(flags);
    REQUIRE(warm.exit_code == 0);
    REQUIRE(warm.output == cold.output);

    // the environment variable is an alternate spelling of --cache-dir
    CmdResult via_env = run_cli("dims --fan builtin:bl1p2 --p-max 2",
                                "SYMTORIC_CACHE_DIR='" + dir.string() + "' ");
    REQUIRE(via_env.exit_code == 0);
    REQUIRE(via_env.output == cold.output);
}

TEST_CASE("examples: listing and round trip") {
    CmdResult res = run_cli("examples");
    REQUIRE(res.exit_code == 0);
    json j = parse(res);
    bool found = false;
    for (const auto& entry : j["builtin_fans"])
        if (entry["name"] == "p2") {
            found = true;
            REQUIRE(entry["dim"] == 2);
            REQUIRE(entry["rays"] == 3);
        }
    REQUIRE(found);

    CmdResult fan = run_cli("examples --name p2");
    REQUIRE(fan.exit_code == 0);
    fs::path round = write_file("roundtrip.json", fan.output);
    CmdResult check = run_cli("validate --fan " + round.string());
    REQUIRE(check.exit_code == 0);
    REQUIRE(parse(check)["valid"] == true);

    REQUIRE(run_cli("examples --name not_a_fan").exit_code == 2);
}

TEST_CASE("cox: moment relation through the pipeline") {
    CmdResult res = run_cli("cox --fan builtin:p2 --presentation Rprime");
    REQUIRE(res.exit_code == 0);
    json j = parse(res);
    REQUIRE(j["pivot_rays"] == json::array({0, 1}));
    REQUIRE(j["presentations"].size() == 1);
    const json& pres = j["presentations"][0];
    REQUIRE(pres["kind"] == "Rprime");
    REQUIRE(pres["relations"].size() == 1);
    REQUIRE(pres["relations"][0]["render"] == "x0*w0 + x1*w1 + x2*w2");
}

TEST_CASE("text format renders plain lines") {
    CmdResult res = run_cli("--format text validate --fan builtin:p2");
    REQUIRE(res.exit_code == 0);
    REQUIRE(res.output.find("valid: true") != std::string::npos);
    REQUIRE(res.output.find('{') == std::string::npos);
}
