#include <doctest.h>

#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

using json = nlohmann::json;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run_cli(const std::string& args, const std::string& env_prefix = "") {
    std::string cmd = env_prefix + std::string(RLAB_CLI_PATH) + " " + args + " 2>/dev/null";
    RunResult res;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) res.out.append(buf, got);
    int status = pclose(pipe);
    res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return res;
}

std::filesystem::path write_temp(const std::string& name, const std::string& content) {
    auto path = std::filesystem::temp_directory_path() / ("rlab_cli_" + name);
    std::ofstream out(path);
    out << content;
    return path;
}

const std::string kK4 = "4 6\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n";
const std::string kPetersen =
    "10 15\n0 1\n0 4\n0 5\n1 2\n1 6\n2 3\n2 7\n3 4\n3 8\n4 9\n5 7\n5 8\n6 8\n6 9\n7 9\n";
const std::string kBiregular = "2\n0 3\n2 0\n";
const std::string kCubic = "1\n3\n";

} // namespace

TEST_CASE("spectrum command emits the documented schema") {
    auto g = write_temp("k4.txt", kK4);
    auto res = run_cli("spectrum " + g.string());
    CHECK(res.exit_code == 0);
    auto j = json::parse(res.out);
    CHECK(j["method"] == "jacobi");
    REQUIRE(j["eigenvalues"].size() == 4);
    CHECK(j["eigenvalues"][0].get<double>() == doctest::Approx(3.0));
    CHECK(j["eigenvalues"][3].get<double>() == doctest::Approx(-1.0));
    CHECK(j.contains("residual"));
    CHECK(j["input"].contains("digest"));
}

TEST_CASE("identical inputs produce byte-identical output") {
    auto g = write_temp("pet.txt", kPetersen);
    auto a = run_cli("certify " + g.string());
    auto b = run_cli("certify " + g.string());
    CHECK(a.out == b.out);
    CHECK(a.exit_code == 0);
    auto j = json::parse(a.out);
    CHECK(j["verdict"] == "certified-yes");
}

TEST_CASE("degree-matrix subcommands") {
    auto d = write_temp("d23.txt", kBiregular);
    auto spec = run_cli("degmat spectrum " + d.string());
    CHECK(spec.exit_code == 0);
    auto j = json::parse(spec.out);
    CHECK(j["eigenvalues"][0].get<double>() == doctest::Approx(std::sqrt(6.0)));
    CHECK(j["eigenvalues"][1].get<double>() == doctest::Approx(-std::sqrt(6.0)));

    auto sizes = json::parse(run_cli("degmat sizes " + d.string()).out);
    CHECK(sizes["sizes"] == json::array({2, 3}));

    auto bad = write_temp("bad.txt", "2\n0 1\n0 0\n");
    auto v = json::parse(run_cli("degmat validate " + bad.string()).out);
    CHECK(v["valid"] == false);
    CHECK(v["reason"] == "D1");
}

TEST_CASE("rho-cover brackets the regular-tree value") {
    auto d = write_temp("d3.txt", kCubic);
    auto res = run_cli("rho-cover " + d.string() + " --rmax 512");
    CHECK(res.exit_code == 0);
    auto j = json::parse(res.out);
    double lower = j["lower"].get<double>();
    double upper = j["upper"].get<double>();
    CHECK(lower <= 2.0 * std::sqrt(2.0));
    CHECK(upper >= 2.0 * std::sqrt(2.0) - 1e-9);
    CHECK(upper - lower < 1e-3);
    CHECK(j["closed_form"].get<double>() == doctest::Approx(2.0 * std::sqrt(2.0)));
}

TEST_CASE("girth variants and the universal cap") {
    auto g = write_temp("pet2.txt", kPetersen);
    CHECK(json::parse(run_cli("girth " + g.string()).out)["value"] == 5);
    CHECK(json::parse(run_cli("girth --odd " + g.string()).out)["value"] == 5);
    auto uni = json::parse(run_cli("girth --universal --cap 20 " + g.string()).out);
    CHECK(uni["found"] == true);
    CHECK(uni["value"] == 5);
    auto capped = json::parse(run_cli("girth --universal --cap 4 " + g.string()).out);
    CHECK(capped["found"] == false);
}

TEST_CASE("ball and treeball output") {
    auto g = write_temp("k4b.txt", kK4);
    auto j = json::parse(run_cli("ball " + g.string() + " -v 0 -r 1").out);
    CHECK(j["graph"]["n"] == 4);
    CHECK(j["map"][0] == 0);

    auto d = write_temp("d3b.txt", kCubic);
    auto tb = json::parse(run_cli("treeball " + d.string() + " -r 2").out);
    CHECK(tb["graph"]["n"] == 10);
    CHECK(tb["rho"].get<double>() == doctest::Approx(std::sqrt(5.0)));
    auto q = json::parse(run_cli("treeball " + d.string() + " -r 2 --quotient").out);
    CHECK(q["order"] == 3);
    CHECK(q["rho"].get<double>() == doctest::Approx(std::sqrt(5.0)));
    CHECK(q["matrix"][0][1] == 3);
}

TEST_CASE("project command emits a mapping") {
    auto g = write_temp("c6.txt", "6 6\n0 1\n1 2\n2 3\n3 4\n4 5\n0 5\n");
    auto d = write_temp("d22.txt", "2\n0 2\n2 0\n");
    auto part = write_temp("c6part.txt", "1: 0 2 4\n2: 1 3 5\n");
    auto j = json::parse(run_cli("project " + g.string() + " " + d.string() +
                                 " --start 0 --class 1 -r 3 --subsets " + part.string())
                             .out);
    CHECK(j["status"] == "success");
    CHECK(j["mapping"].size() == j["ball_vertices"].get<std::size_t>());
    CHECK(j["mapping"][0][1] == 0);
}

TEST_CASE("serre, paschke and negative commands") {
    auto g = write_temp("prism50.txt", [] {
        std::string s = "100 150\n";
        for (int i = 0; i < 50; ++i) {
            int a = i, b = (i + 1) % 50;
            s += std::to_string(std::min(a, b)) + " " + std::to_string(std::max(a, b)) + "\n";
            a = 50 + i;
            b = 50 + (i + 1) % 50;
            s += std::to_string(std::min(a, b)) + " " + std::to_string(std::max(a, b)) + "\n";
            s += std::to_string(i) + " " + std::to_string(50 + i) + "\n";
        }
        return s;
    }());
    auto sv = json::parse(run_cli("serre " + g.string() + " -d 3 --delta-max 3 --eps 0.5").out);
    CHECK(sv["pass"] == true);

    auto pk = json::parse(run_cli("paschke -d 4 -g 4").out);
    CHECK(pk["rho"].get<double>() > 2.0 * std::sqrt(3.0));
    auto csv = run_cli("paschke -d 3 -g 5 --sweep --csv");
    CHECK(csv.out.substr(0, 14) == "d,g,s_star,rho");
    CHECK(std::count(csv.out.begin(), csv.out.end(), '\n') == 4);  // header + g=3,4,5

    auto neg = json::parse(run_cli("negative " + g.string() + " -d 3 --delta-max 3").out);
    CHECK(neg["bipartite"] == true);  // even prism
    CHECK(neg["pass"] == true);
}

TEST_CASE("ball export writes the text format plus labels") {
    auto d = write_temp("d3e.txt", kCubic);
    auto base = (std::filesystem::temp_directory_path() / "rlab_cli_export").string();
    auto res = run_cli("treeball " + d.string() + " -r 2 --export " + base);
    CHECK(res.exit_code == 0);
    std::ifstream graph_in(base + ".graph");
    std::string header;
    std::getline(graph_in, header);
    CHECK(header == "10 9");
    std::ifstream labels_in(base + ".labels");
    std::string first;
    std::getline(labels_in, first);
    CHECK(first == "0 1 0");
}

TEST_CASE("exit codes") {
    auto star = write_temp("star.txt", "4 3\n0 1\n0 2\n0 3\n");
    CHECK(run_cli("certify " + star.string()).exit_code == 1);  // not regular
    CHECK(run_cli("spectrum /nonexistent/file.txt").exit_code == 2);
    CHECK(run_cli("bogus-subcommand").exit_code == 2);
    auto g = write_temp("k4c.txt", kK4);
    CHECK(run_cli("spectrum " + g.string()).exit_code == 0);
}

TEST_CASE("subdegree certification and inapplicable negative checks") {
    auto g = write_temp("k23.txt", "5 6\n0 2\n0 3\n0 4\n1 2\n1 3\n1 4\n");
    auto d = write_temp("d32.txt", "2\n0 3\n2 0\n");
    auto part = write_temp("k23part.txt", "1: 0 1\n2: 2 3 4\n");
    auto res = run_cli("certify " + g.string() + " --degmat " + d.string() + " --partition " +
                       part.string() + " --mode subdegree");
    CHECK(res.exit_code == 0);
    CHECK(json::parse(res.out)["verdict"] == "certified-yes");

    // odd girth 3 leaves no usable radius: hypothesis-style exit code
    auto k4 = write_temp("k4neg.txt", kK4);
    auto neg = run_cli("negative " + k4.string() + " -d 3 --delta-max 3");
    CHECK(neg.exit_code == 1);
    CHECK(json::parse(neg.out)["applicable"] == false);
}

TEST_CASE("girth boost command") {
    auto k4 = write_temp("k4gb.txt", kK4);
    auto res = run_cli("girth-boost " + k4.string() + " -d 3 --delta-max 3 --cap 10");
    CHECK(res.exit_code == 0);
    auto j = json::parse(res.out);
    CHECK(j["universal_girth"] == 3);
    CHECK(j["conclusive"] == true);
    CHECK(j["pass"] == true);
    CHECK(j["limit_rho"].get<double>() > 2.0 * std::sqrt(2.0));
}

TEST_CASE("table mode prints key-value lines") {
    auto g = write_temp("k4d.txt", kK4);
    auto res = run_cli("--table spectrum " + g.string());
    CHECK(res.exit_code == 0);
    CHECK(res.out.find("method: \"jacobi\"") != std::string::npos);
    CHECK(res.out.find("eigenvalues:") != std::string::npos);
}

TEST_CASE("size caps honor the environment override") {
    auto g = write_temp("k4cap.txt", kK4);
    CHECK(run_cli("spectrum " + g.string(), "RLAB_CAPS=dense=3 ").exit_code == 2);
    CHECK(run_cli("spectrum " + g.string(), "RLAB_CAPS=dense=4 ").exit_code == 0);
    auto d = write_temp("d3cap.txt", kCubic);
    CHECK(run_cli("treeball " + d.string() + " -r 3", "RLAB_CAPS=ball=5 ").exit_code == 2);
}

TEST_CASE("an exhausted search budget exits as indeterminate") {
    auto star = write_temp("star_budget.txt", "4 3\n0 1\n0 2\n0 3\n");
    auto d = write_temp("d2_budget.txt", "1\n2\n");
    auto res = run_cli("project " + star.string() + " " + d.string() +
                           " --start 0 --class 1 -r 2 --backtrack",
                       "RLAB_CAPS=nodes=1 ");
    CHECK(res.exit_code == 3);
    CHECK(json::parse(res.out)["status"] == "budget");
}

TEST_CASE("multiple inputs and --jobs") {
    auto g1 = write_temp("m1.txt", kK4);
    auto g2 = write_temp("m2.txt", kPetersen);
    auto seq = run_cli("rho " + g1.string() + " " + g2.string());
    auto par = run_cli("--jobs 2 rho " + g1.string() + " " + g2.string());
    CHECK(seq.exit_code == 0);
    CHECK(seq.out == par.out);  // deterministic order regardless of parallelism
    auto j = json::parse(seq.out);
    REQUIRE(j.is_array());
    CHECK(j[0]["rho"].get<double>() == doctest::Approx(3.0));
    CHECK(j[1]["rho"].get<double>() == doctest::Approx(3.0));
}
