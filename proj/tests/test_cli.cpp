#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

namespace {

struct RunResult {
    int code;
    std::string output;  // stdout and stderr interleaved
};

RunResult run(const std::string& args) {
    std::string cmd = std::string(QDIST_CLI_PATH) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    while (std::size_t got = std::fread(buf, 1, sizeof buf, pipe)) out.append(buf, got);
    int status = pclose(pipe);
    int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return {code, out};
}

std::string temp_path(const std::string& name) {
    const char* dir = std::getenv("TMPDIR");
    return std::string(dir ? dir : "/tmp") + "/" + name;
}

std::string slurp(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    REQUIRE(f.good());
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

}  // namespace

TEST_CASE("cli: no subcommand or bad flags exit 2") {
    CHECK(run("").code == 2);
    CHECK(run("embed").code == 2);                      // missing --graph
    CHECK(run("embed --graph nope --r 2").code == 2);   // unknown graph
    CHECK(run("realized --n 3").code == 2);             // missing --r
    CHECK(run("realized --n 3 --r abc").code == 2);     // unparsable rational
    CHECK(run("--help").code == 0);
}

TEST_CASE("cli: realized") {
    auto yes = run("realized --n 3 --r 6");
    CHECK(yes.code == 0);
    CHECK(yes.output.find("true") != std::string::npos);

    auto no = run("realized --n 3 --r 7");
    CHECK(no.code == 1);
    CHECK(no.output.find("false") != std::string::npos);
    CHECK(no.output.find("7 (mod 8)") != std::string::npos);

    CHECK(run("realized --n 4 --r 7").code == 0);
    CHECK(run("realized --n 2 --r 3").code == 1);
    CHECK(run("realized --n 1 --r 9/4").code == 0);
}

TEST_CASE("cli: three-squares") {
    auto ok = run("three-squares 6");
    CHECK(ok.code == 0);
    CHECK(ok.output.find("= 2^2 + 1^2 + 1^2") != std::string::npos);

    auto bad = run("three-squares 7");
    CHECK(bad.code == 1);
    CHECK(bad.output.find("4^0") != std::string::npos);
    CHECK(run("three-squares 112").code == 1);  // 16 * 7
}

TEST_CASE("cli: solve41 substitutes exactly") {
    auto r = run("solve41 --m 1 --r 1");
    CHECK(r.code == 0);
    CHECK(r.output.find("x = 0, y = 3/4, z = 1/4, w = 0") != std::string::npos);
    CHECK(run("solve41 --m 3 --r 5").code == 0);
}

TEST_CASE("cli: triangle") {
    auto ok = run("triangle --a 1 --b 1 --c 1");
    CHECK(ok.code == 0);
    CHECK(ok.output.find("P2 = (1/2, 1/2, 1/2, 1/2)") != std::string::npos);
    auto bad = run("triangle --a 1 --b 7 --c 8");
    CHECK(bad.code == 1);
    CHECK(bad.output.find("infeasible") != std::string::npos);
}

TEST_CASE("cli: embed + verify round trip") {
    for (const std::string& args :
         {std::string("--graph k23 --r 3"), std::string("--graph book --n 5 --r 2"),
          std::string("--graph k133 --r 2"), std::string("--graph clique-ext --m 1 --r 2")}) {
        CAPTURE(args);
        std::string cert = temp_path("cli_cert.json");
        auto e = run("embed " + args + " --out " + cert);
        REQUIRE(e.code == 0);
        auto v = run("verify " + cert);
        CHECK(v.code == 0);
        CHECK(v.output.find("pass") != std::string::npos);
    }
}

TEST_CASE("cli: embed writes a schema-1 certificate with exact coordinates") {
    std::string cert = temp_path("cli_cert_k23.json");
    REQUIRE(run("embed --graph k23 --r 11 --out " + cert).code == 0);
    auto j = nlohmann::json::parse(slurp(cert));
    CHECK(j.at("schema").get<std::string>() == "1");
    CHECK(j.at("report").at("pass").get<bool>());
    const auto& emb = j.at("embedding");
    CHECK(emb.at("n").get<int>() == 3);
    CHECK(emb.at("r").get<std::string>() == "11");
    CHECK(emb.at("coords").size() == 5);
    CHECK(emb.at("coords").at("a1").size() == 3);
}

TEST_CASE("cli: embed infeasible cases exit 1 with a witness") {
    auto r = run("embed --graph k23 --r 7");
    CHECK(r.code == 1);
    CHECK(r.output.find("7 (mod 8)") != std::string::npos);
}

TEST_CASE("cli: embed argument contract") {
    CHECK(run("embed --graph book --r 2").code == 2);        // book needs --n
    CHECK(run("embed --graph book --n 4 --r 3").code == 2);  // book is r = 2 only
    CHECK(run("embed --graph clique-ext --r 2").code == 2);  // needs --m
    CHECK(run("embed --graph k23 --n 4 --r 2").code == 2);   // wrong ambient dim
}

TEST_CASE("cli: verify rejects tampered certificates") {
    std::string cert = temp_path("cli_cert_tamper.json");
    REQUIRE(run("embed --graph k23 --r 2 --out " + cert).code == 0);
    auto j = nlohmann::json::parse(slurp(cert));
    j["embedding"]["coords"]["b1"][0] = "9999";
    {
        std::ofstream f(cert, std::ios::binary);
        f << j.dump(2) << "\n";
    }
    auto v = run("verify " + cert);
    CHECK(v.code == 1);
    CHECK(v.output.find("fail") != std::string::npos);

    // tampering with the stored report (not the coordinates) is also caught
    REQUIRE(run("embed --graph k23 --r 2 --out " + cert).code == 0);
    j = nlohmann::json::parse(slurp(cert));
    j["report"]["edges"][0]["squared_distance"] = "5";
    {
        std::ofstream f(cert, std::ios::binary);
        f << j.dump(2) << "\n";
    }
    v = run("verify " + cert);
    CHECK(v.code == 1);
    CHECK(v.output.find("stored report") != std::string::npos);

    CHECK(run("verify " + temp_path("does_not_exist.json")).code == 2);
}

TEST_CASE("cli: verify --faithful flags non-edges at the target distance") {
    // hand-made certificate: path a-b-c drawn as a unit equilateral triangle,
    // so the non-edge a-c sits at the edge distance
    using Json = nlohmann::json;
    Json j;
    j["schema"] = "1";
    Json emb;
    emb["n"] = 4;
    emb["r"] = "1";
    emb["vertices"] = Json::array({"a", "b", "c"});
    emb["edges"] = Json::array({Json::array({"a", "b"}), Json::array({"b", "c"})});
    emb["coords"]["a"] = Json::array({"0", "0", "0", "0"});
    emb["coords"]["b"] = Json::array({"1", "0", "0", "0"});
    emb["coords"]["c"] = Json::array({"1/2", "1/2", "1/2", "1/2"});
    j["embedding"] = emb;
    std::string cert = temp_path("cli_cert_faithful.json");
    {
        std::ofstream f(cert, std::ios::binary);
        f << j.dump(2) << "\n";
    }
    CHECK(run("verify " + cert).code == 0);
    auto v = run("verify --faithful " + cert);
    CHECK(v.code == 1);
    CHECK(v.output.find("non-edge") != std::string::npos);
}

TEST_CASE("cli: cliques") {
    auto r = run("cliques --n 3 --r 2 --height 1");
    CHECK(r.code == 0);
    CHECK(r.output.find("C1(Q^3) = 4") != std::string::npos);
    CHECK(r.output.find(">= 4") != std::string::npos);

    auto scan = run("cliques --n 2 --height 1");
    CHECK(scan.code == 0);
    CHECK(scan.output.find("C1(Q^2) = 2") != std::string::npos);
}

TEST_CASE("cli: regularize produces a verifiable plane certificate") {
    using Json = nlohmann::json;
    Json in;
    in["vertex_count"] = 3;
    in["edges"] = Json::array({Json::array({0, 1}), Json::array({1, 2})});
    in["coords"] = Json::array({Json::array({"0", "0"}), Json::array({"1", "0"}),
                                Json::array({"1.5", "0.86602540378443864676"})});
    std::string in_path = temp_path("cli_plane_in.json");
    {
        std::ofstream f(in_path, std::ios::binary);
        f << in.dump(2) << "\n";
    }
    std::string cert = temp_path("cli_plane_cert.json");
    std::string svg = temp_path("cli_plane.svg");
    auto r = run("regularize " + in_path + " --r 3 --seed 5 --out " + cert + " --svg " + svg);
    REQUIRE(r.code == 0);

    auto j = nlohmann::json::parse(slurp(cert));
    CHECK(j.at("report").at("regular_degree").get<int>() == 3);
    CHECK(run("verify " + cert).code == 0);
    CHECK(slurp(svg).rfind("<svg", 0) == 0);

    // deterministic for a fixed seed
    std::string cert2 = temp_path("cli_plane_cert2.json");
    REQUIRE(run("regularize " + in_path + " --r 3 --seed 5 --out " + cert2).code == 0);
    CHECK(slurp(cert) == slurp(cert2));
}
