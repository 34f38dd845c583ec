#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

namespace {

struct RunResult {
    int code = -1;
    std::string out;
};

std::string bin_path() {
    const char* bin = std::getenv("LIEDER_BIN");
    REQUIRE(bin != nullptr);
    return bin;
}

std::string data_path(const std::string& file) {
    const char* dir = std::getenv("LIEDER_DATA");
    REQUIRE(dir != nullptr);
    return std::string(dir) + "/" + file;
}

// stderr is dropped; every assertion here is about stdout + exit code
RunResult run(const std::string& args, const std::string& env = "") {
    std::string cmd = (env.empty() ? "" : "env " + env + " ") + bin_path() + " " + args +
                      " 2>/dev/null";
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    RunResult r;
    char buf[4096];
    size_t got;
    while ((got = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, got);
    int status = pclose(p);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string temp_file(const std::string& stem, const std::string& content) {
    std::string path =
        (std::filesystem::temp_directory_path() / ("lieder_cli_" + stem)).string();
    std::ofstream(path) << content;
    return path;
}

nlohmann::json parse(const std::string& s) { return nlohmann::json::parse(s); }

} // namespace

TEST_CASE("catalog list") {
    RunResult r = run("catalog list");
    CHECK(r.code == 0);
    CHECK(r.out.find("heisenberg_3\n") != std::string::npos);
    CHECK(r.out.find("dixmier_lister_8\n") != std::string::npos);

    RunResult j = run("catalog list --json");
    CHECK(j.code == 0);
    auto names = parse(j.out);
    CHECK(names.is_array());
    CHECK(names.size() == 16);
}

TEST_CASE("catalog show equals the golden data file") {
    RunResult r = run("catalog show heisenberg_3");
    CHECK(r.code == 0);
    std::ifstream in(data_path("heisenberg_3.json"));
    std::ostringstream os;
    os << in.rdbuf();
    CHECK(r.out == os.str());

    CHECK(run("catalog show not_a_thing").code == 2);
}

TEST_CASE("lder: builtins, files, stdin") {
    RunResult r = run("lder heisenberg_3 --order 2");
    CHECK(r.code == 0);
    CHECK(r.out.find("= 9") != std::string::npos);

    RunResult file = run("lder " + data_path("heisenberg_3.json") + " --order 1");
    CHECK(file.code == 0);
    CHECK(file.out.find("= 6") != std::string::npos);

    RunResult stdin_run = run("lder - --order 1 < " + data_path("heisenberg_3.json"));
    CHECK(stdin_run.code == 0);
    CHECK(stdin_run.out.find("= 6") != std::string::npos);

    RunResult j = run("lder heisenberg_3 --order 2 --json --basis");
    CHECK(j.code == 0);
    auto doc = parse(j.out);
    CHECK(doc["algebra"] == "heisenberg_3");
    CHECK(doc["order"] == 2);
    CHECK(doc["dim"] == 9);
    CHECK(doc["basis"].size() == 9);
    CHECK(doc["basis"][0].size() == 9);

    RunResult nb = run("lder heisenberg_3 --order 2 --json");
    CHECK(!parse(nb.out).contains("basis"));
}

TEST_CASE("check and info") {
    CHECK(run("check " + data_path("heisenberg_3.json")).code == 0);
    CHECK(run("check " + data_path("family_t_e3.json")).out.find("parametric") !=
          std::string::npos);

    std::string bad = temp_file("bad.json", "{\"name\": \"x\", \"dim\": 2, \"brackets\": "
                                            "[{\"i\": 2, \"j\": 1, \"c\": {\"1\": \"1\"}}]}");
    CHECK(run("check " + bad).code == 2);
    std::string garbage = temp_file("garbage.json", "{nope");
    CHECK(run("check " + garbage).code == 2);
    CHECK(run("check /no/such/file.json").code == 2);

    RunResult info = run("info heisenberg_3 --json");
    CHECK(info.code == 0);
    auto doc = parse(info.out);
    CHECK(doc["class"] == 2);
    CHECK(doc["dim_center"] == 1);
    CHECK(doc["predicates"]["nilpotent"] == true);

    RunResult sl2 = run("info sl2 --json");
    CHECK(parse(sl2.out)["class"].is_null());
}

TEST_CASE("nilpotent and verify round trip") {
    RunResult h3 = run("nilpotent heisenberg_3 --json");
    CHECK(h3.code == 0);
    auto cert = parse(h3.out);
    CHECK(cert["verdict"] == "nilpotent");
    CHECK(cert["evidence_kind"] == "invertible_lder");
    CHECK(cert["order"] == 1);

    std::string cert_path = temp_file("cert.json", h3.out);
    RunResult ok = run("verify " + cert_path);
    CHECK(ok.code == 0);
    CHECK(ok.out.find("valid") != std::string::npos);

    // one perturbed matrix entry must be rejected
    auto tampered = parse(h3.out);
    tampered["matrix"][0][0] = std::string(tampered["matrix"][0][0]) + "1";
    std::string bad_path = temp_file("cert_bad.json", tampered.dump());
    CHECK(run("verify " + bad_path).code == 1);

    RunResult sl2 = run("nilpotent sl2 --json");
    CHECK(sl2.code == 1);
    CHECK(parse(sl2.out)["verdict"] == "not_nilpotent");
    CHECK(parse(sl2.out)["evidence_kind"] == "no_invertible_found");
    std::string neg_path = temp_file("cert_neg.json", sl2.out);
    CHECK(run("verify " + neg_path).code == 0);

    CHECK(run("nilpotent heisenberg_3 --seed random").code == 0);
    CHECK(run("nilpotent heisenberg_3 --seed notanumber").code == 2);
}

TEST_CASE("verify needs a resolvable algebra") {
    std::string alg = temp_file("myalg.json", "{\"name\": \"myalg\", \"dim\": 3, \"brackets\": "
                                              "[{\"i\": 1, \"j\": 2, \"c\": {\"3\": \"1\"}}]}");
    RunResult nil = run("nilpotent " + alg + " --json");
    CHECK(nil.code == 0);
    std::string cert = temp_file("myalg_cert.json", nil.out);
    CHECK(run("verify " + cert).code == 2); // myalg is not a builtin
    CHECK(run("verify " + cert + " --algebra " + alg).code == 0);
}

TEST_CASE("witness exit codes") {
    CHECK(run("witness heisenberg_3 -k 2 -l 1").code == 0);
    CHECK(run("witness heisenberg_3 -k 3 -l 2").code == 2); // k above the class
    RunResult j = run("witness filiform_n4 -k 3 -l 2 --json");
    CHECK(j.code == 0);
    auto doc = parse(j.out);
    CHECK(doc["matrix"][3][3] == "1");
}

TEST_CASE("star exit codes") {
    RunResult r = run("star sl2 -m 2 -k 2 --json");
    CHECK(r.code == 0);
    CHECK(parse(r.out)["dim"] == 0);
    CHECK(run("star sl2 -m 0 -k 2").code == 2);
    CHECK(run("star sl2 -m -3 -k 2").code == 2);
    CHECK(run("star sl2 -m 1 -k 1").code == 2);
    RunResult ab = run("star abelian_3 -m 1/2 -k 2 --json");
    CHECK(parse(ab.out)["dim"] == 9);
}

TEST_CASE("construct-p feeds grading") {
    RunResult p = run("construct-p filiform_n4 --json");
    CHECK(p.code == 0);
    auto doc = parse(p.out);
    CHECK(doc["q"] == 2);
    CHECK(doc["det"] == "3");

    std::string op = temp_file("op.json", p.out);
    RunResult g = run("grading filiform_n4 --op " + op + " -k 2 --json");
    CHECK(g.code == 0);
    CHECK(parse(g.out)["ok"] == true);

    std::string broken = temp_file("op_bad.json", "[[\"1\",\"0\",\"0\"],[\"0\",\"1\",\"0\"],"
                                                  "[\"0\",\"0\",\"5\"]]");
    CHECK(run("grading heisenberg_3 --op " + broken + " -k 1").code == 1);

    CHECK(run("construct-p sl2").code == 2); // not nilpotent
}

TEST_CASE("chain, radinv, invertible") {
    RunResult c = run("chain heisenberg_3 -k 2");
    CHECK(c.code == 0);
    CHECK(c.out.find("all inclusions hold") != std::string::npos);

    CHECK(run("radinv gl2 -k 2").code == 0);

    RunResult found = run("invertible heisenberg_3 -k 1 --json");
    CHECK(found.code == 0);
    CHECK(parse(found.out)["found"] == true);

    RunResult none = run("invertible sl2 -k 1 --json");
    CHECK(none.code == 1);
    CHECK(parse(none.out)["found"] == false);
    CHECK(parse(none.out)["matrix"].is_null());
}

TEST_CASE("degenerate") {
    std::string fam = data_path("family_t_e3.json");
    RunResult k1 = run("degenerate " + fam + " --order 1 --json");
    CHECK(k1.code == 0);
    auto doc = parse(k1.out);
    CHECK(doc["generic_dim"] == 6);
    CHECK(doc["limit_dim"] == 9);
    CHECK(doc["strict"] == true);

    RunResult k2 = run("degenerate " + fam + " --order 2 --json");
    CHECK(k2.code == 0);
    CHECK(parse(k2.out)["strict"] == false);

    CHECK(run("degenerate " + fam + " --order 1 --samples 1,5").code == 0);
    CHECK(run("degenerate " + fam + " --order 1 --samples 0").code == 2);
    CHECK(run("degenerate " + fam + " --order 1 --samples ''").code == 2);
}

TEST_CASE("catalog table") {
    RunResult csv = run("catalog table -k 2");
    CHECK(csv.code == 0);
    CHECK(csv.out.rfind("name,n,class,dim_inn,dim_der,dim_lder_2,min_invertible_order\n", 0) ==
          0);
    CHECK(csv.out.find("sl2,3,NotNilpotent,3,3,3,-") != std::string::npos);
    CHECK(csv.out.find("heisenberg_3,3,2,2,6,9,1") != std::string::npos);
    CHECK(csv.out.find("dixmier_lister_8,8,3,") != std::string::npos);
    CHECK(csv.out.find(",12,28,2\n") != std::string::npos);

    RunResult jl = run("catalog table -k 2 --json");
    CHECK(jl.code == 0);
    std::istringstream lines(jl.out);
    std::string line;
    int count = 0;
    while (std::getline(lines, line)) {
        auto row = parse(line);
        CHECK(row.contains("dim_lder"));
        ++count;
    }
    CHECK(count == 16);
}

TEST_CASE("tuple cap maps to exit 3") {
    CHECK(run("lder heisenberg_3 --order 2", "LIEDER_TUPLE_CAP=10").code == 3);
    CHECK(run("lder heisenberg_3 --order 2", "LIEDER_TUPLE_CAP=100").code == 0);
}

TEST_CASE("usage errors exit 2") {
    CHECK(run("frobnicate").code == 2);
    CHECK(run("").code == 2);
    CHECK(run("lder heisenberg_3 --order 2 --frob").code == 2);
    CHECK(run("lder heisenberg_3").code == 2); // --order required
    CHECK(run("lder no_such_file.json --order 1").code == 2);
    CHECK(run("--help").code == 0);
}

TEST_CASE("json error envelope") {
    RunResult r = run("lder no_such_file.json --order 1 --json");
    CHECK(r.code == 2);
    auto doc = parse(r.out);
    CHECK(doc.contains("error"));
    CHECK(doc["error"]["kind"] == "ParseError");
}
