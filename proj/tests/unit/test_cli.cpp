#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace {

struct Run {
    int status = -1;
    std::string out;
};

Run run(const std::string& args) {
    const std::string cmd = std::string(STREE_CLI_PATH) + " " + args + " 2>/dev/null";
    Run r;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    char buf[4096];
    std::size_t got = 0;
    while ((got = fread(buf, 1, sizeof(buf), pipe)) > 0) r.out.append(buf, got);
    int raw = pclose(pipe);
    r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    return r;
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST_CASE("tree prints the statistics line") {
    auto r = run("tree aabccb");
    CHECK(r.status == 0);
    CHECK(r.out == "n=6 sigma=3 nodes=25 internal=19 leaves=6 growth=5\n");
    CHECK(run("tree --compact aabccb").out == "n=6 sigma=3 nodes=10 internal=4 leaves=6 growth=5\n");
    auto dot = run("tree aabccb --compact --dot");
    CHECK(dot.out.find("label=\"abccb$\"") != std::string::npos);
}

TEST_CASE("growth and search") {
    CHECK(run("growth abcdefabcdab").out == "n=12 sigma=6 growth=8 oracle=8\n");
    CHECK(run("search aabccb b").out == "position\n3\n6\n");
    CHECK(run("search aabccb ba").out == "position\n");
    CHECK(run("--format json search aabccb cb").out.find("\"position\": 5") != std::string::npos);
}

TEST_CASE("counting commands") {
    auto mu = run("mu --sigma 3 --max-j 8");
    CHECK(mu.status == 0);
    CHECK(mu.out.find("3,8,,6480\n") != std::string::npos);
    CHECK(run("phi --sigma 2 --max-k 3").out == "sigma,j_or_n,k,value\n2,1,,2\n2,2,,4\n2,3,,12\n");
    CHECK(run("omega --sigma 2 --n 2").out ==
          "n,k,omega,phi,n_ge_2k,omega_le_phi\n2,1,2,2,true,true\n2,2,2,4,false,true\n");
}

TEST_CASE("exit codes") {
    CHECK(run("omega --sigma 2 --n 30").status == 2);
    CHECK(run("tree abc --sigma 3").status == 0);
    CHECK(run("tree abc --sigma 2").status == 2);
    CHECK(run("frobnicate").status == 2);
    CHECK(run("").status == 2);
    CHECK(run("verify").status == 0);
    CHECK(run("verify --inject-fault phi").status == 1);
    CHECK(run("verify --inject-fault mu").status == 1);
}

TEST_CASE("verify with the published table flags two known discrepancies") {
    auto r = run(std::string("verify --table1 ") + STREE_TABLE1_PATH);
    CHECK(r.status == 0);
    std::size_t known = 0;
    for (std::size_t pos = 0; (pos = r.out.find(",known_discrepancy\n", pos)) != std::string::npos; ++pos) ++known;
    CHECK(known == 2);
}

TEST_CASE("seeded commands write byte-identical files") {
    auto dir = std::filesystem::temp_directory_path() / "stree_cli_test";
    std::filesystem::create_directories(dir);
    const std::string a = (dir / "a.csv").string();
    const std::string b = (dir / "b.csv").string();
    const std::string c = (dir / "c.csv").string();

    CHECK(run("expect-size --mode montecarlo --samples 50 --n 32,64 --seed 7 --out " + a).status == 0);
    CHECK(run("expect-size --mode montecarlo --samples 50 --n 32,64 --seed 7 --workers 4 --out " + b).status == 0);
    CHECK(slurp(a) == slurp(b));
    CHECK(!slurp(a).empty());

    CHECK(run("expect-growth --mode montecarlo --samples 200 --n 64 --seed 7 --out " + a).status == 0);
    CHECK(run("expect-growth --mode montecarlo --samples 200 --n 64 --seed 7 --out " + b).status == 0);
    CHECK(run("expect-growth --mode montecarlo --samples 200 --n 64 --seed 8 --out " + c).status == 0);
    CHECK(slurp(a) == slurp(b));
    CHECK(slurp(a) != slurp(c));

    CHECK(run("expect-growth --sigma 2 --given b").out.find(",3/2,") != std::string::npos);
    CHECK(run("expect-growth").status == 2);
    std::filesystem::remove_all(dir);
}
