#include "slopepanel/cli.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace slopepanel;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::string fixture(const char* name) { return std::string(SLOPEPANEL_FIXTURE_DIR) + "/" + name; }

}  // namespace

TEST_CASE("cli sp") {
    const auto r = run({"sp", "--type", "4,3,3,2"});
    CHECK(r.code == kExitOk);
    CHECK(r.out == "panel: 4/3,1,1,2/3  min_ratio: 2/3\n");

    const auto zero = run({"sp", "--type", "1,-1"});
    CHECK(zero.code == kExitDomainError);
    CHECK(zero.err.starts_with("error: ZeroSlope"));

    const auto negative = run({"sp", "--type", "1,-3"});
    CHECK(negative.code == kExitDomainError);
    CHECK(negative.out == "panel: -1,3\n");
    CHECK(negative.err.starts_with("error: NegativeSlope"));

    CHECK(run({"sp", "--type", "1,x"}).code == kExitUsage);
    CHECK(run({"sp"}).code == kExitUsage);
    CHECK(run({}).code == kExitUsage);
    CHECK(run({"frobnicate"}).code == kExitUsage);
}

TEST_CASE("cli nodal commands") {
    CHECK(run({"degbd", "--nodal", "2/-1,-1/2", "--m", "1"}).out == "0\n");
    CHECK(run({"degbd", "--nodal", "2/-1,-1/2", "--m", "1", "--witness"}).out == "0\npair 2 1 -> 0\ntotal -> 0\n");
    CHECK(run({"degbd", "--nodal", "2/-1,-1/2", "--m", "3"}).code == kExitDomainError);
    CHECK(run({"smooth", "--nodal", "2/-1,-1/2"}).out == "2,0\n1,1\n");
    CHECK(run({"smooth", "--nodal", "2/-1,-1/2", "--sequential"}).out == "1,1\n");
    CHECK(run({"smooth", "--nodal", "2/0,1/1,0/2"}).out == "2,2,2\n");
    CHECK(run({"glue", "--type", "2,1,0", "--type", "2,1,0", "--align", "dual"}).out == "2/0,1/1,0/2\n");
    CHECK(run({"glue", "--type", "2,1,0", "--type", "1,0"}).code == kExitDomainError);
}

TEST_CASE("cli balance") {
    const auto r = run({"balance", "--type", "2,1,0,-1,-2"});
    CHECK(r.code == kExitOk);
    CHECK(r.out ==
          "step 0: 2,1,0,-1,-2\nstep 1: 1,1,0,-1,-1\nstep 2: 0,0,0,0,0\nsteps: 2\ncopies: 4\nconverged: yes\n");
    CHECK(run({"balance", "--type", "2,1,0", "--policy", "best"}).out.find("steps: 1\n") != std::string::npos);
    const auto odd = run({"balance", "--type", "1,0"});
    CHECK(odd.code == kExitDomainError);
    CHECK(odd.err.find("glue 2 copies first") != std::string::npos);
    CHECK(run({"balance", "--type", "2,1,0", "--policy", "median"}).code == kExitUsage);
}

TEST_CASE("cli model commands") {
    const auto e = run({"esp", "--model", fixture("pbundle.json"), "--class", "1,0"});
    CHECK(e.code == kExitOk);
    CHECK(e.out.starts_with("esp: 3/2,3/2,2/3,2/3,2/3\nchamber: 1\ndegree: 10\n"));
    CHECK(run({"esp", "--model", fixture("pbundle.json"), "--class", "-1,0"}).code == kExitDomainError);
    CHECK(run({"check", "--model", fixture("toy_rho2.json")}).out == "ok\n");
    CHECK(run({"check", "--model", fixture("nope.json")}).code == kExitUsage);

    const auto c = run({"count", "--model", fixture("toy_rho1.json"), "--dmax", "3"});
    CHECK(c.code == kExitOk);
    CHECK(c.out.find("\n3\t3\t") != std::string::npos);
    CHECK(c.out.find("\t14\t") != std::string::npos);
    // byte-identical reruns
    CHECK(run({"count", "--model", fixture("toy_rho1.json"), "--dmax", "3"}).out == c.out);

    const auto q = run({"count", "--model", fixture("toy_rho2.json"), "--dmax", "2", "--q", "3"});
    CHECK(q.out.find("\n2\t5\t0\t33\t") != std::string::npos);
}

TEST_CASE("cli --out") {
    const auto path = std::filesystem::temp_directory_path() / "slopepanel_cli_out.txt";
    std::filesystem::remove(path);
    const auto r = run({"--out", path.string(), "sp", "--type", "4,3,3,2"});
    CHECK(r.code == kExitOk);
    CHECK(r.out.empty());
    std::ifstream in(path);
    std::stringstream buf;
    buf << in.rdbuf();
    CHECK(buf.str() == "panel: 4/3,1,1,2/3  min_ratio: 2/3\n");
    std::filesystem::remove(path);
}
