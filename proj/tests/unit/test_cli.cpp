#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <string>

namespace fs = std::filesystem;
using json = nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(BURGE_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::string out;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, n);
  const int status = pclose(p);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

fs::path scratch() {
  const fs::path d = fs::temp_directory_path() / ("burge_cli_test_" + std::to_string(::getpid()));
  fs::create_directories(d);
  return d;
}

std::string write(const fs::path& p, const std::string& text) {
  std::ofstream(p) << text;
  return p.string();
}

}  // namespace

TEST_CASE("apply") {
  const fs::path d = scratch();
  const std::string a = write(d / "a.json", "{\"shape\":[2,2],\"domain\":\"geom-rational\",\"rows\":[[2,1],[4,3]]}");
  const Run b = run("apply --map burge --in " + a);
  CHECK(b.code == 0);
  CHECK(json::parse(b.out)["rows"] == json::parse(R"([["6/5","2/1"],["8/1","20/1"]])"));

  const std::string r = (d / "r.json").string();
  CHECK(run("apply --map rsk --in " + a + " --out " + r).code == 0);
  const Run back = run("apply --map inv-rsk --in " + r);
  CHECK(json::parse(back.out)["rows"] == json::parse(R"([["2/1","1/1"],["4/1","3/1"]])"));

  const Run s = run("apply --map schutz --in " + write(d / "s.json", "[[2,6,24]]"));
  CHECK(json::parse(s.out)["rows"] == json::parse(R"([["4/1","12/1","24/1"]])"));

  const Run t = run("apply --map transpose --in " + write(d / "t.json", "[[1,2],[3]]"));
  CHECK(json::parse(t.out)["shape"] == json::parse("[2,1]"));

  // An explicit growth order gives the same result as the canonical one.
  const Run o = run("apply --map burge --in " + a + " --order '[[1,1],[2,1],[1,2],[2,2]]'");
  CHECK(o.out == b.out);

  const std::string sym = write(d / "sym.json", "[[2,1],[1,3]]");
  CHECK(run("apply --map burge-up --in " + sym).out == run("apply --map burge --in " + sym).out);
  fs::remove_all(d);
}

TEST_CASE("verify") {
  const Run a = run("verify --identity thm3.4-C --max-size 4 --trials 50 --seed 7");
  CHECK(a.code == 0);
  const json j = json::parse(a.out);
  CHECK(j["passed"] == true);
  CHECK(j["trials"] == 50);
  CHECK(run("verify --identity appendix-C-identity --trials 25").code == 0);
  CHECK(run("verify --identity jacobian --max-size 3 --tol 1e-6").code == 0);
  CHECK(run("verify --identity prop3.3 --domain tropical --trials 10").code == 0);
}

TEST_CASE("polymer and whittaker") {
  const Run l = run("polymer --cmd laplace -r 0");
  CHECK(l.code == 0);
  CHECK(l.out.rfind("r,estimate,stderr,samples,seed\n0,1,0,", 0) == 0);
  const Run ks = run("polymer --cmd ks-zzstar -n 2 --alpha 1,1 --samples 100000 --seed 1");
  CHECK(ks.code == 0);
  CHECK(json::parse(ks.out)["p"].get<double>() > 0.01);
  const Run rep = run("polymer --cmd replica -n 3 --alpha 1,2,1 --samples 200 --seed 2");
  CHECK(rep.code == 0);
  const Run c = run("whittaker --cmd corollary -n 2 --alpha 1,1 --beta 1");
  CHECK(c.code == 0);
  CHECK(json::parse(c.out)["relerr"].get<double>() < 1e-4);
  const Run e = run("whittaker --cmd eval --alpha=-2 --x 3");
  CHECK(json::parse(e.out)["value"].get<double>() == doctest::Approx(1.0 / 9));
}

TEST_CASE("usage errors exit 2") {
  const fs::path d = scratch();
  const std::string a = write(d / "a.json", "[[2,1],[4,3]]");
  CHECK(run("apply --map nope --in " + a).code == 2);
  CHECK(run("apply --map rsk --in " + write(d / "bad.json", "[[1,2],[3]")).code == 2);
  CHECK(run("apply --map rsk --in " + write(d / "shape.json", "[[1],[1,2]]")).code == 2);
  CHECK(run("apply --map rsk --in " + write(d / "neg.json", "[[1,-2]]")).code == 2);
  CHECK(run("apply --map burge-up --in " + a).code == 2);
  CHECK(run("apply --map rsk --in " + (d / "missing.json").string()).code == 2);
  CHECK(run("verify --identity no-such-thing").code == 2);
  CHECK(run("verify --identity thm3.2 --trials 0").code == 2);
  CHECK(run("verify --identity thm3.2 --domain complex").code == 2);
  CHECK(run("polymer --cmd laplace -r 1").code == 2);
  CHECK(run("polymer --cmd laplace -n 2 --alpha 1 -r 1 --seed 1").code == 2);
  CHECK(run("polymer --cmd laplace --alpha=-1 -r 1 --seed 1").code == 2);
  CHECK(run("whittaker --cmd eval --alpha 1,1,1,1 --x 1,1,1,1").code == 2);
  CHECK(run("").code == 2);
  fs::remove_all(d);
}
