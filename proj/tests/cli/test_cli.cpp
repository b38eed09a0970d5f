#include <sys/wait.h>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <sstream>
#include <string>

#include "doctest.h"
#include "json.hpp"

namespace {

struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + " \"" EXTREMAL_INFO_PATH "\" " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  while (std::fgets(buf, sizeof buf, pipe) != nullptr) {
    out += buf;
  }
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  std::string l;
  while (std::getline(in, l)) {
    out.push_back(l);
  }
  return out;
}

std::vector<std::string> fields(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream in(line);
  std::string f;
  while (std::getline(in, f, ',')) {
    out.push_back(f);
  }
  return out;
}

}  // namespace

TEST_CASE("measure") {
  const auto r = run(R"(measure --dist '{"family":"exponential","theta":1}' --n 10)");
  REQUIRE(r.code == 0);
  const auto ls = lines(r.out);
  REQUIRE(ls.size() == 2);
  CHECK(ls[0] == "family,params,n,H,J,method,error_estimate");
  const auto f = fields(ls[1]);
  CHECK(f[0] == "exponential");
  CHECK(f[2] == "10");
  CHECK(std::abs(std::stod(f[3]) - 1.526383) < 1e-6);
  CHECK(std::stod(f[4]) == doctest::Approx(-10.0 / 76).epsilon(1e-14));
  CHECK(f[5] == "closed_form");

  const auto g = run(R"(measure --dist '{"family":"gev","xi":0}' --n 1 --format json)");
  REQUIRE(g.code == 0);
  const auto j = nlohmann::json::parse(g.out);
  CHECK(j["H"].get<double>() == doctest::Approx(1.5772156649015329).epsilon(1e-14));
  CHECK(j["J"].get<double>() == doctest::Approx(-0.125).epsilon(1e-14));
  CHECK(j["params"]["xi"].get<double>() == 0.0);

  const auto q = run(R"(measure --dist '{"family":"pareto","theta":1,"nu":2}' --n 3 --method quad)");
  CHECK(q.code == 0);
  CHECK(fields(lines(q.out)[1])[5] == "quadrature");
}

TEST_CASE("exit codes") {
  CHECK(run(R"(measure --dist '{"family":"exponential"}' --n 0)").code == 1);
  CHECK(run(R"(measure --dist '{"family":"exponential","rate":2}' --n 3)").code == 1);
  CHECK(run(R"(measure --dist 'not json' --n 3)").code == 1);
  CHECK(run(R"(measure --dist '{"family":"gev","xi":-2.5}' --n 3)").code == 2);
  CHECK(run(R"(converge --dist '{"family":"exponential"}' --n-grid ',')").code == 1);
  CHECK(run("frobnicate").code == 1);
  CHECK(run("").code == 1);
  CHECK(run("--help").code == 0);
}

TEST_CASE("monte carlo determinism and the seed variable") {
  const std::string args = R"(measure --dist '{"family":"logistic","theta":1}' --n 5 --method mc --samples 20000)";
  const auto a = run(args + " --seed 4");
  const auto b = run(args + " --seed 4");
  const auto c = run(args + " --seed 5");
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out != c.out);
  CHECK(run(args, "EXTREMAL_INFO_SEED=4").out == a.out);
  CHECK(run(args + " --seed 4", "EXTREMAL_INFO_SEED=9").out == a.out);
  CHECK(run(args, "OMP_NUM_THREADS=1 EXTREMAL_INFO_SEED=4").out == a.out);
  CHECK(run(args, "EXTREMAL_INFO_SEED=abc").code == 1);
}

TEST_CASE("bounds") {
  const auto r = run(R"(bounds --dist '{"family":"exponential","theta":3}' --n 1)");
  REQUIRE(r.code == 0);
  const auto ls = lines(r.out);
  REQUIRE(ls.size() == 3);
  CHECK(ls[0].rfind("measure,lower,value,upper,", 0) == 0);
  const auto h = fields(ls[1]);
  CHECK(h[0] == "shannon");
  CHECK(h[9].find("sup density") != std::string::npos);
  const auto n = run(R"(bounds --dist '{"family":"exponential","theta":2}' --n 5 --normalized --format json)");
  CHECK(n.code == 0);
  CHECK(nlohmann::json::parse(n.out).size() == 2);
}

TEST_CASE("tables") {
  const auto r = run("tables");
  REQUIRE(r.code == 0);
  const auto ls = lines(r.out);
  CHECK(ls[0] == "family,params,n,H_closed,H_quad,H_gap,H_UB,J_closed,J_quad,J_gap,J_UB");
  CHECK(ls.size() == 1 + 30 * 6);
  bool saw_exp = false;
  bool saw_uniform_limit = false;
  for (std::size_t i = 1; i < ls.size(); ++i) {
    const auto f = fields(ls[i]);
    REQUIRE(f.size() >= 11);
    if (f[2] != "limit") {
      CHECK(std::stod(f[5]) < 1e-8);
      CHECK(std::stod(f[9]) < 1e-8);
    }
    if (f[0] == "exponential" && f[1] == "theta=1" && f[2] == "1") {
      saw_exp = true;
      CHECK(std::stod(f[3]) == doctest::Approx(1.0));
      CHECK(std::stod(f[7]) == doctest::Approx(-0.25));
    }
    if (f[0] == "uniform" && f[1] == "theta=1" && f[2] == "limit") {
      saw_uniform_limit = true;
      CHECK(f[3] == "-inf");
      CHECK(f[7] == "-inf");
    }
    if (f[0] == "pareto" && f[2] == "limit") {
      CHECK(f[3] == "inf");
      CHECK(f[7] == "indeterminate");
    }
  }
  CHECK(saw_exp);
  CHECK(saw_uniform_limit);
  CHECK(run("tables").out == r.out);
}

TEST_CASE("figure1") {
  const auto r = run("figure1");
  REQUIRE(r.code == 0);
  const auto ls = lines(r.out);
  REQUIRE(ls.size() == 51);
  CHECK(ls[0] == "n,H,UB");
  CHECK(ls[1] == "1,1,1.57721566490153");
  const auto last = fields(ls[50]);
  double h50 = 0;
  for (int k = 50; k >= 1; --k) {
    h50 += 1.0 / k;
  }
  CHECK(std::stod(last[1]) == doctest::Approx(1 - std::log(50.0) - 0.02 + h50).epsilon(1e-13));
}

TEST_CASE("converge") {
  const auto r = run(R"(converge --dist '{"family":"exponential","theta":1}' --n-grid 10,1e2,1e3,1e4,1e5,1e6)");
  REQUIRE(r.code == 0);
  const auto ls = lines(r.out);
  REQUIRE(ls.size() == 7);
  CHECK(ls[0] == "n,h_normalized,j_normalized,h_target,j_target,h_gap,j_gap");
  const auto f = fields(ls[6]);
  CHECK(f[0] == "1000000");
  CHECK(std::stod(f[5]) < 1e-5);
  CHECK(std::stod(f[6]) < 1e-5);
  const auto range = run(R"(converge --dist '{"family":"uniform"}' --n-grid 2:20:3)");
  CHECK(range.code == 0);
  CHECK(lines(range.out).size() == 1 + 7);
  CHECK(run(R"(converge --dist '{"family":"uniform"}' --n-grid 5:2:1)").code == 1);
  CHECK(run(R"(converge --dist '{"family":"uniform"}' --n-grid 2.5)").code == 1);
}

TEST_CASE("verify exits 0 on a clean build") {
  const auto r = run("verify --samples 100000");
  const auto ls = lines(r.out);
  REQUIRE(!ls.empty());
  CHECK(ls[0] == "group,checks,failures,status");
  for (std::size_t i = 1; i < ls.size(); ++i) {
    CAPTURE(ls[i]);
    CHECK(fields(ls[i])[3] == "pass");
  }
  CHECK(r.code == 0);
}
