#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <vector>

#include "hdglab/cli.hpp"
#include "hdglab/complex_literal.hpp"

using namespace hdglab;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "hdglab");
  std::vector<const char *> argv;
  for (const auto &a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string first_line(const std::string &s) { return s.substr(0, s.find('\n')); }

std::string slurp(const std::string &path) {
  std::ifstream f(path, std::ios::binary);
  std::ostringstream s;
  s << f.rdbuf();
  return s.str();
}

} // namespace

TEST_SUITE("cli") {

TEST_CASE("complex literals") {
  CHECK(parse_complex("1.5") == Complex(1.5, 0));
  CHECK(parse_complex("2i") == Complex(0, 2));
  CHECK(parse_complex("-0.25i") == Complex(0, -0.25));
  CHECK(parse_complex("1+2i") == Complex(1, 2));
  CHECK(parse_complex("1-2i") == Complex(1, -2));
  CHECK(parse_complex("i") == Complex(0, 1));
  CHECK(parse_complex("-i") == Complex(0, -1));
  CHECK(parse_complex("3+i") == Complex(3, 1));
  CHECK(parse_complex("1e-3-2.5e2i") == Complex(1e-3, -250));
  CHECK(parse_complex("2E+1i") == Complex(0, 20));
  CHECK(parse_complex("+4") == Complex(4, 0));
  for (const char *bad : {"", "j", "1+2j", "1+", "abc", "1 +2i", "ii", "1++2i", "inf", "nan", "1.2.3"})
    CHECK_FALSE(parse_complex(bad).has_value());
  CHECK(format_real(0.1) == "0.10000000000000001");
}

TEST_CASE("local-matrix prints the square p = 0 blocks") {
  const Run r = run({"local-matrix", "--system", "helmholtz", "--shape", "square", "--p", "0",
                     "--k", "1", "--tau", "1", "--h", "1", "--format", "json"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["A_ii"][0][0][1].get<double>() == doctest::Approx(1.0).epsilon(1e-13));
  CHECK(j["A_ii"][1][1][1].get<double>() == doctest::Approx(1.0).epsilon(1e-13));
  CHECK(j["A_ii"][2][2][0].get<double>() == doctest::Approx(-4.0).epsilon(1e-13));
  CHECK(j["A_ii"][2][2][1].get<double>() == doctest::Approx(-1.0).epsilon(1e-13));

  const Run s = run({"local-matrix", "--shape", "square", "--k", "1", "--tau", "-0.25i", "--h", "1",
                     "--format", "json"});
  REQUIRE(s.code == 0);
  CHECK(nlohmann::json::parse(s.out)["sigma_min"].get<double>() <= 1e-13);

  const Run t = run({"local-matrix", "--system", "maxwell", "--shape", "tet", "--p", "0"});
  REQUIRE(t.code == 0);
  CHECK(first_line(t.out) == "A_ii 6x6");
}

TEST_CASE("CSV headers") {
  const Run a = run({"sweep-kh", "--shape", "cube", "--p", "0", "--tau", "-0.25i", "--kh-start", "0.5",
                     "--kh-stop", "1.5", "--kh-count", "11"});
  REQUIRE(a.code == 0);
  CHECK(first_line(a.out) == "kh_re,kh_im,tau_re,tau_im,p,shape,sigma_min,sigma_min_normalized");
  // kh = 1 lies on the cube locus 4 tau = -i kh.
  CHECK(a.out.find("\n1,0,0,-0.25,0,cube,") != std::string::npos);

  const Run b = run({"sweep-tau-plane", "--p", "0", "--re-count", "3", "--im-count", "3"});
  REQUIRE(b.code == 0);
  CHECK(first_line(b.out) == "kh_re,kh_im,tau_re,tau_im,p,shape,sigma_min,sigma_min_normalized");

  const Run c = run({"dispersion", "--method", "hrt", "--p", "0", "--kh", "0.1", "--theta-count", "5"});
  REQUIRE(c.code == 0);
  CHECK(first_line(c.out) == "theta,kh,tau_re,tau_im,p,method,kh_num_re,kh_num_im,residual");
  const auto summary = nlohmann::json::parse(c.err);
  CHECK(summary["eps_dissip"].get<double>() <= 1e-10);

  const Run d = run({"condition", "--p", "1", "--k-count", "3"});
  REQUIRE(d.code == 0);
  CHECK(first_line(d.out) == "k,cond");
}

TEST_CASE("exit codes") {
  CHECK(run({}).code == 2);
  CHECK(run({"no-such-command"}).code == 2);
  CHECK(run({"local-matrix", "--k", "1+2j"}).code == 2);
  CHECK(run({"sweep-kh", "--kh-count", "1"}).code == 2);
  CHECK(run({"local-matrix", "--shape", "square", "--p", "2"}).code == 2);
  CHECK(run({"dispersion", "--tau", "-0.25i", "--kh", "1"}).code == 1);
  CHECK(run({"verify-theorem1", "--samples", "5"}).code == 0);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("outputs are byte-identical across runs and thread counts") {
  const std::string f1 = "cli_determinism_1.csv", f2 = "cli_determinism_2.csv";
  REQUIRE(run({"sweep-kh", "--shape", "tet", "--p", "1", "--tau", "-i", "--kh-count", "50", "--out", f1})
              .code == 0);
  REQUIRE(run({"sweep-kh", "--shape", "tet", "--p", "1", "--tau", "-i", "--kh-count", "50", "--threads",
               "3", "--out", f2})
              .code == 0);
  CHECK(slurp(f1) == slurp(f2));
  CHECK_FALSE(slurp(f1).empty());
  const Run a = run({"verify-theorem1", "--samples", "20", "--seed", "5"});
  const Run b = run({"verify-theorem1", "--samples", "20", "--seed", "5", "--threads", "2"});
  CHECK(a.out == b.out);
  std::remove(f1.c_str());
  std::remove(f2.c_str());
}

}
