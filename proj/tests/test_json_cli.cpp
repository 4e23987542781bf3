#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "helpers.hpp"
#include "horoclif/errors.hpp"
#include "horoclif/hyperbolic.hpp"
#include "horoclif/json_io.hpp"
#include "horoclif/lambda.hpp"
#include "horoclif/matrix.hpp"
#include "horoclif/minkowski.hpp"
#include "horoclif/multivector.hpp"
#include "horoclif/rng.hpp"
#include "horoclif/spinor.hpp"

using namespace horoclif;
using testutil::rel_diff;

namespace {

Multivector scalar(int n, double v) {
  return Multivector::scalar(Signature{0, n}, v);
}
Multivector zero(int n) { return Multivector{Signature{0, n}}; }
Multivector gen(int n, int j) { return Multivector::generator(Signature{0, n}, j); }

struct CliResult {
  int exit_code = -1;
  std::string out;
  std::string err;
};

std::string slurp(const std::string& path) {
  std::ifstream f(path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

std::string temp_path(const std::string& stem) {
  static int counter = 0;
  return "/tmp/horoclif_test_" + std::to_string(++counter) + "_" + stem;
}

// Runs the installed CLI binary (path from HOROCLIF_CLI) through /bin/sh.
CliResult run_cli(const std::string& args, const std::string& input_json = "",
                  const std::string& env_prefix = "") {
  const char* bin = std::getenv("HOROCLIF_CLI");
  REQUIRE(bin != nullptr);
  std::string cmd = env_prefix + "\"" + bin + "\" " + args;
  if (!input_json.empty()) {
    const std::string in = temp_path("in.json");
    std::ofstream f(in);
    f << input_json;
    f.close();
    cmd += " --input " + in;
  }
  const std::string out = temp_path("out.txt");
  const std::string err = temp_path("err.txt");
  cmd += " >" + out + " 2>" + err;
  const int rc = std::system(cmd.c_str());
  CliResult r;
  r.exit_code = (rc >= 0 && (rc & 0x7f) == 0) ? ((rc >> 8) & 0xff) : -1;
  r.out = slurp(out);
  r.err = slurp(err);
  return r;
}

double extract_number(const std::string& text, const std::string& key) {
  const auto pos = text.find("\"" + key + "\":");
  REQUIRE(pos != std::string::npos);
  return std::strtod(text.c_str() + pos + key.size() + 3, nullptr);
}

}  // namespace

TEST_CASE("multivector serialization is deterministic and exact") {
  Multivector m{Signature{0, 2}};
  m[0] = 1.5;
  m[0b01] = -2.0;
  m[0b11] = 3.0;
  CHECK(json_multivector(m) ==
        "{\"p\":0,\"q\":2,\"coeffs\":{\"\":1.5,\"1\":-2,\"1,2\":3}}");
  CHECK(blade_key(0) == "");
  CHECK(blade_key(0b101) == "1,3");
  CHECK(format_double(0.0) == "0");
  CHECK(format_double(-0.0) == "0");
}

TEST_CASE("seventeen digit output round trips exactly") {
  Rng rng(81);
  for (int rep = 0; rep < 200; ++rep) {
    const double x = rng.normal() * std::pow(10.0, rng.uniform_int(-12, 12));
    const std::string s = format_double(x);
    CHECK(std::strtod(s.c_str(), nullptr) == x);
  }
}

TEST_CASE("typed values survive a JSON round trip bit for bit") {
  Rng rng(82);
  for (int n = 0; n <= 4; ++n) {
    for (int rep = 0; rep < 10; ++rep) {
      Multivector m{Signature{0, n}};
      for (uint32_t i = 0; i < m.size(); ++i) m[i] = rng.normal();
      const Multivector m2 = parse_multivector(json_multivector(m));
      for (uint32_t i = 0; i < m.size(); ++i) CHECK(m2[i] == m[i]);

      const Spinor k = random_spinor(n, rng);
      const Spinor k2 = parse_spinor(json_spinor(k));
      for (uint32_t i = 0; i < k.xi.size(); ++i) {
        CHECK(k2.xi[i] == k.xi[i]);
        CHECK(k2.eta[i] == k.eta[i]);
      }

      const CliffordMatrix A = random_sl2(n, rng);
      const CliffordMatrix B = parse_matrix(json_matrix(A), MatrixFlavor::SL);
      for (uint32_t i = 0; i < A.a.size(); ++i) {
        CHECK(B.a[i] == A.a[i]);
        CHECK(B.b[i] == A.b[i]);
        CHECK(B.c[i] == A.c[i]);
        CHECK(B.d[i] == A.d[i]);
      }
    }
  }
}

TEST_CASE("spinor list parsing accepts all three layouts") {
  const Spinor k = make_spinor(scalar(2, 1.0), zero(2));
  const std::string one = json_spinor(k);
  CHECK(parse_spinors(one).size() == 1);
  CHECK(parse_spinors("[" + one + "," + one + "]").size() == 2);
  CHECK(parse_spinors("{\"spinors\":[" + one + "]}").size() == 1);
}

TEST_CASE("parse failures carry diagnostics") {
  CHECK_THROWS_AS(parse_multivector("not json"), DomainError);
  CHECK_THROWS_AS(parse_multivector("{\"p\":0,\"q\":1,\"coeffs\":{\"2,1\":1}}"),
                  DomainError);
  CHECK_THROWS_AS(parse_spinor("{\"xi\":{},\"eta\":{\"\":1}}"), DomainError);
  try {
    parse_multivector("{");
    CHECK(false);
  } catch (const DomainError& e) {
    CHECK(e.clause == "malformed JSON input");
  }
}

TEST_CASE("structured writers emit the documented shapes") {
  const int n = 2;
  const Spinor e1 = make_spinor(scalar(n, 1.0), zero(n));
  const std::string flag_json = json_multiflag(multiflag(e1));
  CHECK(flag_json.find("\"base\":{\"T\":1,\"Z\":1,\"X\":[0,0,0]}") != std::string::npos);
  CHECK(flag_json.find("\"X\":[0,2,0]") != std::string::npos);

  const std::string horo = json_horosphere(horosphere(e1));
  CHECK(horo.find("\"kind\":\"plane\"") != std::string::npos);
  CHECK(horo.find("\"height\":1") != std::string::npos);

  const std::string sph =
      json_horosphere(horosphere(make_spinor(zero(n), scalar(n, 1.0))));
  CHECK(sph.find("\"kind\":\"sphere\"") != std::string::npos);
  CHECK(sph.find("\"diameter\":1") != std::string::npos);

  const Geodesic g = make_geodesic(ParavectorPoint::inf(n),
                                   ParavectorPoint::finite(gen(n, 1)));
  CHECK(json_geodesic(g) == "{\"from\":\"inf\",\"to\":{\"1\":1}}");

  const std::string csv = json_to_csv(horo);
  CHECK(csv.rfind("key,value\n", 0) == 0);
}

TEST_CASE("cli horosphere command") {
  const int n = 2;
  const std::string plane = json_spinor(make_spinor(scalar(n, 1.0), zero(n)));
  CliResult r = run_cli("horosphere", plane);
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("\"kind\":\"plane\"") != std::string::npos);
  CHECK(r.out.find("\"height\":1") != std::string::npos);

  const std::string sphere = json_spinor(make_spinor(zero(n), scalar(n, 1.0)));
  r = run_cli("horosphere", sphere);
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("\"kind\":\"sphere\"") != std::string::npos);
  CHECK(r.out.find("\"diameter\":1") != std::string::npos);

  // bivector first component: rejected with the validation clause
  r = run_cli("horosphere", "{\"n\":2,\"xi\":{\"1,2\":1},\"eta\":{\"\":1}}");
  CHECK(r.exit_code == 2);
  CHECK(r.err.find("xi*conj(eta) not paravector") != std::string::npos);

  r = run_cli("horosphere", "this is not json");
  CHECK(r.exit_code == 2);
  CHECK(r.err.find("malformed JSON input") != std::string::npos);
}

TEST_CASE("cli flags command reports the apex flag") {
  const std::string spinor = json_spinor(make_spinor(scalar(2, 1.0), zero(2)));
  const CliResult r = run_cli("flags", spinor);
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("\"base\":{\"T\":1,\"Z\":1,\"X\":[0,0,0]}") != std::string::npos);
  CHECK(r.out.find("\"X\":[0,2,0]") != std::string::npos);
  CHECK(r.out.find("\"X\":[0,0,2]") != std::string::npos);
}

TEST_CASE("cli ptolemy command on the elementary tuple") {
  const int n = 2;
  const std::string tuple =
      "{\"spinors\":[" + json_spinor(make_spinor(scalar(n, 1.0), zero(n))) + "," +
      json_spinor(make_spinor(zero(n), scalar(n, 1.0))) + "," +
      json_spinor(make_spinor(scalar(n, 1.0), scalar(n, 1.0))) + "," +
      json_spinor(make_spinor(gen(n, 1), scalar(n, 1.0))) + "]}";
  const CliResult r = run_cli("ptolemy", tuple);
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("\"relation\":\"ptolemy\"") != std::string::npos);
  CHECK(r.out.find("\"pass\":true") != std::string::npos);
  CHECK(extract_number(r.out, "residual") < 1e-10);

  // a repeated spinor collapses a needed length: degenerate, exit 3
  const std::string degen =
      "{\"spinors\":[" + json_spinor(make_spinor(scalar(n, 1.0), zero(n))) + "," +
      json_spinor(make_spinor(zero(n), scalar(n, 1.0))) + "," +
      json_spinor(make_spinor(scalar(n, 1.0), zero(n))) + "," +
      json_spinor(make_spinor(gen(n, 1), scalar(n, 1.0))) + "]}";
  const CliResult rd = run_cli("ptolemy", degen);
  CHECK(rd.exit_code == 3);
  CHECK(rd.err.find("conditioning") != std::string::npos);
}

TEST_CASE("cli lambda command emits the pairwise matrix") {
  const int n = 2;
  const std::string tuple =
      "[" + json_spinor(make_spinor(scalar(n, 1.0), zero(n))) + "," +
      json_spinor(make_spinor(zero(n), scalar(n, 1.0))) + "]";
  const CliResult r = run_cli("lambda", tuple);
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("\"lambda\":") != std::string::npos);
  CHECK(r.out.find("\"spinors\":") != std::string::npos);
}

TEST_CASE("cli verify runs deterministically") {
  const CliResult a = run_cli("verify --n 2 --samples 200 --seed 42");
  const CliResult b = run_cli("verify --n 2 --samples 200 --seed 42");
  CHECK(a.exit_code == 0);
  CHECK(b.exit_code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out.find("\"pass\":true") != std::string::npos);

  // an absurd tolerance override must fail some residual suite: exit 1
  const CliResult c = run_cli("verify --n 2 --samples 20 --seed 42 --tol 1e-30");
  CHECK(c.exit_code == 1);
  CHECK(c.out.find("\"pass\":false") != std::string::npos);
}

TEST_CASE("cli random output feeds the other commands") {
  const CliResult one = run_cli("random --n 2 --seed 7 --samples 1");
  CHECK(one.exit_code == 0);
  CHECK_NOTHROW(parse_spinor(one.out));
  const CliResult horo = run_cli("horosphere", one.out);
  CHECK(horo.exit_code == 0);

  const CliResult many = run_cli("random --n 2 --seed 7 --samples 3");
  CHECK(many.exit_code == 0);
  CHECK(parse_spinors(many.out).size() == 3);
  const CliResult lam = run_cli("lambda", many.out);
  CHECK(lam.exit_code == 0);

  const CliResult mat = run_cli("random --n 2 --seed 9 --kind matrix");
  CHECK(mat.exit_code == 0);

  const CliResult again = run_cli("random --n 2 --seed 7 --samples 3");
  CHECK(again.out == many.out);
}

TEST_CASE("cli respects the dimension cap override") {
  const CliResult r = run_cli("random --n 5 --seed 1", "", "HOROCLIF_DIM_CAP=3 ");
  CHECK(r.exit_code == 2);
  CHECK(r.err.find("dimension") != std::string::npos);

  const CliResult ok = run_cli("random --n 5 --seed 1");
  CHECK(ok.exit_code == 0);
}

TEST_CASE("cli csv format flattens the report") {
  const std::string spinor = json_spinor(make_spinor(scalar(2, 1.0), zero(2)));
  const CliResult r = run_cli("horosphere --format csv", spinor);
  CHECK(r.exit_code == 0);
  CHECK(r.out.rfind("key,value\n", 0) == 0);
  CHECK(r.out.find("kind,plane") != std::string::npos);
}
