#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "tfreud/cli.hpp"

using namespace tfreud;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

int count_lines(const std::string& s) {
  int n = 0;
  for (char c : s) n += c == '\n';
  return n;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream f(p, std::ios::binary);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

void expect_error(std::vector<std::string> args, int code) {
  const Run r = run(std::move(args));
  CHECK(r.code == code);
  CHECK(count_lines(r.err) == 1);
  CHECK(r.err.rfind("tfreud: error: ", 0) == 0);
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("moments") {
    const Run r = run({"moments"});
    CHECK(r.code == 0);
    CHECK(count_lines(r.out) == 31);
    CHECK(r.out.rfind("n,mu_n\n", 0) == 0);
    const Run rr = run({"moments", "--round", "6"});
    CHECK(rr.out.find("\n3,0.250000\n") != std::string::npos);
    const Run j = run({"moments", "--format", "json", "--round", "6"});
    const auto doc = nlohmann::json::parse(j.out);
    CHECK(doc["meta"]["n_max"] == 14);
    CHECK(doc["meta"]["bits"] == 352);
    CHECK(doc["data"].size() == 30);
    CHECK(doc["data"][3]["mu_n"] == "0.250000");
  }

  TEST_CASE("coeffs") {
    const Run r = run({"coeffs", "--round", "6"});
    CHECK(r.code == 0);
    CHECK(r.out.find("\n0,0.000000,0.488871,") != std::string::npos);
    // z = 16 rows equal the z = 1 rows scaled by 1/2 and 1/4.
    const Run a = run({"coeffs", "--z", "16", "--round", "8", "--n-max", "4"});
    CHECK(a.out.find("\n1,0.02474868,0.31409321,") != std::string::npos);
  }

  TEST_CASE("zeros") {
    const Run r = run({"zeros", "--round", "4"});
    CHECK(r.code == 0);
    CHECK(r.out.find("\n1,0.4889,0.4889\n") != std::string::npos);
    const Run all = run({"zeros", "--all-zeros", "--n-max", "3"});
    CHECK(count_lines(all.out) == 1 + 1 + 2 + 3);
    const Run tc = run({"zeros", "--table-check"});
    // Three published entries differ in the fourth decimal.
    CHECK(tc.code == 1);
    int bad = 0;
    for (size_t p = tc.out.find("false"); p != std::string::npos; p = tc.out.find("false", p + 1)) ++bad;
    CHECK(bad == 3);
  }

  TEST_CASE("density") {
    const Run r = run({"density", "--t", "2", "--points", "5", "--round", "8"});
    CHECK(r.code == 0);
    CHECK(count_lines(r.out) == 6);
    CHECK(r.out.find(",1.00000000,1.38288314\n") != std::string::npos);
  }

  TEST_CASE("verify and fault injection") {
    const Run ok = run({"verify", "--n-max", "8"});
    CHECK(ok.code == 0);
    CHECK(ok.out.find("false") == std::string::npos);
    const Run bad = run({"verify", "--n-max", "8", "--fault-inject", "a:3:1e-6"});
    CHECK(bad.code == 1);
    CHECK(bad.out.find("lf-eq1,0,8,1,") != std::string::npos);
    CHECK(bad.out.find("lf-eqI") != std::string::npos);
    const auto line_of = [&](const std::string& name) {
      const auto p = bad.out.find("\n" + name + ",");
      return bad.out.substr(p + 1, bad.out.find('\n', p + 1) - p - 1);
    };
    CHECK(line_of("lf-eq1").ends_with(",false"));
    CHECK(line_of("lf-eq2").ends_with(",false"));
    CHECK(line_of("lf-eqI").ends_with(",false"));
    CHECK(line_of("moment-recurrence").ends_with(",true"));
  }

  TEST_CASE("figures: five deterministic groups") {
    const auto dir = std::filesystem::temp_directory_path() / "tfreud_fig_test";
    std::filesystem::remove_all(dir);
    const Run r = run({"figures", "--out", dir.string(), "--n-max", "6", "--points", "8"});
    CHECK(r.code == 0);
    int files = 0;
    for (const auto& e : std::filesystem::directory_iterator(dir)) files += e.is_regular_file();
    CHECK(files == 5);
    const std::string first = slurp(dir / "fig2_extreme_zeros.csv");
    run({"figures", "--out", dir.string(), "--n-max", "6", "--points", "8"});
    CHECK(slurp(dir / "fig2_extreme_zeros.csv") == first);
    const Run rounded = run({"figures", "--out", dir.string(), "--n-max", "6", "--points", "8", "--round", "4"});
    CHECK(slurp(dir / "fig2_extreme_zeros.csv").find("\n2,0.2363,0.8808\n") != std::string::npos);
    std::filesystem::remove_all(dir);
  }

  TEST_CASE("output file and determinism") {
    const auto p = std::filesystem::temp_directory_path() / "tfreud_cli_test.csv";
    CHECK(run({"coeffs", "--out", p.string()}).code == 0);
    const std::string a = slurp(p);
    CHECK(run({"coeffs", "--out", p.string()}).code == 0);
    CHECK(slurp(p) == a);
    CHECK(a == run({"coeffs"}).out);
    std::filesystem::remove(p);
  }

  TEST_CASE("every failure path: nonzero exit, one diagnostic line") {
    expect_error({}, 2);
    expect_error({"bogus"}, 2);
    expect_error({"zeros", "--unknown"}, 2);
    expect_error({"zeros", "--z", "abc"}, 2);
    expect_error({"zeros", "--z", "-1"}, 2);
    expect_error({"zeros", "--z", "0"}, 2);
    expect_error({"zeros", "--n-max", "0"}, 2);
    expect_error({"zeros", "--bits", "16"}, 2);
    expect_error({"zeros", "--epsilon", "0"}, 2);
    expect_error({"density", "--t", "-2"}, 2);
    expect_error({"density", "--points", "0"}, 2);
    expect_error({"zeros", "--round", "-1"}, 2);
    expect_error({"zeros", "--format", "xml"}, 2);
    expect_error({"zeros", "--table-check", "--z", "2"}, 2);
    expect_error({"coeffs", "--table-check"}, 2);
    expect_error({"coeffs", "--all-zeros"}, 2);
    expect_error({"coeffs", "--fault-inject", "a:3:1e-6"}, 2);
    expect_error({"verify", "--fault-inject", "a:x:1"}, 2);
    expect_error({"verify", "--fault-inject", "a:0:1"}, 2);
    expect_error({"verify", "--fault-inject", "a:99:1e-6"}, 2);
    expect_error({"coeffs", "--guard-bits", "-3"}, 2);
    expect_error({"coeffs", "--out", "/nonexistent-dir/x.csv"}, 2);
    expect_error({"coeffs", "--guard-bits", "0"}, 3);
    expect_error({"zeros", "--guard-bits", "0"}, 3);
    expect_error({"verify", "--guard-bits", "0"}, 3);
  }

  TEST_CASE("help and version") {
    CHECK(run({"--help"}).code == 0);
    const Run v = run({"--version"});
    CHECK(v.code == 0);
    CHECK(v.out == std::string(kVersion) + "\n");
  }
}
