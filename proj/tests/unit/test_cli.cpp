#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "ipaac/cli.hpp"
#include "ipaac/study.hpp"

using namespace ipaac;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("solve reports the error") {
  const Run r = run({"solve", "--kernel", "tensor", "--case", "tensor-quadratic", "--delta", "0.4", "--h", "0.05",
                     "--scheme", "ipa-ac"});
  CHECK(r.code == 0);
  CHECK(r.out.find("error_inf 1.44") != std::string::npos);
}

TEST_CASE("study writes csv to stdout") {
  const Run r = run({"study", "--regime", "h", "--kernel", "scalar", "--case", "1", "--delta", "0.4", "--scheme",
                     "ipa-ac", "--h-list", "0.2,0.1"});
  REQUIRE(r.code == 0);
  std::istringstream in(r.out);
  const StudyTable t = read_csv(in);
  REQUIRE(t.rows.size() == 2);
  CHECK(t.rows[0].error == doctest::Approx(3.70e-2).epsilon(0.01));
}

TEST_CASE("study writes csv and plot files") {
  const auto dir = std::filesystem::temp_directory_path();
  const auto csv = dir / "ipaac_cli_test.csv";
  const auto plot = dir / "ipaac_cli_test.dat";
  const Run r = run({"study", "--regime", "ac", "--m", "3", "--h-list", "0.1,0.05", "--out", csv.string(),
                     "--plot-data", plot.string()});
  REQUIRE(r.code == 0);
  std::ifstream in(csv);
  CHECK(read_csv(in).rows.size() == 2);
  std::ifstream p(plot);
  std::string header;
  std::getline(p, header);
  CHECK(header == "# h error_inf");
  std::filesystem::remove(csv);
  std::filesystem::remove(plot);
}

TEST_CASE("usage errors exit nonzero") {
  CHECK(run({}).code != 0);
  CHECK(run({"frobnicate"}).code != 0);
  CHECK(run({"solve", "--h", "0.1"}).code != 0);
  CHECK(run({"solve", "--h", "0.1", "--delta", "0.4", "--scheme", "magic"}).code != 0);
  CHECK(run({"study", "--regime", "h", "--delta", "0.4"}).code != 0);
}

TEST_CASE("precondition violations name the constraint") {
  const Run bad_h = run({"solve", "--h", "0.3", "--delta", "0.6"});
  CHECK(bad_h.code != 0);
  CHECK(bad_h.err.find("1/h") != std::string::npos);
  const Run small_delta = run({"solve", "--h", "0.1", "--delta", "0.1"});
  CHECK(small_delta.code != 0);
  const Run mismatch = run({"solve", "--kernel", "tensor", "--case", "1", "--h", "0.1", "--delta", "0.4"});
  CHECK(mismatch.code != 0);
  const Run order = run({"study", "--regime", "h", "--delta", "0.4", "--h-list", "0.1,0.2"});
  CHECK(order.code != 0);
}

TEST_CASE("solver failure exits nonzero") {
  CHECK(run({"solve", "--h", "0.05", "--delta", "0.2", "--max-iter", "2"}).code == 1);
}

TEST_CASE("verification commands") {
  const Run g = run({"geom-verify", "--trials", "50", "--oracle-pairs", "50", "--seed", "7"});
  CHECK(g.code == 0);
  CHECK(g.out.find("PASS") != std::string::npos);
  const Run f = run({"forcing-verify", "--points", "3"});
  CHECK(f.code == 0);
}

TEST_CASE("help exits zero") {
  CHECK(run({"--help"}).code == 0);
}
