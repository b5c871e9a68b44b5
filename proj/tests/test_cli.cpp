#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "subprocess.hpp"
#include "topo/enumeration.hpp"
#include "topo/space_io.hpp"

namespace {

namespace fs = std::filesystem;

struct TempFile {
  fs::path path;

  TempFile(const std::string& name, const std::string& contents) {
    path = fs::temp_directory_path() / ("topo_test_" + name);
    std::ofstream out(path);
    out << contents;
  }
  ~TempFile() { std::error_code ec; fs::remove(path, ec); }
};

std::string q(const std::string& s) { return "'" + s + "'"; }

}  // namespace

TEST_CASE("cli validate") {
  const std::string cli = testutil::cli_path();
  TempFile good("good.topo", "points 2\nnbhd 0: 0 1\nnbhd 1: 0 1\n");
  auto res = testutil::run_command(cli + " validate " + q(good.path.string()));
  CHECK(res.exit_code == 0);
  CHECK(res.output.find("points 2") != std::string::npos);

  TempFile bad("bad.topo", "points 1\nnbhd 0:\n");
  res = testutil::run_command(cli + " validate " + q(bad.path.string()));
  CHECK(res.exit_code == 2);
  CHECK(res.output.find("ReflexivityViolation") != std::string::npos);

  TempFile trans("trans.topo", "points 3\nnbhd 0: 0 1\nnbhd 1: 1 2\nnbhd 2: 2\n");
  res = testutil::run_command(cli + " validate " + q(trans.path.string()));
  CHECK(res.exit_code == 2);
  CHECK(res.output.find("TransitivityViolation(0,1)") != std::string::npos);

  res = testutil::run_command(cli + " validate " + q(good.path.string()) + " --show-opens");
  CHECK(res.exit_code == 0);
  CHECK(res.output.find("opens: 2") != std::string::npos);
}

TEST_CASE("cli op") {
  const std::string cli = testutil::cli_path();
  TempFile window("w02.topo", topo::serialize_space(topo::khalimsky_window(0, 2)));

  auto res = testutil::run_command(cli + " op " + q(window.path.string()) + " consolidation 1");
  CHECK(res.exit_code == 0);
  CHECK(res.output == "0 1 2\n");

  res = testutil::run_command(cli + " op " + q(window.path.string()) + " screen");
  CHECK(res.exit_code == 0);
  CHECK(res.output == "1\n");

  res = testutil::run_command(cli + " op " + q(window.path.string()) + " interior '{}'");
  CHECK(res.exit_code == 0);
  CHECK(res.output == "{}\n");

  res = testutil::run_command(cli + " op " + q(window.path.string()) + " closure 5");
  CHECK(res.exit_code == 2);

  res = testutil::run_command(cli + " op " + q(window.path.string()) + " twirl 1");
  CHECK(res.exit_code == 2);

  res = testutil::run_command(cli + " op " + q(window.path.string()) + " closure");
  CHECK(res.exit_code == 2);

  // Subsets are read and printed in label space; windows label points by
  // their integers.
  TempFile wneg("wneg.topo", topo::serialize_space(topo::khalimsky_window(-2, 2)));
  res = testutil::run_command(cli + " op " + q(wneg.path.string()) + " closure ' -1 '");
  CHECK(res.exit_code == 0);
  CHECK(res.output == "-2 -1 0\n");
}

TEST_CASE("cli khalimsky and product emit parseable spaces") {
  const std::string cli = testutil::cli_path();
  auto res = testutil::run_command(cli + " khalimsky -5 5");
  CHECK(res.exit_code == 0);
  const topo::Space w = topo::parse_space(res.output);
  CHECK(topo::equal_including_labels(w, topo::khalimsky_window(-5, 5)));

  TempFile a("prod_a.topo", topo::serialize_space(topo::khalimsky_window(0, 1)));
  TempFile b("prod_b.topo", topo::serialize_space(topo::khalimsky_window(2, 3)));
  res = testutil::run_command(cli + " product " + q(a.path.string()) + " " +
                              q(b.path.string()));
  CHECK(res.exit_code == 0);
  const topo::Space p = topo::parse_space(res.output);
  CHECK(p == topo::product(topo::khalimsky_window(0, 1), topo::khalimsky_window(2, 3)));
  CHECK(p.label_of(0) == "(0,2)");
}

TEST_CASE("cli enumerate") {
  const std::string cli = testutil::cli_path();
  auto res = testutil::run_command(testutil::cli_path() + " enumerate 2 --compact");
  CHECK(res.exit_code == 0);
  CHECK(res.output == "2 1 2\n2 1 3\n2 3 2\n2 3 3\n");

  // Default mode: .topo blocks separated by blank lines.
  res = testutil::run_command(cli + " enumerate 1");
  CHECK(res.exit_code == 0);
  CHECK(res.output == "points 1\nnbhd 0: 0\n");
  res = testutil::run_command(cli + " enumerate 2");
  CHECK(res.exit_code == 0);
  CHECK(res.output.find("points 2\nnbhd 0: 0\nnbhd 1: 1\n\npoints 2\n") == 0);

  res = testutil::run_command(cli + " enumerate 2 --count");
  CHECK(res.exit_code == 0);
  CHECK(res.output.find("labeled: 4") != std::string::npos);
  CHECK(res.output.find("canonical: 3") != std::string::npos);

  res = testutil::run_command(cli + " enumerate 2 --compact --canonical");
  CHECK(res.exit_code == 0);
  CHECK(res.output == "2 1 2\n2 1 3\n2 3 3\n");

  res = testutil::run_command(cli + " enumerate 2 --compact --filter 'space:t0'");
  CHECK(res.exit_code == 0);
  CHECK(res.output == "2 1 2\n2 1 3\n2 3 2\n");

  res = testutil::run_command(cli + " enumerate 2 --filter 'dense'");
  CHECK(res.exit_code == 2);

  res = testutil::run_command(cli + " enumerate 9");
  CHECK(res.exit_code == 2);
}

TEST_CASE("cli search exit codes") {
  const std::string cli = testutil::cli_path();
  auto res = testutil::run_command(cli + " search alpha_scattered scattered --max-n 3");
  CHECK(res.exit_code == 1);
  CHECK(res.output.find("points 3") != std::string::npos);
  CHECK(res.output.find("subset:") != std::string::npos);

  res = testutil::run_command(cli + " search scattered alpha_scattered --max-n 4");
  CHECK(res.exit_code == 0);
  CHECK(res.output.find("no counterexample up to n=4") != std::string::npos);

  res = testutil::run_command(cli + " search alpha_scat scattered --max-n 3");
  CHECK(res.exit_code == 2);
  CHECK(res.output.find("UnknownPredicate") != std::string::npos);

  res = testutil::run_command(cli + " search 'alpha_scattered &' scattered");
  CHECK(res.exit_code == 2);
  CHECK(res.output.find("^") != std::string::npos);
}

TEST_CASE("cli verify") {
  const std::string cli = testutil::cli_path();
  auto res = testutil::run_command(cli + " verify prop1 --max-n 2");
  CHECK(res.exit_code == 0);
  CHECK(res.output.find("result: PASS") != std::string::npos);

  res = testutil::run_command(cli + " verify prop1 --max-n 99");
  CHECK(res.exit_code == 2);

  res = testutil::run_command(cli + " verify nonsense");
  CHECK(res.exit_code == 2);

  res = testutil::run_command(cli + " verify ideal --max-n 2");
  CHECK(res.exit_code == 0);
  CHECK(res.output.find("non-additive") != std::string::npos);
}
