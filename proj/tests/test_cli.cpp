#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sys/wait.h>

namespace {

struct Result {
  int code = -1;
  std::string out;
};

Result run(const std::string& args) {
  const std::string cmd = std::string(HGSPQ_CLI) + " " + args + " 2>/dev/null";
  Result r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

}  // namespace

TEST(Cli, ClassifyOk) {
  const auto r = run("classify --p 7 --q 3 --format csv");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.rfind("structure_label,", 0), 0u);
}

TEST(Cli, UniqueRegime) {
  const auto r = run("classify --p 5 --q 3 --format json");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("\"regime\": \"unique\""), std::string::npos);
  EXPECT_EQ(run("verify --p 5 --q 3").code, 0);
}

TEST(Cli, DomainErrors) {
  EXPECT_EQ(run("classify --p 6 --q 3").code, 2);
  EXPECT_EQ(run("classify --p 3 --q 7").code, 2);
  EXPECT_EQ(run("classify --p 7 --q 3 --format xml").code, 2);
  EXPECT_EQ(run("classify --p 7").code, 2);
  EXPECT_EQ(run("bogus").code, 2);
}

TEST(Cli, VerifyTierCap) {
  EXPECT_EQ(run("verify --p 101 --q 5").code, 2);
}

TEST(Cli, VerifyStandard) {
  const auto r = run("verify --p 7 --q 3");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("Verification (standard): PASS"), std::string::npos);
}

TEST(Cli, ParamsAndLattice) {
  EXPECT_EQ(run("params --p 13 --q 3").code, 0);
  const auto r = run("subgroup-lattice --ell 2 --e 2 --f 2 --format json");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("subgroups(ell=2,e=2,f=2).closed_form"), std::string::npos);
}

TEST(Cli, OutFile) {
  const auto path = std::filesystem::temp_directory_path() / "hgspq_cli_test.json";
  std::filesystem::remove(path);
  EXPECT_EQ(run("classify --p 7 --q 3 --format json --out " + path.string()).code, 0);
  std::ifstream in(path);
  std::string first;
  std::getline(in, first);
  EXPECT_EQ(first, "{");
  std::filesystem::remove(path);
}
