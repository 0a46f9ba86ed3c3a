// Drives the built tridiag executable; its path comes from TRIDIAG_CLI_PATH.

#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

namespace {

struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(TRIDIAG_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return {-1, ""};
  std::string out;
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::filesystem::path scratch(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / "tridiag_cli_test";
  std::filesystem::create_directories(dir);
  return dir / name;
}

}  // namespace

TEST(Cli, Version) {
  const auto r = run("--version");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "tridiag 0.1.0\n");
}

TEST(Cli, CharpolyMethodsAgree) {
  EXPECT_EQ(run("charpoly 7").out, "-x^7 + 6x^5 - 10x^3 + 4x\n");
  EXPECT_EQ(run("charpoly 7 --method closed").out, "-x^7 + 6x^5 - 10x^3 + 4x\n");
  EXPECT_EQ(run("charpoly 7 --method oracle").out, "-x^7 + 6x^5 - 10x^3 + 4x\n");
  EXPECT_EQ(run("charpoly 1").out, "-x\n");
}

TEST(Cli, ArgumentErrorsExitTwo) {
  EXPECT_EQ(run("charpoly 0").code, 2);
  EXPECT_EQ(run("charpoly 40 --method oracle").code, 2);
  EXPECT_EQ(run("charpoly 5 --method bogus").code, 2);
  EXPECT_EQ(run("nosuch").code, 2);
  EXPECT_EQ(run("").code, 2);
  EXPECT_EQ(run("fib-roots 12 --precision 40").code, 2);
  EXPECT_EQ(run("fib-roots 12 --perturbed").code, 2);
  EXPECT_EQ(run("extrema 1").code, 2);
}

TEST(Cli, VerifyExitCodes) {
  const auto ok = run("verify --max-n 40 --oracle-max 6");
  EXPECT_EQ(ok.code, 0) << ok.out;
  const auto bad = run("verify --max-n 40 --inject-fault closed-sign");
  EXPECT_EQ(bad.code, 1);
  EXPECT_NE(bad.out.find("n=2"), std::string::npos) << bad.out;
}

TEST(Cli, Eigs) {
  EXPECT_EQ(run("eigs 4").out, "1.61803\n0.61803\n-0.61803\n-1.61803\n");
  const auto path = scratch("eigs5.csv");
  ASSERT_EQ(run("eigs 5 --csv " + path.string()).code, 0);
  const std::string csv = slurp(path);
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "s,angle_num,angle_den,value");
  EXPECT_NE(csv.find("\n3,1,2,0\n"), std::string::npos) << csv;
}

TEST(Cli, Contain) {
  const auto yes = run("contain 4 9");
  EXPECT_EQ(yes.code, 0);
  EXPECT_NE(yes.out.find("1->2 2->4 3->6 4->8"), std::string::npos) << yes.out;
  const auto no = run("contain 4 10");
  EXPECT_EQ(no.code, 3);
  EXPECT_NE(no.out.find("(n-m) mod (m+1) = 1"), std::string::npos) << no.out;
}

TEST(Cli, FibRootsNonConvergenceExitsFour) {
  EXPECT_EQ(run("fib-roots 29 --max-iterations 1").code, 4);
}

TEST(Cli, FibRootsEllipseReport) {
  const auto r = run("fib-roots 12 --ellipse");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("discriminant:"), std::string::npos);
  EXPECT_NE(r.out.find("rms_residual:"), std::string::npos);
}

TEST(Cli, CsvOutputIsDeterministic) {
  const std::array<std::string, 4> cmds = {"fib-roots 12 --csv", "extrema 6 --csv", "eigs 9 --csv",
                                           "scan --from 3 --to 8 --csv"};
  for (std::size_t i = 0; i < cmds.size(); ++i) {
    const auto a = scratch("a" + std::to_string(i) + ".csv");
    const auto b = scratch("b" + std::to_string(i) + ".csv");
    ASSERT_EQ(run(cmds[i] + " " + a.string()).code, 0) << cmds[i];
    ASSERT_EQ(run(cmds[i] + " " + b.string()).code, 0) << cmds[i];
    const std::string sa = slurp(a);
    EXPECT_FALSE(sa.empty());
    EXPECT_EQ(sa, slurp(b)) << cmds[i];
  }
}

TEST(Cli, SvgOutput) {
  const auto path = scratch("roots.svg");
  ASSERT_EQ(run("fib-roots 10 --svg " + path.string()).code, 0);
  const std::string svg = slurp(path);
  std::size_t circles = 0;
  for (std::size_t pos = 0; (pos = svg.find("<circle ", pos)) != std::string::npos; ++pos) ++circles;
  EXPECT_EQ(circles, 10u);
}

TEST(Cli, PrecisionFromEnvironment) {
  const auto r = run("fib-roots 6 --csv - ");
  const std::string cmd = "TRIDIAG_PRECISION_BITS=40 " + std::string(TRIDIAG_CLI_PATH) + " fib-roots 6 >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  EXPECT_EQ(WEXITSTATUS(status), 2);
  EXPECT_EQ(r.code, 0);
}
