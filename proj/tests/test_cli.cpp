#include <gtest/gtest.h>

#include <cstdio>
#include <cstdlib>
#include <string>
#include <sys/wait.h>

#include "json.hpp"

using json = nlohmann::json;

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  const char* cli = std::getenv("AKH_CLI");
  Run r;
  if (!cli) return r;
  std::string cmd = std::string(cli) + " " + args + " 2>/dev/null";
  FILE* f = popen(cmd.c_str(), "r");
  if (!f) return r;
  char buf[4096];
  std::size_t k;
  while ((k = fread(buf, 1, sizeof buf, f)) > 0) r.out.append(buf, k);
  int status = pclose(f);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

json payload(const Run& r) { return json::parse(r.out).at("payload"); }

}  // namespace

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    if (!std::getenv("AKH_CLI")) GTEST_SKIP() << "AKH_CLI is not set";
  }
};

TEST_F(Cli, Multipartitions) {
  auto r = run("multipartitions --r 2 --n 2");
  ASSERT_EQ(r.code, 0);
  auto p = payload(r);
  EXPECT_EQ(p["count"], 5);
  EXPECT_EQ(p["multipartitions"].size(), 5u);
  EXPECT_EQ(payload(run("multipartitions --r 3 --n 0"))["count"], 1);
}

TEST_F(Cli, SchurElementsSymbolic) {
  auto r = run("schur-elements --r 1 --n 2 --symbolic");
  ASSERT_EQ(r.code, 0);
  auto p = payload(r)["schur_elements"];
  EXPECT_EQ(p["(2)"], "1+q");
  EXPECT_EQ(p["(1,1)"], "(1+q)/q");
}

TEST_F(Cli, DecompositionDeskCase) {
  auto r = run("decomp --r 1 --n 2 --q -1 --Q 1 --hecke-submatrix");
  ASSERT_EQ(r.code, 0);
  auto p = payload(r);
  EXPECT_EQ(p["rows"], json({"(1,1)", "(2)"}));
  EXPECT_EQ(p["entries"], json({{1, 0}, {1, 1}}));
  EXPECT_EQ(p["hecke"]["cols"], json({"(1,1)"}));
}

TEST_F(Cli, GramCsvAndFields) {
  auto r = run("gram --lambda '((1),(1))' --q 2 --Q 1,3 --format csv");
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out.substr(0, 3), "-2,");  // Q1 − Q2
  auto c = run("gram --lambda '2,1|' --field 'cyclo(3)' --q zeta --Q 1,zeta");
  ASSERT_EQ(c.code, 0);
  EXPECT_EQ(payload(c)["dim"], 2);
  auto m = run("simples --r 1 --n 3 --field 'GF(7)' --q 2 --Q 1");
  ASSERT_EQ(m.code, 0);
  EXPECT_EQ(payload(m)["params"]["e"], 3);
}

TEST_F(Cli, SemisimpleAndBlocks) {
  auto r = run("semisimple --r 2 --n 2 --q 2 --Q 1,2");
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(payload(r)["semisimple"], false);
  EXPECT_EQ(payload(r)["all_gram_nonsingular"], false);
  auto b = run("blocks --r 2 --n 2 --q -1 --Q 1,-1 --check-linkage");
  ASSERT_EQ(b.code, 0);
  EXPECT_EQ(payload(b)["linkage_agrees"], true);
}

TEST_F(Cli, KleshchevJantzenCensusTensor) {
  auto k = run("kleshchev --r 1 --n 4 --e 2");
  ASSERT_EQ(k.code, 0);
  EXPECT_EQ(payload(k)["count"], 2);
  auto j = run("jantzen --r 1 --n 3 --q -1 --Q 1");
  ASSERT_EQ(j.code, 0);
  EXPECT_EQ(payload(j)["all_match"], true);
  auto c = run("census --r 1 --n 2 --verify --q 2 --Q 1");
  ASSERT_EQ(c.code, 0);
  EXPECT_EQ(payload(c)["schur_dimension"], 10);
  auto t = run("tensor-check --d-split 2 --n 2 --commutant");
  ASSERT_EQ(t.code, 0);
  EXPECT_EQ(payload(t)["commutant_dim"], 10);
  auto tn = run("tensor-check --d-split 1,1 --n 2 --q 4 --Q 1,3");
  ASSERT_EQ(tn.code, 0);
  EXPECT_EQ(payload(tn)["v"], "2");
}

TEST_F(Cli, ExitCodes) {
  EXPECT_EQ(run("multipartitions --r 2 --n 2 --no-such-flag").code, 1);
  EXPECT_EQ(run("").code, 1);
  EXPECT_EQ(run("gram --lambda '((2),(1))' --field 'GF(8)' --q 2 --Q 1,2").code, 1);
  EXPECT_EQ(run("simples --r 2 --n 6 --q 2 --Q 1,3").code, 1);  // desk guard
  EXPECT_EQ(run("gram --lambda '((2),(1))' --q 2").code, 1);       // missing --Q
  EXPECT_EQ(run("multipartitions --r 2 --n 2 --format csv").code, 1);
}

TEST_F(Cli, ByteDeterministic) {
  auto a = run("decomp --r 2 --n 2 --q -1 --Q 1,1");
  auto b = run("decomp --r 2 --n 2 --q -1 --Q 1,1");
  ASSERT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(json::parse(a.out)["config"]["Q"], "1,1");
}

TEST_F(Cli, SelftestQuick) {
  auto r = run("selftest --level quick");
  ASSERT_EQ(r.code, 0);
  auto p = payload(r);
  EXPECT_EQ(p["passed"], 12);
}
