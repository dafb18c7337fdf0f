#include "census_app.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace kostant;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome census(std::vector<std::string> args) {
  args.insert(args.begin(), "census");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path temp_file(const std::string& name) {
  auto p = std::filesystem::temp_directory_path() / ("census_test_" + name + "_" + std::to_string(::getpid()) + ".json");
  std::filesystem::remove(p);
  return p;
}

}  // namespace

TEST(Cli, VerifyBlockCase) {
  const auto r = census({"verify-lemma7", "--case", "1"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = Json::parse(r.out);
  EXPECT_EQ(j["total"], 10);
  EXPECT_EQ(j["violators"], 1);
  EXPECT_EQ(j["violator_list"][0], "2,1,4,3");
}

TEST(Cli, ClassifyQuick) {
  const auto r = census({"classify", "--perm", "2,1,4,3", "--mode", "quick"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = Json::parse(r.out);
  EXPECT_EQ(j["tag"], "negative");
  EXPECT_EQ(j["witness"]["occurrence"]["start"], 1);
  EXPECT_EQ(j["witness"]["occurrence"]["kind"], "consecutive");
  EXPECT_EQ(j["witness"]["occurrence"]["witness"], Json::parse("[1,2,3,4]"));
  const auto none = Json::parse(census({"classify", "--perm", "2,3,1", "--mode", "cell"}).out);
  EXPECT_EQ(none["tag"], "no-certificate");
  EXPECT_FALSE(none.contains("witness"));
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(census({"count", "--kind", "perm", "--n", "99"}).code, 3);
  EXPECT_EQ(census({"count", "--kind", "inv", "--n", "17"}).code, 3);
  EXPECT_EQ(census({"classify", "--perm", "1,2,3,4,5,6,7,8,9,10", "--mode", "cell"}).code, 3);
  EXPECT_EQ(census({"count", "--kind", "bogus", "--n", "4"}).code, 2);
  EXPECT_EQ(census({"nonsense"}).code, 2);
  EXPECT_EQ(census({}).code, 2);
  EXPECT_EQ(census({"classify", "--perm", "2,2,3"}).code, 2);
  EXPECT_EQ(census({"verify-lemma7", "--case", "6"}).code, 2);
  EXPECT_EQ(census({"windows", "--n", "7", "--blocks", "2"}).code, 2);
  EXPECT_EQ(census({"mc", "--quantity", "perm", "--n", "5", "--trials", "0", "--seed", "1"}).code, 2);
  EXPECT_EQ(census({"mc", "--quantity", "q", "--n", "8", "--trials", "10", "--seed", "1"}).code, 2);
  const auto usage = census({"count", "--n", "4"});
  EXPECT_EQ(usage.code, 2);
  EXPECT_NE(usage.err.find("usage error"), std::string::npos);
  EXPECT_EQ(census({"--help"}).code, 0);
}

TEST(Cli, CapsFromEnvironment) {
  ::setenv("CENSUS_PERM_CAP", "5", 1);
  EXPECT_EQ(census({"count", "--kind", "perm", "--n", "6"}).code, 3);
  ::unsetenv("CENSUS_PERM_CAP");
  EXPECT_EQ(census({"count", "--kind", "perm", "--n", "6"}).code, 0);
}

TEST(Cli, CountsAndWindows) {
  const auto perm = Json::parse(census({"count", "--kind", "perm", "--n", "6"}).out);
  EXPECT_EQ(perm["value"], "631");
  EXPECT_EQ(perm["kind"], "perm_avoiders");
  const auto win = Json::parse(census({"windows", "--n", "8", "--blocks", "1,2"}).out);
  EXPECT_EQ(win["value"], "37030");
  EXPECT_EQ(win["params"]["blocks"], Json::parse("[1,2]"));
  const auto empty = Json::parse(census({"windows", "--n", "5"}).out);
  EXPECT_EQ(empty["value"], "120");
}

TEST(Cli, OtherSubcommands) {
  const auto q = Json::parse(census({"qstats", "--n", "8", "--k", "2"}).out);
  EXPECT_EQ(q["q_size"], "100");
  EXPECT_EQ(q["p_event"][0], "9/10");
  EXPECT_EQ(q["independent"], true);

  const auto cell = Json::parse(census({"cell-involution", "--perm", "2,3,1"}).out);
  EXPECT_EQ(cell["involution"], "1,3,2");
  EXPECT_EQ(cell["cycles"], "(2 3)");
  EXPECT_EQ(cell["Q"], Json::parse("[[1,2],[3]]"));

  const auto seq = Json::parse(census({"sequence", "--name", "motzkin", "--max-n", "9"}).out);
  EXPECT_EQ(seq["rows"][9]["value"], "835");

  const auto t3 = Json::parse(census({"bound", "--which", "theorem3", "--k", "2"}).out);
  EXPECT_EQ(t3["value"], "529/576");
  const auto l6 = Json::parse(census({"bound", "--which", "lemma6", "--k", "2"}).out);
  EXPECT_EQ(l6["n"], 32);

  const auto mc = Json::parse(census({"mc", "--quantity", "q", "--n", "8", "--k", "1", "--trials", "50", "--seed", "3"}).out);
  EXPECT_EQ(mc["p_hat"], 1.0);
  EXPECT_EQ(mc["seed"], 3);

  const auto csv = census({"--format", "csv", "asymptotics", "--max-n", "5"});
  ASSERT_EQ(csv.code, 0);
  EXPECT_EQ(csv.out.substr(0, csv.out.find('\n')), "n,i_n,M_n,r(n),lemma6_bound");
}

TEST(Cli, ByteIdenticalReruns) {
  const std::vector<std::vector<std::string>> commands{
      {"count", "--kind", "inv", "--n", "9"},
      {"windows", "--n", "8", "--blocks", "1,2"},
      {"verify-lemma7", "--case", "3"},
      {"qstats", "--n", "10", "--k", "2"},
      {"classify", "--perm", "3,1,4,2", "--mode", "cell"},
      {"cell-involution", "--perm", "4,1,3,2,5"},
      {"sequence", "--name", "inv", "--max-n", "30"},
      {"asymptotics", "--max-n", "50"},
      {"bound", "--which", "lemma6", "--k", "3", "--n", "120"},
      {"--workers", "3", "mc", "--quantity", "inv", "--n", "20", "--trials", "3000", "--seed", "77"},
  };
  for (const auto& cmd : commands) {
    for (const std::string format : {"json", "csv", "plain"}) {
      auto args = cmd;
      args.insert(args.begin(), {"--format", format});
      const auto a = census(args);
      const auto b = census(args);
      ASSERT_EQ(a.code, 0) << a.err;
      EXPECT_EQ(a.out, b.out) << cmd[0] << " " << format;
    }
  }
}

TEST(Cli, CsvAndJsonCarryTheSameNumbers) {
  for (const auto& cmd : std::vector<std::vector<std::string>>{{"qstats", "--n", "9", "--k", "2"},
                                                               {"mc", "--quantity", "perm", "--n", "9", "--trials", "999", "--seed", "5"}}) {
    auto json_args = cmd;
    auto csv_args = cmd;
    csv_args.insert(csv_args.begin(), {"--format", "csv"});
    const auto j = Json::parse(census(json_args).out);
    std::vector<std::pair<std::string, std::string>> flat;
    detail::flatten(j, "", flat);
    std::istringstream csv(census(csv_args).out);
    std::string line;
    std::getline(csv, line);
    EXPECT_EQ(line, "key,value");
    std::size_t i = 0;
    while (std::getline(csv, line)) {
      ASSERT_LT(i, flat.size());
      EXPECT_EQ(line, detail::csv_field(flat[i].first) + "," + detail::csv_field(flat[i].second));
      ++i;
    }
    EXPECT_EQ(i, flat.size());
  }
}

TEST(Cli, MonteCarloWorkerCountIsRecorded) {
  const auto a = Json::parse(census({"--workers", "2", "mc", "--quantity", "perm", "--n", "10", "--trials", "1000", "--seed", "9"}).out);
  EXPECT_EQ(a["workers"], 2);
  ::setenv("CENSUS_WORKERS", "3", 1);
  const auto b = Json::parse(census({"mc", "--quantity", "perm", "--n", "10", "--trials", "1000", "--seed", "9"}).out);
  ::unsetenv("CENSUS_WORKERS");
  EXPECT_EQ(b["workers"], 3);
}

TEST(Cli, CacheHitsAreByteIdentical) {
  const auto path = temp_file("hits");
  const auto fresh = census({"count", "--kind", "perm", "--n", "7"});
  const auto first = census({"--cache", path.string(), "count", "--kind", "perm", "--n", "7"});
  ASSERT_TRUE(std::filesystem::exists(path));
  const auto second = census({"--cache", path.string(), "count", "--kind", "perm", "--n", "7"});
  const auto verified = census({"--cache", path.string(), "--verify-cache", "count", "--kind", "perm", "--n", "7"});
  EXPECT_EQ(fresh.out, first.out);
  EXPECT_EQ(first.out, second.out);
  EXPECT_EQ(verified.code, 0);
  EXPECT_EQ(verified.out, fresh.out);
  census({"--cache", path.string(), "windows", "--n", "8", "--blocks", "2,1"});
  EXPECT_EQ(CountCache(path).size(), 2U);
  std::filesystem::remove(path);
}

TEST(Cli, CacheMismatchIsAnInconsistency) {
  const auto path = temp_file("mismatch");
  ASSERT_EQ(census({"--cache", path.string(), "count", "--kind", "perm", "--n", "6"}).code, 0);
  std::string text;
  {
    std::ifstream in(path);
    std::stringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  }
  const auto at = text.find("\"631\"");
  ASSERT_NE(at, std::string::npos);
  text.replace(at, 5, "\"632\"");
  {
    std::ofstream out(path, std::ios::trunc);
    out << text;
  }
  EXPECT_EQ(census({"--cache", path.string(), "--verify-cache", "count", "--kind", "perm", "--n", "6"}).code, 4);
  {
    std::ofstream out(path, std::ios::trunc);
    out << "{not json";
  }
  EXPECT_EQ(census({"--cache", path.string(), "count", "--kind", "perm", "--n", "6"}).code, 4);
  std::filesystem::remove(path);
}
