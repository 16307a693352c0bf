#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "../support.hpp"
#include "repbasis/cli.hpp"
#include "repbasis/errors.hpp"
#include "repbasis/io.hpp"

namespace repbasis {
namespace {

using testing::ints;
namespace fs = std::filesystem;

class TempDir : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("repbasis_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  fs::path path(const std::string& name) const { return dir_ / name; }

  fs::path dir_;
};

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

CliResult run(std::vector<std::string> args) {
  args.insert(args.begin(), "repbasis");
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

TEST(SetFile, ParsesCommentsAndBlankLines) {
  std::istringstream in("# format: 1\n3\n  -4  # negative\n\n0\n1\n3\n");
  EXPECT_EQ(io::parse_set(in), ints({-4, 0, 1, 3}));
  std::istringstream bad("# format: 1\n3x\n");
  EXPECT_THROW(io::parse_set(bad), ValidationError);
  std::istringstream future("# format: 2\n3\n");
  EXPECT_THROW(io::parse_set(future), ValidationError);
}

TEST(SetFile, RoundTripsBigValues) {
  std::mt19937_64 rng(81);
  for (int iter = 0; iter < 50; ++iter) {
    FiniteIntSet a = testing::random_set(rng, -1000, 1000, 20);
    a = a.unite(FiniteIntSet{Int("-98765432109876543210987654321"), Int(1) << 100});
    std::stringstream ss;
    io::write_set(ss, a);
    ASSERT_EQ(io::parse_set(ss), a);
  }
}

TEST(Json, IntegersSwitchToStrings) {
  EXPECT_TRUE(io::int_to_json(Int(5)).is_number_integer());
  EXPECT_TRUE(io::int_to_json(Int(1) << 70).is_string());
  EXPECT_EQ(io::int_from_json(io::int_to_json(Int(1) << 70)), Int(1) << 70);
  EXPECT_THROW(io::int_from_json(io::json(1.5)), ValidationError);
}

TEST(Json, RoundTrips) {
  const RepTable t(Window(-1, 2), testing::counts({0, 1, 2, 1}));
  EXPECT_EQ(io::table_from_json(io::json::parse(io::to_json(t).dump())), t);

  const EventuallyPeriodicSet p(4, 3, {0, 2}, ints({1, 4}));
  EXPECT_EQ(io::periodic_from_json(io::json::parse(io::to_json(p).dump())), p);

  const TargetFn f(Multiplicity::infinity(), {{0, 0}, {-3, 2}});
  const TargetFn g = io::target_from_json(io::json::parse(io::to_json(f).dump()));
  EXPECT_EQ(g.default_value(), f.default_value());
  EXPECT_EQ(g.overrides(), f.overrides());

  const ResidueSet r(7, {0, 3});
  EXPECT_EQ(io::residues_from_json(io::json::parse(io::to_json(r).dump())), r);

  const CoincidencePair c{3, 2, {1}, ints({0, 2}), ints({1, 3})};
  const CoincidencePair d = io::pair_from_json(io::json::parse(io::to_json(c).dump()));
  EXPECT_EQ(d.n0, c.n0);
  EXPECT_EQ(d.m, c.m);
  EXPECT_EQ(d.residues, c.residues);
  EXPECT_EQ(d.astar, c.astar);
  EXPECT_EQ(d.bstar, c.bstar);
}

TEST(Json, RejectsMalformedInput) {
  EXPECT_THROW(io::target_from_json(io::json::parse(R"({"default": -1})")), ValidationError);
  EXPECT_THROW(io::target_from_json(io::json::parse(R"({"default": 0})")), ValidationError);
  EXPECT_THROW(io::table_from_json(io::json::parse(R"({"lo": 0, "hi": 2, "counts": [1]})")), ValidationError);
  EXPECT_THROW(io::table_from_json(io::json::parse(R"({"format": 2, "lo": 0, "hi": 0, "counts": [1]})")),
               ValidationError);
  EXPECT_THROW(io::periodic_from_json(io::json::parse(R"({"n0": 0, "m": 2, "T": [2], "head": []})")),
               ValidationError);
}

TEST_F(TempDir, ComputeWritesTable) {
  io::write_set(path("a.set"), FiniteIntSet::interval(0, 10));
  const CliResult r = run({"compute", "--set", path("a.set").string(), "--order", "2", "--kind", "unordered", "--window",
                     "-100", "100"});
  ASSERT_EQ(r.code, 0) << r.err;
  const RepTable t = io::table_from_json(io::json::parse(r.out));
  EXPECT_EQ(t.lo(), -100);
  EXPECT_EQ(t.at(5), 3);
  EXPECT_EQ(t.at(-1), 0);
}

TEST_F(TempDir, ConstructUrbWritesSetAndReport) {
  const CliResult r = run({"construct", "urb", "--steps", "50", "--out", path("a.set").string(), "--report",
                     path("r.json").string()});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(io::read_set(path("a.set")).size(), 100u);
  const io::json report = io::read_json(path("r.json"));
  EXPECT_EQ(report["oracle"]["verdict"], "ok");
  EXPECT_EQ(report["trace"].size(), 49u);
  EXPECT_EQ(report["trace"][0]["b"], 1);
  EXPECT_EQ(report["trace"][1]["d"], 4);
}

TEST_F(TempDir, ConstructIsDeterministic) {
  for (const char* name : {"a", "b"}) {
    ASSERT_EQ(run({"construct", "urb", "--steps", "30", "--phi", "log", "--out", path(std::string(name) + ".set").string(),
                   "--report", path(std::string(name) + ".json").string()})
                  .code,
              0);
  }
  EXPECT_EQ(slurp(path("a.set")), slurp(path("b.set")));
  EXPECT_EQ(slurp(path("a.json")), slurp(path("b.json")));
}

TEST_F(TempDir, ConstructPrescribedAndLinform) {
  io::write_json(path("f.json"), io::to_json(TargetFn(1, {{0, 0}})));
  CliResult r = run({"construct", "prescribed", "--order", "2", "--steps", "10", "--target", path("f.json").string(),
               "--report", path("p.json").string()});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(io::read_json(path("p.json"))["oracle"]["verdict"], "ok");
  std::istringstream set_text(r.out);
  EXPECT_EQ(io::parse_set(set_text).size(), 20u);

  r = run({"construct", "linform", "--u1", "2", "--u2", "3", "--steps", "6", "--report", path("l.json").string()});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(io::read_json(path("l.json"))["oracle"]["verdict"], "ok");

  EXPECT_EQ(run({"construct", "linform", "--u1", "2", "--u2", "4", "--steps", "6"}).code, 2);
  EXPECT_EQ(run({"construct", "prescribed", "--order", "1", "--steps", "3", "--target", path("f.json").string()}).code,
            2);
}

TEST_F(TempDir, CheckCommands) {
  io::write_set(path("s.set"), ints({0, 1, 3, 7}));
  CliResult r = run({"check", "sidon", "--set", path("s.set").string(), "--order", "2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "sidon: yes\n");
  r = run({"check", "sidon", "--set", path("s.set").string(), "--order", "2", "--generalized"});
  EXPECT_EQ(r.out, "generalized sidon: no (0 = 0 + 0 = 0)\n");

  r = run({"check", "sandor", "--N", "1", "--head", "10", "--horizon", "2000"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "coincide: yes\n");
  EXPECT_EQ(run({"check", "sandor", "--N", "1", "--head", "11", "--horizon", "20"}).code, 2);

  io::write_json(path("pair.json"), io::to_json(CoincidencePair{1, 1, {0}, ints({0}), ints({1})}));
  r = run({"check", "coincide", "--pair", path("pair.json").string(), "--horizon", "500"});
  EXPECT_EQ(r.out, "congruence: yes\ncoincide: yes\n");
  io::write_json(path("bad.json"), io::to_json(CoincidencePair{1, 2, {0}, ints({0}), ints({1})}));
  r = run({"check", "coincide", "--pair", path("bad.json").string(), "--horizon", "50"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.rfind("congruence: no\ncoincide: no", 0), 0u);
}

TEST_F(TempDir, GenerateReconstructSearchVerify) {
  CliResult r = run({"generate", "sandor", "--N", "1", "--head", "10", "--horizon", "11", "--out-b", path("b.set").string()});
  ASSERT_EQ(r.code, 0);
  std::istringstream a_text(r.out);
  EXPECT_EQ(io::parse_set(a_text), ints({0, 2, 5, 6, 8, 11}));
  EXPECT_EQ(io::read_set(path("b.set")), ints({1, 3, 4, 7, 9, 10}));

  io::write_json(path("t.json"), io::to_json(RepTable(Window(0, 2), testing::counts({1, 2, 1}))));
  r = run({"reconstruct", "--table", path("t.json").string(), "--order", "2"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "# format: 1\n0\n1\n");
  io::write_json(path("u.json"), io::to_json(RepTable(Window(0, 1), testing::counts({1, 1}))));
  EXPECT_EQ(run({"reconstruct", "--table", path("u.json").string(), "--order", "2"}).code, 2);

  r = run({"search", "modular", "--m", "5", "--order", "2", "--bound", "2"});
  ASSERT_EQ(r.code, 0);
  const io::json found = io::json::parse(r.out);
  EXPECT_TRUE(found["found"].get<bool>());
  const ResidueSet witness = io::residues_from_json(found);
  EXPECT_EQ(witness.modulus(), 5);

  io::write_set(path("v.set"), ints({-4, 0, 1, 3}));
  r = run({"verify", "--set", path("v.set").string(), "--order", "3", "--window", "-15", "15"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "verify: clean\n");
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"compute", "--order", "2"}).code, 2);
  EXPECT_EQ(run({"compute", "--set", "/nonexistent.set", "--order", "2", "--window", "0", "1"}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
  EXPECT_EQ(run({"construct", "urb", "--steps", "0"}).code, 2);
  EXPECT_EQ(run({"construct", "urb", "--steps", "3", "--phi", "cubic"}).code, 2);
}

}  // namespace
}  // namespace repbasis
