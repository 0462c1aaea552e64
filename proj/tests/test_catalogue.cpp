#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <random>

#include "gauss/catalogue.hpp"
#include "gauss/construct.hpp"
#include "gauss/spec_string.hpp"
#include "gauss/verify.hpp"
#include "oracles.hpp"

using namespace gauss;
namespace fs = std::filesystem;

namespace {

class TempDir {
 public:
  TempDir() {
    static int counter = 0;
    path_ = fs::temp_directory_path() /
            ("gauss_test_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) + "_" +
             std::to_string(counter++) + "_" + ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::remove_all(path_);
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  const fs::path& path() const { return path_; }
  fs::path write(const std::string& name, const std::string& content) const {
    const auto p = path_ / name;
    std::ofstream(p, std::ios::binary) << content;
    return p;
  }

 private:
  fs::path path_;
};

std::string table_text(std::size_t n, const std::vector<std::uint32_t>& t) {
  std::string s = std::to_string(n) + "\n";
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) s += (c ? " " : "") + std::to_string(t[r * n + c]);
    s += "\n";
  }
  return s;
}

const char* kNonAssociative5 =
    "5\n"
    "0 1 2 3 4\n"
    "1 0 3 4 2\n"
    "2 4 0 1 3\n"
    "3 2 4 0 1\n"
    "4 3 1 2 0\n";

}  // namespace

TEST(CayleyReader, ReadsCyclicTwo) {
  const auto g = parse_cayley_table("2\n0 1\n1 0\n");
  EXPECT_EQ(g.order(), 2U);
  EXPECT_EQ(g.mul(1, 1), 0U);
}

TEST(CayleyReader, KleinFromXorTable) {
  std::vector<std::uint32_t> t(16);
  for (std::uint32_t a = 0; a < 4; ++a) {
    for (std::uint32_t b = 0; b < 4; ++b) t[a * 4 + b] = a ^ b;
  }
  const auto g = parse_cayley_table(table_text(4, t));
  EXPECT_EQ(summarize(g).s_value, 7U);
}

TEST(CayleyReader, ToleratesMissingFinalNewlineAndExtraSpaces) {
  const auto g = parse_cayley_table("3\n0  1 2\n1 2 0\n2 0 1");
  EXPECT_EQ(g.order(), 3U);
}

TEST(CayleyReader, ParseErrorsCarryPosition) {
  auto expect_parse = [](const std::string& text, std::size_t line, std::size_t col) {
    try {
      parse_cayley_table(text);
      ADD_FAILURE() << "accepted: " << text;
    } catch (const ParseError& e) {
      EXPECT_EQ(e.line(), line) << text;
      EXPECT_EQ(e.column(), col) << text;
      EXPECT_EQ(e.kind(), ErrorKind::ParseError);
    }
  };
  expect_parse("", 1, 1);
  expect_parse("x\n", 1, 1);
  expect_parse("2\n0 1\n1 z\n", 3, 3);
  expect_parse("2\n0 1\n", 3, 1);
  expect_parse("2\n0 1 0\n1 0\n", 2, 5);
  expect_parse("2\n0 2\n1 0\n", 2, 3);
  expect_parse("2\n0 1\n1 0\n7\n", 4, 1);
  expect_parse("0\n", 1, 1);
}

TEST(CayleyReader, RejectsNonIdentityAtZero) {
  try {
    parse_cayley_table("2\n1 0\n0 1\n");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::IdentityNotZero);
  }
}

TEST(CayleyReader, RejectsNonAssociativeLatinSquareWithWitness) {
  const auto g = parse_cayley_table("5\n0 1 2 3 4\n1 2 3 4 0\n2 3 4 0 1\n3 4 0 1 2\n4 0 1 2 3\n");
  EXPECT_EQ(g.order(), 5U);
  try {
    parse_cayley_table(kNonAssociative5);
    FAIL();
  } catch (const NotAGroupError& e) {
    EXPECT_EQ(e.axiom(), "associativity");
    std::vector<std::uint32_t> t;
    for (auto v : {0, 1, 2, 3, 4, 1, 0, 3, 4, 2, 2, 4, 0, 1, 3, 3, 2, 4, 0, 1, 4, 3, 1, 2, 0}) t.push_back(v);
    const auto [a, b, c] = e.witness();
    EXPECT_NE(t[t[a * 5 + b] * 5 + c], t[a * 5 + t[b * 5 + c]]);
  }
}

TEST(CayleyReader, RejectsRepeatedEntryInRow) {
  try {
    parse_cayley_table("3\n0 1 2\n1 1 0\n2 0 1\n");
    FAIL();
  } catch (const NotAGroupError& e) {
    EXPECT_NE(e.axiom().find("latin"), std::string::npos);
  }
}

TEST(CayleyReader, RandomLoopsAreRejectedExactlyWhenNonAssociative) {
  std::mt19937 rng(20240611);
  int rejected = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 4 + trial % 4;
    const auto t = oracle::random_reduced_latin_square(n, rng);
    const auto bad = oracle::non_associative_triple(t, n);
    try {
      parse_cayley_table(table_text(n, t));
      EXPECT_FALSE(bad.has_value()) << "accepted a non-associative table";
    } catch (const NotAGroupError& e) {
      ++rejected;
      ASSERT_TRUE(bad.has_value());
      EXPECT_EQ(e.axiom(), "associativity");
      const auto [a, b, c] = e.witness();
      EXPECT_NE(t[t[a * n + b] * n + c], t[a * n + t[b * n + c]]);
    }
  }
  EXPECT_GT(rejected, 100);
}

TEST(CayleyWriter, RoundTripIsIdentity) {
  TempDir dir;
  for (const char* s : {"cyclic:1", "cyclic:12", "abelian:2,2", "dihedral:6", "quaternion:8", "semidihedral:16", "modular:3,3",
                        "heisenberg:3", "sdp:7,3,2", "product:(dihedral:3)x(cyclic:5)"}) {
    const auto g = construct(parse_spec(s));
    const auto path = dir.path() / "g.cayley";
    write_cayley_table(g, path);
    const auto back = read_cayley_table(path);
    ASSERT_EQ(back.order(), g.order()) << s;
    EXPECT_TRUE(std::equal(g.table().begin(), g.table().end(), back.table().begin())) << s;
    write_cayley_table(back, path);
    const auto again = read_cayley_table(path);
    EXPECT_TRUE(std::equal(g.table().begin(), g.table().end(), again.table().begin())) << s;
  }
}

TEST(CayleyReader, MissingFileIsIoError) {
  try {
    read_cayley_table("/nonexistent/dir/x.cayley");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::IoError);
  }
}

TEST(PermutationReader, SymmetricGroupOnThreePoints) {
  const auto g = parse_permutation_generators("3\n1 2 0\n1 0 2\n");
  EXPECT_EQ(g.order(), 6U);
  EXPECT_EQ(oracle::permutation_group_order({{1, 2, 0}, {1, 0, 2}}, 3), 6U);
  EXPECT_EQ(phi_group(g), 0U);
  EXPECT_FALSE(is_abelian(g));
  EXPECT_EQ(summarize(g).s_value, 6U);
}

TEST(PermutationReader, FourCycleIsCyclic) {
  const auto g = parse_permutation_generators("4\n1 2 3 0\n");
  EXPECT_EQ(g.order(), 4U);
  EXPECT_TRUE(is_cyclic(g));
  // breadth-first numbering: identity, the generator, then its powers
  EXPECT_EQ(g.mul(1, 1), 2U);
  EXPECT_EQ(g.mul(2, 1), 3U);
}

TEST(PermutationReader, FrobeniusTwentyOne) {
  const auto g = parse_permutation_generators("7\n1 2 3 4 5 6 0\n0 2 4 6 1 3 5\n");
  EXPECT_EQ(g.order(), 21U);
  EXPECT_EQ(oracle::permutation_group_order({{1, 2, 3, 4, 5, 6, 0}, {0, 2, 4, 6, 1, 3, 5}}, 7), 21U);
  const auto s = summarize(g);
  EXPECT_EQ(s.s_value, 21U);
  EXPECT_TRUE(s.in_class_c);
}

TEST(PermutationReader, DeterministicReindexing) {
  const std::string text = "5\n1 2 3 4 0\n1 0 2 3 4\n";
  const auto a = parse_permutation_generators(text);
  const auto b = parse_permutation_generators(text);
  EXPECT_EQ(a.order(), 120U);
  EXPECT_TRUE(std::equal(a.table().begin(), a.table().end(), b.table().begin()));
  validate_cayley_table(a.order(), a.table());
}

TEST(PermutationReader, NoGeneratorsGivesTrivialGroup) {
  EXPECT_EQ(parse_permutation_generators("3\n").order(), 1U);
}

TEST(PermutationReader, Errors) {
  auto kind_of = [](const std::string& text, const Limits& limits = {}) {
    try {
      parse_permutation_generators(text, limits);
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::InvalidParameter;
  };
  EXPECT_EQ(kind_of("3\n0 0 1\n"), ErrorKind::NotAPermutation);
  EXPECT_EQ(kind_of("3\n0 1 3\n"), ErrorKind::NotAPermutation);
  EXPECT_EQ(kind_of("3\n0 1\n"), ErrorKind::ParseError);
  EXPECT_EQ(kind_of("3\n0 1 a\n"), ErrorKind::ParseError);
  EXPECT_EQ(kind_of("abc\n"), ErrorKind::ParseError);
  EXPECT_EQ(kind_of("6\n1 2 3 4 5 0\n1 0 2 3 4 5\n", Limits{100, 1000}), ErrorKind::OrderOverflow);
}

TEST(Catalogue, ReadsDirectorySortedById) {
  TempDir dir;
  dir.write("b_frobenius.perm", "7\n1 2 3 4 5 6 0\n0 2 4 6 1 3 5\n");
  dir.write("a_z2.cayley", "2\n0 1\n1 0\n");
  dir.write("notes.txt", "ignored");
  const auto entries = read_catalogue(dir.path());
  ASSERT_EQ(entries.size(), 2U);
  EXPECT_EQ(entries[0].id, "a_z2");
  EXPECT_EQ(entries[0].source, SourceKind::CayleyTable);
  EXPECT_EQ(entries[1].id, "b_frobenius");
  EXPECT_EQ(entries[1].source, SourceKind::PermutationGenerators);
  EXPECT_EQ(entries[1].group.order(), 21U);
}

TEST(Catalogue, DuplicateIdRejected) {
  TempDir dir;
  dir.write("g.perm", "2\n1 0\n");
  dir.write("g.cayley", "2\n0 1\n1 0\n");
  EXPECT_THROW(read_catalogue(dir.path()), Error);
}

TEST(Catalogue, BadFileSurfacesItsError) {
  TempDir dir;
  dir.write("bad.cayley", kNonAssociative5);
  EXPECT_THROW(read_catalogue(dir.path()), NotAGroupError);
}

TEST(Report, SummaryJson) {
  const auto s = summarize(construct(parse_spec("cyclic:6")));
  const auto json = render_json(s);
  EXPECT_EQ(json, "{\"cyclic_sum\":6,\"group_order\":6,\"in_class_c\":true,\"phi\":2,\"s_value\":6,\"subgroup_count\":4}\n");
}

TEST(Report, ScanCsvRowForD12) {
  const auto scan = conjecture_scan({CorpusEntry::of(parse_spec("dihedral:6")), CorpusEntry::of(parse_spec("abelian:2,2"))});
  const auto csv = render_csv(scan);
  EXPECT_EQ(csv,
            "id,order,phi,s_value,subgroup_count,nilpotent,cyclic,in_class_c\n"
            "dihedral:6,12,2,23,16,false,false,false\n"
            "\"abelian:2,2\",4,3,7,5,true,false,false\n");
}

TEST(Report, Thm7JsonHasOneCasePerN) {
  const auto r = run_suite("thm7", {{"n_max", "10"}});
  const auto j = nlohmann::json::parse(render_json(r));
  EXPECT_EQ(j["cases"].size(), 9U);
  for (const auto& c : j["cases"]) EXPECT_TRUE(c["pass"].get<bool>());
  EXPECT_EQ(j["suite_id"], "thm7");
  EXPECT_EQ(j["discrepancy_notes"].size(), 1U);
}

TEST(Report, WriteReportFiles) {
  TempDir dir;
  const auto scan = conjecture_scan({CorpusEntry::of(parse_spec("dihedral:6"))});
  write_report(scan, dir.path() / "scan.csv", ReportFormat::Csv);
  write_report(scan, dir.path() / "scan.json", ReportFormat::Json);
  std::ifstream csv(dir.path() / "scan.csv");
  std::string header, row;
  std::getline(csv, header);
  std::getline(csv, row);
  EXPECT_EQ(header, kCsvHeader);
  EXPECT_EQ(row, "dihedral:6,12,2,23,16,false,false,false");
  const auto suite = run_suite("example_pq", {{"pairs", "2:3"}});
  write_report(suite, dir.path() / "suite.json", ReportFormat::Json);
  EXPECT_TRUE(fs::exists(dir.path() / "suite.json"));
  EXPECT_THROW(write_report(suite, dir.path() / "suite.csv", ReportFormat::Csv), Error);
  try {
    write_report(scan, dir.path() / "missing" / "x.json", ReportFormat::Json);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::IoError);
  }
}
