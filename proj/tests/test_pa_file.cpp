#include <random>
#include <sstream>

#include <gtest/gtest.h>

#include "permbounds/constructions.hpp"
#include "permbounds/pa_file.hpp"

using namespace permbounds;

namespace {

PaFile read_text(const std::string &text) {
  std::istringstream in(text);
  return read_pa_file(in);
}

Errc parse_code(const std::string &text) {
  try {
    read_text(text);
  } catch (const Error &e) {
    return e.code();
  }
  ADD_FAILURE() << "accepted: " << text;
  return Errc::precondition;
}

} // namespace

TEST(PaFile, WritesHeaderAndLines) {
  PaFile f{4, std::nullopt, perfect_pa(PerfectFamily::cyclic, 4)};
  std::ostringstream out;
  write_pa_file(out, f);
  EXPECT_EQ(out.str(), "PA n=4 d=4 count=4\n0,1,2,3\n1,2,3,0\n2,3,0,1\n3,0,1,2\n");
}

TEST(PaFile, ReadsCommentsAndBlankLines) {
  const auto f = read_text("# cyclic\n\nPA n=3 d=3 count=3\n0,1,2\n# middle\n1,2,0\n\n2, 0, 1\n");
  EXPECT_EQ(f.distance, 3u);
  EXPECT_FALSE(f.weight);
  EXPECT_EQ(f.array.size(), 3u);
  EXPECT_EQ(f.array[2], (Permutation{2, 0, 1}));
}

TEST(PaFile, MalformedInputIsAParseError) {
  EXPECT_EQ(parse_code(""), Errc::parse_error);
  EXPECT_EQ(parse_code("PB n=3 d=3 count=1\n0,1,2\n"), Errc::parse_error);
  EXPECT_EQ(parse_code("PA n=3 count=1\n0,1,2\n"), Errc::parse_error);
  EXPECT_EQ(parse_code("PA n=3 d=3 count=2\n0,1,2\n"), Errc::parse_error);
  EXPECT_EQ(parse_code("PA n=3 d=3 count=1\n0,1\n"), Errc::parse_error);
  EXPECT_EQ(parse_code("PA n=3 d=3 count=1\n0,1,1\n"), Errc::parse_error);
  EXPECT_EQ(parse_code("PA n=3 d=3 count=1\n0,x,2\n"), Errc::parse_error);
  EXPECT_EQ(parse_code("PA n=3 d=3 count=2\n0,1,2\n0,1,2\n"), Errc::parse_error);
  EXPECT_EQ(parse_code("PA n=3 d=2 w=2 count=1\n1,2,0\n"), Errc::parse_error);
  EXPECT_EQ(parse_code("PA n=3 d=-2 count=1\n0,1,2\n"), Errc::parse_error);
  EXPECT_EQ(parse_code("{\"n\": 3, \"d\": 2, \"members\": [[0,1]]}"), Errc::parse_error);
  EXPECT_EQ(parse_code("{\"n\": 3,"), Errc::parse_error);
}

TEST(PaFile, TextAndJsonRoundTrip) {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 1 + rng() % 7;
    auto all = all_permutations(n);
    std::shuffle(all.begin(), all.end(), rng);
    all.resize(1 + rng() % all.size());
    PaFile f{1 + rng() % n, std::nullopt, PermutationArray(n, all)};

    std::ostringstream text;
    write_pa_file(text, f);
    const auto back = read_text(text.str());
    EXPECT_EQ(back.array.members(), f.array.members());
    EXPECT_EQ(back.distance, f.distance);

    const auto back_json = read_text(pa_to_json(f).dump());
    EXPECT_EQ(back_json.array.members(), f.array.members());
    EXPECT_EQ(back_json.distance, f.distance);
    EXPECT_FALSE(back_json.weight);
  }
}

TEST(PaFile, WeightRoundTrip) {
  PaFile f{4, 2, block_cycle_cwpa(6, 2)};
  std::ostringstream text;
  write_pa_file(text, f);
  EXPECT_EQ(text.str().substr(0, 24), "PA n=6 d=4 w=2 count=3\n1");
  EXPECT_EQ(read_text(text.str()).weight, 2u);
  EXPECT_EQ(read_text(pa_to_json(f).dump()).weight, 2u);
}

TEST(CwFile, RoundTripAndValidation) {
  const auto code = greedy_partial_steiner(7, 3);
  std::ostringstream out;
  write_cw_file(out, code);
  std::istringstream in(out.str());
  const auto back = read_cw_file(in);
  EXPECT_EQ(back.words(), code.words());
  EXPECT_EQ(back.distance(), 4u);

  std::istringstream close("CW n=5 d=4 w=3 count=2\n0,1,2\n0,1,3\n");
  EXPECT_THROW(read_cw_file(close), Error);
  std::istringstream short_word("CW n=5 d=4 w=3 count=1\n0,1\n");
  EXPECT_THROW(read_cw_file(short_word), Error);
}
