#include <doctest.h>

#include <fstream>

#include "sequp/dus.hpp"
#include "sequp/error.hpp"
#include "sequp/miner.hpp"
#include "support/oracles.hpp"

using namespace sequp;
using sequp::testing::seq;

namespace {

// Symbol 0 on the given positions of an n-event log, fillers (ids 1..) elsewhere.
EventLog log_with(std::size_t n, const std::vector<std::size_t>& hits) {
  std::vector<Event> evs;
  for (std::size_t i = 0; i < n; ++i) {
    bool hit = std::find(hits.begin(), hits.end(), i) != hits.end();
    evs.push_back({SymbolId{hit ? 0u : static_cast<std::uint32_t>(1 + i)}, i});
  }
  return EventLog::single_segment(evs);
}

bool passes_filter(const DeletionReport& r, const MiningState& db_state, const Sequence& s) {
  if (db_state.frequent.contains(s)) return true;
  auto c = db_state.negative_border.find(s);
  if (!c) return false;
  if (!r.filtered_by_min_freq) return true;
  return static_cast<unsigned __int128>(*c) * r.min_freq.den() >=
         static_cast<unsigned __int128>(r.min_freq.num()) * db_state.db_size;
}

}  // namespace

TEST_CASE("min_freq") {
  auto p = Params::make(Fraction::parse("0.05"), Fraction::parse("0"));
  CHECK(min_freq(p, 100, 20) == Fraction::parse("0.04"));
  CHECK(min_freq(p, 100, 0) == Fraction::parse("0.05"));
  CHECK(min_freq(p, 100, 100).is_zero());
  CHECK(min_freq(p, 100, 20).to_string() == "0.04");
  CHECK_THROWS_AS(min_freq(p, 100, 101), Error);
  CHECK_THROWS_AS(min_freq(p, 0, 0), Error);
}

TEST_CASE("subtraction arithmetic") {
  // occur(a, DB) = 10 with 3 of them in the first 20 events.
  auto db = log_with(100, {1, 5, 9, 30, 40, 50, 60, 70, 80, 90});
  auto params = Params::make(Fraction::parse("0.05"), Fraction::parse("0"));
  auto st = mine(db, params);
  REQUIRE(st.frequent.find(seq({0})) == 10);
  auto [dd, rest] = split_prefix(db, 20);
  REQUIRE(dd.size() == 20);
  auto r = dus_update(st, dd, db, params);
  CHECK(r.new_state.db_size == 80);
  CHECK(r.new_state.bands().frequent_floor == 4);
  CHECK(r.new_state.frequent.find(seq({0})) == 7);
  CHECK(r.min_freq == Fraction::parse("0.04"));
}

TEST_CASE("border sequences below min_freq are skipped without counting") {
  // occur(a, DB) = 3: support 0.03 < min_freq 0.04. All three fall after the
  // cut, so a count in U would have been 3 and inside the border band.
  auto db = log_with(100, {50, 60, 70});
  auto params = Params::make(Fraction::parse("0.05"), Fraction::parse("0.01"));
  auto st = mine(db, params);
  REQUIRE(st.negative_border.find(seq({0})) == 3);
  auto r = dus_update(st, split_prefix(db, 20).deleted, db, params);
  CHECK(r.filtered_by_min_freq);
  CHECK(r.skipped_by_min_freq >= 1);
  CHECK_FALSE(r.new_state.negative_border.contains(seq({0})));
  CHECK_FALSE(r.new_state.frequent.contains(seq({0})));

  // With min_nbd_supp above min_freq nothing is filtered.
  auto wide = Params::make(Fraction::parse("0.05"), Fraction::parse("0.045"));
  auto r2 = dus_update(mine(db, wide), split_prefix(db, 20).deleted, db, wide);
  CHECK_FALSE(r2.filtered_by_min_freq);
  CHECK(r2.skipped_by_min_freq == 0);
}

TEST_CASE("empty deletion leaves the state unchanged") {
  SplitRng rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    auto db = sequp::testing::random_segmented_log(rng, 5, 50 + rng.below(100), 3, 0.2, 3);
    auto params = Params::make(Fraction::parse("0.05"), Fraction::parse("0.02"), Window::of(8));
    auto st = mine(db, params);
    auto r = dus_update(st, split_prefix(db, 0).deleted, db, params);
    CHECK(r.new_state == st);
    CHECK(r.straddle_events == 0);
  }
}

TEST_CASE("deletion soundness and conditional completeness") {
  SplitRng rng(808);
  int straddled = 0;
  for (int trial = 0; trial < 120; ++trial) {
    const std::uint32_t alphabet = 3 + static_cast<std::uint32_t>(rng.below(4));
    const bool windowed = rng.below(2) == 0;
    auto db = sequp::testing::random_segmented_log(rng, alphabet, 60 + rng.below(200), 4, windowed ? 0.3 : 0.9, 3);
    const char* supps[] = {"0.05", "0.1", "0.2"};
    const char* nbds[] = {"0", "0.01", "0.04"};
    auto params = Params::make(Fraction::parse(supps[rng.below(3)]), Fraction::parse(nbds[rng.below(3)]),
                               windowed ? Window::of(5 + rng.below(10)) : Window::unbounded());
    auto st = mine(db, params);
    const Timestamp cutoff = rng.below(*db.last_timestamp() + 2);
    auto [dd, rest] = split_prefix(db, cutoff);
    auto r = dus_update(st, dd, db, params);
    straddled += r.straddle_events > 0;
    auto fresh = mine(rest, params, Counting::serial);

    CHECK_NOTHROW(validate_state(r.new_state));
    r.new_state.frequent.for_each([&](const Sequence& s, Count c) { CHECK(fresh.frequent.find(s) == c); });
    r.new_state.negative_border.for_each([&](const Sequence& s, Count c) {
      CHECK(count_occurrences_oracle(s, rest, params.window) == c);
    });
    fresh.frequent.for_each([&](const Sequence& s, Count c) {
      if (passes_filter(r, st, s)) CHECK(r.new_state.frequent.find(s) == c);
    });
    auto recall = dus_recall(r, rest);
    CHECK(recall.wrong.empty());
  }
  CHECK(straddled > 10);
}

TEST_CASE("adversarial fixture: a pattern that was never a candidate is missed and reported") {
  SymbolTable t;
  std::ifstream in(std::string(SEQUP_FIXTURES) + "/dus_adversarial.log");
  REQUIRE(in.good());
  auto db = parse_log(in, t);
  auto params = Params::make(Fraction::parse("0.5"), Fraction::parse("0"));
  auto st = mine(db, params);
  const auto x = t.find("x")->value, y = t.find("y")->value;
  auto [dd, rest] = split_prefix(db, 9);
  auto r = dus_update(st, dd, db, params);
  CHECK(r.new_state.frequent.find(seq({x})) == 2);
  CHECK(r.new_state.frequent.find(seq({y})) == 2);
  CHECK_FALSE(r.new_state.frequent.contains(seq({x, y})));

  auto recall = dus_recall(r, rest, &t);
  CHECK(recall.wrong.empty());
  REQUIRE(recall.missed.size() == 1);
  CHECK(recall.missed[0] == std::pair<Sequence, Count>{seq({x, y}), 2});
  CHECK(recall.recall < 1.0);
  CHECK(describe(recall, &t) == "recall 2/3; missed: <x y>:2");
}

TEST_CASE("deletion refuses inputs that are not a prefix") {
  SplitRng rng(12);
  auto db = sequp::testing::random_log(rng, 4, 40);
  auto params = Params::make(Fraction::parse("0.1"), Fraction::parse("0"));
  auto st = mine(db, params);
  auto other = sequp::testing::random_log(rng, 4, 10);
  auto kind_of = [&](const EventLog& dd, const EventLog& full, const MiningState& s) {
    try {
      dus_update(s, dd, full, params);
    } catch (const Error& e) {
      return e.kind();
    }
    FAIL("expected an error");
    return ErrorKind::usage;
  };
  CHECK(kind_of(other, db, st) == ErrorKind::input);
  CHECK(kind_of(db, split_prefix(db, 10).deleted, st) == ErrorKind::state);
  auto wrong_size = st;
  wrong_size.db_size += 1;
  CHECK(kind_of(split_prefix(db, 10).deleted, db, wrong_size) == ErrorKind::state);
}
