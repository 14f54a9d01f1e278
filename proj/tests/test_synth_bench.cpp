#include <doctest.h>

#include <sstream>

#include "sequp/bench.hpp"
#include "sequp/error.hpp"
#include "sequp/miner.hpp"
#include "sequp/synth.hpp"

using namespace sequp;

namespace {

GenSpec abc_spec(std::uint64_t seed, std::size_t length) {
  GenSpec g;
  g.seed = seed;
  g.alphabet = 5;
  g.length = length;
  g.planted = {{Sequence{0, 1, 2}, 0.05}};
  g.noise_rate = 0.5;
  return g;
}

std::string text_of(const GeneratedLog& g) {
  std::ostringstream out;
  write_log(out, g.log, g.table);
  return out.str();
}

}  // namespace

TEST_CASE("symbol names") {
  CHECK(symbol_name(0) == "a");
  CHECK(symbol_name(25) == "z");
  CHECK(symbol_name(26) == "aa");
  CHECK(symbol_name(27) == "ab");
  CHECK(symbol_name(701) == "zz");
  CHECK(symbol_name(702) == "aaa");
}

TEST_CASE("SplitRng ranges") {
  SplitRng rng(7);
  for (int i = 0; i < 10000; ++i) {
    CHECK(rng.below(3) < 3);
    double u = rng.unit();
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
  }
  CHECK(SplitRng(1).next() == SplitRng(1).next());
}

TEST_CASE("generation is deterministic") {
  CHECK(text_of(generate_log(abc_spec(1, 1000))) == text_of(generate_log(abc_spec(1, 1000))));
  CHECK(text_of(generate_log(abc_spec(1, 1000))) != text_of(generate_log(abc_spec(2, 1000))));
  // Pinned prefix: the engine output is fixed by the C++ standard and the
  // range reduction is ours, so this holds on every platform.
  CHECK(text_of(generate_log(abc_spec(1, 12))) == "0,c\n1,a\n2,b\n3,d\n4,d\n6,a\n8,a\n10,d\n12,c\n14,e\n16,c\n17,a\n");
  auto g = generate_log(abc_spec(1, 1000));
  CHECK(g.log.size() == 1000);
  CHECK(g.table.size() == 5);
}

TEST_CASE("length 0 gives an empty log") {
  auto g = generate_log(abc_spec(3, 0));
  CHECK(g.log.empty());
}

TEST_CASE("pure noise has no frequent sequences of length 2 or more") {
  auto spec = abc_spec(4, 1000);
  spec.planted[0].rate = 0;
  auto g = generate_log(spec);
  auto st = mine(g.log, Params::make(Fraction::parse("0.25"), Fraction::parse("0")));
  CHECK(st.frequent.level(2).empty());
  CHECK(st.frequent.max_length() <= 1);
}

TEST_CASE("planted patterns surface") {
  auto g = generate_log(abc_spec(5, 2000));
  auto st = mine(g.log, Params::make(Fraction::parse("0.03"), Fraction::parse("0"), Window::of(10)));
  CHECK(st.frequent.contains(Sequence{0, 1, 2}));
}

TEST_CASE("generator argument checks") {
  auto spec = abc_spec(1, 10);
  spec.planted = {{Sequence{0, 9}, 0.1}};
  CHECK_THROWS_AS(generate_log(spec), Error);
  spec.planted = {{Sequence{0}, 0.6}, {Sequence{1}, 0.6}};
  CHECK_THROWS_AS(generate_log(spec), Error);
  spec.planted = {};
  spec.noise_rate = 1;
  CHECK_THROWS_AS(generate_log(spec), Error);
  spec.noise_rate = 0.5;
  spec.alphabet = 0;
  CHECK_THROWS_AS(generate_log(spec), Error);
}

TEST_CASE("bench rows and CSV") {
  auto base = generate_log(abc_spec(6, 800)).log;
  auto more = generate_log(abc_spec(7, 100)).log;
  std::vector<Event> shifted;
  for (const auto& e : more.events()) shifted.push_back({e.symbol, e.timestamp + *base.last_timestamp() + 1});
  std::vector<EventLog> incs{EventLog::single_segment(shifted), EventLog{}};

  BenchGrid grid{{Fraction::parse("0.02"), Fraction::parse("0.05")},
                 {Fraction::parse("0"), Fraction::parse("0.01"), Fraction::parse("0.05")},
                 Window::of(8),
                 1};
  auto rows = run_bench(base, incs, grid);
  // Cells with min_nbd_supp >= min_supp are skipped, leaving 4 of 6.
  CHECK(rows.size() == 4 * 2);
  for (const auto& r : rows) {
    CHECK(r.speedup > 0);
    CHECK(r.ius_nbd_size <= r.nbd_size);
    CHECK(r.db_size == (r.step == 1 ? 800u : 900u));
    CHECK(r.inc_size == (r.step == 1 ? 100u : 0u));
  }
  // Same data and min_supp, larger min_nbd_supp: border no larger.
  for (const auto& a : rows)
    for (const auto& b : rows)
      if (a.step == b.step && a.min_supp == b.min_supp && a.min_nbd_supp < b.min_nbd_supp)
        CHECK(b.nbd_size <= a.nbd_size);

  std::ostringstream csv;
  write_bench_csv(csv, rows);
  std::istringstream lines(csv.str());
  std::string header, first;
  std::getline(lines, header);
  std::getline(lines, first);
  CHECK(header ==
        "step,db_size,inc_size,min_supp,min_nbd_supp,window,t_rerun,t_ius,speedup,nbd_size,ius_nbd_size,"
        "frequent_size");
  CHECK(first.rfind("1,800,100,0.02,0,8,", 0) == 0);

  BenchRecord r;
  r.min_supp = Fraction::parse("0.1");
  r.min_nbd_supp = Fraction::parse("0");
  r.t_rerun = 0.5;
  r.t_ius = 0.25;
  r.speedup = 2.0;
  std::ostringstream one;
  write_bench_csv(one, std::vector<BenchRecord>{r});
  CHECK(one.str().substr(one.str().find('\n') + 1) == "0,0,0,0.1,0,inf,0.500000,0.250000,2.000,0,0,0\n");
}
