// Serial vs OpenMP timing of the candidate-counting kernel and of a full mine.

#include <omp.h>

#include <CLI11.hpp>
#include <chrono>
#include <cstdio>
#include <vector>

#include "sequp/miner.hpp"
#include "sequp/synth.hpp"

using namespace sequp;

namespace {

template <typename F>
double best_of(int repeats, F&& f) {
  double best = 0;
  for (int i = 0; i < repeats; ++i) {
    auto t0 = std::chrono::steady_clock::now();
    f();
    double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (i == 0 || dt < best) best = dt;
  }
  return best;
}

void row(const char* kernel, double serial, double parallel) {
  std::printf("%s,%d,%.6f,%.6f,%.3f\n", kernel, omp_get_max_threads(), serial, parallel, serial / parallel);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Serial vs parallel kernel timings"};
  GenSpec spec;
  spec.seed = 11;
  spec.alphabet = 30;
  spec.length = 20000;
  spec.noise_rate = 0.3;
  std::size_t candidates = 2000;
  int repeats = 3;
  std::string min_supp = "0.01";
  Timestamp window = 12;
  app.add_option("--length", spec.length)->capture_default_str();
  app.add_option("--alphabet", spec.alphabet)->capture_default_str();
  app.add_option("--candidates", candidates, "Random length-3 candidates for the counting kernel")
      ->capture_default_str();
  app.add_option("--min-supp", min_supp)->capture_default_str();
  app.add_option("--window", window)->capture_default_str();
  app.add_option("--repeats", repeats)->capture_default_str()->check(CLI::PositiveNumber);
  CLI11_PARSE(app, argc, argv);

  spec.planted = {{Sequence{0, 1, 2}, 0.04}, {Sequence{3, 4}, 0.04}, {Sequence{5, 6, 7, 8}, 0.02}};
  const EventLog log = generate_log(spec).log;
  const Window w = Window::of(window);

  SplitRng rng(99);
  std::vector<Sequence> cands;
  for (std::size_t i = 0; i < candidates; ++i) {
    std::vector<SymbolId> ids;
    for (int k = 0; k < 3; ++k) ids.push_back(SymbolId{static_cast<std::uint32_t>(rng.below(spec.alphabet))});
    cands.emplace_back(std::move(ids));
  }

  std::vector<Count> a, b;
  const double t_count_serial = best_of(repeats, [&] { a = count_batch(cands, log, w, Counting::serial); });
  const double t_count_parallel = best_of(repeats, [&] { b = count_batch(cands, log, w, Counting::parallel); });
  if (a != b) {
    std::fprintf(stderr, "count_batch results differ between modes\n");
    return 4;
  }

  const Params params = Params::make(Fraction::parse(min_supp), Fraction::parse("0"), w);
  MiningState sa, sb;
  const double t_mine_serial = best_of(repeats, [&] { sa = mine(log, params, Counting::serial); });
  const double t_mine_parallel = best_of(repeats, [&] { sb = mine(log, params, Counting::parallel); });
  if (!(sa == sb)) {
    std::fprintf(stderr, "mine results differ between modes\n");
    return 4;
  }

  std::printf("kernel,threads,t_serial,t_parallel,speedup\n");
  row("count_batch", t_count_serial, t_count_parallel);
  row("mine", t_mine_serial, t_mine_parallel);
  std::fprintf(stderr, "%zu events, %zu candidates, %zu frequent, %zu border\n", log.size(), cands.size(),
               sa.frequent.size(), sa.negative_border.size());
  return 0;
}
