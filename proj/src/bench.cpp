#include "sequp/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <ostream>

#include "sequp/error.hpp"
#include "sequp/ius.hpp"
#include "sequp/miner.hpp"

namespace sequp {

namespace {

template <typename F>
auto timed(int repeats, double& best, F&& f) {
  using Clock = std::chrono::steady_clock;
  best = 0;
  decltype(f()) result;
  for (int i = 0; i < std::max(1, repeats); ++i) {
    auto t0 = Clock::now();
    result = f();
    double dt = std::chrono::duration<double>(Clock::now() - t0).count();
    if (i == 0 || dt < best) best = dt;
  }
  return result;
}

std::string fixed3(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

std::string seconds(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

}  // namespace

std::vector<BenchRecord> run_bench(const EventLog& base, std::span<const EventLog> increments, const BenchGrid& grid,
                                   Counting mode) {
  std::vector<BenchRecord> rows;
  for (const auto& supp : grid.min_supp) {
    for (const auto& nbd : grid.min_nbd_supp) {
      if (!(nbd < supp)) continue;
      const Params params = Params::make(supp, nbd, grid.window);
      MiningState state = mine(base, params, mode);
      EventLog db = base;
      for (std::size_t step = 0; step < increments.size(); ++step) {
        const EventLog& inc = increments[step];
        const EventLog u = concat(db, inc);

        BenchRecord rec;
        rec.step = step + 1;
        rec.db_size = db.size();
        rec.inc_size = inc.size();
        rec.min_supp = supp;
        rec.min_nbd_supp = nbd;
        rec.window = grid.window;
        MiningState remined = timed(grid.repeats, rec.t_rerun, [&] { return mine(u, params, mode); });
        UpdateReport updated = timed(grid.repeats, rec.t_ius, [&] { return ius_update(state, inc, db, params, mode); });

        if (!(remined.frequent == updated.new_state.frequent))
          throw consistency_error("incremental frequent set differs from a re-mine at step " + std::to_string(step + 1) +
                                  " (min_supp " + supp.to_string() + ", min_nbd_supp " + nbd.to_string() + ")");
        rec.speedup = rec.t_rerun / std::max(rec.t_ius, 1e-9);
        rec.nbd_size = remined.negative_border.size();
        rec.ius_nbd_size = updated.new_state.negative_border.size();
        rec.frequent_size = remined.frequent.size();
        rows.push_back(rec);

        state = std::move(updated.new_state);
        db = u;
      }
    }
  }
  return rows;
}

void write_bench_csv(std::ostream& out, std::span<const BenchRecord> rows) {
  out << "step,db_size,inc_size,min_supp,min_nbd_supp,window,t_rerun,t_ius,speedup,nbd_size,ius_nbd_size,"
         "frequent_size\n";
  for (const auto& r : rows)
    out << r.step << ',' << r.db_size << ',' << r.inc_size << ',' << r.min_supp.to_string() << ','
        << r.min_nbd_supp.to_string() << ',' << r.window.to_string() << ',' << seconds(r.t_rerun) << ','
        << seconds(r.t_ius) << ',' << fixed3(r.speedup) << ',' << r.nbd_size << ',' << r.ius_nbd_size << ','
        << r.frequent_size << '\n';
}

}  // namespace sequp
