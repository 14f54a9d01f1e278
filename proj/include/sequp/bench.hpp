#pragma once

#include <iosfwd>
#include <span>
#include <vector>

#include "sequp/fraction.hpp"
#include "sequp/model.hpp"
#include "sequp/occurrence.hpp"

namespace sequp {

/// One cell of the re-mine versus incremental-update comparison.
struct BenchRecord {
  std::size_t step = 0;  ///< 1-based index of the increment
  Count db_size = 0;     ///< events before the increment
  Count inc_size = 0;
  Fraction min_supp;
  Fraction min_nbd_supp;
  Window window;
  double t_rerun = 0;
  double t_ius = 0;
  double speedup = 0;            ///< t_rerun / t_ius
  std::size_t nbd_size = 0;      ///< |NBD(U)| of the re-mine
  std::size_t ius_nbd_size = 0;  ///< |NBD(U)| kept by the incremental update
  std::size_t frequent_size = 0;
};

struct BenchGrid {
  std::vector<Fraction> min_supp;
  std::vector<Fraction> min_nbd_supp;  ///< values >= a min_supp are skipped for it
  Window window;
  int repeats = 1;                     ///< best-of timing per contender
};

/// For every grid point, mines `base`, then for each successive increment
/// times a full re-mine of the concatenation against ius_update from the
/// previous state. Frequent sets are compared outside both timed regions; a
/// mismatch throws Error(consistency) before any row for that cell exists.
std::vector<BenchRecord> run_bench(const EventLog& base, std::span<const EventLog> increments, const BenchGrid& grid,
                                   Counting mode = Counting::parallel);

void write_bench_csv(std::ostream& out, std::span<const BenchRecord> rows);

}  // namespace sequp
