#pragma once

#include <cstddef>

#include "sequp/model.hpp"
#include "sequp/state.hpp"

namespace sequp {

/// Bookkeeping for one classification phase. Every examined sequence is
/// either skipped (a subsequence is not frequent in U), served from a stored
/// count (reused), dropped because the stored states bound its count below the
/// border band (bounded), or counted in a log (scanned).
struct PhaseStats {
  std::size_t examined = 0;
  std::size_t skipped = 0;
  std::size_t reused = 0;
  std::size_t bounded = 0;
  std::size_t scanned = 0;
  std::size_t to_frequent = 0;
  std::size_t to_negative_border = 0;
  double seconds = 0;
};

struct ExtensionStats {
  std::size_t generated = 0;
  std::size_t pruned = 0;
  std::size_t already_frequent = 0;
  std::size_t already_banded = 0;
  std::size_t bounded = 0;  ///< dropped without a scan of DB
  std::size_t counted = 0;  ///< needed a scan of DB or db
  std::size_t to_negative_border = 0;
  double seconds = 0;
};

struct UpdateReport {
  MiningState new_state;
  PhaseStats from_db_frequent;   ///< members of L^DB
  PhaseStats from_inc_frequent;  ///< members of L^db not in L^DB
  PhaseStats from_db_border;     ///< members of NBD(DB) not in L^db
  PhaseStats from_inc_border;    ///< members of NBD(db) not in L^DB or NBD(DB)
  ExtensionStats extension;
  std::size_t cascade_pruned = 0;  ///< working-set supersequences of demoted patterns
  std::size_t inc_scans = 0;       ///< sequences counted in db
  std::size_t db_scans = 0;        ///< sequences counted in DB
  std::size_t levels = 0;
  double mine_inc_seconds = 0;
  double total_seconds = 0;
};

/// Maintains L and NBD when the batch `inc_log` is appended to `db_log`, the
/// log `state_db` was mined from. Mines the increment, reclassifies the stored
/// frequent and border sets of both sides level by level, and extends the
/// border with cross candidates. The frequent set equals mine(concat(db_log,
/// inc_log)) exactly.
///
/// A sequence whose delete-one subsequences are all frequent on one side but
/// which is stored in neither set there has a count below that side's border
/// floor. That bound lets a sequence be dropped without a scan when it cannot
/// reach the border band of U.
UpdateReport ius_update(const MiningState& state_db, const EventLog& inc_log, const EventLog& db_log,
                        const Params& params, Counting mode = Counting::parallel);

}  // namespace sequp
