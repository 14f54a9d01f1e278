#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "sequp/fraction.hpp"
#include "sequp/model.hpp"
#include "sequp/state.hpp"

namespace sequp {

/// min_supp * (|DB| - |dd|) / |DB|: the lowest support in DB from which a
/// sequence can still be frequent once the prefix dd is gone.
Fraction min_freq(const Params& params, Count db_size, Count dd_size);

struct DeletionReport {
  MiningState new_state;
  Fraction min_freq;
  bool filtered_by_min_freq = false;  ///< min_nbd_supp <= min_freq and dd is not empty
  std::size_t candidates_examined = 0;
  std::size_t skipped_by_min_freq = 0;
  std::size_t removed_by_closure = 0;
  /// Events of the segment cut by the deletion point; 0 when the cut falls on
  /// a segment boundary.
  std::size_t straddle_events = 0;
  double seconds = 0;
  std::string recall_note;
};

/// Maintains L and NBD when the time prefix `dd_log` (as produced by
/// split_prefix) is deleted from `db_log`, the log `state_db` was mined from.
/// Candidates are L^DB and NBD(DB), the latter filtered by min_freq when
/// min_nbd_supp <= min_freq. Counts in U come from subtracting the deleted
/// share; when the cut splits a segment, that segment is recounted whole and
/// as its surviving tail so the subtraction stays exact.
DeletionReport dus_update(const MiningState& state_db, const EventLog& dd_log, const EventLog& db_log,
                          const Params& params, Counting mode = Counting::parallel);

/// Frequent sequences of a fresh mine(remaining) that DUS did not report.
struct RecallReport {
  std::vector<std::pair<Sequence, Count>> missed;
  std::vector<std::pair<Sequence, Count>> wrong;  ///< reported frequent but not frequent, or miscounted
  std::size_t oracle_frequent = 0;
  double recall = 1.0;
};

RecallReport dus_recall(const DeletionReport& report, const EventLog& remaining, const SymbolTable* table = nullptr);

/// One-line summary for DeletionReport::recall_note.
std::string describe(const RecallReport& recall, const SymbolTable* table = nullptr);

}  // namespace sequp
