#include "sequp/ius.hpp"

#include <chrono>

#include "sequp/candgen.hpp"
#include "sequp/error.hpp"
#include "sequp/miner.hpp"

namespace sequp {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

void check_compatible(const MiningState& state, const EventLog& db_log, const Params& params) {
  params.validate();
  if (!(state.params == params))
    throw state_error("state was mined with min_supp=" + state.params.min_supp.to_string() +
                      " min_nbd_supp=" + state.params.min_nbd_supp.to_string() +
                      " window=" + state.params.window.to_string() + ", update requested different parameters");
  if (state.db_size != db_log.size())
    throw state_error("state covers " + std::to_string(state.db_size) + " events but the supplied log has " +
                      std::to_string(db_log.size()));
}

// Removes every stored sequence longer than `m` that contains one of `demoted`.
std::size_t prune_supersequences(PatternSet& set, std::size_t m, const std::vector<Sequence>& demoted) {
  if (demoted.empty()) return 0;
  std::vector<Sequence> doomed;
  for (std::size_t len = m + 1; len <= set.max_length(); ++len)
    for (const auto& [s, c] : set.level(len))
      for (const auto& d : demoted)
        if (is_subsequence(d, s)) {
          doomed.push_back(s);
          break;
        }
  for (const auto& s : doomed) set.erase(s);
  return doomed.size();
}

struct Work {
  const PatternSet& frequent_u;
  std::size_t m;

  bool subsequences_frequent(const Sequence& s) const {
    if (m == 1) return true;
    for (const auto& sub : delete_one_subsequences(s))
      if (!frequent_u.contains(sub)) return false;
    return true;
  }
};

// Upper bound on a count in one side's log for a sequence absent from both of
// that side's stored sets: if all its delete-one subsequences are frequent
// there, the miner examined it and found it below the border floor.
struct SideBound {
  const PatternSet& frequent;
  Count nbd_floor;

  std::optional<Count> operator()(const Sequence& s) const {
    if (s.size() >= 2)
      for (const auto& sub : delete_one_subsequences(s))
        if (!frequent.contains(sub)) return std::nullopt;
    return nbd_floor - 1;
  }
};

// One classification phase: `known` holds the stored count on this phase's
// side; the other side comes from `lookup` when stored, else from a scan of
// `scan_log` unless `bound` already rules out the border band.
template <typename Select, typename Lookup>
std::vector<Sequence> run_phase(const PatternLevel& pool, Select&& select, Lookup&& lookup, const SideBound& bound,
                                const EventLog& scan_log, bool may_be_frequent, const Work& work, const Bands& bands,
                                const Params& params, Counting mode, MiningState& out, PhaseStats& stats,
                                std::size_t& scan_counter) {
  auto t0 = Clock::now();
  struct Pending {
    Sequence seq;
    Count known;
    std::optional<Count> other;
  };
  std::vector<Pending> pending;
  std::vector<Sequence> to_scan;
  std::vector<Sequence> bounded;
  for (const auto& [s, c] : pool) {
    if (!select(s)) continue;
    ++stats.examined;
    if (!work.subsequences_frequent(s)) {
      ++stats.skipped;
      continue;
    }
    auto other = lookup(s);
    if (other) {
      ++stats.reused;
    } else if (auto most = bound(s); most && c + *most < bands.nbd_floor) {
      ++stats.bounded;
      bounded.push_back(s);
      continue;
    } else {
      ++stats.scanned;
      to_scan.push_back(s);
    }
    pending.push_back({s, c, other});
  }
  auto scanned = count_batch(to_scan, scan_log, params.window, mode);
  scan_counter += to_scan.size();

  std::vector<Sequence> demoted = std::move(bounded);
  std::size_t next_scan = 0;
  for (auto& p : pending) {
    Count total = p.known + (p.other ? *p.other : scanned[next_scan++]);
    if (bands.frequent(total)) {
      if (!may_be_frequent)
        throw consistency_error("border sequence of length " + std::to_string(p.seq.size()) + " reached count " +
                                std::to_string(total) + " in U without being frequent in DB or db");
      out.frequent.insert(p.seq, total);
      ++stats.to_frequent;
      continue;
    }
    demoted.push_back(p.seq);
    if (bands.negative_border(total)) {
      out.negative_border.insert(p.seq, total);
      ++stats.to_negative_border;
    }
  }
  stats.seconds += seconds_since(t0);
  return demoted;
}

// Counts cross candidates in U as count(DB) + count(db). Stored counts are
// reused; db is scanned first since it is small, and DB only when the bound on
// the DB side leaves the border band of U within reach.
void extend_border(const CandidateBatch& batch, const PatternSet& l_db, const PatternSet& nbd_db,
                   const SideBound& db_bound, const PatternSet& l_inc, const PatternSet& nbd_inc,
                   const EventLog& inc_log, const EventLog& db_log, const Bands& bands, const Params& params,
                   Counting mode, MiningState& out, UpdateReport& report) {
  auto stored = [](const PatternSet& a, const PatternSet& b, const Sequence& s) {
    if (auto c = a.find(s)) return c;
    return b.find(s);
  };
  const std::size_t n = batch.candidates.size();
  std::vector<std::optional<Count>> in_db(n), in_inc(n);
  std::vector<Sequence> scan_inc;
  for (std::size_t i = 0; i < n; ++i) {
    const Sequence& s = batch.candidates[i].sequence;
    in_db[i] = stored(l_db, nbd_db, s);
    in_inc[i] = stored(l_inc, nbd_inc, s);
    if (!in_inc[i]) scan_inc.push_back(s);
  }
  auto inc_counts = count_batch(scan_inc, inc_log, params.window, mode);
  report.inc_scans += scan_inc.size();

  std::vector<std::size_t> need_db;
  std::vector<Sequence> scan_db;
  for (std::size_t i = 0, next = 0; i < n; ++i) {
    if (!in_inc[i]) in_inc[i] = inc_counts[next++];
    if (in_db[i]) continue;
    if (auto most = db_bound(batch.candidates[i].sequence); most && *most + *in_inc[i] < bands.nbd_floor) {
      ++report.extension.bounded;
      continue;
    }
    need_db.push_back(i);
    scan_db.push_back(batch.candidates[i].sequence);
  }
  auto db_counts = count_batch(scan_db, db_log, params.window, mode);
  report.db_scans += scan_db.size();
  for (std::size_t j = 0; j < need_db.size(); ++j) in_db[need_db[j]] = db_counts[j];
  report.extension.counted += std::max(scan_inc.size(), scan_db.size());

  for (std::size_t i = 0; i < n; ++i) {
    if (!in_db[i]) continue;
    const Sequence& s = batch.candidates[i].sequence;
    const Count total = *in_db[i] + *in_inc[i];
    if (bands.frequent(total))
      throw consistency_error("cross candidate of length " + std::to_string(s.size()) + " reached count " +
                              std::to_string(total) + " in U without being frequent in DB or db");
    if (bands.negative_border(total)) {
      out.negative_border.insert(s, total);
      ++report.extension.to_negative_border;
    }
  }
}

}  // namespace

UpdateReport ius_update(const MiningState& state_db, const EventLog& inc_log, const EventLog& db_log,
                        const Params& params, Counting mode) {
  auto t_start = Clock::now();
  check_compatible(state_db, db_log, params);
  const EventLog u_log = concat(db_log, inc_log);

  UpdateReport report;
  auto t_mine = Clock::now();
  const MiningState state_inc = mine(inc_log, params, mode);
  report.mine_inc_seconds = seconds_since(t_mine);

  MiningState& out = report.new_state;
  out.params = params;
  out.db_size = u_log.size();
  const Bands bands = out.bands();

  const PatternSet& l_db = state_db.frequent;
  const PatternSet& nbd_db = state_db.negative_border;
  const PatternSet& l_inc = state_inc.frequent;
  const PatternSet& nbd_inc = state_inc.negative_border;
  const SideBound db_bound{l_db, state_db.bands().nbd_floor};
  const SideBound inc_bound{l_inc, state_inc.bands().nbd_floor};
  // Working copies; the prune cascade only ever shrinks these.
  PatternSet work_l_db = l_db, work_nbd_db = nbd_db, work_l_inc = l_inc, work_nbd_inc = nbd_inc;

  for (std::size_t m = 1;; ++m) {
    report.levels = m;
    const Work work{out.frequent, m};

    // L^DB: fetch the db side from L^db, then NBD(db), else scan db.
    auto demoted = run_phase(
        work_l_db.level(m), [](const Sequence&) { return true; },
        [&](const Sequence& s) {
          if (auto c = l_inc.find(s)) return c;
          return nbd_inc.find(s);
        },
        inc_bound, inc_log, true, work, bands, params, mode, out, report.from_db_frequent, report.inc_scans);
    report.cascade_pruned += prune_supersequences(work_l_db, m, demoted);
    report.cascade_pruned += prune_supersequences(work_nbd_db, m, demoted);

    // L^db \ L^DB: fetch the DB side from NBD(DB), else scan DB.
    demoted = run_phase(
        work_l_inc.level(m), [&](const Sequence& s) { return !l_db.contains(s); },
        [&](const Sequence& s) { return nbd_db.find(s); }, db_bound, db_log, true, work, bands, params, mode, out,
        report.from_inc_frequent, report.db_scans);
    report.cascade_pruned += prune_supersequences(work_l_inc, m, demoted);
    report.cascade_pruned += prune_supersequences(work_nbd_inc, m, demoted);

    // NBD(DB) \ L^db: a copy in NBD(db) is summed, else scan db.
    run_phase(
        work_nbd_db.level(m), [&](const Sequence& s) { return !l_inc.contains(s); },
        [&](const Sequence& s) { return nbd_inc.find(s); }, inc_bound, inc_log, false, work, bands, params, mode, out,
        report.from_db_border, report.inc_scans);

    // NBD(db) \ (L^DB u NBD(DB)): scan DB.
    run_phase(
        work_nbd_inc.level(m), [&](const Sequence& s) { return !l_db.contains(s) && !nbd_db.contains(s); },
        [](const Sequence&) { return std::optional<Count>{}; }, db_bound, db_log, false, work, bands, params, mode, out,
        report.from_inc_border, report.db_scans);

    // New border candidates of length m from the cross join of level m-1.
    if (m >= 2) {
      auto t_ext = Clock::now();
      std::vector<Sequence> from_db, from_inc, all_u;
      for (const auto& [s, c] : out.frequent.level(m - 1)) {
        all_u.push_back(s);
        if (l_db.contains(s)) from_db.push_back(s);
        if (l_inc.contains(s)) from_inc.push_back(s);
      }
      CandidateBatch batch = cross_join(from_db, from_inc, all_u, out.frequent.level(m));
      report.extension.generated += batch.generated;
      report.extension.pruned += batch.pruned;
      report.extension.already_frequent += batch.already_frequent;
      std::erase_if(batch.candidates, [&](const Candidate& c) {
        bool banded = out.negative_border.contains(c.sequence);
        report.extension.already_banded += banded;
        return banded;
      });
      extend_border(batch, l_db, nbd_db, db_bound, l_inc, nbd_inc, inc_log, db_log, bands, params, mode, out,
                    report);
      report.extension.seconds += seconds_since(t_ext);
    }

    if (out.frequent.level(m).empty()) break;
  }
  report.total_seconds = seconds_since(t_start);
  return report;
}

}  // namespace sequp
