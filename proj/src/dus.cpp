#include "sequp/dus.hpp"

#include <chrono>
#include <sstream>

#include "sequp/error.hpp"
#include "sequp/miner.hpp"

namespace sequp {

Fraction min_freq(const Params& params, Count db_size, Count dd_size) {
  if (db_size == 0) throw input_error("min_freq needs a non-empty database");
  if (dd_size > db_size) throw input_error("deleted prefix is larger than the database");
  using u128 = unsigned __int128;
  u128 num = static_cast<u128>(params.min_supp.num()) * (db_size - dd_size);
  u128 den = static_cast<u128>(params.min_supp.den()) * db_size;
  // Reduce before narrowing.
  u128 a = num, b = den;
  while (b != 0) {
    u128 t = a % b;
    a = b;
    b = t;
  }
  if (a == 0) a = 1;
  num /= a;
  den /= a;
  if (num > UINT64_MAX || den > UINT64_MAX) throw input_error("min_freq does not fit in 64-bit terms");
  return Fraction(static_cast<std::uint64_t>(num), static_cast<std::uint64_t>(den));
}

namespace {

EventLog sub_log(const EventLog& log, std::size_t first_segment, std::size_t last_segment) {
  std::vector<Event> events;
  std::vector<Segment> segs;
  for (std::size_t i = first_segment; i < last_segment; ++i) {
    auto evs = log.segment_events(i);
    segs.push_back({events.size(), events.size() + evs.size()});
    events.insert(events.end(), evs.begin(), evs.end());
  }
  return EventLog::from_parts(std::move(events), std::move(segs));
}

// Verifies dd is a leading part of db and returns the index of the segment
// it cuts, if any.
std::optional<std::size_t> check_prefix(const EventLog& dd, const EventLog& db) {
  if (dd.size() > db.size()) throw input_error("deleted log is longer than the database log");
  for (std::size_t i = 0; i < dd.size(); ++i)
    if (!(dd.events()[i] == db.events()[i]))
      throw input_error("deleted log is not a prefix of the database log (event " + std::to_string(i) + ")");
  auto dsegs = dd.segments();
  auto bsegs = db.segments();
  for (std::size_t i = 0; i < dsegs.size(); ++i) {
    if (i >= bsegs.size() || dsegs[i].begin != bsegs[i].begin)
      throw input_error("deleted log segments do not line up with the database log");
    if (dsegs[i].end == bsegs[i].end) continue;
    if (i + 1 != dsegs.size() || dsegs[i].end > bsegs[i].end)
      throw input_error("deleted log segments do not line up with the database log");
    return i;
  }
  return std::nullopt;
}

}  // namespace

DeletionReport dus_update(const MiningState& state_db, const EventLog& dd_log, const EventLog& db_log,
                          const Params& params, Counting mode) {
  auto t0 = std::chrono::steady_clock::now();
  params.validate();
  if (!(state_db.params == params))
    throw state_error("state was mined with different parameters than the deletion requested");
  if (state_db.db_size != db_log.size())
    throw state_error("state covers " + std::to_string(state_db.db_size) + " events but the supplied log has " +
                      std::to_string(db_log.size()));
  const auto straddle = check_prefix(dd_log, db_log);

  DeletionReport report;
  const Count db_size = db_log.size();
  const Count dd_size = dd_log.size();
  const Count u_size = db_size - dd_size;
  report.min_freq = db_size > 0 ? min_freq(params, db_size, dd_size) : params.min_supp;
  if (dd_size == 0) {
    // Nothing to subtract. The filter would otherwise drop the whole border,
    // since min_freq equals min_supp here.
    report.new_state = state_db;
    report.candidates_examined = state_db.frequent.size() + state_db.negative_border.size();
    report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return report;
  }
  report.filtered_by_min_freq = params.min_nbd_supp <= report.min_freq;

  struct Item {
    Sequence seq;
    Count db_count;
  };
  std::vector<Item> items;
  state_db.frequent.for_each([&](const Sequence& s, Count c) { items.push_back({s, c}); });
  state_db.negative_border.for_each([&](const Sequence& s, Count c) {
    // support(s, DB) >= min_freq  <=>  c * den >= num * |DB|
    if (report.filtered_by_min_freq &&
        static_cast<unsigned __int128>(c) * report.min_freq.den() <
            static_cast<unsigned __int128>(report.min_freq.num()) * db_size) {
      ++report.skipped_by_min_freq;
      return;
    }
    items.push_back({s, c});
  });
  report.candidates_examined = items.size();

  std::vector<Sequence> seqs;
  seqs.reserve(items.size());
  for (const auto& it : items) seqs.push_back(it.seq);

  // Share of each count that lived in the deleted part of DB.
  std::vector<Count> deleted(items.size(), 0);
  const std::size_t whole_segments = straddle ? *straddle : dd_log.segments().size();
  if (whole_segments > 0) {
    auto c = count_batch(seqs, sub_log(db_log, 0, whole_segments), params.window, mode);
    for (std::size_t i = 0; i < c.size(); ++i) deleted[i] += c[i];
  }
  if (straddle) {
    const EventLog cut_segment = sub_log(db_log, *straddle, *straddle + 1);
    const std::size_t head = dd_log.segments().back().size();
    auto evs = cut_segment.events();
    const EventLog tail = EventLog::from_parts(std::vector<Event>(evs.begin() + static_cast<std::ptrdiff_t>(head), evs.end()),
                                               {{0, evs.size() - head}});
    report.straddle_events = evs.size();
    auto whole = count_batch(seqs, cut_segment, params.window, mode);
    auto rest = count_batch(seqs, tail, params.window, mode);
    for (std::size_t i = 0; i < whole.size(); ++i) deleted[i] += whole[i] - rest[i];
  }

  MiningState& out = report.new_state;
  out.params = params;
  out.db_size = u_size;
  const Bands bands = out.bands();
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (deleted[i] > items[i].db_count)
      throw consistency_error("deleted share exceeds the stored count of a pattern");
    Count c = items[i].db_count - deleted[i];
    if (bands.frequent(c))
      out.frequent.insert(items[i].seq, c);
    else if (bands.negative_border(c))
      out.negative_border.insert(items[i].seq, c);
  }

  // Downward closure, level by level.
  for (std::size_t m = 2; m <= std::max(out.frequent.max_length(), out.negative_border.max_length()); ++m) {
    for (PatternSet* set : {&out.frequent, &out.negative_border}) {
      std::vector<Sequence> doomed;
      for (const auto& [s, c] : set->level(m))
        for (const auto& sub : delete_one_subsequences(s))
          if (!out.frequent.contains(sub)) {
            doomed.push_back(s);
            break;
          }
      for (const auto& s : doomed) set->erase(s);
      report.removed_by_closure += doomed.size();
    }
  }
  report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return report;
}

RecallReport dus_recall(const DeletionReport& report, const EventLog& remaining, const SymbolTable*) {
  RecallReport r;
  const MiningState oracle = mine(remaining, report.new_state.params);
  r.oracle_frequent = oracle.frequent.size();
  std::size_t hit = 0;
  oracle.frequent.for_each([&](const Sequence& s, Count c) {
    auto got = report.new_state.frequent.find(s);
    if (got && *got == c)
      ++hit;
    else if (!got)
      r.missed.emplace_back(s, c);
  });
  report.new_state.frequent.for_each([&](const Sequence& s, Count c) {
    auto want = oracle.frequent.find(s);
    if (!want || *want != c) r.wrong.emplace_back(s, c);
  });
  r.recall = r.oracle_frequent == 0 ? 1.0 : static_cast<double>(hit) / static_cast<double>(r.oracle_frequent);
  return r;
}

std::string describe(const RecallReport& recall, const SymbolTable* table) {
  std::ostringstream out;
  out << "recall " << recall.oracle_frequent - recall.missed.size() << "/" << recall.oracle_frequent;
  if (!recall.missed.empty()) {
    out << "; missed:";
    for (const auto& [s, c] : recall.missed) {
      out << ' ';
      if (table)
        out << to_string(s, *table);
      else
        for (std::size_t i = 0; i < s.size(); ++i) out << (i ? "," : "<") << s[i].value << (i + 1 == s.size() ? ">" : "");
      out << ':' << c;
    }
  }
  if (!recall.wrong.empty()) out << "; " << recall.wrong.size() << " reported pattern(s) disagree with a fresh mine";
  return out.str();
}

}  // namespace sequp
