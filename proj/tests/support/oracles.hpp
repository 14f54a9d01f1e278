#pragma once

// Test-only helpers: random log generators and a brute-force frequent-set
// enumerator. The enumerator counts with count_occurrences_oracle and never
// touches the miner's join or the optimized counter.

#include <algorithm>
#include <map>
#include <vector>

#include "sequp/model.hpp"
#include "sequp/occurrence.hpp"
#include "sequp/state.hpp"
#include "sequp/synth.hpp"

namespace sequp::testing {

/// Random events over `alphabet` symbols. With probability `stay` the next
/// symbol repeats the previous one, which keeps pattern diversity (and hence
/// the frequent-set size) bounded. Timestamps start at `start` and advance by
/// 1..max_gap.
inline std::vector<Event> random_events(SplitRng& rng, std::uint32_t alphabet, std::size_t n, Timestamp start,
                                        double stay, Timestamp max_gap) {
  std::vector<Event> out;
  out.reserve(n);
  Timestamp t = start;
  SymbolId prev{static_cast<std::uint32_t>(rng.below(alphabet))};
  for (std::size_t i = 0; i < n; ++i) {
    SymbolId s = (i > 0 && rng.unit() < stay) ? prev : SymbolId{static_cast<std::uint32_t>(rng.below(alphabet))};
    out.push_back({s, t});
    t += 1 + rng.below(max_gap);
    prev = s;
  }
  return out;
}

inline EventLog random_log(SplitRng& rng, std::uint32_t alphabet, std::size_t n, Timestamp start = 0,
                           double stay = 0.0, Timestamp max_gap = 3) {
  return EventLog::single_segment(random_events(rng, alphabet, n, start, stay, max_gap));
}

/// Random log cut into 1..max_segments segments.
inline EventLog random_segmented_log(SplitRng& rng, std::uint32_t alphabet, std::size_t n, std::size_t max_segments,
                                     double stay = 0.0, Timestamp max_gap = 3) {
  auto events = random_events(rng, alphabet, n, 0, stay, max_gap);
  std::vector<Segment> segs;
  if (n > 0) {
    const std::size_t nseg = 1 + rng.below(std::min(max_segments, n));
    std::vector<std::size_t> cuts{0, n};
    while (cuts.size() < nseg + 1) {
      std::size_t c = 1 + rng.below(n - 1);  // nseg > 1 implies n >= 2
      if (std::find(cuts.begin(), cuts.end(), c) == cuts.end()) cuts.push_back(c);
    }
    std::sort(cuts.begin(), cuts.end());
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) segs.push_back({cuts[i], cuts[i + 1]});
  }
  return EventLog::from_parts(std::move(events), std::move(segs));
}

inline Sequence random_sequence(SplitRng& rng, std::uint32_t alphabet, std::size_t len) {
  std::vector<SymbolId> ids;
  for (std::size_t i = 0; i < len; ++i) ids.push_back(SymbolId{static_cast<std::uint32_t>(rng.below(alphabet))});
  return Sequence(std::move(ids));
}

/// Every sequence with oracle count >= max(1, ceil(min_supp * |log|)).
/// Enumerates by appending symbols to frequent sequences only; appending
/// cannot raise a count because the shorter sequence is a subsequence of the
/// longer one (occurrence monotonicity, itself property-tested).
inline std::map<Sequence, Count> brute_force_frequent(const EventLog& log, const Params& params) {
  const Bands bands = bands_for(params.min_supp, params.min_nbd_supp, log.size());
  std::vector<SymbolId> alphabet;
  for (const auto& e : log.events())
    if (std::find(alphabet.begin(), alphabet.end(), e.symbol) == alphabet.end()) alphabet.push_back(e.symbol);
  std::map<Sequence, Count> out;
  std::vector<Sequence> frontier{Sequence()};
  while (!frontier.empty()) {
    std::vector<Sequence> next;
    for (const auto& s : frontier)
      for (auto x : alphabet) {
        Sequence t = s.extended(x);
        Count c = count_occurrences_oracle(t, log, params.window);
        if (bands.frequent(c)) {
          out.emplace(t, c);
          next.push_back(std::move(t));
        }
      }
    frontier = std::move(next);
  }
  return out;
}

/// Full enumeration of all sequences up to `max_len` over `alphabet`
/// symbols, no pruning of any kind.
inline std::map<Sequence, Count> exhaustive_counts(const EventLog& log, std::uint32_t alphabet, std::size_t max_len,
                                                   const Window& w) {
  std::map<Sequence, Count> out;
  std::vector<Sequence> layer{Sequence()};
  for (std::size_t len = 1; len <= max_len; ++len) {
    std::vector<Sequence> next;
    for (const auto& s : layer)
      for (std::uint32_t x = 0; x < alphabet; ++x) {
        Sequence t = s.extended(SymbolId{x});
        out.emplace(t, count_occurrences_oracle(t, log, w));
        next.push_back(std::move(t));
      }
    layer = std::move(next);
  }
  return out;
}

inline std::map<Sequence, Count> as_map(const PatternSet& set) {
  std::map<Sequence, Count> out;
  set.for_each([&](const Sequence& s, Count c) { out.emplace(s, c); });
  return out;
}

inline Sequence seq(std::initializer_list<std::uint32_t> ids) { return Sequence(ids); }

}  // namespace sequp::testing
