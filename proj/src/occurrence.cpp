#include "sequp/occurrence.hpp"

#include <algorithm>
#include <charconv>
#include <limits>

#include "sequp/error.hpp"

namespace sequp {

Window Window::of(Timestamp span) {
  if (span == 0) throw input_error("window span must be positive");
  Window w;
  w.span_ = span;
  return w;
}

Window Window::parse(std::string_view text) {
  if (text == "inf") return unbounded();
  Timestamp span = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), span);
  if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size())
    throw input_error("window must be 'inf' or a positive integer, got '" + std::string(text) + "'");
  return of(span);
}

std::string Window::to_string() const { return span_ ? std::to_string(*span_) : "inf"; }

namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

Count count_in_segment(std::span<const SymbolId> pattern, std::span<const Event> events, const Window& w,
                       std::vector<std::size_t>& starts) {
  const std::size_t m = pattern.size();
  std::fill(starts.begin(), starts.end(), kNone);
  Count found = 0;
  for (std::size_t i = 0; i < events.size(); ++i) {
    const SymbolId x = events[i].symbol;
    bool completed = false;
    // Descending so one event never fills two consecutive positions.
    for (std::size_t k = m - 1; k >= 1; --k) {
      if (pattern[k] == x && starts[k - 1] != kNone) {
        starts[k] = starts[k - 1];
        if (k == m - 1) completed = true;
      }
    }
    if (pattern[0] == x) {
      starts[0] = i;
      if (m == 1) completed = true;
    }
    if (completed && w.admits(events[starts[m - 1]].timestamp, events[i].timestamp)) {
      ++found;
      std::fill(starts.begin(), starts.end(), kNone);
    }
  }
  return found;
}

Count count_with_scratch(const Sequence& s, const EventLog& log, const Window& w, std::vector<std::size_t>& starts) {
  starts.resize(s.size());
  Count total = 0;
  for (std::size_t i = 0; i < log.segments().size(); ++i)
    total += count_in_segment(s.symbols(), log.segment_events(i), w, starts);
  return total;
}

}  // namespace

Count count_occurrences(const Sequence& s, const EventLog& log, const Window& w) {
  if (s.empty()) throw Error(ErrorKind::usage, "cannot count an empty sequence");
  std::vector<std::size_t> starts;
  return count_with_scratch(s, log, w, starts);
}

std::vector<Count> count_batch(std::span<const Sequence> candidates, const EventLog& log, const Window& w,
                               Counting mode) {
  for (const auto& s : candidates)
    if (s.empty()) throw Error(ErrorKind::usage, "cannot count an empty sequence");
  std::vector<Count> counts(candidates.size(), 0);
  const auto n = static_cast<std::ptrdiff_t>(candidates.size());
  if (mode == Counting::serial) {
    std::vector<std::size_t> starts;
    for (std::ptrdiff_t i = 0; i < n; ++i) counts[i] = count_with_scratch(candidates[i], log, w, starts);
    return counts;
  }
#pragma omp parallel
  {
    std::vector<std::size_t> starts;
#pragma omp for schedule(dynamic, 16)
    for (std::ptrdiff_t i = 0; i < n; ++i) counts[i] = count_with_scratch(candidates[i], log, w, starts);
  }
  return counts;
}

Count min_count(const Fraction& min_supp, Count n) {
  if (min_supp.is_zero() || min_supp > Fraction(1, 1))
    throw input_error("min_supp must lie in (0, 1], got " + min_supp.to_string());
  return ceil_mul(min_supp, n);
}

Bands bands_for(const Fraction& min_supp, const Fraction& min_nbd_supp, Count n) {
  Bands b;
  b.frequent_floor = std::max<Count>(1, min_count(min_supp, n));
  b.nbd_floor = std::max<Count>(1, ceil_mul(min_nbd_supp, n));
  return b;
}

}  // namespace sequp
