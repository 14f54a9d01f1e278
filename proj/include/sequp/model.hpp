#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace sequp {

using Timestamp = std::uint64_t;
using Count = std::uint64_t;

struct SymbolId {
  std::uint32_t value = 0;

  friend constexpr auto operator<=>(SymbolId, SymbolId) = default;
};

/// Interns alarm-type names to dense ids 0..n-1 in first-seen order.
class SymbolTable {
 public:
  SymbolId intern(std::string_view name);
  std::optional<SymbolId> find(std::string_view name) const;
  const std::string& name(SymbolId id) const;
  std::size_t size() const noexcept { return names_.size(); }

  friend bool operator==(const SymbolTable& a, const SymbolTable& b) { return a.names_ == b.names_; }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, SymbolId> ids_;
};

struct Event {
  SymbolId symbol;
  Timestamp timestamp = 0;

  friend bool operator==(const Event&, const Event&) = default;
};

/// Half-open index range [begin, end) into EventLog::events().
struct Segment {
  std::size_t begin = 0;
  std::size_t end = 0;

  std::size_t size() const noexcept { return end - begin; }
  friend bool operator==(const Segment&, const Segment&) = default;
};

/// Timestamped event stream partitioned into batches. Occurrences never span
/// a segment boundary, which makes occurrence counts additive over concat().
class EventLog {
 public:
  EventLog() = default;

  /// One segment holding `events`, stably sorted by timestamp.
  static EventLog single_segment(std::vector<Event> events);

  /// Validates segment coverage and per-segment ordering.
  static EventLog from_parts(std::vector<Event> events, std::vector<Segment> segments);

  std::size_t size() const noexcept { return events_.size(); }
  bool empty() const noexcept { return events_.empty(); }
  std::span<const Event> events() const noexcept { return events_; }
  std::span<const Segment> segments() const noexcept { return segments_; }
  std::span<const Event> segment_events(std::size_t i) const;

  std::optional<Timestamp> first_timestamp() const;
  std::optional<Timestamp> last_timestamp() const;

  friend bool operator==(const EventLog&, const EventLog&) = default;

 private:
  std::vector<Event> events_;
  std::vector<Segment> segments_;
};

/// Ordered list of symbols, length >= 1 for anything that gets mined.
/// Ordering is canonical: by length, then lexicographic by symbol id.
class Sequence {
 public:
  Sequence() = default;
  explicit Sequence(std::vector<SymbolId> symbols) : symbols_(std::move(symbols)) {}
  Sequence(std::initializer_list<std::uint32_t> ids);

  std::size_t size() const noexcept { return symbols_.size(); }
  bool empty() const noexcept { return symbols_.empty(); }
  SymbolId operator[](std::size_t i) const { return symbols_[i]; }
  SymbolId front() const { return symbols_.front(); }
  SymbolId back() const { return symbols_.back(); }
  std::span<const SymbolId> symbols() const noexcept { return symbols_; }

  /// This sequence followed by `s`.
  Sequence extended(SymbolId s) const;

  friend bool operator==(const Sequence&, const Sequence&) = default;
  friend std::strong_ordering operator<=>(const Sequence& a, const Sequence& b);

 private:
  std::vector<SymbolId> symbols_;
};

struct SequenceHash {
  std::size_t operator()(const Sequence& s) const noexcept;
};

/// Parses `timestamp,symbol` lines; '#' lines and blank lines are skipped.
/// New symbols are interned into `table`. Throws Error(input) with a line number.
EventLog parse_log(std::istream& in, SymbolTable& table);
EventLog parse_log_text(std::string_view text, SymbolTable& table);

/// Writes the log in the parse_log format, one event per line.
void write_log(std::ostream& out, const EventLog& log, const SymbolTable& table);

/// U = base followed by increment, segments preserved.
EventLog concat(const EventLog& base, const EventLog& increment);

struct SplitLog {
  EventLog deleted;
  EventLog remaining;
};

/// Events with timestamp < cutoff form `deleted`. A segment straddling the
/// cutoff is cut in two, so concat(deleted, remaining) reproduces the events
/// of `log` but not necessarily its segments.
SplitLog split_prefix(const EventLog& log, Timestamp cutoff);

/// The |s| sequences obtained by deleting each position once, in position order.
std::vector<Sequence> delete_one_subsequences(const Sequence& s);

/// True iff `a` appears in `b` in order, not necessarily contiguously.
bool is_subsequence(const Sequence& a, const Sequence& b);

std::string to_string(const Sequence& s, const SymbolTable& table);

}  // namespace sequp

template <>
struct std::hash<sequp::SymbolId> {
  std::size_t operator()(sequp::SymbolId id) const noexcept { return std::hash<std::uint32_t>{}(id.value); }
};
