#include "sequp/model.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>

#include "sequp/error.hpp"

namespace sequp {

SymbolId SymbolTable::intern(std::string_view name) {
  if (auto it = ids_.find(std::string(name)); it != ids_.end()) return it->second;
  SymbolId id{static_cast<std::uint32_t>(names_.size())};
  names_.emplace_back(name);
  ids_.emplace(names_.back(), id);
  return id;
}

std::optional<SymbolId> SymbolTable::find(std::string_view name) const {
  if (auto it = ids_.find(std::string(name)); it != ids_.end()) return it->second;
  return std::nullopt;
}

const std::string& SymbolTable::name(SymbolId id) const {
  if (id.value >= names_.size()) throw state_error("unknown symbol id " + std::to_string(id.value));
  return names_[id.value];
}

EventLog EventLog::single_segment(std::vector<Event> events) {
  std::stable_sort(events.begin(), events.end(),
                   [](const Event& a, const Event& b) { return a.timestamp < b.timestamp; });
  EventLog log;
  if (!events.empty()) log.segments_.push_back({0, events.size()});
  log.events_ = std::move(events);
  return log;
}

EventLog EventLog::from_parts(std::vector<Event> events, std::vector<Segment> segments) {
  std::size_t cursor = 0;
  for (const auto& seg : segments) {
    if (seg.begin != cursor || seg.end <= seg.begin || seg.end > events.size())
      throw input_error("segments must be non-empty, contiguous and cover the log");
    for (std::size_t i = seg.begin + 1; i < seg.end; ++i)
      if (events[i].timestamp < events[i - 1].timestamp)
        throw input_error("events within a segment must be sorted by timestamp");
    cursor = seg.end;
  }
  if (cursor != events.size()) throw input_error("segments must cover every event");
  EventLog log;
  log.events_ = std::move(events);
  log.segments_ = std::move(segments);
  return log;
}

std::span<const Event> EventLog::segment_events(std::size_t i) const {
  const auto& seg = segments_.at(i);
  return std::span<const Event>(events_).subspan(seg.begin, seg.size());
}

std::optional<Timestamp> EventLog::first_timestamp() const {
  if (events_.empty()) return std::nullopt;
  Timestamp t = events_.front().timestamp;
  for (const auto& seg : segments_) t = std::min(t, events_[seg.begin].timestamp);
  return t;
}

std::optional<Timestamp> EventLog::last_timestamp() const {
  if (events_.empty()) return std::nullopt;
  Timestamp t = 0;
  for (const auto& seg : segments_) t = std::max(t, events_[seg.end - 1].timestamp);
  return t;
}

Sequence::Sequence(std::initializer_list<std::uint32_t> ids) {
  symbols_.reserve(ids.size());
  for (auto id : ids) symbols_.push_back(SymbolId{id});
}

Sequence Sequence::extended(SymbolId s) const {
  std::vector<SymbolId> out;
  out.reserve(symbols_.size() + 1);
  out.assign(symbols_.begin(), symbols_.end());
  out.push_back(s);
  return Sequence(std::move(out));
}

std::strong_ordering operator<=>(const Sequence& a, const Sequence& b) {
  if (auto c = a.size() <=> b.size(); c != 0) return c;
  return std::lexicographical_compare_three_way(a.symbols_.begin(), a.symbols_.end(),
                                                b.symbols_.begin(), b.symbols_.end());
}

std::size_t SequenceHash::operator()(const Sequence& s) const noexcept {
  // FNV-1a over the ids.
  std::uint64_t h = 1469598103934665603ULL;
  for (auto id : s.symbols()) {
    h ^= id.value;
    h *= 1099511628211ULL;
  }
  return static_cast<std::size_t>(h);
}

namespace {

std::string_view trim(std::string_view s) {
  const auto* ws = " \t\r";
  auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

}  // namespace

EventLog parse_log(std::istream& in, SymbolTable& table) {
  std::vector<Event> events;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto body = trim(line);
    if (body.empty() || body.front() == '#') continue;
    auto comma = body.find(',');
    if (comma == std::string_view::npos)
      throw input_error("line " + std::to_string(lineno) + ": expected 'timestamp,symbol'");
    auto ts = trim(body.substr(0, comma));
    auto sym = trim(body.substr(comma + 1));
    if (sym.empty() || sym.find(',') != std::string_view::npos)
      throw input_error("line " + std::to_string(lineno) + ": symbol must be a non-empty token without commas");
    if (!ts.empty() && ts.front() == '-')
      throw input_error("line " + std::to_string(lineno) + ": negative timestamp");
    Timestamp t = 0;
    auto [ptr, ec] = std::from_chars(ts.data(), ts.data() + ts.size(), t);
    if (ts.empty() || ec != std::errc{} || ptr != ts.data() + ts.size())
      throw input_error("line " + std::to_string(lineno) + ": timestamp is not a non-negative integer");
    events.push_back({table.intern(sym), t});
  }
  return EventLog::single_segment(std::move(events));
}

EventLog parse_log_text(std::string_view text, SymbolTable& table) {
  std::istringstream in{std::string(text)};
  return parse_log(in, table);
}

void write_log(std::ostream& out, const EventLog& log, const SymbolTable& table) {
  for (const auto& e : log.events()) out << e.timestamp << ',' << table.name(e.symbol) << '\n';
}

EventLog concat(const EventLog& base, const EventLog& increment) {
  if (!base.empty() && !increment.empty() && *base.last_timestamp() > *increment.first_timestamp())
    throw input_error("increment starts at t=" + std::to_string(*increment.first_timestamp()) +
                      " before the base ends at t=" + std::to_string(*base.last_timestamp()));
  std::vector<Event> events(base.events().begin(), base.events().end());
  events.insert(events.end(), increment.events().begin(), increment.events().end());
  std::vector<Segment> segments(base.segments().begin(), base.segments().end());
  for (auto seg : increment.segments())
    segments.push_back({seg.begin + base.size(), seg.end + base.size()});
  return EventLog::from_parts(std::move(events), std::move(segments));
}

SplitLog split_prefix(const EventLog& log, Timestamp cutoff) {
  auto events = log.events();
  std::vector<Segment> deleted_segs;
  std::vector<Segment> remaining_segs;
  std::size_t cut = 0;
  for (const auto& seg : log.segments()) {
    if (cut != seg.begin) {
      // Already cut inside an earlier segment; everything after stays.
      remaining_segs.push_back({seg.begin - cut, seg.end - cut});
      continue;
    }
    auto first = events.begin() + static_cast<std::ptrdiff_t>(seg.begin);
    auto last = events.begin() + static_cast<std::ptrdiff_t>(seg.end);
    auto split = std::partition_point(first, last, [&](const Event& e) { return e.timestamp < cutoff; });
    auto at = static_cast<std::size_t>(split - events.begin());
    if (at > seg.begin) deleted_segs.push_back({seg.begin, at});
    if (at < seg.end) remaining_segs.push_back({0, seg.end - at});
    cut = at;
  }
  SplitLog out;
  out.deleted = EventLog::from_parts(std::vector<Event>(events.begin(), events.begin() + static_cast<std::ptrdiff_t>(cut)),
                                     std::move(deleted_segs));
  out.remaining = EventLog::from_parts(std::vector<Event>(events.begin() + static_cast<std::ptrdiff_t>(cut), events.end()),
                                       std::move(remaining_segs));
  return out;
}

std::vector<Sequence> delete_one_subsequences(const Sequence& s) {
  if (s.size() < 2) throw Error(ErrorKind::usage, "delete_one_subsequences needs a sequence of length >= 2");
  std::vector<Sequence> out;
  out.reserve(s.size());
  auto syms = s.symbols();
  for (std::size_t skip = 0; skip < syms.size(); ++skip) {
    std::vector<SymbolId> sub;
    sub.reserve(syms.size() - 1);
    for (std::size_t i = 0; i < syms.size(); ++i)
      if (i != skip) sub.push_back(syms[i]);
    out.emplace_back(std::move(sub));
  }
  return out;
}

bool is_subsequence(const Sequence& a, const Sequence& b) {
  std::size_t i = 0;
  for (std::size_t j = 0; j < b.size() && i < a.size(); ++j)
    if (a[i] == b[j]) ++i;
  return i == a.size();
}

std::string to_string(const Sequence& s, const SymbolTable& table) {
  std::string out = "<";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ' ';
    out += table.name(s[i]);
  }
  out += '>';
  return out;
}

}  // namespace sequp
