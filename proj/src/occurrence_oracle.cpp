#include <vector>

#include "sequp/error.hpp"
#include "sequp/occurrence.hpp"

namespace sequp {

Count count_occurrences_oracle(const Sequence& s, const EventLog& log, const Window& w) {
  if (s.empty()) throw Error(ErrorKind::usage, "cannot count an empty sequence");
  const auto events = log.events();
  Count total = 0;
  for (const auto& seg : log.segments()) {
    std::size_t restart = seg.begin;
    while (restart < seg.end) {
      bool found = false;
      bool exhausted = false;
      std::size_t last = 0;
      for (std::size_t start = restart; start < seg.end && !found && !exhausted; ++start) {
        if (events[start].symbol != s[0]) continue;
        std::size_t pos = start;
        std::size_t matched = 1;
        while (matched < s.size()) {
          std::size_t next = pos + 1;
          while (next < seg.end && events[next].symbol != s[matched]) ++next;
          if (next == seg.end) break;
          pos = next;
          ++matched;
        }
        if (matched < s.size()) {
          // Later starts match no earlier, so they run out of segment too.
          exhausted = true;
        } else if (w.admits(events[start].timestamp, events[pos].timestamp)) {
          found = true;
          last = pos;
        }
      }
      if (!found) break;
      ++total;
      restart = last + 1;
    }
  }
  return total;
}

}  // namespace sequp
