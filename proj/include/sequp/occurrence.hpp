#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sequp/fraction.hpp"
#include "sequp/model.hpp"

namespace sequp {

/// Maximum last-minus-first timestamp of one occurrence, or unbounded.
class Window {
 public:
  static Window unbounded() { return Window(); }
  /// Throws for span == 0.
  static Window of(Timestamp span);
  /// "inf" or a positive integer.
  static Window parse(std::string_view text);

  bool bounded() const noexcept { return span_.has_value(); }
  std::optional<Timestamp> span() const noexcept { return span_; }
  bool admits(Timestamp first, Timestamp last) const noexcept { return !span_ || last - first <= *span_; }
  std::string to_string() const;

  friend bool operator==(const Window&, const Window&) = default;

 private:
  std::optional<Timestamp> span_;
};

enum class Counting { serial, parallel };

/// Greedy leftmost non-overlapping windowed occurrences of `s`, summed over
/// segments. Single pass per segment that tracks, for every prefix of `s`,
/// the latest start of a partial match; an occurrence is emitted at the
/// earliest event that completes one inside the window.
Count count_occurrences(const Sequence& s, const EventLog& log, const Window& w);

/// Same contract as count_occurrences, by direct simulation: try each start
/// position left to right, match the rest greedily, restart after the last
/// matched index. Quadratic; meant for verification on small logs.
Count count_occurrences_oracle(const Sequence& s, const EventLog& log, const Window& w);

/// Counts every candidate against one read-only log. The parallel mode spreads
/// candidates over OpenMP threads; the serial mode is the reference.
std::vector<Count> count_batch(std::span<const Sequence> candidates, const EventLog& log, const Window& w,
                               Counting mode = Counting::parallel);

/// ceiling(min_supp * n): the smallest count whose support reaches min_supp.
/// min_supp must lie in (0, 1].
Count min_count(const Fraction& min_supp, Count n);

/// Count floors for one database size.
struct Bands {
  Count frequent_floor = 1;  ///< max(1, min_count(min_supp, n))
  Count nbd_floor = 1;       ///< max(1, ceiling(min_nbd_supp * n))

  bool frequent(Count c) const noexcept { return c >= frequent_floor; }
  bool negative_border(Count c) const noexcept { return c >= nbd_floor && c < frequent_floor; }
};

Bands bands_for(const Fraction& min_supp, const Fraction& min_nbd_supp, Count n);

}  // namespace sequp
