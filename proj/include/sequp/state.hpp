#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "sequp/fraction.hpp"
#include "sequp/model.hpp"
#include "sequp/occurrence.hpp"

namespace sequp {

struct Params {
  Fraction min_supp;
  Fraction min_nbd_supp;
  Window window;

  /// Enforces 0 <= min_nbd_supp < min_supp <= 1.
  static Params make(Fraction min_supp, Fraction min_nbd_supp, Window window = Window::unbounded());
  void validate() const;

  friend bool operator==(const Params&, const Params&) = default;
};

using PatternLevel = std::map<Sequence, Count>;

/// Sequence -> count, grouped by length. Level m lives at index m-1.
class PatternSet {
 public:
  std::optional<Count> find(const Sequence& s) const;
  bool contains(const Sequence& s) const { return find(s).has_value(); }
  void insert(const Sequence& s, Count c);
  bool erase(const Sequence& s);

  /// Empty level when m is past the longest stored pattern.
  const PatternLevel& level(std::size_t m) const;
  std::size_t max_length() const noexcept { return levels_.size(); }
  std::size_t size() const noexcept;
  bool empty() const noexcept { return size() == 0; }

  /// Visits patterns in canonical order (length, then symbol ids).
  template <typename F>
  void for_each(F&& f) const {
    for (const auto& lvl : levels_)
      for (const auto& [s, c] : lvl) f(s, c);
  }

  friend bool operator==(const PatternSet& a, const PatternSet& b);

 private:
  void trim();
  std::vector<PatternLevel> levels_;
};

/// L^X and NBD(X) with exact counts, plus the parameters they were mined under.
struct MiningState {
  Params params;
  Count db_size = 0;
  PatternSet frequent;
  PatternSet negative_border;

  Bands bands() const { return bands_for(params.min_supp, params.min_nbd_supp, db_size); }

  friend bool operator==(const MiningState&, const MiningState&) = default;
};

/// Checks every MiningState invariant; throws Error(state) naming the first
/// offending pattern. `table` only improves the message when given.
void validate_state(const MiningState& state, const SymbolTable* table = nullptr);

}  // namespace sequp
