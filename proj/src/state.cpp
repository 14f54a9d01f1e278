#include "sequp/state.hpp"

#include <string>

#include "sequp/error.hpp"

namespace sequp {

Params Params::make(Fraction min_supp, Fraction min_nbd_supp, Window window) {
  Params p{std::move(min_supp), std::move(min_nbd_supp), window};
  p.validate();
  return p;
}

void Params::validate() const {
  if (min_supp.is_zero() || min_supp > Fraction(1, 1))
    throw input_error("min_supp must lie in (0, 1], got " + min_supp.to_string());
  if (!(min_nbd_supp < min_supp))
    throw input_error("min_nbd_supp must be below min_supp, got " + min_nbd_supp.to_string());
}

std::optional<Count> PatternSet::find(const Sequence& s) const {
  if (s.empty() || s.size() > levels_.size()) return std::nullopt;
  const auto& lvl = levels_[s.size() - 1];
  if (auto it = lvl.find(s); it != lvl.end()) return it->second;
  return std::nullopt;
}

void PatternSet::insert(const Sequence& s, Count c) {
  if (s.empty()) throw Error(ErrorKind::usage, "cannot store an empty sequence");
  if (levels_.size() < s.size()) levels_.resize(s.size());
  levels_[s.size() - 1].insert_or_assign(s, c);
}

bool PatternSet::erase(const Sequence& s) {
  if (s.empty() || s.size() > levels_.size()) return false;
  bool erased = levels_[s.size() - 1].erase(s) > 0;
  trim();
  return erased;
}

const PatternLevel& PatternSet::level(std::size_t m) const {
  static const PatternLevel kEmpty;
  if (m == 0 || m > levels_.size()) return kEmpty;
  return levels_[m - 1];
}

std::size_t PatternSet::size() const noexcept {
  std::size_t n = 0;
  for (const auto& lvl : levels_) n += lvl.size();
  return n;
}

void PatternSet::trim() {
  while (!levels_.empty() && levels_.back().empty()) levels_.pop_back();
}

bool operator==(const PatternSet& a, const PatternSet& b) {
  // Trailing empty levels never survive erase(); compare by content anyway.
  std::size_t n = std::max(a.levels_.size(), b.levels_.size());
  for (std::size_t m = 1; m <= n; ++m)
    if (a.level(m) != b.level(m)) return false;
  return true;
}

void validate_state(const MiningState& state, const SymbolTable* table) {
  state.params.validate();
  const Bands bands = state.bands();
  auto label = [&](const Sequence& s) {
    if (table) {
      bool known = true;
      for (auto id : s.symbols()) known = known && id.value < table->size();
      if (known) return to_string(s, *table);
    }
    std::string out = "<";
    for (std::size_t i = 0; i < s.size(); ++i) out += (i ? " " : "") + std::to_string(s[i].value);
    return out + ">";
  };
  auto fail = [&](const Sequence& s, const std::string& why) { throw state_error("pattern " + label(s) + ": " + why); };
  auto check_symbols = [&](const Sequence& s) {
    if (!table) return;
    for (auto id : s.symbols())
      if (id.value >= table->size()) fail(s, "unknown symbol id " + std::to_string(id.value));
  };
  auto subs_frequent = [&](const Sequence& s) {
    if (s.size() < 2) return true;
    for (const auto& sub : delete_one_subsequences(s))
      if (!state.frequent.contains(sub)) return false;
    return true;
  };

  state.frequent.for_each([&](const Sequence& s, Count c) {
    check_symbols(s);
    if (!bands.frequent(c))
      fail(s, "frequent count " + std::to_string(c) + " is below " + std::to_string(bands.frequent_floor));
    if (c > state.db_size) fail(s, "count exceeds the database size");
    if (state.negative_border.contains(s)) fail(s, "listed as both frequent and negative border");
    if (!subs_frequent(s)) fail(s, "frequent pattern has an infrequent subsequence");
  });
  state.negative_border.for_each([&](const Sequence& s, Count c) {
    check_symbols(s);
    if (!bands.negative_border(c))
      fail(s, "negative-border count " + std::to_string(c) + " is outside [" + std::to_string(bands.nbd_floor) +
                  ", " + std::to_string(bands.frequent_floor) + ")");
    if (!subs_frequent(s)) fail(s, "negative-border pattern has an infrequent subsequence");
  });
}

}  // namespace sequp
