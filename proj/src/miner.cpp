#include "sequp/miner.hpp"

#include <algorithm>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "sequp/error.hpp"

namespace sequp {

std::vector<Sequence> keys_of(const PatternLevel& level) {
  std::vector<Sequence> out;
  out.reserve(level.size());
  for (const auto& [s, c] : level) out.push_back(s);
  return out;
}

namespace {

Sequence slice(const Sequence& s, std::size_t from, std::size_t to) {
  auto syms = s.symbols();
  return Sequence(std::vector<SymbolId>(syms.begin() + static_cast<std::ptrdiff_t>(from),
                                        syms.begin() + static_cast<std::ptrdiff_t>(to)));
}

}  // namespace

std::vector<Sequence> self_join_candidates(std::span<const Sequence> level) {
  if (level.empty()) return {};
  const std::size_t k = level.front().size();
  if (k == 0) throw Error(ErrorKind::usage, "self join over empty sequences");
  for (const auto& s : level)
    if (s.size() != k) throw Error(ErrorKind::usage, "self join over mixed sequence lengths");

  std::unordered_set<Sequence, SequenceHash> members(level.begin(), level.end());
  // first k-1 symbols -> last symbols of the level members with that prefix
  std::unordered_map<Sequence, std::vector<SymbolId>, SequenceHash> by_prefix;
  for (const auto& s : members) by_prefix[slice(s, 0, k - 1)].push_back(s.back());

  std::set<Sequence> out;
  for (const auto& alpha : members) {
    auto it = by_prefix.find(slice(alpha, 1, k));
    if (it == by_prefix.end()) continue;
    for (SymbolId last : it->second) {
      Sequence gamma = alpha.extended(last);
      bool keep = true;
      for (const auto& sub : delete_one_subsequences(gamma))
        if (!members.contains(sub)) {
          keep = false;
          break;
        }
      if (keep) out.insert(std::move(gamma));
    }
  }
  return {out.begin(), out.end()};
}

MiningState mine(const EventLog& log, const Params& params, Counting mode) {
  params.validate();
  MiningState state;
  state.params = params;
  state.db_size = log.size();
  const Bands bands = state.bands();

  std::set<SymbolId> alphabet;
  for (const auto& e : log.events()) alphabet.insert(e.symbol);
  std::vector<Sequence> candidates;
  for (auto id : alphabet) candidates.push_back(Sequence(std::vector<SymbolId>{id}));

  while (!candidates.empty()) {
    auto counts = count_batch(candidates, log, params.window, mode);
    std::vector<Sequence> frequent;
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      if (bands.frequent(counts[i])) {
        state.frequent.insert(candidates[i], counts[i]);
        frequent.push_back(candidates[i]);
      } else if (bands.negative_border(counts[i])) {
        state.negative_border.insert(candidates[i], counts[i]);
      }
    }
    candidates = self_join_candidates(frequent);
  }
  return state;
}

}  // namespace sequp
