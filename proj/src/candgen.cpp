#include "sequp/candgen.hpp"

#include <map>
#include <unordered_map>
#include <unordered_set>

#include "sequp/error.hpp"

namespace sequp {

std::vector<Sequence> CandidateBatch::sequences() const {
  std::vector<Sequence> out;
  out.reserve(candidates.size());
  for (const auto& c : candidates) out.push_back(c.sequence);
  return out;
}

namespace {

using Index = std::unordered_map<Sequence, std::vector<const Sequence*>, SequenceHash>;

Sequence slice(const Sequence& s, std::size_t from, std::size_t to) {
  auto syms = s.symbols();
  return Sequence(std::vector<SymbolId>(syms.begin() + static_cast<std::ptrdiff_t>(from),
                                        syms.begin() + static_cast<std::ptrdiff_t>(to)));
}

Index index_by_prefix(std::span<const Sequence> level, std::size_t k) {
  Index idx;
  for (const auto& s : level) idx[slice(s, 0, k - 1)].push_back(&s);
  return idx;
}

}  // namespace

CandidateBatch cross_join(std::span<const Sequence> l_db, std::span<const Sequence> l_inc,
                          std::span<const Sequence> l_u, const PatternLevel& frequent_m) {
  CandidateBatch batch;
  const Sequence* any = !l_db.empty() ? &l_db.front() : !l_inc.empty() ? &l_inc.front() : nullptr;
  if (!any) return batch;
  const std::size_t k = any->size();
  if (k == 0) throw Error(ErrorKind::usage, "cross join over empty sequences");
  for (auto group : {l_db, l_inc, l_u})
    for (const auto& s : group)
      if (s.size() != k) throw Error(ErrorKind::usage, "cross join over mixed sequence lengths");
  batch.length = k + 1;

  std::unordered_set<Sequence, SequenceHash> frequent_u(l_u.begin(), l_u.end());
  std::map<Sequence, std::uint8_t> tagged;

  auto emit = [&](const Sequence& head, const Sequence& tail, Provenance tag) {
    if (head == tail) return;
    ++batch.generated;
    Sequence gamma = head.extended(tail.back());
    if (auto it = tagged.find(gamma); it != tagged.end()) {
      it->second |= static_cast<std::uint8_t>(tag);
      return;
    }
    for (const auto& sub : delete_one_subsequences(gamma))
      if (!frequent_u.contains(sub)) {
        ++batch.pruned;
        return;
      }
    tagged.emplace(std::move(gamma), static_cast<std::uint8_t>(tag));
  };

  const Index inc_by_prefix = index_by_prefix(l_inc, k);
  const Index db_by_prefix = index_by_prefix(l_db, k);
  for (const auto& alpha : l_db)
    if (auto it = inc_by_prefix.find(slice(alpha, 1, k)); it != inc_by_prefix.end())
      for (const Sequence* beta : it->second) emit(alpha, *beta, Provenance::db_suffix_extension);
  for (const auto& beta : l_inc)
    if (auto it = db_by_prefix.find(slice(beta, 1, k)); it != db_by_prefix.end())
      for (const Sequence* alpha : it->second) emit(beta, *alpha, Provenance::db_prefix_extension);

  for (auto& [seq, tag] : tagged) {
    if (frequent_m.contains(seq)) {
      ++batch.already_frequent;
      continue;
    }
    batch.candidates.push_back({seq, static_cast<Provenance>(tag)});
  }
  return batch;
}

PatternLevel count_and_band(const CandidateBatch& batch, const EventLog& u, const Params& params, Counting mode) {
  const auto seqs = batch.sequences();
  const auto counts = count_batch(seqs, u, params.window, mode);
  const Bands bands = bands_for(params.min_supp, params.min_nbd_supp, u.size());
  PatternLevel into_nbd;
  for (std::size_t i = 0; i < seqs.size(); ++i) {
    if (bands.frequent(counts[i]))
      throw consistency_error("cross candidate of length " + std::to_string(seqs[i].size()) + " reached count " +
                              std::to_string(counts[i]) + " in U without being frequent in DB or db");
    if (bands.negative_border(counts[i])) into_nbd.emplace(seqs[i], counts[i]);
  }
  return into_nbd;
}

}  // namespace sequp
