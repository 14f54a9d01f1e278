#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "sequp/model.hpp"
#include "sequp/state.hpp"

namespace sequp {

/// Which join direction produced a cross candidate.
enum class Provenance : std::uint8_t {
  db_suffix_extension = 1,  ///< alpha from L^DB extended by the last symbol of beta from L^db
  db_prefix_extension = 2,  ///< beta from L^db extended by the last symbol of alpha from L^DB
  both = 3,
};

struct Candidate {
  Sequence sequence;
  Provenance provenance;
};

struct CandidateBatch {
  std::size_t length = 0;
  std::vector<Candidate> candidates;  ///< canonical order, deduplicated
  std::size_t generated = 0;          ///< joins emitted before pruning and dedup
  std::size_t pruned = 0;             ///< rejected by the subsequence test
  std::size_t already_frequent = 0;   ///< dropped because they are in L^U_m

  std::vector<Sequence> sequences() const;
};

/// Joins (m-1)-sequences frequent in U that come from L^DB with those from
/// L^db, in both directions, skipping alpha == beta. Candidates with a
/// delete-one subsequence outside `l_u` are pruned; those in `frequent_m`
/// (the length-m part of L^U) are dropped.
CandidateBatch cross_join(std::span<const Sequence> l_db, std::span<const Sequence> l_inc,
                          std::span<const Sequence> l_u, const PatternLevel& frequent_m = {});

/// Counts each candidate over U and keeps those in the negative-border band.
/// A candidate reaching the frequent floor contradicts the fact that every
/// sequence frequent in U is frequent in DB or db, and raises
/// Error(consistency).
PatternLevel count_and_band(const CandidateBatch& batch, const EventLog& u, const Params& params,
                            Counting mode = Counting::parallel);

}  // namespace sequp
