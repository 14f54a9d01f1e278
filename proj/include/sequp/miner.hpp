#pragma once

#include <span>
#include <vector>

#include "sequp/model.hpp"
#include "sequp/state.hpp"

namespace sequp {

/// Level-wise mining of L^X and NBD(X) from scratch.
MiningState mine(const EventLog& log, const Params& params, Counting mode = Counting::parallel);

/// Apriori join of one level with itself: alpha + last(beta) whenever the
/// last m-2 symbols of alpha equal the first m-2 of beta, then pruned to
/// candidates whose delete-one subsequences all lie in `level`. Sorted.
std::vector<Sequence> self_join_candidates(std::span<const Sequence> level);

/// Keys of one pattern level, in canonical order.
std::vector<Sequence> keys_of(const PatternLevel& level);

}  // namespace sequp
