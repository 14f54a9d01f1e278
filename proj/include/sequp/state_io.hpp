#pragma once

#include <iosfwd>
#include <string>

#include "sequp/model.hpp"
#include "sequp/state.hpp"

namespace sequp {

inline constexpr const char* kStateFormat = "sequp-state";
inline constexpr int kStateVersion = 1;

/// Text format:
///
///   sequp-state 1
///   min_supp <decimal>
///   min_nbd_supp <decimal>
///   window <inf|span>
///   db_size <events>
///   symbols <count>
///   S <id> <name>          one per symbol, ids ascending
///   F <ids...> <count>     frequent patterns, canonical order
///   N <ids...> <count>     negative-border patterns, canonical order
///
/// Refuses to write a state that fails validate_state().
void save_state(std::ostream& out, const MiningState& state, const SymbolTable& table);
std::string save_state_string(const MiningState& state, const SymbolTable& table);

struct LoadedState {
  MiningState state;
  SymbolTable table;
};

/// Parses and re-validates. Malformed lines are reported with their line
/// number; a non-canonical pattern order is rejected so that load followed by
/// save reproduces the input byte for byte.
LoadedState load_state(std::istream& in);
LoadedState load_state_string(const std::string& text);

}  // namespace sequp
