#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "sequp/model.hpp"

namespace sequp {

/// Deterministic on every platform: raw std::mt19937_64 output (fixed by the
/// standard) with our own range reduction instead of <random> distributions,
/// whose algorithms are implementation-defined.
class SplitRng {
 public:
  explicit SplitRng(std::uint64_t seed) : engine_(seed) {}
  std::uint64_t next() { return engine_(); }
  /// Uniform in [0, n), rejection sampled; n > 0.
  std::uint64_t below(std::uint64_t n);
  /// Uniform in [0, 1) with 53 random bits.
  double unit();

 private:
  std::mt19937_64 engine_;
};

struct PlantedPattern {
  Sequence pattern;
  double rate = 0;
};

struct GenSpec {
  std::uint64_t seed = 1;
  std::uint32_t alphabet = 5;
  std::size_t length = 1000;
  std::vector<PlantedPattern> planted;
  double noise_rate = 0.5;
};

struct GeneratedLog {
  EventLog log;
  SymbolTable table;
};

/// Name of symbol i: a..z, then aa, ab, ...
std::string symbol_name(std::uint32_t i);

/// Builds `length` events. At each step a planted pattern starts with its
/// rate (one uniform draw against the cumulative rates), otherwise one
/// uniform noise symbol is emitted. Between consecutive elements of a planted
/// instance, noise symbols are inserted while a uniform draw stays below
/// noise_rate. Timestamps advance by 1 or 2 per event.
GeneratedLog generate_log(const GenSpec& spec);

}  // namespace sequp
