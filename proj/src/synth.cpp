#include "sequp/synth.hpp"

#include "sequp/error.hpp"

namespace sequp {

std::uint64_t SplitRng::below(std::uint64_t n) {
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
  std::uint64_t x = 0;
  do x = next();
  while (x >= limit);
  return x % n;
}

double SplitRng::unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

std::string symbol_name(std::uint32_t i) {
  std::string out;
  std::uint64_t n = static_cast<std::uint64_t>(i) + 1;
  while (n > 0) {
    --n;
    out.insert(out.begin(), static_cast<char>('a' + n % 26));
    n /= 26;
  }
  return out;
}

GeneratedLog generate_log(const GenSpec& spec) {
  if (spec.alphabet == 0) throw input_error("alphabet must be non-empty");
  if (spec.noise_rate < 0 || spec.noise_rate >= 1) throw input_error("noise rate must lie in [0, 1)");
  double total_rate = 0;
  for (const auto& p : spec.planted) {
    if (p.pattern.empty()) throw input_error("planted pattern is empty");
    if (p.rate < 0 || p.rate > 1) throw input_error("planted rates must lie in [0, 1]");
    for (auto id : p.pattern.symbols())
      if (id.value >= spec.alphabet)
        throw input_error("planted symbol " + std::to_string(id.value) + " is outside an alphabet of " +
                          std::to_string(spec.alphabet));
    total_rate += p.rate;
  }
  if (total_rate > 1) throw input_error("planted rates sum above 1");

  GeneratedLog out;
  for (std::uint32_t i = 0; i < spec.alphabet; ++i) out.table.intern(symbol_name(i));

  SplitRng rng(spec.seed);
  std::vector<Event> events;
  events.reserve(spec.length);
  Timestamp t = 0;
  auto emit = [&](SymbolId s) {
    if (events.size() >= spec.length) return;
    events.push_back({s, t});
    t += 1 + rng.below(2);
  };
  auto noise = [&] { emit(SymbolId{static_cast<std::uint32_t>(rng.below(spec.alphabet))}); };

  while (events.size() < spec.length) {
    const double u = rng.unit();
    const PlantedPattern* chosen = nullptr;
    double acc = 0;
    for (const auto& p : spec.planted) {
      acc += p.rate;
      if (u < acc) {
        chosen = &p;
        break;
      }
    }
    if (!chosen) {
      noise();
      continue;
    }
    for (std::size_t j = 0; j < chosen->pattern.size(); ++j) {
      emit(chosen->pattern[j]);
      if (j + 1 < chosen->pattern.size())
        while (events.size() < spec.length && rng.unit() < spec.noise_rate) noise();
    }
  }
  out.log = EventLog::single_segment(std::move(events));
  return out;
}

}  // namespace sequp
