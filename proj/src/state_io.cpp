#include "sequp/state_io.hpp"

#include <charconv>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <vector>

#include "sequp/error.hpp"

namespace sequp {

void save_state(std::ostream& out, const MiningState& state, const SymbolTable& table) {
  validate_state(state, &table);
  out << kStateFormat << ' ' << kStateVersion << '\n'
      << "min_supp " << state.params.min_supp.to_string() << '\n'
      << "min_nbd_supp " << state.params.min_nbd_supp.to_string() << '\n'
      << "window " << state.params.window.to_string() << '\n'
      << "db_size " << state.db_size << '\n'
      << "symbols " << table.size() << '\n';
  for (std::uint32_t i = 0; i < table.size(); ++i) out << "S " << i << ' ' << table.name(SymbolId{i}) << '\n';
  auto emit = [&](char tag) {
    return [&out, tag](const Sequence& s, Count c) {
      out << tag;
      for (auto id : s.symbols()) out << ' ' << id.value;
      out << ' ' << c << '\n';
    };
  };
  state.frequent.for_each(emit('F'));
  state.negative_border.for_each(emit('N'));
}

std::string save_state_string(const MiningState& state, const SymbolTable& table) {
  std::ostringstream out;
  save_state(out, state, table);
  return out.str();
}

namespace {

class Reader {
 public:
  explicit Reader(std::istream& in) : in_(in) {}

  std::optional<std::string> next() {
    std::string line;
    if (!std::getline(in_, line)) return std::nullopt;
    ++lineno_;
    return line;
  }

  std::string require(const char* what) {
    auto line = next();
    if (!line) throw fail(std::string("unexpected end of file, expected ") + what);
    return *line;
  }

  Error fail(const std::string& why) const {
    return state_error("state line " + std::to_string(lineno_) + ": " + why);
  }

  std::string value_of(const std::string& line, std::string_view key) const {
    if (line.size() <= key.size() + 1 || line.compare(0, key.size(), key) != 0 || line[key.size()] != ' ')
      throw fail("expected '" + std::string(key) + " <value>'");
    return line.substr(key.size() + 1);
  }

  std::uint64_t integer(std::string_view text) const {
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size())
      throw fail("'" + std::string(text) + "' is not a non-negative integer");
    return v;
  }

 private:
  std::istream& in_;
  std::size_t lineno_ = 0;
};

std::vector<std::string_view> split_spaces(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    auto j = s.find(' ', i);
    if (j == std::string_view::npos) j = s.size();
    out.push_back(s.substr(i, j - i));
    i = j + 1;
  }
  return out;
}

}  // namespace

LoadedState load_state(std::istream& in) {
  Reader r(in);
  LoadedState loaded;
  auto header = r.require("format header");
  auto expected = std::string(kStateFormat) + " " + std::to_string(kStateVersion);
  if (header != expected) {
    if (header.rfind(kStateFormat, 0) == 0) throw r.fail("unsupported state version '" + header + "'");
    throw r.fail("not a state file");
  }
  try {
    auto min_supp = Fraction::parse(r.value_of(r.require("min_supp"), "min_supp"));
    auto min_nbd = Fraction::parse(r.value_of(r.require("min_nbd_supp"), "min_nbd_supp"));
    auto window = Window::parse(r.value_of(r.require("window"), "window"));
    loaded.state.params = Params::make(std::move(min_supp), std::move(min_nbd), window);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::state) throw;
    throw r.fail(e.what());
  }
  loaded.state.db_size = r.integer(r.value_of(r.require("db_size"), "db_size"));
  const auto nsym = r.integer(r.value_of(r.require("symbols"), "symbols"));
  for (std::uint64_t i = 0; i < nsym; ++i) {
    auto line = r.require("symbol line");
    auto rest = r.value_of(line, "S");
    auto space = rest.find(' ');
    if (space == std::string::npos || space + 1 >= rest.size()) throw r.fail("expected 'S <id> <name>'");
    if (r.integer(std::string_view(rest).substr(0, space)) != i) throw r.fail("symbol ids must be dense and ascending");
    auto name = rest.substr(space + 1);
    if (name.find(',') != std::string::npos) throw r.fail("symbol names cannot contain commas");
    if (loaded.table.find(name)) throw r.fail("duplicate symbol name '" + name + "'");
    loaded.table.intern(name);
  }

  const Bands bands = loaded.state.bands();
  std::optional<Sequence> prev;
  char prev_tag = 'F';
  while (auto line = r.next()) {
    auto tokens = split_spaces(*line);
    if (tokens.size() < 3 || (tokens[0] != "F" && tokens[0] != "N"))
      throw r.fail("expected 'F|N <symbol ids...> <count>'");
    const char tag = tokens[0][0];
    std::vector<SymbolId> ids;
    for (std::size_t i = 1; i + 1 < tokens.size(); ++i) {
      auto id = r.integer(tokens[i]);
      if (id >= nsym) throw r.fail("symbol id " + std::to_string(id) + " is not in the symbol table");
      ids.push_back(SymbolId{static_cast<std::uint32_t>(id)});
    }
    const Count count = r.integer(tokens.back());
    Sequence s(std::move(ids));
    if (tag == 'F' && prev_tag == 'N') throw r.fail("frequent patterns must precede negative-border patterns");
    if (tag == prev_tag && prev && !(*prev < s)) throw r.fail("patterns out of canonical order or duplicated");
    // Canonical order puts every subsequence of a pattern on an earlier line,
    // so each line can be checked as it arrives.
    const std::string label = "pattern " + to_string(s, loaded.table) + ": ";
    if (count > loaded.state.db_size) throw r.fail(label + "count exceeds db_size");
    if (tag == 'F' && !bands.frequent(count))
      throw r.fail(label + "frequent count " + std::to_string(count) + " is below " +
                   std::to_string(bands.frequent_floor));
    if (tag == 'N' && !bands.negative_border(count))
      throw r.fail(label + "negative-border count " + std::to_string(count) + " is outside [" +
                   std::to_string(bands.nbd_floor) + ", " + std::to_string(bands.frequent_floor) + ")");
    if (tag == 'N' && loaded.state.frequent.contains(s)) throw r.fail(label + "listed as both frequent and border");
    if (s.size() >= 2)
      for (const auto& sub : delete_one_subsequences(s))
        if (!loaded.state.frequent.contains(sub))
          throw r.fail(label + "subsequence " + to_string(sub, loaded.table) + " is not frequent");
    (tag == 'F' ? loaded.state.frequent : loaded.state.negative_border).insert(s, count);
    prev = std::move(s);
    prev_tag = tag;
  }
  validate_state(loaded.state, &loaded.table);
  return loaded;
}

LoadedState load_state_string(const std::string& text) {
  std::istringstream in(text);
  return load_state(in);
}

}  // namespace sequp
