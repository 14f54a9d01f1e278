// sequp: mine sequential alarm patterns and keep them current as the log
// grows or ages out.

#include <unistd.h>

#include <CLI11.hpp>
#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "sequp/bench.hpp"
#include "sequp/dus.hpp"
#include "sequp/error.hpp"
#include "sequp/ius.hpp"
#include "sequp/miner.hpp"
#include "sequp/state_io.hpp"
#include "sequp/synth.hpp"

namespace {

using namespace sequp;

std::ifstream open_in(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw input_error("cannot open " + path);
  return in;
}

// Each file is one segment; files must be given in time order.
EventLog read_logs(const std::vector<std::string>& paths, SymbolTable& table) {
  EventLog out;
  for (const auto& p : paths) {
    auto in = open_in(p);
    try {
      out = concat(out, parse_log(in, table));
    } catch (const Error& e) {
      throw Error(e.kind(), p + ": " + e.what());
    }
  }
  return out;
}

LoadedState read_state(const std::string& path) {
  auto in = open_in(path);
  try {
    return load_state(in);
  } catch (const Error& e) {
    throw Error(e.kind(), path + ": " + e.what());
  }
}

void write_state(const std::string& path, const MiningState& state, const SymbolTable& table) {
  const std::string text = save_state_string(state, table);
  std::ofstream out(path);
  if (!out || !(out << text)) throw input_error("cannot write " + path);
}

template <typename F>
void with_output(const std::string& path, F&& f) {
  if (path.empty() || path == "-") {
    f(std::cout);
    return;
  }
  std::ofstream out(path);
  if (!out) throw input_error("cannot write " + path);
  f(out);
}

struct ThresholdFlags {
  std::string min_supp;
  std::string min_nbd_supp;
  std::string window;

  // Thresholds given on the command line must agree with the state header.
  Params resolve(const Params& stored) const {
    Params p = stored;
    if (!min_supp.empty()) p.min_supp = Fraction::parse(min_supp);
    if (!min_nbd_supp.empty()) p.min_nbd_supp = Fraction::parse(min_nbd_supp);
    if (!window.empty()) p.window = Window::parse(window);
    if (!(p == stored))
      throw state_error("requested thresholds (min_supp " + p.min_supp.to_string() + ", min_nbd_supp " +
                        p.min_nbd_supp.to_string() + ", window " + p.window.to_string() +
                        ") differ from the state's (min_supp " + stored.min_supp.to_string() + ", min_nbd_supp " +
                        stored.min_nbd_supp.to_string() + ", window " + stored.window.to_string() + ")");
    return p;
  }

  void add_to(CLI::App* cmd) {
    cmd->add_option("--min-supp", min_supp, "Must match the state if given");
    cmd->add_option("--min-nbd-supp", min_nbd_supp, "Must match the state if given");
    cmd->add_option("--window", window, "Must match the state if given");
  }
};

Counting counting(bool serial) { return serial ? Counting::serial : Counting::parallel; }

void print_summary(const MiningState& st) {
  std::cout << "events " << st.db_size << ", frequent " << st.frequent.size() << ", negative border "
            << st.negative_border.size() << ", longest " << st.frequent.max_length() << '\n';
}

using NamedPattern = std::vector<std::string>;

std::string format(const NamedPattern& p) {
  std::string out = "<";
  for (std::size_t i = 0; i < p.size(); ++i) out += (i ? " " : "") + p[i];
  return out + ">";
}

// Pattern -> count keyed by symbol names, so states with differently ordered
// symbol tables compare correctly.
std::map<NamedPattern, Count> by_name(const PatternSet& set, const SymbolTable& table) {
  std::map<NamedPattern, Count> out;
  set.for_each([&](const Sequence& s, Count c) {
    NamedPattern p;
    for (auto id : s.symbols()) p.push_back(table.name(id));
    out.emplace(std::move(p), c);
  });
  return out;
}

void diff_band(const char* band, const std::map<NamedPattern, Count>& a, const std::map<NamedPattern, Count>& b,
               std::size_t& changes) {
  for (const auto& [p, c] : a) {
    auto it = b.find(p);
    if (it == b.end()) {
      std::cout << "removed," << band << ',' << format(p) << ',' << c << ",\n";
      ++changes;
    } else if (it->second != c) {
      std::cout << "recounted," << band << ',' << format(p) << ',' << c << ',' << it->second << '\n';
      ++changes;
    }
  }
  for (const auto& [p, c] : b)
    if (!a.contains(p)) {
      std::cout << "added," << band << ',' << format(p) << ",," << c << '\n';
      ++changes;
    }
}

PlantedPattern parse_plant(const std::string& text, SymbolTable& names) {
  auto colon = text.rfind(':');
  if (colon == std::string::npos) throw input_error("--plant expects 'a b c:rate', got '" + text + "'");
  std::istringstream syms(text.substr(0, colon));
  std::vector<SymbolId> ids;
  for (std::string s; syms >> s;) {
    auto id = names.find(s);
    if (!id) throw input_error("planted symbol '" + s + "' is not in the alphabet");
    ids.push_back(*id);
  }
  double rate = 0;
  try {
    std::size_t used = 0;
    rate = std::stod(text.substr(colon + 1), &used);
    if (used != text.size() - colon - 1) throw std::invalid_argument("trailing");
  } catch (const std::exception&) {
    throw input_error("bad planted rate in '" + text + "'");
  }
  return {Sequence(std::move(ids)), rate};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Frequent sequence mining with incremental and decremental updates"};
  app.require_subcommand(1);
  bool serial = false;
  app.add_flag("--serial", serial, "Count candidates on one thread");

  // mine
  auto* mine_cmd = app.add_subcommand("mine", "Mine a log from scratch and save the state");
  std::vector<std::string> mine_inputs;
  std::string mine_supp, mine_nbd = "0", mine_window = "inf", mine_out;
  mine_cmd->add_option("--input", mine_inputs, "Log file; repeat for later batches")->required();
  mine_cmd->add_option("--min-supp", mine_supp)->required();
  mine_cmd->add_option("--min-nbd-supp", mine_nbd)->capture_default_str();
  mine_cmd->add_option("--window", mine_window, "Maximum occurrence span, or inf")->capture_default_str();
  mine_cmd->add_option("--out", mine_out)->required();

  // update add / update delete
  auto* update_cmd = app.add_subcommand("update", "Update a saved state");
  update_cmd->require_subcommand(1);

  auto* add_cmd = update_cmd->add_subcommand("add", "Append an increment");
  std::string add_state, add_out;
  std::vector<std::string> add_logs, add_incs;
  ThresholdFlags add_flags;
  add_cmd->add_option("--state", add_state)->required();
  add_cmd->add_option("--log", add_logs, "Log files the state was mined from, in order")->required();
  add_cmd->add_option("--increment", add_incs, "New batch; repeat for several segments")->required();
  add_cmd->add_option("--out", add_out)->required();
  add_flags.add_to(add_cmd);

  auto* del_cmd = update_cmd->add_subcommand("delete", "Delete every event before a timestamp");
  std::string del_state, del_out;
  std::vector<std::string> del_logs;
  Timestamp del_before = 0;
  bool del_recall = false;
  ThresholdFlags del_flags;
  del_cmd->add_option("--state", del_state)->required();
  del_cmd->add_option("--log", del_logs, "Log files the state was mined from, in order")->required();
  del_cmd->add_option("--before", del_before, "Events with smaller timestamps are deleted")->required();
  del_cmd->add_option("--out", del_out)->required();
  del_cmd->add_flag("--recall", del_recall, "Re-mine the remainder and report missed patterns");
  del_flags.add_to(del_cmd);

  // diff
  auto* diff_cmd = app.add_subcommand("diff", "Compare two states");
  std::string diff_a, diff_b, diff_band_name = "frequent";
  diff_cmd->add_option("--a", diff_a)->required();
  diff_cmd->add_option("--b", diff_b)->required();
  diff_cmd->add_option("--band", diff_band_name)
      ->check(CLI::IsMember({"frequent", "border", "all"}))
      ->capture_default_str();

  // show
  auto* show_cmd = app.add_subcommand("show", "Print the patterns of a state");
  std::string show_state, show_format = "auto";
  std::size_t show_level = 0;
  show_cmd->add_option("--state", show_state)->required();
  show_cmd->add_option("--level", show_level, "Only patterns of this length");
  show_cmd->add_option("--format", show_format, "table, csv, or auto (table on a terminal)")
      ->check(CLI::IsMember({"table", "csv", "auto"}))
      ->capture_default_str();

  // gen
  auto* gen_cmd = app.add_subcommand("gen", "Generate a synthetic log");
  GenSpec gen;
  std::vector<std::string> gen_plants;
  Timestamp gen_start = 0;
  std::string gen_out;
  gen_cmd->add_option("--seed", gen.seed)->capture_default_str();
  gen_cmd->add_option("--alphabet", gen.alphabet)->capture_default_str();
  gen_cmd->add_option("--length", gen.length)->capture_default_str();
  gen_cmd->add_option("--plant", gen_plants, "Planted pattern and rate, e.g. 'a b c:0.05'");
  gen_cmd->add_option("--noise", gen.noise_rate, "Chance of a noise event between planted elements")
      ->capture_default_str();
  gen_cmd->add_option("--start", gen_start, "Timestamp offset")->capture_default_str();
  gen_cmd->add_option("--out", gen_out, "Defaults to standard output");

  // bench
  auto* bench_cmd = app.add_subcommand("bench", "Time re-mining against incremental updates");
  std::string bench_base, bench_window = "inf", bench_out;
  std::vector<std::string> bench_incs, bench_supps, bench_nbds{"0"};
  int bench_repeats = 1;
  bench_cmd->add_option("--base", bench_base)->required();
  bench_cmd->add_option("--increment", bench_incs, "Successive batches")->required();
  bench_cmd->add_option("--min-supp", bench_supps)->required()->delimiter(',');
  bench_cmd->add_option("--min-nbd-supp", bench_nbds)->delimiter(',');
  bench_cmd->add_option("--window", bench_window)->capture_default_str();
  bench_cmd->add_option("--repeats", bench_repeats, "Best-of timing")->capture_default_str()->check(CLI::PositiveNumber);
  bench_cmd->add_option("--out", bench_out, "CSV path; defaults to standard output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : static_cast<int>(ErrorKind::usage);
  }

  try {
    const Counting mode = counting(serial);

    if (*mine_cmd) {
      auto params = Params::make(Fraction::parse(mine_supp), Fraction::parse(mine_nbd), Window::parse(mine_window));
      SymbolTable table;
      auto log = read_logs(mine_inputs, table);
      auto st = mine(log, params, mode);
      write_state(mine_out, st, table);
      print_summary(st);
    } else if (*add_cmd) {
      auto [state, table] = read_state(add_state);
      auto params = add_flags.resolve(state.params);
      auto db = read_logs(add_logs, table);
      auto inc = read_logs(add_incs, table);
      auto report = ius_update(state, inc, db, params, mode);
      write_state(add_out, report.new_state, table);
      print_summary(report.new_state);
      std::cout << "scanned db " << report.inc_scans << ", DB " << report.db_scans << "; reused "
                << report.from_db_frequent.reused + report.from_inc_frequent.reused + report.from_db_border.reused
                << "; cross candidates " << report.extension.counted << " counted, " << report.extension.bounded
                << " bounded\n";
    } else if (*del_cmd) {
      auto [state, table] = read_state(del_state);
      auto params = del_flags.resolve(state.params);
      auto db = read_logs(del_logs, table);
      auto [dd, rest] = split_prefix(db, del_before);
      auto report = dus_update(state, dd, db, params, mode);
      std::cout << "min_freq " << report.min_freq.to_string() << " (deleted " << dd.size() << " of " << db.size()
                << " events; " << (report.filtered_by_min_freq ? "border filtered" : "border not filtered")
                << ", " << report.skipped_by_min_freq << " skipped)\n";
      if (del_recall) std::cout << describe(dus_recall(report, rest, &table), &table) << '\n';
      write_state(del_out, report.new_state, table);
      print_summary(report.new_state);
    } else if (*diff_cmd) {
      auto a = read_state(diff_a);
      auto b = read_state(diff_b);
      std::cout << "change,band,pattern,count_a,count_b\n";
      std::size_t changes = 0;
      if (diff_band_name != "border")
        diff_band("frequent", by_name(a.state.frequent, a.table), by_name(b.state.frequent, b.table), changes);
      if (diff_band_name != "frequent")
        diff_band("border", by_name(a.state.negative_border, a.table), by_name(b.state.negative_border, b.table),
                  changes);
      std::cerr << changes << " difference(s)\n";
    } else if (*show_cmd) {
      auto [state, table] = read_state(show_state);
      const bool table_out = show_format == "table" || (show_format == "auto" && isatty(STDOUT_FILENO));
      struct Row {
        const char* band;
        std::string pattern;
        Count count;
      };
      std::vector<Row> rows;
      auto collect = [&](const char* band, const PatternSet& set) {
        set.for_each([&](const Sequence& s, Count c) {
          if (show_level == 0 || s.size() == show_level) rows.push_back({band, to_string(s, table), c});
        });
      };
      collect("frequent", state.frequent);
      collect("border", state.negative_border);
      if (table_out) {
        std::size_t width = 7;
        for (const auto& r : rows) width = std::max(width, r.pattern.size());
        std::printf("%-8s  %-*s  %s\n", "band", static_cast<int>(width), "pattern", "count");
        for (const auto& r : rows)
          std::printf("%-8s  %-*s  %llu\n", r.band, static_cast<int>(width), r.pattern.c_str(),
                      static_cast<unsigned long long>(r.count));
      } else {
        std::cout << "band,length,pattern,count\n";
        for (const auto& r : rows)
          std::cout << r.band << ',' << std::count(r.pattern.begin(), r.pattern.end(), ' ') + 1 << ',' << r.pattern
                    << ',' << r.count << '\n';
      }
    } else if (*gen_cmd) {
      SymbolTable names;
      for (std::uint32_t i = 0; i < gen.alphabet; ++i) names.intern(symbol_name(i));
      for (const auto& p : gen_plants) gen.planted.push_back(parse_plant(p, names));
      auto out = generate_log(gen);
      std::vector<Event> shifted(out.log.events().begin(), out.log.events().end());
      for (auto& e : shifted) e.timestamp += gen_start;
      auto log = EventLog::single_segment(std::move(shifted));
      with_output(gen_out, [&](std::ostream& os) { write_log(os, log, out.table); });
    } else if (*bench_cmd) {
      SymbolTable table;
      auto base = read_logs({bench_base}, table);
      std::vector<EventLog> incs;
      Timestamp last = base.last_timestamp().value_or(0);
      for (const auto& path : bench_incs) {
        incs.push_back(read_logs({path}, table));
        if (auto first = incs.back().first_timestamp(); first && *first < last)
          throw input_error(path + " starts before the previous batch ends");
        if (auto l = incs.back().last_timestamp()) last = *l;
      }
      BenchGrid grid;
      for (const auto& s : bench_supps) grid.min_supp.push_back(Fraction::parse(s));
      for (const auto& s : bench_nbds) grid.min_nbd_supp.push_back(Fraction::parse(s));
      grid.window = Window::parse(bench_window);
      grid.repeats = bench_repeats;
      auto rows = run_bench(base, incs, grid, mode);
      with_output(bench_out, [&](std::ostream& os) { write_bench_csv(os, rows); });
    }
  } catch (const Error& e) {
    std::cerr << "sequp: " << e.what() << '\n';
    return static_cast<int>(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "sequp: internal error: " << e.what() << '\n';
    return static_cast<int>(ErrorKind::consistency);
  }
  return 0;
}
