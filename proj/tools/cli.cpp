#include "cli.hpp"

#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "inscribed/automaton.hpp"
#include "inscribed/counting.hpp"
#include "inscribed/errors.hpp"
#include "inscribed/genfunc.hpp"
#include "inscribed/oracle.hpp"
#include "inscribed/transition.hpp"

namespace inscribed::cli {

namespace {

struct RunConfig {
  int b = 0;
  std::size_t h = 0;
  std::size_t h_max = 0;
  std::string output;
  std::string format;
  std::string stack_path;
  std::size_t max_states = kDefaultMaxStates;
  unsigned threads = 1;
};

// Thrown when the command ran but found a disagreement.
struct Mismatch {
  std::string what;
};

void emit(const RunConfig& cfg, std::ostream& out, const std::string& text) {
  if (cfg.output.empty()) {
    out << text;
    return;
  }
  std::ofstream file(cfg.output, std::ios::binary);
  if (!file) throw InvalidArgument("cannot open output file '" + cfg.output + "'");
  file << text;
}

BuildOptions build_options(const RunConfig& cfg) { return {cfg.max_states, cfg.threads}; }

void require_format(const RunConfig& cfg, std::initializer_list<const char*> allowed) {
  for (const char* f : allowed) {
    if (cfg.format == f) return;
  }
  throw InvalidArgument("format '" + cfg.format + "' is not supported by this command");
}

std::string cmd_states(const RunConfig& cfg) {
  require_format(cfg, {"text", "json"});
  const mpz_class formula = state_count_formula(cfg.b);
  const std::size_t enumerated = enumerate_valid_states(cfg.b).size();
  // Width 0 has no alphabet, so no automaton to build.
  const std::string reachable = cfg.b == 0 ? "n/a" : std::to_string(build(cfg.b, build_options(cfg)).size());
  if (cfg.format == "json") {
    nlohmann::json doc{{"b", cfg.b}, {"formula", formula.get_str()}, {"enumerated", enumerated}};
    doc["reachable"] = cfg.b == 0 ? nlohmann::json(nullptr) : nlohmann::json(std::stoull(reachable));
    return doc.dump() + "\n";
  }
  std::ostringstream s;
  s << "b=" << cfg.b << " formula=" << formula.get_str() << " enumerated=" << enumerated
    << " reachable=" << reachable << "\n";
  return s.str();
}

std::string cmd_count(const RunConfig& cfg) {
  const SeriesTable t = count_series(build(cfg.b, build_options(cfg)), cfg.h);
  return t.counts[cfg.h].get_str() + "\n";
}

std::string cmd_series(const RunConfig& cfg, bool area) {
  require_format(cfg, {"csv", "json", "text"});
  const Automaton a = build(cfg.b, build_options(cfg));
  const SeriesTable t = area ? count_area_series(a, cfg.h_max) : count_series(a, cfg.h_max);
  std::ostringstream s;
  if (cfg.format == "json") {
    nlohmann::json doc{{"b", cfg.b}};
    std::vector<std::string> counts;
    for (const mpz_class& c : t.counts) counts.push_back(c.get_str());
    doc["counts"] = counts;
    if (area) {
      nlohmann::json rows = nlohmann::json::array();
      for (const Polynomial& p : t.area_counts) {
        std::vector<std::string> coeffs;
        for (const mpz_class& c : p.coefficients()) coeffs.push_back(c.get_str());
        rows.push_back(coeffs);
      }
      doc["area_counts"] = rows;
    }
    s << doc.dump() << "\n";
  } else if (cfg.format == "text") {
    for (std::size_t h = 0; h < t.counts.size(); ++h) {
      s << "h=" << h << " count=" << t.counts[h].get_str();
      if (area) s << " area=" << to_string(t.area_counts[h], "q");
      s << "\n";
    }
  } else if (!area) {
    s << "h,count\n";
    for (std::size_t h = 0; h < t.counts.size(); ++h) s << h << "," << t.counts[h].get_str() << "\n";
  } else {
    s << "h,count,n,coefficient\n";
    for (std::size_t h = 0; h < t.counts.size(); ++h) {
      const auto& coeffs = t.area_counts[h].coefficients();
      for (std::size_t n = 0; n < coeffs.size(); ++n) {
        if (sgn(coeffs[n]) == 0) continue;
        s << h << "," << t.counts[h].get_str() << "," << n << "," << coeffs[n].get_str() << "\n";
      }
    }
  }
  return s.str();
}

template <class GF>
std::string render_gf(const RunConfig& cfg, const GF& gf, const char* name) {
  require_format(cfg, {"text", "json"});
  if (cfg.format == "json") return to_json(gf) + "\n";
  const GfDegrees d = degrees(gf);
  std::ostringstream s;
  s << name << " = " << to_string(gf) << "\n";
  s << "degrees: numerator=" << d.numerator << " denominator=" << d.denominator << " max=" << d.max
    << "\n";
  s << to_json(gf) << "\n";
  return s.str();
}

std::string cmd_gf(const RunConfig& cfg, bool area) {
  GfOptions options;
  options.build = build_options(cfg);
  if (area) return render_gf(cfg, gf_height_area(cfg.b, options), "G'(x,q)");
  return render_gf(cfg, gf_height(cfg.b, options), "G(x)");
}

std::string cmd_verify(const RunConfig& cfg) {
  const Automaton a = build(cfg.b, build_options(cfg));
  const SeriesTable t = count_area_series(a, cfg.h_max);
  OracleOptions oracle;
  oracle.threads = cfg.threads;
  std::ostringstream s;
  bool ok = true;
  for (std::size_t h = 1; h <= cfg.h_max; ++h) {
    s << "b=" << cfg.b << " h=" << h << " ";
    if (static_cast<std::size_t>(cfg.b) * h > static_cast<std::size_t>(oracle.max_cells)) {
      s << "SKIP (beyond the " << oracle.max_cells << "-cell oracle ceiling)\n";
      continue;
    }
    const int hi = static_cast<int>(h);
    const std::map<int, std::uint64_t> histogram = brute_force_area_histogram(cfg.b, hi, oracle);
    std::uint64_t oracle_count = 0;
    std::vector<mpz_class> oracle_areas;
    for (const auto& [n, c] : histogram) {
      oracle_count += c;
      if (oracle_areas.size() <= static_cast<std::size_t>(n)) oracle_areas.resize(static_cast<std::size_t>(n) + 1);
      oracle_areas[static_cast<std::size_t>(n)] = c;
    }
    const bool counts_match = t.counts[h] == oracle_count;
    const bool areas_match = t.area_counts[h] == Polynomial(oracle_areas);
    s << "automaton=" << t.counts[h].get_str() << " oracle=" << oracle_count
      << " areas=" << (areas_match ? "match" : "differ") << " "
      << (counts_match && areas_match ? "PASS" : "FAIL") << "\n";
    ok = ok && counts_match && areas_match;
  }
  s << (ok ? "verify: PASS\n" : "verify: FAIL\n");
  if (!ok) throw Mismatch{s.str()};
  return s.str();
}

std::string cmd_accepts(const RunConfig& cfg) {
  std::ifstream in(cfg.stack_path);
  if (!in) throw InvalidArgument("cannot read stack file '" + cfg.stack_path + "'");
  std::vector<RowConfig> stack;
  std::string line;
  while (std::getline(in, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
    if (line.empty()) continue;
    stack.push_back(RowConfig::parse(line));
  }
  const Automaton a = build(cfg.b, build_options(cfg));
  std::ostringstream s;
  AutomatonState state = AutomatonState::initial(cfg.b);
  s << state.to_string() << "\n";
  for (const RowConfig& row : stack) {
    if (row.width() != cfg.b) throw InvalidArgument("row " + row.to_string() + " does not have width " + std::to_string(cfg.b));
    const auto next = step(state, row);
    if (!next) {
      s << row.to_string() << " -> undefined\n";
      break;
    }
    state = *next;
    s << row.to_string() << " -> " << state.to_string() << "\n";
  }
  const bool accepted = accepts(a, stack);
  s << (accepted ? "accepted" : "rejected") << "\n";
  if (!accepted) throw Mismatch{s.str()};
  return s.str();
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Inscribed polyomino automaton: state counts, series, generating functions"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--b", cfg.b, "Rectangle width")->required()->check(CLI::Range(0, kMaxWidth));
    sub->add_option("--max-states", cfg.max_states, "State ceiling for the automaton build")
        ->envname("INSCRIBED_MAX_STATES")
        ->check(CLI::PositiveNumber);
    sub->add_option("--threads", cfg.threads, "Worker threads")->check(CLI::PositiveNumber);
    sub->add_option("-o,--output", cfg.output, "Write the result to this file");
  };

  struct Command {
    CLI::App* app;
    const char* default_format;
    std::function<std::string()> body;
  };
  std::vector<Command> commands;
  auto command = [&](const char* name, const char* help, const char* default_format,
                     std::function<std::string()> body) {
    CLI::App* sub = app.add_subcommand(name, help);
    // --h is the height flag, so help is long-form only.
    sub->set_help_flag("--help", "Print this help message and exit");
    commands.push_back({sub, default_format, std::move(body)});
    return sub;
  };

  auto* states = command("states", "State counts: formula, full enumeration, reachable", "text",
                         [&] { return cmd_states(cfg); });
  auto* build_cmd = command("build", "Build the automaton and write it as JSON", "json", [&] {
    require_format(cfg, {"json"});
    return serialize(build(cfg.b, build_options(cfg)));
  });
  auto* count = command("count", "Number of inscribed polyominoes of one height", "text",
                        [&] { return cmd_count(cfg); });
  auto* series = command("series", "Counts for heights 0..h-max", "csv", [&] { return cmd_series(cfg, false); });
  auto* area_series = command("area-series", "Counts split by area for heights 0..h-max", "csv",
                              [&] { return cmd_series(cfg, true); });
  auto* gf = command("gf", "Verified rational generating function in x", "text", [&] { return cmd_gf(cfg, false); });
  auto* area_gf = command("area-gf", "Verified generating function in x and q", "text",
                          [&] { return cmd_gf(cfg, true); });
  auto* verify = command("verify", "Compare automaton counts with brute force", "text",
                         [&] { return cmd_verify(cfg); });
  auto* dot = command("export-dot", "Write the automaton as a Graphviz graph", "dot", [&] {
    require_format(cfg, {"dot"});
    return export_dot(build(cfg.b, build_options(cfg)));
  });
  auto* accepts_cmd = command("accepts", "Run one stack through the automaton", "text",
                              [&] { return cmd_accepts(cfg); });

  for (const Command& c : commands) add_common(c.app);
  for (CLI::App* sub : {states, gf, area_gf, series, area_series, build_cmd, dot}) {
    sub->add_option("--format", cfg.format, "Output format");
  }
  count->add_option("--h", cfg.h, "Height")->required();
  series->add_option("--h-max", cfg.h_max, "Largest height")->required();
  area_series->add_option("--h-max", cfg.h_max, "Largest height")->required();
  verify->add_option("--h-max", cfg.h_max, "Largest height")->required();
  accepts_cmd->add_option("--stack", cfg.stack_path, "File with one 0/1 row per line, first row first")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  for (const Command& c : commands) {
    if (!c.app->parsed()) continue;
    if (cfg.format.empty()) cfg.format = c.default_format;
    try {
      if (cfg.b < 1 && c.app != states) throw InvalidArgument("--b must be at least 1 for this command");
      emit(cfg, out, c.body());
      return kOk;
    } catch (const Mismatch& m) {
      emit(cfg, out, m.what);
      err << "error: " << c.app->get_name() << " reported a mismatch\n";
      return kMismatch;
    } catch (const ResourceLimitExceeded& e) {
      err << "error: " << e.what() << "\n";
      return kResourceLimit;
    } catch (const FitError& e) {
      err << "error: " << e.what() << "\n";
      return kMismatch;
    } catch (const std::exception& e) {
      err << "error: " << e.what() << "\n";
      return kUsage;
    }
  }
  return kUsage;
}

}  // namespace inscribed::cli
