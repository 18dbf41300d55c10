#include "machfvm/config.hpp"

#include <charconv>
#include <cstdlib>
#include <string>

#include "machfvm/errors.hpp"

namespace machfvm {

const char* to_string(Command c) {
  switch (c) {
    case Command::Solve: return "solve";
    case Command::Study: return "study";
    case Command::Truncation: return "truncation";
    case Command::Diagnostics: return "diagnostics";
  }
  return "?";
}

Command command_from_string(std::string_view s) {
  if (s == "solve") return Command::Solve;
  if (s == "study") return Command::Study;
  if (s == "truncation") return Command::Truncation;
  if (s == "diagnostics") return Command::Diagnostics;
  throw ConfigError("unknown command: " + std::string(s));
}

AverageStrategy strategy_from_string(std::string_view s) {
  if (s == "arithmetic") return AverageStrategy::Arithmetic;
  if (s == "harmonic") return AverageStrategy::Harmonic;
  throw ConfigError("unknown strategy: " + std::string(s));
}

SolverKind solver_from_string(std::string_view s) {
  if (s == "cg") return SolverKind::Cg;
  if (s == "dst") return SolverKind::DstDirect;
  throw ConfigError("unknown solver: " + std::string(s));
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) {
    s.remove_prefix(1);
  }
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

double parse_double(std::string_view key, std::string_view s) {
  const std::string str(s);
  char* end = nullptr;
  const double v = std::strtod(str.c_str(), &end);
  if (end == str.c_str() || *end != '\0') {
    throw ConfigError("invalid number for key " + std::string(key) + ": " + str);
  }
  return v;
}

int parse_int(std::string_view key, std::string_view s) {
  int v = 0;
  const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size()) {
    throw ConfigError("invalid integer for key " + std::string(key) + ": " + std::string(s));
  }
  return v;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  while (pos <= s.size()) {
    const std::size_t next = s.find(sep, pos);
    if (next == std::string_view::npos) {
      out.push_back(trim(s.substr(pos)));
      break;
    }
    out.push_back(trim(s.substr(pos, next - pos)));
    pos = next + 1;
  }
  return out;
}

void set_key(RunConfig& cfg, std::string_view key, std::string_view value) {
  if (key == "command") {
    cfg.command = command_from_string(value);
  } else if (key == "example") {
    if (value == "custom") {
      cfg.example = 0;
    } else if (value == "1" || value == "2") {
      cfg.example = parse_int(key, value);
    } else {
      throw ConfigError("example must be 1, 2, or custom; got " + std::string(value));
    }
  } else if (key == "kappa_minus") {
    const double v = parse_double(key, value);
    if (!(v >= 1.0)) throw ConfigError("kappa_minus must be >= 1");
    cfg.kappa_minus = v;
  } else if (key == "strategy") {
    cfg.strategy = strategy_from_string(value);
  } else if (key == "solver") {
    cfg.solver = solver_from_string(value);
  } else if (key == "Ns") {
    cfg.ns = parse_n_list(value);
  } else if (key == "tol") {
    const double v = parse_double(key, value);
    if (!(v > 0.0)) throw ConfigError("tol must be positive");
    cfg.tol = v;
  } else if (key == "out") {
    cfg.out = std::string(value);
  } else if (key == "subdomain") {
    const auto parts = split(value, ',');
    if (parts.size() != 5) {
      throw ConfigError("subdomain expects x0,y0,x1,y1,kappa; got " + std::string(value));
    }
    Subdomain s;
    s.region.x0 = parse_double(key, parts[0]);
    s.region.y0 = parse_double(key, parts[1]);
    s.region.x1 = parse_double(key, parts[2]);
    s.region.y1 = parse_double(key, parts[3]);
    s.kappa = parse_double(key, parts[4]);
    if (!(s.kappa > 0.0)) throw ConfigError("subdomain kappa must be positive");
    cfg.subdomains.push_back(s);
  } else if (key == "source_constant") {
    cfg.source_constant = parse_double(key, value);
  } else {
    throw ConfigError("unknown key: " + std::string(key));
  }
}

}  // namespace

std::vector<int> parse_n_list(std::string_view s) {
  std::vector<int> ns;
  for (const auto part : split(s, ',')) {
    if (part.empty()) throw ConfigError("empty entry in Ns list");
    const int n = parse_int("Ns", part);
    if (n < 3) throw ConfigError("N must be >= 3, got " + std::string(part));
    if (n % 2 == 0) throw ConfigError("N must be odd, got " + std::string(part));
    ns.push_back(n);
  }
  if (ns.empty()) throw ConfigError("Ns list is empty");
  return ns;
}

RunConfig parse_config_partial(std::string_view text) {
  RunConfig cfg;
  bool in_run = false;
  bool seen_run = false;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t next = text.find('\n', pos);
    std::string_view line = next == std::string_view::npos ? text.substr(pos)
                                                           : text.substr(pos, next - pos);
    pos = next == std::string_view::npos ? text.size() + 1 : next + 1;
    line = trim(line);
    if (line.empty() || line.front() == '#') continue;
    if (line.front() == '[') {
      if (line == "[run]") {
        if (seen_run) throw ConfigError("duplicate [run] section");
        in_run = true;
        seen_run = true;
        continue;
      }
      throw ConfigError("unknown section: " + std::string(line));
    }
    const std::size_t eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError("expected key=value, got: " + std::string(line));
    }
    if (!in_run) {
      throw ConfigError("key outside the [run] section: " + std::string(line.substr(0, eq)));
    }
    set_key(cfg, trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
  }
  if (!seen_run) throw ConfigError("missing [run] section");
  return cfg;
}

RunConfig merge_config(const RunConfig& file, const RunConfig& flags) {
  RunConfig out = file;
  if (flags.command) out.command = flags.command;
  if (flags.example) out.example = flags.example;
  if (flags.kappa_minus) out.kappa_minus = flags.kappa_minus;
  if (flags.strategy) out.strategy = flags.strategy;
  if (flags.solver) out.solver = flags.solver;
  if (!flags.ns.empty()) out.ns = flags.ns;
  if (flags.tol) out.tol = flags.tol;
  if (flags.out) out.out = flags.out;
  if (!flags.subdomains.empty()) out.subdomains = flags.subdomains;
  if (flags.source_constant) out.source_constant = flags.source_constant;
  return out;
}

void validate_config(RunConfig& config) {
  if (!config.command) throw ConfigError("missing required key: command");
  const Command cmd = *config.command;

  if (cmd != Command::Diagnostics && !config.example) {
    throw ConfigError("missing required key: example");
  }
  const bool custom = config.example && *config.example == 0;

  if (custom) {
    if (cmd != Command::Solve) {
      throw ConfigError("example=custom supports command=solve only");
    }
    if (config.subdomains.empty()) {
      throw ConfigError("example=custom requires at least one subdomain key");
    }
    if (config.solver && *config.solver == SolverKind::DstDirect) {
      throw ConfigError("solver=dst requires the simplified model; use solver=cg for custom runs");
    }
    config.solver = SolverKind::Cg;
  } else if (!config.subdomains.empty()) {
    throw ConfigError("subdomain keys are only valid with example=custom");
  }

  if (!config.kappa_minus) {
    if (config.example && *config.example == 1) {
      config.kappa_minus = 1e4;
    } else if (config.example && *config.example == 2) {
      config.kappa_minus = 1e6;
    } else if (cmd == Command::Diagnostics) {
      throw ConfigError("missing required key: kappa_minus");
    }
  }

  if (!config.strategy) {
    if (cmd == Command::Diagnostics) {
      config.strategy = AverageStrategy::Harmonic;
    } else if (!custom) {
      throw ConfigError("missing required key: strategy");
    }
  }

  if (config.ns.empty()) throw ConfigError("missing required key: Ns");
  if (cmd != Command::Study && config.ns.size() != 1) {
    throw ConfigError(std::string(to_string(cmd)) + " expects a single N");
  }
  if (cmd == Command::Study) {
    for (std::size_t t = 1; t < config.ns.size(); ++t) {
      if (config.ns[t] != 2 * config.ns[t - 1] + 1) {
        throw ConfigError("study requires the refinement chain N -> 2N+1");
      }
    }
  }

  if (!config.solver) config.solver = SolverKind::DstDirect;
  if (!config.tol) config.tol = 1e-12;
  if (!config.out) config.out = std::string(to_string(cmd)) + ".csv";
  if (!config.source_constant) config.source_constant = 1.0;
}

RunConfig parse_config(std::string_view text) {
  RunConfig cfg = parse_config_partial(text);
  validate_config(cfg);
  return cfg;
}

}  // namespace machfvm
