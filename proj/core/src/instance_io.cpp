#include "csmd/instance_io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string_view>
#include <vector>

#include "csmd/error.hpp"

namespace csmd {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

std::string_view strip_comment(std::string_view s) {
  const auto hash = s.find('#');
  return hash == std::string_view::npos ? s : s.substr(0, hash);
}

std::optional<double> to_double(std::string_view s) {
  s = trim(s);
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty()) return std::nullopt;
  return value;
}

struct Entry {
  std::string value;
  std::size_t line = 0;
};

struct RawInstance {
  std::map<std::string, Entry> instance;
  std::map<std::string, Entry> env;
  std::vector<std::pair<std::string, Entry>> pmf_rows;
};

RawInstance read_sections(std::istream& in) {
  RawInstance raw;
  std::map<std::string, Entry>* section = nullptr;
  bool in_env = false;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    const std::string_view text = trim(strip_comment(line));
    if (text.empty()) continue;
    if (text.front() == '[') {
      if (text == "[instance]") {
        section = &raw.instance;
        in_env = false;
      } else if (text == "[env]") {
        section = &raw.env;
        in_env = true;
      } else {
        throw ParseError("unknown section " + std::string(text), number);
      }
      continue;
    }
    if (section == nullptr) throw ParseError("content before the first section", number);
    const auto eq = text.find('=');
    if (eq == std::string_view::npos) {
      if (in_env) {
        const auto space = text.find_first_of(" \t");
        if (space == std::string_view::npos) {
          throw ParseError("expected 'bitstring probability'", number);
        }
        raw.pmf_rows.emplace_back(std::string(trim(text.substr(0, space))),
                                  Entry{std::string(trim(text.substr(space))), number});
        continue;
      }
      throw ParseError("expected 'key = value'", number);
    }
    const std::string key(trim(text.substr(0, eq)));
    if (key.empty()) throw ParseError("missing key before '='", number);
    if (section->count(key)) throw ParseError("duplicate key '" + key + "'", number);
    (*section)[key] = Entry{std::string(trim(text.substr(eq + 1))), number};
  }
  return raw;
}

const Entry& require(const std::map<std::string, Entry>& sec, const std::string& section,
                     const std::string& key) {
  auto it = sec.find(key);
  if (it == sec.end()) throw ParseError("[" + section + "] is missing required key '" + key + "'", 0);
  return it->second;
}

double parse_number(const Entry& e, const std::string& key) {
  auto v = to_double(e.value);
  if (!v) throw ParseError("'" + key + "' is not a number: " + e.value, e.line);
  return *v;
}

std::vector<double> parse_list(const Entry& e, const std::string& key) {
  std::vector<double> out;
  std::string_view rest = e.value;
  std::size_t field = 0;
  while (true) {
    ++field;
    const auto comma = rest.find(',');
    const std::string_view item = trim(rest.substr(0, comma));
    auto v = to_double(item);
    if (!v) {
      throw ParseError("'" + key + "' entry " + std::to_string(field) + " is not a number: '" +
                           std::string(item) + "'",
                       e.line);
    }
    out.push_back(*v);
    if (comma == std::string_view::npos) break;
    rest.remove_prefix(comma + 1);
  }
  return out;
}

bool parse_bool(const Entry& e, const std::string& key) {
  if (e.value == "true" || e.value == "1" || e.value == "yes") return true;
  if (e.value == "false" || e.value == "0" || e.value == "no") return false;
  throw ParseError("'" + key + "' must be true or false, got '" + e.value + "'", e.line);
}

std::size_t parse_count(const Entry& e, const std::string& key) {
  std::size_t v = 0;
  const std::string_view s = e.value;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty()) {
    throw ParseError("'" + key + "' must be a positive integer, got '" + e.value + "'", e.line);
  }
  return v;
}

JointPmf build_pmf(const RawInstance& raw, std::size_t outputs) {
  if (outputs > 24) throw ConfigError("joint PMF with " + std::to_string(outputs) + " outputs is too large");
  JointPmf pmf;
  pmf.outputs = outputs;
  pmf.probability.assign(std::size_t{1} << (outputs + 1), 0.0);
  std::vector<bool> seen(pmf.probability.size(), false);
  for (const auto& [bits, entry] : raw.pmf_rows) {
    if (bits.size() != outputs + 1) {
      throw ParseError("PMF bitstring '" + bits + "' must have " + std::to_string(outputs + 1) +
                           " digits (y then one per arm output)",
                       entry.line);
    }
    std::size_t idx = 0;
    for (std::size_t b = 0; b < bits.size(); ++b) {
      if (bits[b] != '0' && bits[b] != '1') {
        throw ParseError("PMF bitstring '" + bits + "' has a non-binary digit", entry.line, b + 1);
      }
      if (bits[b] == '1') idx |= std::size_t{1} << b;
    }
    if (seen[idx]) throw ParseError("PMF row '" + bits + "' listed twice", entry.line);
    seen[idx] = true;
    pmf.probability[idx] = parse_number(entry, "pmf " + bits);
  }
  double total = 0.0;
  for (double p : pmf.probability) total += p;
  if (std::abs(total - 1.0) > 1e-12) {
    std::ostringstream os;
    os.precision(17);
    os << "PMF probabilities sum to " << total << " (deficit " << 1.0 - total
       << "); they must sum to 1 within 1e-12";
    throw ConfigError(os.str());
  }
  return pmf;
}

}  // namespace

Instance parse_instance(std::istream& in, const std::filesystem::path& base_dir,
                        const std::string& default_name) {
  const RawInstance raw = read_sections(in);
  if (raw.instance.empty()) throw ParseError("missing [instance] section", 0);
  if (raw.env.empty() && raw.pmf_rows.empty()) throw ParseError("missing [env] section", 0);

  Instance inst;
  auto name = raw.instance.find("name");
  inst.name = name != raw.instance.end() ? name->second.value : default_name;

  const Entry& k = require(raw.instance, "instance", "K");
  inst.features = parse_count(k, "K");
  if (inst.features == 0) throw ParseError("'K' must be at least 1", k.line);

  auto mode_it = raw.instance.find("mode");
  const Entry mode = mode_it != raw.instance.end() ? mode_it->second : Entry{"cascade", 0};
  if (mode.value == "cascade") {
    inst.mode = Mode::cascade;
  } else if (mode.value == "combinatorial") {
    inst.mode = Mode::combinatorial;
  } else {
    throw ParseError("'mode' must be cascade or combinatorial, got '" + mode.value + "'",
                     mode.line);
  }

  const Entry& costs = require(raw.instance, "instance", "costs");
  std::vector<double> cost_values = parse_list(costs, "costs");
  if (cost_values.size() != inst.features) {
    throw ParseError("'costs' has " + std::to_string(cost_values.size()) + " entries, K = " +
                         std::to_string(inst.features),
                     costs.line);
  }
  bool cumulative = false;
  if (auto it = raw.instance.find("costs_are_cumulative"); it != raw.instance.end()) {
    cumulative = parse_bool(it->second, "costs_are_cumulative");
    if (cumulative && inst.mode == Mode::combinatorial) {
      throw ParseError("cumulative costs are only meaningful in cascade mode", it->second.line);
    }
  }
  if (cumulative) {
    try {
      inst.feature_costs = cost_increments(cost_values);
    } catch (const ConfigError& e) {
      throw ParseError(e.what(), costs.line);
    }
  } else {
    inst.feature_costs = std::move(cost_values);
  }

  const Entry& lambda = require(raw.instance, "instance", "lambda");
  inst.lambda = parse_list(lambda, "lambda");

  const std::size_t outputs = arm_count(inst);
  const Entry& variant = require(raw.env, "env", "variant");
  if (variant.value == "pmf") {
    inst.env = build_pmf(raw, outputs);
  } else if (!raw.pmf_rows.empty()) {
    throw ParseError("PMF rows are only allowed with variant = pmf", raw.pmf_rows.front().second.line);
  } else if (variant.value == "independent") {
    IndependentError ie;
    if (auto it = raw.env.find("p0"); it != raw.env.end()) ie.base_rate = parse_number(it->second, "p0");
    const Entry& rates = require(raw.env, "env", "rates");
    ie.error_rates = parse_list(rates, "rates");
    if (ie.error_rates.size() != outputs) {
      throw ParseError("'rates' has " + std::to_string(ie.error_rates.size()) +
                           " entries, expected one per arm (" + std::to_string(outputs) + ")",
                       rates.line);
    }
    inst.env = std::move(ie);
  } else if (variant.value == "trace") {
    const Entry& path = require(raw.env, "env", "trace_path");
    std::filesystem::path trace_path(path.value);
    if (trace_path.is_relative()) trace_path = base_dir / trace_path;
    Trace trace;
    try {
      trace = load_trace(trace_path);
    } catch (const ConfigError& e) {
      // Already attributed to the trace file; keep it from being re-attributed here.
      throw ConfigError(std::string("trace_path (line ") + std::to_string(path.line) + "): " + e.what());
    }
    if (auto it = raw.env.find("resample"); it != raw.env.end()) {
      trace.resample = parse_bool(it->second, "resample");
    }
    inst.env = std::move(trace);
  } else {
    throw ParseError("'variant' must be pmf, independent or trace, got '" + variant.value + "'",
                     variant.line);
  }

  validate(inst);
  return inst;
}

Instance load_instance(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open instance file " + path.string());
  try {
    return parse_instance(in, path.parent_path(), path.stem().string());
  } catch (const ParseError& e) {
    throw e.in_file(path.string());
  } catch (const ConfigError& e) {
    throw ConfigError(path.string() + ": " + e.what());
  }
}

Trace parse_trace(std::istream& in, const std::string& source) {
  Trace trace;
  trace.source = source;
  std::string line;
  std::size_t number = 0;
  bool have_header = false;
  while (std::getline(in, line)) {
    ++number;
    const std::string_view text = trim(strip_comment(line));
    if (text.empty()) continue;
    if (!have_header) {
      std::vector<std::string> names;
      std::string_view rest = text;
      while (true) {
        const auto comma = rest.find(',');
        names.emplace_back(trim(rest.substr(0, comma)));
        if (comma == std::string_view::npos) break;
        rest.remove_prefix(comma + 1);
      }
      if (names.size() < 2 || names[0] != "Y") {
        throw ParseError("trace header must be 'Y,Y1,...,Yn'", number, 1);
      }
      for (std::size_t c = 1; c < names.size(); ++c) {
        if (names[c] != "Y" + std::to_string(c)) {
          throw ParseError("trace header column should be 'Y" + std::to_string(c) + "', got '" +
                               names[c] + "'",
                           number, c + 1);
        }
      }
      trace.outputs = names.size() - 1;
      have_header = true;
      continue;
    }
    std::string_view rest = text;
    std::size_t column = 0;
    while (true) {
      ++column;
      const auto comma = rest.find(',');
      const std::string_view cell = trim(rest.substr(0, comma));
      if (column > trace.outputs + 1) {
        throw ParseError("row has more than " + std::to_string(trace.outputs + 1) + " columns",
                         number, column);
      }
      if (cell != "0" && cell != "1") {
        throw ParseError("non-binary value '" + std::string(cell) + "'", number, column);
      }
      trace.cells.push_back(cell == "1" ? 1 : 0);
      if (comma == std::string_view::npos) break;
      rest.remove_prefix(comma + 1);
    }
    if (column != trace.outputs + 1) {
      throw ParseError("row has " + std::to_string(column) + " columns, expected " +
                           std::to_string(trace.outputs + 1),
                       number, column);
    }
  }
  if (!have_header) throw ParseError(source + ": empty trace", 0);
  if (trace.rows() == 0) throw ParseError(source + ": trace has a header but no rows", 0);
  return trace;
}

Trace load_trace(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open trace file " + path.string());
  try {
    return parse_trace(in, path.string());
  } catch (const ParseError& e) {
    throw e.in_file(path.string());
  }
}

namespace {

// Plain decimals read better in hand-edited files than the shortest form's exponents.
std::string format_value(double v) {
  if (v == 0.0) return "0";
  char buf[128];
  const double mag = v < 0 ? -v : v;
  const auto fmt = mag >= 1e-6 && mag < 1e15 ? std::chars_format::fixed : std::chars_format::general;
  const auto res = std::to_chars(buf, buf + sizeof buf, v, fmt);
  return std::string(buf, res.ptr);
}


void write_list(std::ostream& out, const std::vector<double>& values) {
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out << ", ";
    out << format_value(values[i]);
  }
}

}  // namespace

void write_instance(std::ostream& out, const Instance& instance, const WriteOptions& options) {
  if (!options.header.empty()) {
    std::istringstream lines(options.header);
    std::string line;
    while (std::getline(lines, line)) out << "# " << line << '\n';
    out << '\n';
  }
  const bool cumulative = options.cumulative_costs && instance.mode == Mode::cascade;
  out << "[instance]\n";
  out << "name = " << instance.name << '\n';
  out << "K = " << instance.features << '\n';
  out << "mode = " << to_string(instance.mode) << '\n';
  out << "costs = ";
  write_list(out, cumulative ? cumulative_costs(instance.feature_costs) : instance.feature_costs);
  out << '\n';
  out << "costs_are_cumulative = " << (cumulative ? "true" : "false") << '\n';
  out << "lambda = ";
  write_list(out, instance.lambda);
  out << "\n\n[env]\n";

  if (const auto* ie = std::get_if<IndependentError>(&instance.env)) {
    out << "variant = independent\n";
    out << "p0 = " << format_value(ie->base_rate) << '\n';
    out << "rates = ";
    write_list(out, ie->error_rates);
    out << '\n';
  } else if (const auto* pmf = std::get_if<JointPmf>(&instance.env)) {
    out << "variant = pmf\n";
    for (std::size_t idx = 0; idx < pmf->probability.size(); ++idx) {
      if (pmf->probability[idx] <= 0.0) continue;
      for (std::size_t b = 0; b <= pmf->outputs; ++b) out << (((idx >> b) & 1u) ? '1' : '0');
      out << ' ' << format_value(pmf->probability[idx]) << '\n';
    }
  } else if (const auto* trace = std::get_if<Trace>(&instance.env)) {
    out << "variant = trace\n";
    out << "trace_path = " << (options.trace_path.empty() ? trace->source : options.trace_path)
        << '\n';
    out << "resample = " << (trace->resample ? "true" : "false") << '\n';
  }
}

void write_trace(std::ostream& out, const Trace& trace) {
  out << 'Y';
  for (std::size_t c = 1; c <= trace.outputs; ++c) out << ",Y" << c;
  out << '\n';
  for (std::size_t r = 0; r < trace.rows(); ++r) {
    const std::uint8_t* row = trace.row(r);
    for (std::size_t c = 0; c <= trace.outputs; ++c) {
      if (c) out << ',';
      out << static_cast<int>(row[c]);
    }
    out << '\n';
  }
}

}  // namespace csmd
