#include "hqmm/cli.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "hqmm/alt_quantum.hpp"
#include "hqmm/catalog.hpp"
#include "hqmm/classifier.hpp"
#include "hqmm/model_io.hpp"
#include "hqmm/report_io.hpp"
#include "hqmm/sweep.hpp"

namespace hqmm::cli {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitValidation = 2;
constexpr int kExitConsistency = 3;
constexpr int kExitVerifyFailed = 4;

std::map<std::string, double> parse_params(const std::vector<std::string>& kv) {
  std::map<std::string, double> out;
  for (const std::string& item : kv) {
    const auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0)
      throw std::invalid_argument("--param expects name=value, got '" + item + "'");
    try {
      out[item.substr(0, eq)] = std::stod(item.substr(eq + 1));
    } catch (const std::exception&) {
      throw std::invalid_argument("--param value in '" + item + "' is not a number");
    }
  }
  return out;
}

LogBase parse_base(const std::string& base) {
  if (base == "2") return LogBase::two;
  if (base == "e") return LogBase::e;
  throw std::invalid_argument("--base must be 2 or e");
}

struct ModelFlags {
  std::string catalog_id;
  std::string model_path;
  std::vector<std::string> params;
};

void add_model_flags(CLI::App* cmd, ModelFlags& flags) {
  auto* cat = cmd->add_option("--catalog", flags.catalog_id, "catalog model id");
  auto* mod = cmd->add_option("--model", flags.model_path, "model file (JSON)");
  cat->excludes(mod);
  cmd->add_option("--param", flags.params, "model parameter, name=value (repeatable)");
}

// Either an HMM or a generic quantum model, depending on the source.
struct LoadedModel {
  std::optional<Hmm> hmm;
  std::optional<GenericHqmm> hqmm;
};

LoadedModel load_model(const ModelFlags& flags) {
  LoadedModel out;
  if (!flags.catalog_id.empty()) {
    const catalog::Entry& entry = catalog::find(flags.catalog_id);
    const auto params = parse_params(flags.params);
    if (entry.is_hmm)
      out.hmm = catalog::build_hmm(flags.catalog_id, params);
    else
      out.hqmm = catalog::build_hqmm(flags.catalog_id, params);
  } else if (!flags.model_path.empty()) {
    if (!flags.params.empty())
      throw std::invalid_argument("--param only applies to catalog models");
    if (is_hqmm_file(flags.model_path))
      out.hqmm = load_hqmm(flags.model_path);
    else
      out.hmm = load_hmm(flags.model_path);
  } else {
    throw std::invalid_argument("no model given: use --catalog or --model");
  }
  return out;
}

Hmm require_hmm(LoadedModel&& model, const char* verb) {
  if (!model.hmm)
    throw std::invalid_argument(std::string(verb) +
                                " needs a classical model, not a quantum model file");
  return std::move(*model.hmm);
}

void write_output(const std::string& text, const std::string& out_path,
                  std::ostream& out) {
  if (out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(out_path, std::ios::trunc);
  if (!file) throw std::runtime_error("cannot write '" + out_path + "'");
  file << text;
}

std::string render_symbols(const std::vector<int>& symbols,
                           const std::vector<std::string>& labels) {
  const bool single_char = std::all_of(labels.begin(), labels.end(),
                                       [](const std::string& l) { return l.size() == 1; });
  std::string text;
  for (std::size_t i = 0; i < symbols.size(); ++i) {
    if (i > 0 && !single_char) text += ',';
    text += labels[symbols[i]];
  }
  if (!symbols.empty()) text += '\n';
  return text;
}

// ---- analyze ----

struct AnalyzeFlags {
  ModelFlags model;
  bool json = false;
  std::string base = "2";
  int block_depth = 8;
  bool assert_em = false;
  bool assert_minimal = false;
  std::string out_path;
};

int cmd_analyze(const AnalyzeFlags& flags, std::ostream& out) {
  const Hmm model = require_hmm(load_model(flags.model), "analyze");
  AnalyzeOptions opts;
  opts.base = parse_base(flags.base);
  opts.block_depth = flags.block_depth;
  opts.assert_epsilon_machine = flags.assert_em;
  opts.assert_minimal = flags.assert_minimal;
  const AnalysisReport rep = analyze(model, opts);
  write_output(flags.json ? report_to_json(rep) : report_to_text(rep), flags.out_path,
               out);
  return kExitOk;
}

// ---- sweep ----

struct SweepFlags {
  std::string catalog_id;
  std::vector<std::string> params;
  std::string sweep;    // name=start:stop:step
  std::string columns;  // comma-separated
  std::string out_path;
  bool force = false;
  int jobs = 0;
  bool json = false;
  std::string base = "2";
  int block_depth = 8;
};

SweepSpec parse_sweep_spec(const SweepFlags& flags) {
  SweepSpec spec;
  spec.catalog_id = flags.catalog_id;
  spec.fixed = parse_params(flags.params);
  spec.out_path = flags.out_path;
  spec.force = flags.force;
  spec.jobs = flags.jobs;
  spec.base = parse_base(flags.base);
  spec.block_depth = flags.block_depth;

  const auto eq = flags.sweep.find('=');
  if (eq == std::string::npos)
    throw std::invalid_argument("--sweep expects name=start:stop:step");
  spec.param = flags.sweep.substr(0, eq);
  const std::string range = flags.sweep.substr(eq + 1);
  const auto c1 = range.find(':');
  const auto c2 = c1 == std::string::npos ? std::string::npos : range.find(':', c1 + 1);
  try {
    if (c2 == std::string::npos) throw std::invalid_argument("");
    spec.start = std::stod(range.substr(0, c1));
    spec.stop = std::stod(range.substr(c1 + 1, c2 - c1 - 1));
    spec.step = std::stod(range.substr(c2 + 1));
  } catch (const std::exception&) {
    throw std::invalid_argument("--sweep expects name=start:stop:step");
  }

  std::stringstream cols(flags.columns);
  std::string col;
  while (std::getline(cols, col, ','))
    if (!col.empty()) spec.columns.push_back(col);
  return spec;
}

int cmd_sweep(const SweepFlags& flags, std::ostream& out) {
  const SweepSpec spec = parse_sweep_spec(flags);
  run_sweep(spec);
  if (flags.json) {
    nlohmann::ordered_json j;
    j["out"] = spec.out_path;
    j["rows"] = sweep_grid(spec).size();
    j["columns"] = spec.columns;
    out << j.dump(2) << "\n";
  } else {
    out << "wrote " << sweep_grid(spec).size() << " rows to " << spec.out_path << "\n";
  }
  return kExitOk;
}

// ---- sample ----

struct SampleFlags {
  ModelFlags model;
  long steps = 0;
  std::uint64_t seed = 0;
  bool quantum = false;
  bool json = false;
  std::string out_path;
};

int cmd_sample(const SampleFlags& flags, std::ostream& out) {
  LoadedModel model = load_model(flags.model);

  std::vector<int> symbols;
  std::vector<int> states;
  std::vector<std::string> labels;
  bool have_states = false;
  if (model.hqmm) {
    labels = model.hqmm->symbol_labels;
    symbols = simulate_generic_hqmm(std::move(*model.hqmm), flags.steps, flags.seed);
  } else if (flags.quantum) {
    const QuantumModel qm = induce_quantum_model(*model.hmm);
    labels = qm.symbol_labels;
    symbols = simulate_hqmm(qm, flags.steps, flags.seed);
  } else {
    labels = model.hmm->symbol_labels;
    SampleResult result = sample(*model.hmm, flags.steps, flags.seed);
    symbols = std::move(result.symbols);
    states = std::move(result.states);
    have_states = true;
  }

  if (flags.json) {
    nlohmann::ordered_json j;
    nlohmann::ordered_json syms = nlohmann::ordered_json::array();
    for (int s : symbols) syms.push_back(labels[s]);
    j["symbols"] = std::move(syms);
    if (have_states) {
      nlohmann::ordered_json sts = nlohmann::ordered_json::array();
      for (int s : states) sts.push_back(model.hmm->state_labels[s]);
      j["states"] = std::move(sts);
    }
    write_output(j.dump(2) + "\n", flags.out_path, out);
  } else {
    write_output(render_symbols(symbols, labels), flags.out_path, out);
  }
  return kExitOk;
}

// ---- verify ----

struct VerifyFlags {
  ModelFlags model;
  bool deep = false;
  std::uint64_t seed = 1;
  bool json = false;
  std::string base = "2";
  int block_depth = 8;
};

struct Check {
  std::string name;
  bool pass = false;
  std::string detail;
};

double tv_distance(const std::map<std::string, double>& a,
                   const std::map<std::string, double>& b) {
  double tv = 0.0;
  for (const auto& [w, p] : a) {
    const auto it = b.find(w);
    tv += std::abs(p - (it == b.end() ? 0.0 : it->second));
  }
  for (const auto& [w, p] : b)
    if (!a.contains(w)) tv += p;
  return 0.5 * tv;
}

std::map<std::string, double> block_frequencies(const std::vector<int>& symbols,
                                                int block) {
  std::map<std::string, double> freq;
  const long count = static_cast<long>(symbols.size()) - block + 1;
  for (long t = 0; t < count; ++t) {
    std::string key(block, '\0');
    for (int i = 0; i < block; ++i) key[i] = static_cast<char>(symbols[t + i]);
    freq[key] += 1.0 / count;
  }
  return freq;
}

int cmd_verify(const VerifyFlags& flags, std::ostream& out) {
  const Hmm model = require_hmm(load_model(flags.model), "verify");
  const LogBase base = parse_base(flags.base);
  std::vector<Check> checks;

  const ValidationReport validation = validate(model);
  {
    std::string detail = "no violations";
    if (!validation.clean()) {
      detail.clear();
      for (const Violation& v : validation.violations) {
        if (!detail.empty()) detail += "; ";
        detail += v.to_string();
      }
    }
    checks.push_back({"validation", validation.passed(), detail});
  }

  if (validation.passed()) {
    const double tol = 1e-8;
    const double h_mu = shannon_entropy(model.initial, base);
    const double i_xy = channel_mutual_information(model, base);
    const QuantumModel qm = induce_quantum_model(model, base);

    const int depth = std::min(flags.block_depth, max_curve_depth(model.symbol_count()));
    double max_e = 0.0;
    bool monotone = true;
    if (depth >= 1) {
      const ExcessCurve curve = excess_curve(model, depth, base);
      for (std::size_t k = 0; k < curve.values.size(); ++k) {
        max_e = std::max(max_e, curve.values[k].second);
        if (k > 0 &&
            curve.values[k].second < curve.values[k - 1].second - 10 * kStochTol)
          monotone = false;
      }
    }
    {
      std::ostringstream detail;
      detail << "E_L<=" << format_double(max_e) << " I=" << format_double(i_xy)
             << " C_q=" << format_double(qm.entropy) << " H(mu)=" << format_double(h_mu);
      const bool pass = max_e <= i_xy + tol && i_xy <= qm.entropy + tol &&
                        qm.entropy <= h_mu + tol && monotone;
      checks.push_back({"chain-inequalities", pass, detail.str()});
    }
    {
      const HolevoReport hol = holevo_report(model, qm);
      const bool sign_ok = hol.gap >= -tol;
      const bool equality_matches = hol.commuting == (hol.gap <= 10 * kStochTol);
      std::ostringstream detail;
      detail << "gap=" << format_double(hol.gap)
             << (hol.commuting ? " commuting" : " non-commuting");
      checks.push_back({"holevo-gap", sign_ok && equality_matches, detail.str()});
    }
    {
      bool pass = true;
      std::string detail;
      try {
        const EqualityCase label = equality_case(classify_gram(qm.gram));
        check_case_consistency(label, {h_mu, i_xy, qm.entropy});
        const bool impossible_ok =
            assert_impossible_cases({h_mu, i_xy, qm.entropy}, qm.gram);
        pass = impossible_ok;
        detail = std::string("case ") + case_label(label) +
                 (impossible_ok ? "" : "; impossible-case pattern matched");
      } catch (const ConsistencyError& e) {
        pass = false;
        detail = e.what();
      }
      checks.push_back({"case-consistency", pass, detail});
    }
    if (flags.deep) {
      constexpr long kSteps = 1'000'000;
      constexpr int kBlock = 3;
      const WordDistribution exact = word_distribution(model, kBlock);
      const double tv_classical = tv_distance(
          block_frequencies(sample(model, kSteps, flags.seed).symbols, kBlock),
          exact.probs);
      const double tv_quantum = tv_distance(
          block_frequencies(simulate_hqmm(qm, kSteps, flags.seed + 1), kBlock),
          exact.probs);
      std::ostringstream detail;
      detail << "TV(classical)=" << format_double(tv_classical)
             << " TV(quantum)=" << format_double(tv_quantum) << " at N=" << kSteps
             << ", L=" << kBlock;
      checks.push_back(
          {"simulation-tv", tv_classical <= 0.01 && tv_quantum <= 0.01, detail.str()});
    }
  }

  bool all_pass = true;
  for (const Check& c : checks) all_pass = all_pass && c.pass;

  if (flags.json) {
    nlohmann::ordered_json j;
    j["model"] = model.name;
    j["pass"] = all_pass;
    nlohmann::ordered_json list = nlohmann::ordered_json::array();
    for (const Check& c : checks)
      list.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    j["checks"] = std::move(list);
    out << j.dump(2) << "\n";
  } else {
    for (const Check& c : checks)
      out << (c.pass ? "PASS" : "FAIL") << "  " << c.name << "  (" << c.detail << ")\n";
  }
  if (all_pass) return kExitOk;
  return validation.passed() ? kExitVerifyFailed : kExitValidation;
}

// ---- catalog ----

int cmd_catalog_list(bool json, std::ostream& out) {
  if (json) {
    nlohmann::ordered_json list = nlohmann::ordered_json::array();
    for (const catalog::Entry& e : catalog::entries()) {
      nlohmann::ordered_json j;
      j["id"] = e.id;
      j["kind"] = e.is_hmm ? "hmm" : "hqmm";
      j["summary"] = e.summary;
      nlohmann::ordered_json params = nlohmann::ordered_json::array();
      for (const catalog::ParamSpec& p : e.params)
        params.push_back({{"name", p.name},
                          {"lo", p.lo},
                          {"hi", p.hi},
                          {"lo_open", p.lo_open},
                          {"default", p.default_value}});
      j["params"] = std::move(params);
      list.push_back(std::move(j));
    }
    out << list.dump(2) << "\n";
    return kExitOk;
  }
  for (const catalog::Entry& e : catalog::entries()) {
    out << e.id;
    if (!e.params.empty()) {
      out << " (";
      for (std::size_t i = 0; i < e.params.size(); ++i) {
        const auto& p = e.params[i];
        if (i) out << ", ";
        out << p.name << " in " << (p.lo_open ? "(" : "[") << format_double(p.lo) << ", "
            << format_double(p.hi) << "]";
      }
      out << ")";
    }
    out << "\n    " << e.summary << "\n";
  }
  return kExitOk;
}

int cmd_catalog_emit(const std::string& id, const std::vector<std::string>& params,
                     const std::string& out_path, std::ostream& out) {
  const catalog::Entry& entry = catalog::find(id);
  const auto parsed = parse_params(params);
  const std::string text = entry.is_hmm ? hmm_to_json(catalog::build_hmm(id, parsed))
                                        : hqmm_to_json(catalog::build_hqmm(id, parsed));
  write_output(text, out_path, out);
  return kExitOk;
}

}  // namespace

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"entropy analysis of transition-emitting hidden Markov models and "
               "their induced quantum models"};
  app.name("hqmm");
  app.require_subcommand(1);

  AnalyzeFlags analyze_flags;
  auto* analyze_cmd = app.add_subcommand("analyze", "full report for one model");
  add_model_flags(analyze_cmd, analyze_flags.model);
  analyze_cmd->add_flag("--json", analyze_flags.json, "machine-readable output");
  analyze_cmd->add_option("--base", analyze_flags.base, "log base (2 or e)");
  analyze_cmd->add_option("--block-depth", analyze_flags.block_depth,
                          "excess-curve depth");
  analyze_cmd->add_flag("--assert-epsilon-machine", analyze_flags.assert_em,
                        "caller asserts the model is an epsilon-machine");
  analyze_cmd->add_flag("--assert-minimal", analyze_flags.assert_minimal,
                        "caller asserts the model has minimal state entropy");
  analyze_cmd->add_option("--out", analyze_flags.out_path, "write report here");

  SweepFlags sweep_flags;
  auto* sweep_cmd = app.add_subcommand("sweep", "parameter sweep to CSV");
  sweep_cmd->add_option("--catalog", sweep_flags.catalog_id, "catalog model id")
      ->required();
  sweep_cmd->add_option("--param", sweep_flags.params, "fixed parameter, name=value");
  sweep_cmd->add_option("--sweep", sweep_flags.sweep, "name=start:stop:step")
      ->required();
  sweep_cmd->add_option("--columns", sweep_flags.columns, "comma-separated columns")
      ->required();
  sweep_cmd->add_option("--out", sweep_flags.out_path, "CSV path")->required();
  sweep_cmd->add_flag("--force", sweep_flags.force, "overwrite existing output");
  sweep_cmd->add_option("--jobs", sweep_flags.jobs, "parallel workers");
  sweep_cmd->add_flag("--json", sweep_flags.json, "summary as JSON");
  sweep_cmd->add_option("--base", sweep_flags.base, "log base (2 or e)");
  sweep_cmd->add_option("--block-depth", sweep_flags.block_depth, "excess-curve depth");

  SampleFlags sample_flags;
  auto* sample_cmd = app.add_subcommand("sample", "emit a sampled symbol stream");
  add_model_flags(sample_cmd, sample_flags.model);
  sample_cmd->add_option("--steps", sample_flags.steps, "number of symbols")
      ->required()
      ->check(CLI::NonNegativeNumber);
  sample_cmd->add_option("--seed", sample_flags.seed, "RNG seed");
  sample_cmd->add_flag("--quantum", sample_flags.quantum,
                       "simulate the induced quantum model");
  sample_cmd->add_flag("--json", sample_flags.json, "machine-readable output");
  sample_cmd->add_option("--out", sample_flags.out_path, "write stream here");

  VerifyFlags verify_flags;
  auto* verify_cmd = app.add_subcommand("verify", "run the invariant battery");
  add_model_flags(verify_cmd, verify_flags.model);
  verify_cmd->add_flag("--deep", verify_flags.deep,
                       "also compare simulations against exact word statistics");
  verify_cmd->add_option("--seed", verify_flags.seed, "RNG seed for --deep");
  verify_cmd->add_flag("--json", verify_flags.json, "machine-readable output");
  verify_cmd->add_option("--base", verify_flags.base, "log base (2 or e)");
  verify_cmd->add_option("--block-depth", verify_flags.block_depth,
                         "excess-curve depth");

  auto* catalog_cmd = app.add_subcommand("catalog", "inspect built-in models");
  catalog_cmd->require_subcommand(1);
  bool catalog_json = false;
  auto* list_cmd = catalog_cmd->add_subcommand("list", "list catalog entries");
  list_cmd->add_flag("--json", catalog_json, "machine-readable output");
  std::string emit_id, emit_out;
  std::vector<std::string> emit_params;
  auto* emit_cmd = catalog_cmd->add_subcommand("emit", "write a model file");
  emit_cmd->add_option("id", emit_id, "catalog model id")->required();
  emit_cmd->add_option("--param", emit_params, "model parameter, name=value");
  emit_cmd->add_option("--out", emit_out, "write model here");

  try {
    std::reverse(args.begin(), args.end());
    app.parse(std::move(args));
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  try {
    if (*analyze_cmd) return cmd_analyze(analyze_flags, out);
    if (*sweep_cmd) return cmd_sweep(sweep_flags, out);
    if (*sample_cmd) return cmd_sample(sample_flags, out);
    if (*verify_cmd) return cmd_verify(verify_flags, out);
    if (*list_cmd) return cmd_catalog_list(catalog_json, out);
    if (*emit_cmd) return cmd_catalog_emit(emit_id, emit_params, emit_out, out);
  } catch (const ConsistencyError& e) {
    err << "internal consistency error: " << e.what() << "\n";
    return kExitConsistency;
  } catch (const ValidationError& e) {
    err << "validation failed: " << e.what() << "\n";
    return kExitValidation;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

int run(int argc, char** argv) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(std::move(args));
}

}  // namespace hqmm::cli
