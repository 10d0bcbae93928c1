#include "hqmm/report_io.hpp"

#include <charconv>
#include <iomanip>
#include <sstream>

#include <json.hpp>

namespace hqmm {

std::string format_double(double x) {
  char buf[40];
  const auto res = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, res.ptr);
}

std::string report_to_json(const AnalysisReport& rep) {
  using ordered = nlohmann::ordered_json;
  ordered j;
  j["model"] = rep.model_name;
  j["params"] = rep.params;
  j["states"] = rep.n;
  j["symbols"] = rep.m;
  j["log_base"] = log_base_name(rep.base);
  j["asserted_minimal"] = rep.asserted_minimal;
  j["asserted_epsilon_machine"] = rep.asserted_epsilon_machine;
  j["h_mu"] = rep.h_mu;
  j["i_xy"] = rep.i_xy;
  j["c_q"] = rep.c_q;
  j["c_q_diagonal"] = rep.c_q_diagonal;
  if (rep.excess_exact) j["excess_entropy"] = *rep.excess_exact;
  if (rep.curve) {
    ordered curve;
    curve["depth"] = rep.curve->values.size();
    curve["clamped"] = rep.curve_clamped;
    ordered entries = ordered::array();
    for (const auto& [l, e] : rep.curve->values) entries.push_back(ordered::array({l, e}));
    curve["entries"] = std::move(entries);
    curve["last"] = rep.curve->last();
    curve["last_increment"] = rep.curve->last_increment();
    j["excess_curve"] = std::move(curve);
  }
  j["holevo"] = {{"lhs", rep.holevo.lhs},
                 {"rhs", rep.holevo.rhs},
                 {"gap", rep.holevo.gap},
                 {"commuting", rep.holevo.commuting}};
  j["gram_class"] = gram_class_name(rep.gram_class);
  j["case"] = case_label(rep.label);
  ordered witnesses = ordered::array();
  for (const MergeWitness& w : rep.witnesses)
    witnesses.push_back({{"from_a", rep.state_labels[w.from_a]},
                         {"from_b", rep.state_labels[w.from_b]},
                         {"to", rep.state_labels[w.to]},
                         {"symbol", rep.symbol_labels[w.symbol]}});
  j["merging_witnesses"] = std::move(witnesses);
  j["unifilar"] = rep.unifilar;
  j["warnings"] = rep.warnings;
  return j.dump(2) + "\n";
}

std::string report_to_text(const AnalysisReport& rep) {
  std::ostringstream os;
  os << "model: " << rep.model_name;
  if (!rep.params.empty()) {
    os << " (";
    bool first = true;
    for (const auto& [k, v] : rep.params) {
      if (!first) os << ", ";
      os << k << "=" << format_double(v);
      first = false;
    }
    os << ")";
  }
  os << "\n";
  os << "states: " << rep.n << "   symbols: " << rep.m
     << "   log base: " << log_base_name(rep.base) << "\n\n";

  const char* h_label = rep.asserted_minimal       ? "C_Cl   (asserted minimal)"
                        : rep.asserted_epsilon_machine ? "C_eps  (asserted eps-machine)"
                                                       : "H(mu)";
  auto line = [&](const char* name, double value) {
    os << "  " << std::left << std::setw(30) << name << format_double(value) << "\n";
  };
  line(h_label, rep.h_mu);
  line("I(X;Y)", rep.i_xy);
  line("C_q (induced model)", rep.c_q);
  line("C_q~ (diagonal model)", rep.c_q_diagonal);
  if (rep.excess_exact) line("E (exact, eps-machine)", *rep.excess_exact);
  os << "\n";

  os << "  holevo gap: " << format_double(rep.holevo.gap)
     << (rep.holevo.commuting ? "  (commuting states)" : "") << "\n";
  os << "  gram class: " << gram_class_name(rep.gram_class) << "   case: "
     << case_label(rep.label) << "\n";
  os << "  unifilar: " << (rep.unifilar ? "yes" : "no") << "\n";

  if (!rep.witnesses.empty()) {
    os << "  merging witnesses (" << rep.witnesses.size() << "):";
    std::size_t shown = 0;
    for (const MergeWitness& w : rep.witnesses) {
      if (shown++ == 8) {
        os << " ...";
        break;
      }
      os << " (" << rep.state_labels[w.from_a] << "," << rep.state_labels[w.from_b]
         << ")->" << rep.state_labels[w.to] << "|" << rep.symbol_labels[w.symbol];
    }
    os << "\n";
  }

  if (rep.curve) {
    os << "\n  excess curve (E_L";
    if (rep.curve_clamped) os << ", depth clamped";
    os << "):\n";
    for (const auto& [l, e] : rep.curve->values)
      os << "    L=" << std::setw(2) << l << "  " << format_double(e) << "\n";
    os << "    last increment " << format_double(rep.curve->last_increment()) << "\n";
  }

  for (const std::string& w : rep.warnings) os << "  note: " << w << "\n";
  return os.str();
}

}  // namespace hqmm
