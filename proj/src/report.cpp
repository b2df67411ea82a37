#include "iq/report.hpp"

#include <algorithm>
#include <fstream>
#include <future>
#include <numeric>
#include <ostream>
#include <sstream>

#include "iq/errors.hpp"
#include "iq/verification.hpp"

namespace iq {
namespace {

using nlohmann::ordered_json;

ordered_json json_int(const Int& v) {
  if (v.fits_slong_p()) return ordered_json(static_cast<std::int64_t>(v.get_si()));
  return ordered_json(v.get_str());  // decimal string once past 64 bits
}

ordered_json json_matrix(const IntMatrix& m) {
  auto rows = ordered_json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    auto row = ordered_json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(json_int(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

ordered_json json_exponents(const Exponents& u) {
  auto out = ordered_json::array();
  for (Eigen::Index k = 0; k < u.size(); ++k) out.push_back(u[k]);
  return out;
}

ordered_json json_pair(const StatePair& p) { return ordered_json::array({p.first, p.second}); }

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw input_error("cannot read '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string render_row(const IntMatrix& m, Eigen::Index r) {
  std::string s = "(";
  for (Eigen::Index c = 0; c < m.cols(); ++c) {
    if (c) s += ", ";
    s += m(r, c).get_str();
  }
  return s + ")";
}

std::string render_configuration(const Configuration& eta) {
  std::string s = "(";
  for (std::size_t x = 0; x < eta.size(); ++x) {
    if (x) s += ", ";
    s += std::to_string(eta[x]);
  }
  return s + ")";
}

std::string render_monomial(const Exponents& u) {
  std::string s;
  for (Eigen::Index k = 0; k < u.size(); ++k) {
    if (u[k] == 0) continue;
    if (!s.empty()) s += "*";
    s += "x" + std::to_string(k);
    if (u[k] > 1) s += "^" + std::to_string(u[k]);
  }
  return s.empty() ? "1" : s;
}

}  // namespace

ordered_json counterexample_to_json(const Counterexample& c) {
  ordered_json j;
  j["sites"] = c.graph.size;
  j["eta"] = c.eta;
  j["eta_prime"] = c.eta_prime;
  return j;
}

ordered_json verdict_to_json(const Verdict& v) {
  ordered_json j;
  j["exchangeable"] = v.exchangeable;
  j["exchangeable_witness"] =
      v.exchangeable_witness ? json_pair(*v.exchangeable_witness) : ordered_json(nullptr);
  j["separable"] = v.separable;
  j["separable_witness"] =
      v.separable_witness ? json_pair(*v.separable_witness) : ordered_json(nullptr);
  ordered_json conserved;
  conserved["base_point"] = v.conserved.base_point;
  conserved["full"] = json_matrix(v.conserved.full);
  conserved["normalized"] = json_matrix(v.conserved.normalized);
  j["conserved"] = std::move(conserved);
  j["torsion_free"] = v.torsion_free ? ordered_json(*v.torsion_free) : ordered_json(nullptr);
  if (v.elementary_divisors) {
    auto divisors = ordered_json::array();
    for (const Int& d : *v.elementary_divisors) divisors.push_back(json_int(d));
    j["elementary_divisors"] = std::move(divisors);
  } else {
    j["elementary_divisors"] = nullptr;
  }
  j["lattice_ideal_equal"] =
      v.lattice_ideal_equal ? ordered_json(*v.lattice_ideal_equal) : ordered_json(nullptr);
  if (v.witness_binomial) {
    ordered_json w;
    w["lead"] = json_exponents(v.witness_binomial->lead());
    w["trail"] = json_exponents(v.witness_binomial->trail());
    j["witness_binomial"] = std::move(w);
  } else {
    j["witness_binomial"] = nullptr;
  }
  j["irreducibly_quantified"] = v.irreducibly_quantified;
  j["counterexample"] =
      v.counterexample ? counterexample_to_json(*v.counterexample) : ordered_json(nullptr);
  return j;
}

namespace {

void render_verdict_text(const Verdict& v, std::ostream& out) {
  out << "exchangeable:           " << yes_no(v.exchangeable);
  if (v.exchangeable_witness)
    out << "   (witness pair (" << v.exchangeable_witness->first << ", "
        << v.exchangeable_witness->second << "))";
  out << "\n";
  out << "separable:              " << yes_no(v.separable);
  if (v.separable_witness)
    out << "   (states " << v.separable_witness->first << " and " << v.separable_witness->second
        << " are inseparable)";
  out << "\n";
  out << "conserved basis (full, base point " << v.conserved.base_point << "):\n";
  for (Eigen::Index r = 0; r < v.conserved.full.rows(); ++r)
    out << "    " << render_row(v.conserved.full, r) << "\n";
  out << "conserved basis (normalized):\n";
  for (Eigen::Index r = 0; r < v.conserved.normalized.rows(); ++r)
    out << "    " << render_row(v.conserved.normalized, r) << "\n";
  if (v.torsion_free) {
    out << "torsion free:           " << yes_no(*v.torsion_free);
    if (v.elementary_divisors) {
      out << "   (elementary divisors:";
      for (const Int& d : *v.elementary_divisors) out << " " << d.get_str();
      out << ")";
    }
    out << "\n";
  }
  if (v.lattice_ideal_equal) {
    out << "lattice ideal equal:    " << yes_no(*v.lattice_ideal_equal);
    if (v.witness_binomial)
      out << "   (witness " << render_monomial(v.witness_binomial->lead()) << " - "
          << render_monomial(v.witness_binomial->trail()) << ")";
    out << "\n";
  }
  out << "irreducibly quantified: " << yes_no(v.irreducibly_quantified) << "\n";
  if (v.counterexample) {
    out << "counterexample on the complete graph with " << v.counterexample->graph.size
        << " site(s):\n";
    out << "    eta  = " << render_configuration(v.counterexample->eta) << "\n";
    out << "    eta' = " << render_configuration(v.counterexample->eta_prime) << "\n";
  }
}

struct LoadedEntry {
  std::string source;  // file path (and index within the file for batches)
  Interaction interaction;
};

std::vector<LoadedEntry> load_entries(const std::vector<std::string>& paths) {
  std::vector<LoadedEntry> entries;
  for (const std::string& path : paths) {
    std::string text = read_file(path);
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
      throw input_error(path + ": invalid JSON: " + e.what());
    }
    auto parse_one = [&](const nlohmann::json& node, const std::string& source) {
      try {
        entries.push_back({source, load_interaction(node.dump())});
      } catch (const input_error& e) {
        throw input_error(source + ": " + e.what());
      }
    };
    if (j.is_array()) {
      for (std::size_t k = 0; k < j.size(); ++k)
        parse_one(j[k], path + "[" + std::to_string(k) + "]");
    } else {
      parse_one(j, path);
    }
  }
  return entries;
}

struct EntryOutcome {
  std::optional<Verdict> verdict;
  std::string resource_message;  // nonempty when undecided for resources
};

std::vector<EntryOutcome> decide_entries(const std::vector<LoadedEntry>& entries,
                                         const RunConfig& config) {
  DecideLimits limits;
  limits.base_point = config.base_point;
  limits.work.spair_reductions = config.work_limit;
  limits.space_cap = config.degree_cap;

  auto decide_one = [&](const LoadedEntry& entry) -> EntryOutcome {
    try {
      return {decide(entry.interaction, limits), ""};
    } catch (const resource_limit_error& e) {
      return {std::nullopt, e.what()};
    }
  };

  std::vector<EntryOutcome> outcomes(entries.size());
  int workers = std::max(1, config.jobs);
  if (workers == 1 || entries.size() <= 1) {
    for (std::size_t k = 0; k < entries.size(); ++k) outcomes[k] = decide_one(entries[k]);
    return outcomes;
  }
  // Bounded worker pool; output order stays the input order.
  std::size_t next = 0;
  while (next < entries.size()) {
    std::size_t batch = std::min<std::size_t>(workers, entries.size() - next);
    std::vector<std::future<EntryOutcome>> futures;
    futures.reserve(batch);
    for (std::size_t k = 0; k < batch; ++k)
      futures.push_back(std::async(std::launch::async, decide_one, std::cref(entries[next + k])));
    for (std::size_t k = 0; k < batch; ++k) outcomes[next + k] = futures[k].get();
    next += batch;
  }
  return outcomes;
}

int cmd_check(const RunConfig& config, std::ostream& out) {
  std::vector<LoadedEntry> entries = load_entries(config.inputs);
  std::vector<EntryOutcome> outcomes = decide_entries(entries, config);

  bool any_resources = false;
  bool any_negative = false;
  for (const EntryOutcome& outcome : outcomes) {
    if (!outcome.verdict)
      any_resources = true;
    else if (!outcome.verdict->irreducibly_quantified)
      any_negative = true;
  }

  if (config.format == "json") {
    auto render = [](const EntryOutcome& outcome) -> ordered_json {
      if (!outcome.verdict)
        return ordered_json{{"undecided", "resources"}, {"message", outcome.resource_message}};
      return verdict_to_json(*outcome.verdict);
    };
    if (outcomes.size() == 1) {
      out << render(outcomes.front()).dump(2) << "\n";
    } else {
      auto list = ordered_json::array();
      for (const EntryOutcome& outcome : outcomes) list.push_back(render(outcome));
      out << list.dump(2) << "\n";
    }
  } else {
    for (std::size_t k = 0; k < outcomes.size(); ++k) {
      if (outcomes.size() > 1) out << "== " << entries[k].source << " ==\n";
      if (!outcomes[k].verdict)
        out << "undecided (resources): " << outcomes[k].resource_message << "\n";
      else
        render_verdict_text(*outcomes[k].verdict, out);
      if (k + 1 < outcomes.size()) out << "\n";
    }
  }
  if (any_resources) return kExitResources;
  return any_negative ? kExitNegative : kExitSuccess;
}

int cmd_conserved(const RunConfig& config, std::ostream& out) {
  std::vector<LoadedEntry> entries = load_entries(config.inputs);
  auto render_json = [&](const LoadedEntry& entry) {
    ConservedBasis basis = conserved_basis(entry.interaction, config.base_point);
    ordered_json j;
    j["states"] = entry.interaction.states();
    j["base_point"] = basis.base_point;
    j["full"] = json_matrix(basis.full);
    j["normalized"] = json_matrix(basis.normalized);
    return j;
  };
  if (config.format == "json") {
    if (entries.size() == 1) {
      out << render_json(entries.front()).dump(2) << "\n";
    } else {
      auto list = ordered_json::array();
      for (const LoadedEntry& entry : entries) list.push_back(render_json(entry));
      out << list.dump(2) << "\n";
    }
  } else {
    for (std::size_t k = 0; k < entries.size(); ++k) {
      const LoadedEntry& entry = entries[k];
      ConservedBasis basis = conserved_basis(entry.interaction, config.base_point);
      if (entries.size() > 1) out << "== " << entry.source << " ==\n";
      out << "full basis (base point " << basis.base_point << "):\n";
      for (Eigen::Index r = 0; r < basis.full.rows(); ++r)
        out << "    " << render_row(basis.full, r) << "\n";
      out << "normalized basis:\n";
      for (Eigen::Index r = 0; r < basis.normalized.rows(); ++r)
        out << "    " << render_row(basis.normalized, r) << "\n";
      if (k + 1 < entries.size()) out << "\n";
    }
  }
  return kExitSuccess;
}

int cmd_oracle(const RunConfig& config, std::ostream& out) {
  std::vector<LoadedEntry> entries = load_entries(config.inputs);
  bool any_found = false;

  auto run_one = [&](const LoadedEntry& entry) {
    return search_counterexample(entry.interaction, config.max_sites, config.degree_cap);
  };

  if (config.format == "json") {
    auto render = [&](const CounterexampleSearch& search) {
      ordered_json j;
      j["max_sites"] = config.max_sites;
      j["counterexample"] = search.counterexample
                                ? counterexample_to_json(*search.counterexample)
                                : ordered_json(nullptr);
      j["verified_up_to"] =
          search.counterexample ? ordered_json(nullptr) : ordered_json(search.verified_up_to);
      return j;
    };
    auto list = ordered_json::array();
    for (const LoadedEntry& entry : entries) {
      CounterexampleSearch search = run_one(entry);
      any_found = any_found || search.counterexample.has_value();
      list.push_back(render(search));
    }
    out << (entries.size() == 1 ? list.front().dump(2) : list.dump(2)) << "\n";
  } else {
    for (std::size_t k = 0; k < entries.size(); ++k) {
      CounterexampleSearch search = run_one(entries[k]);
      if (entries.size() > 1) out << "== " << entries[k].source << " ==\n";
      if (search.counterexample) {
        any_found = true;
        out << "counterexample on the complete graph with " << search.counterexample->graph.size
            << " site(s):\n";
        out << "    eta  = " << render_configuration(search.counterexample->eta) << "\n";
        out << "    eta' = " << render_configuration(search.counterexample->eta_prime) << "\n";
      } else {
        out << "verified-up-to " << search.verified_up_to << "\n";
      }
    }
  }
  return any_found ? kExitNegative : kExitSuccess;
}

int cmd_classify(const RunConfig& config, std::ostream& out) {
  std::vector<LoadedEntry> entries = load_entries(config.inputs);
  const std::size_t count = entries.size();

  std::vector<int> parent(count);
  std::iota(parent.begin(), parent.end(), 0);
  auto find_root = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)];
    return x;
  };
  for (std::size_t a = 0; a < count; ++a)
    for (std::size_t b = a + 1; b < count; ++b) {
      if (find_root(static_cast<int>(a)) == find_root(static_cast<int>(b))) continue;
      if (equivalent(entries[a].interaction, entries[b].interaction).equivalent)
        parent[static_cast<std::size_t>(find_root(static_cast<int>(b)))] =
            find_root(static_cast<int>(a));
    }

  std::vector<std::vector<int>> classes;
  std::vector<int> class_of(count, -1);
  for (std::size_t k = 0; k < count; ++k) {
    int root = find_root(static_cast<int>(k));
    if (class_of[static_cast<std::size_t>(root)] < 0) {
      class_of[static_cast<std::size_t>(root)] = static_cast<int>(classes.size());
      classes.emplace_back();
    }
    classes[static_cast<std::size_t>(class_of[static_cast<std::size_t>(root)])].push_back(
        static_cast<int>(k));
  }

  std::vector<EntryOutcome> outcomes = decide_entries(entries, config);
  bool any_resources = false;
  for (const EntryOutcome& outcome : outcomes)
    if (!outcome.verdict) any_resources = true;

  if (config.format == "json") {
    ordered_json j;
    auto inputs = ordered_json::array();
    for (const LoadedEntry& entry : entries) inputs.push_back(entry.source);
    j["inputs"] = std::move(inputs);
    auto class_list = ordered_json::array();
    for (const auto& members : classes) class_list.push_back(members);
    j["classes"] = std::move(class_list);
    auto verdicts = ordered_json::array();
    for (const EntryOutcome& outcome : outcomes) {
      if (!outcome.verdict)
        verdicts.push_back(
            ordered_json{{"undecided", "resources"}, {"message", outcome.resource_message}});
      else
        verdicts.push_back(verdict_to_json(*outcome.verdict));
    }
    j["verdicts"] = std::move(verdicts);
    out << j.dump(2) << "\n";
  } else {
    for (std::size_t c = 0; c < classes.size(); ++c) {
      out << "class " << c << ":\n";
      for (int member : classes[c]) {
        out << "    " << entries[static_cast<std::size_t>(member)].source
            << "  (irreducibly quantified: ";
        const EntryOutcome& outcome = outcomes[static_cast<std::size_t>(member)];
        out << (outcome.verdict ? yes_no(outcome.verdict->irreducibly_quantified) : "undecided")
            << ")\n";
      }
    }
  }
  return any_resources ? kExitResources : kExitSuccess;
}

int cmd_maximal(const RunConfig& config, std::ostream& out) {
  for (const std::string& path : config.inputs) {
    std::string text = read_file(path);
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
      throw input_error(path + ": invalid JSON: " + e.what());
    }
    if (!j.is_object() || !j.contains("states") || !j.contains("basis"))
      throw input_error(path + ": a basis file has 'states' and 'basis'");
    if (!j["states"].is_number_integer())
      throw input_error(path + ": 'states' must be an integer");
    std::int64_t states = j["states"].get<std::int64_t>();
    if (states < 1 || states > 1024) throw input_error(path + ": bad state count");
    int n = static_cast<int>(states);
    const auto& rows = j["basis"];
    if (!rows.is_array()) throw input_error(path + ": 'basis' must be an array of rows");
    IntMatrix basis(static_cast<Eigen::Index>(rows.size()), n);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (!rows[r].is_array() || rows[r].size() != static_cast<std::size_t>(n))
        throw input_error(path + ": each basis row needs one value per state");
      for (int s = 0; s < n; ++s) {
        const auto& cell = rows[r][static_cast<std::size_t>(s)];
        if (!cell.is_number_integer())
          throw input_error(path + ": basis entries must be integers");
        basis(static_cast<Eigen::Index>(r), s) = Int(cell.get<std::int64_t>());
      }
    }
    out << save_interaction(maximal_interaction(basis, n)) << "\n";
  }
  return kExitSuccess;
}

}  // namespace

int run_cli(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    if (config.command == "check") return cmd_check(config, out);
    if (config.command == "conserved") return cmd_conserved(config, out);
    if (config.command == "oracle") return cmd_oracle(config, out);
    if (config.command == "classify") return cmd_classify(config, out);
    if (config.command == "maximal") return cmd_maximal(config, out);
    err << "unknown command '" << config.command << "'\n";
    return kExitInputError;
  } catch (const input_error& e) {
    err << "input error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const resource_limit_error& e) {
    err << "resource limit: " << e.what() << "\n";
    return kExitResources;
  } catch (const std::invalid_argument& e) {
    err << "input error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const nlohmann::json::exception& e) {
    err << "input error: " << e.what() << "\n";
    return kExitInputError;
  }
}

}  // namespace iq
