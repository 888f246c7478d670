#include <cmath>
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gptstat/basis.hpp"
#include "gptstat/errors.hpp"
#include "gptstat/json_io.hpp"
#include "gptstat/physicality.hpp"
#include "gptstat/quantum.hpp"
#include "gptstat/quon.hpp"
#include "gptstat/removal.hpp"
#include "gptstat/suite.hpp"

namespace {

using namespace gptstat;

struct CliConfig {
  double tol = kDefaultTol;
  bool json = false;
  std::string out_path;
};

void emit(const CliConfig& cfg, const std::string& text) {
  if (!cfg.out_path.empty()) {
    write_text_file(cfg.out_path, text);
  } else {
    std::cout << text;
  }
}

std::string bracketed(const std::vector<double>& v) {
  std::string s = "[";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += format_double(v[i]);
  }
  return s + "]";
}

void print_report(const CliConfig& cfg, const PhysicalityReport& rep) {
  if (cfg.json) {
    emit(cfg, report_to_json(rep));
    return;
  }
  std::string text;
  char line[256];
  auto add = [&](const char* label, bool pass, double dev,
                 const std::string& detail) {
    std::snprintf(line, sizeof(line), "%-18s %-4s  max deviation %s", label,
                  pass ? "pass" : "FAIL", format_double(dev).c_str());
    text += line;
    if (!detail.empty()) text += "  (" + detail + ")";
    text += "\n";
  };
  add("doubly stochastic", rep.doubly_stochastic.pass,
      rep.doubly_stochastic.max_deviation, rep.doubly_stochastic.detail);
  add("no interaction", rep.no_interaction.pass,
      rep.no_interaction.max_deviation, rep.no_interaction.detail);
  add("evolution", rep.evolution.pass, rep.evolution.max_deviation,
      rep.evolution.detail);
  for (const EvolutionWitness& w : rep.evolution.witnesses) {
    text += "  witness " + w.input.str() + ": observed " +
            bracketed(w.observed) + " expected " + bracketed(w.expected) +
            "\n";
  }
  if (rep.beta) {
    text += "beta               " + format_double(*rep.beta) + "\n";
  }
  if (rep.theta) {
    text += "theta              " + format_double(*rep.theta) + "\n";
  }
  text += std::string("realizable         ") + (rep.realizable ? "yes" : "no") +
          "\n";
  emit(cfg, text);
}

int run_check(const CliConfig& cfg, const std::string& path,
              const std::string& single_path) {
  const TransitionMatrix t = load_matrix(path);
  const bool canonical_pair = t.square() && t.input_basis().particles() == 2 &&
                              t.input_basis().modes() == 2;
  PhysicalityReport rep;
  if (canonical_pair && single_path.empty()) {
    rep = characterize_2x2(t, cfg.tol);
  } else {
    const TransitionMatrix one = single_path.empty()
                                     ? infer_single_particle(t)
                                     : load_matrix(single_path);
    rep.doubly_stochastic = check_double_stochastic(t, cfg.tol);
    rep.no_interaction = check_no_interaction(t, one, cfg.tol);
    rep.evolution = check_evolution(t, one, cfg.tol);
    rep.realizable = rep.doubly_stochastic.pass && rep.no_interaction.pass &&
                     rep.evolution.pass;
  }
  print_report(cfg, rep);
  return rep.realizable ? 0 : 1;
}

int run_demo(const CliConfig& cfg, bool tol_given) {
  const std::vector<CriterionResult> rows =
      run_suite(tol_given ? std::optional<double>(cfg.tol) : std::nullopt);
  bool all = true;
  std::string text;
  if (cfg.json) {
    text = "[\n";
    for (size_t i = 0; i < rows.size(); ++i) {
      const CriterionResult& r = rows[i];
      text += "  {\"id\": " + std::to_string(r.id) + ", \"name\": \"" + r.name +
              "\", \"pass\": " + (r.pass ? "true" : "false") +
              ", \"observed\": " + format_double(r.observed) +
              ", \"tol\": " + format_double(r.tol) + ", \"detail\": \"" +
              r.detail + "\"}";
      text += (i + 1 < rows.size()) ? ",\n" : "\n";
    }
    text += "]\n";
  } else {
    char line[256];
    for (const CriterionResult& r : rows) {
      std::snprintf(line, sizeof(line),
                    "%2d  %-4s  %-38s worst %-12.3g tol %-8.1g %.2fs\n", r.id,
                    r.pass ? "PASS" : "FAIL", r.name.c_str(), r.observed,
                    r.tol, r.seconds);
      text += line;
    }
  }
  for (const CriterionResult& r : rows) all = all && r.pass;
  if (!cfg.json) {
    text += all ? "all conditions reproduced\n" : "FAILURES present\n";
  }
  emit(cfg, text);
  return all ? 0 : 1;
}

std::string quon_sweep_csv() {
  const ModeBasis single = enumerate_basis(1, 2);
  const ModeBasis pair = enumerate_basis(2, 2);
  std::vector<OccupationState> inputs;
  for (const OccupationState& s : single.states()) inputs.push_back(s);
  for (const OccupationState& s : pair.states()) inputs.push_back(s);

  std::string csv = "q,R";
  for (const OccupationState& in : inputs) {
    const ModeBasis& outs = in.total() == 1 ? single : pair;
    for (const OccupationState& out : outs.states()) {
      csv += ",P" + in.str() + "->" + out.str();
    }
  }
  csv += "\n";
  for (int qi = 0; qi <= 20; ++qi) {
    const double q = (qi - 10) / 10.0;
    for (int ri = 0; ri <= 20; ++ri) {
      const double refl = ri / 20.0;
      const QuonOutcomeTable table = quon_statistics(QuonModel(q, refl));
      csv += format_double(q) + "," + format_double(refl);
      for (const OccupationState& in : inputs) {
        if (!table.defined(in)) {
          const int width = in.total() == 1 ? single.size() : pair.size();
          for (int k = 0; k < width; ++k) csv += ",";
          continue;
        }
        for (double p : table.distribution(in)) csv += "," + format_double(p);
      }
      csv += "\n";
    }
  }
  return csv;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Verification toolkit for mode-occupation statistics of noninteracting "
      "identical particles"};
  app.require_subcommand(1);

  CliConfig cfg;
  app.add_option("--tol", cfg.tol, "Numeric tolerance for checks")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_flag("--json", cfg.json, "Machine-readable output");
  app.add_option("--out", cfg.out_path, "Write output to a file");

  int basis_n = 0, basis_m = 0;
  CLI::App* cmd_basis =
      app.add_subcommand("basis", "List the occupation basis for N particles "
                                  "in M modes");
  cmd_basis->add_option("N", basis_n, "Particle count")->required();
  cmd_basis->add_option("M", basis_m, "Mode count")->required();

  int removal_n = 0, removal_m = 0, removal_to = 0;
  CLI::App* cmd_removal = app.add_subcommand(
      "removal", "Single-particle removal matrix, or a chain down to K "
                 "particles");
  cmd_removal->add_option("N", removal_n, "Particle count")->required();
  cmd_removal->add_option("M", removal_m, "Mode count")->required();
  cmd_removal->add_option("--to", removal_to,
                          "Compose removals down to this particle count");

  double family_beta = 0.0;
  CLI::App* cmd_family = app.add_subcommand(
      "family", "Two-particle doubly stochastic family matrix at beta");
  cmd_family->add_option("beta", family_beta, "Stay probability in [0, 1]")
      ->required();

  double quantum_theta = 0.0;
  std::string quantum_unitary_path;
  int quantum_particles = 2;
  CLI::App* cmd_quantum = app.add_subcommand(
      "quantum", "Boson transition matrix of a mode unitary");
  CLI::Option* theta_opt =
      cmd_quantum->add_option("--theta", quantum_theta,
                              "Beam-splitter angle in radians");
  CLI::Option* unitary_opt =
      cmd_quantum->add_option("--unitary", quantum_unitary_path,
                              "JSON file with a [re, im] entry matrix");
  theta_opt->excludes(unitary_opt);
  cmd_quantum->add_option("N", quantum_particles, "Particle count")
      ->capture_default_str();

  double quon_q = 0.0, quon_r = 0.0;
  bool quon_sweep = false;
  CLI::App* cmd_quon = app.add_subcommand(
      "quon", "Two-quon transition matrix at deformation q, reflectivity R");
  CLI::Option* quon_q_opt = cmd_quon->add_option("q", quon_q,
                                                 "Deformation in [-1, 1]");
  CLI::Option* quon_r_opt =
      cmd_quon->add_option("R", quon_r, "Reflectivity in [0, 1]");
  cmd_quon->add_flag("--sweep", quon_sweep,
                     "CSV of all outcome probabilities over a (q, R) grid");
  quon_q_opt->needs(quon_r_opt);
  quon_r_opt->needs(quon_q_opt);

  std::string check_path, check_single_path;
  CLI::App* cmd_check = app.add_subcommand(
      "check", "Run the physicality conditions on a matrix JSON file");
  cmd_check->add_option("file", check_path, "Transition matrix JSON")
      ->required();
  cmd_check->add_option("--single", check_single_path,
                        "Single-particle matrix to check against (otherwise "
                        "inferred from the matrix itself)");

  CLI::App* cmd_demo = app.add_subcommand(
      "demo", "Reproduce every headline identity and print a pass/fail table");

  for (CLI::App* sub : {cmd_basis, cmd_removal, cmd_family, cmd_quantum,
                        cmd_quon, cmd_check, cmd_demo}) {
    sub->fallthrough();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (cmd_basis->parsed()) {
      const ModeBasis basis = enumerate_basis(basis_n, basis_m);
      std::string text;
      if (cfg.json) {
        text = "{\n  \"N\": " + std::to_string(basis_n) +
               ",\n  \"M\": " + std::to_string(basis_m) +
               ",\n  \"basis\": [\n";
        for (int i = 0; i < basis.size(); ++i) {
          text += "    [";
          const std::vector<int>& counts = basis.state(i).counts;
          for (size_t k = 0; k < counts.size(); ++k) {
            if (k) text += ", ";
            text += std::to_string(counts[k]);
          }
          text += (i + 1 < basis.size()) ? "],\n" : "]\n";
        }
        text += "  ]\n}\n";
      } else {
        for (int i = 0; i < basis.size(); ++i) {
          text += std::to_string(i) + ": " + basis.state(i).str() + "\n";
        }
      }
      emit(cfg, text);
      return 0;
    }
    if (cmd_removal->parsed()) {
      const TransitionMatrix m =
          cmd_removal->count("--to")
              ? removal_chain(removal_n, removal_to, removal_m)
              : removal_matrix(removal_n, removal_m);
      emit(cfg, matrix_to_json(m));
      return 0;
    }
    if (cmd_family->parsed()) {
      emit(cfg, matrix_to_json(family_matrix(family_beta)));
      return 0;
    }
    if (cmd_quantum->parsed()) {
      if (theta_opt->count() == 0 && unitary_opt->count() == 0) {
        std::cerr << "quantum: need --theta or --unitary\n";
        return 2;
      }
      const ModeUnitary u =
          unitary_opt->count()
              ? ModeUnitary(load_unitary(quantum_unitary_path), cfg.tol)
              : bs_unitary(quantum_theta);
      emit(cfg, matrix_to_json(boson_transition_matrix(u, quantum_particles)));
      return 0;
    }
    if (cmd_quon->parsed()) {
      if (quon_sweep) {
        emit(cfg, quon_sweep_csv());
        return 0;
      }
      if (quon_q_opt->count() == 0) {
        std::cerr << "quon: need q and R (or --sweep)\n";
        return 2;
      }
      emit(cfg, matrix_to_json(quon_transition_matrix(QuonModel(quon_q,
                                                                quon_r))));
      return 0;
    }
    if (cmd_check->parsed()) {
      return run_check(cfg, check_path, check_single_path);
    }
    if (cmd_demo->parsed()) {
      return run_demo(cfg, app.count("--tol") > 0);
    }
  } catch (const UnnormalizableStateError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const StructuralError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const NotFoundError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
