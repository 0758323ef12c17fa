// reacproc: checks particle reactions against conservation laws and writes
// their canonical forms.
//
//   reacproc [options] INPUT...
//
// Results go to rp-accept.txt, rp-accept-s.txt, rp-reject.txt,
// rp-reject-s.txt, rp-unknown.txt and rp-log.txt in --outdir.
//
// Exit status: 0 when the run completes, 1 with --strict if any statement
// was rejected or could not be processed, 2 on I/O or configuration errors.

#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "reacproc/batch.hpp"

namespace {

constexpr int kExitFindings = 1;
constexpr int kExitConfig = 2;

std::vector<reacproc::Law> build_laws(const std::vector<std::string>& names,
                                      const std::vector<std::string>& relations) {
  std::vector<reacproc::Law> laws;
  if (names.empty() || (names.size() == 1 && names[0] == "all")) {
    laws = reacproc::default_laws();
  } else {
    for (const auto& n : names) {
      auto law = reacproc::find_law(n);
      if (!law) throw std::invalid_argument("unknown law '" + n + "'");
      laws.push_back(*law);
    }
  }
  for (const auto& spec : relations) {
    const auto eq = spec.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("--relation expects LAW=eq|le|ge, got '" + spec + "'");
    const std::string name = spec.substr(0, eq);
    const std::string rel = spec.substr(eq + 1);
    reacproc::Relation relation;
    if (rel == "eq") relation = reacproc::Relation::kEqual;
    else if (rel == "le") relation = reacproc::Relation::kLessEqual;
    else if (rel == "ge") relation = reacproc::Relation::kGreaterEqual;
    else throw std::invalid_argument("unknown relation '" + rel + "' in '" + spec + "'");
    bool found = false;
    for (auto& law : laws) {
      if (law.name == name) {
        law.relation = relation;
        found = true;
      }
    }
    if (!found) throw std::invalid_argument("law '" + name + "' is not enabled");
  }
  return laws;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Check particle reactions against conservation laws"};

  const std::string data_dir = REACPROC_DATA_DIR;
  reacproc::RunConfig cfg;
  cfg.dict_path = data_dir + "/dict-syn.txt";
  cfg.props_path = data_dir + "/particles.txt";
  cfg.leptons_path = data_dir + "/leptons.txt";

  std::vector<std::string> inputs;
  std::string order = "dict";
  std::vector<std::string> law_names;
  std::vector<std::string> relations;
  std::string outdir = ".";
  bool strict = false;
  unsigned jobs = 1;

  app.add_option("inputs", inputs, "Files with reactions terminated by ';'")
      ->required()
      ->check(CLI::ExistingFile);
  app.add_option("--dict", cfg.dict_path, "Synonym dictionary")->capture_default_str();
  app.add_option("--props", cfg.props_path, "Hadronic quantum-number table")
      ->capture_default_str();
  app.add_option("--leptons", cfg.leptons_path, "Lepton-number table")
      ->capture_default_str();
  app.add_option("--order", order, "Name ordering: lex or dict")
      ->check(CLI::IsMember({"lex", "dict"}))
      ->capture_default_str();
  app.add_option("--laws", law_names,
                 "Comma-separated laws: charge,baryon,S,C,B,T,Le,Lmu,Ltau (default all)")
      ->delimiter(',');
  app.add_option("--relation", relations,
                 "Relation for a law, LAW=eq|le|ge (le: initial <= final); repeatable");
  app.add_option("--outdir", outdir, "Directory for the rp-*.txt files")
      ->capture_default_str();
  app.add_option("-j,--jobs", jobs, "Worker threads")->check(CLI::Range(1u, 256u));
  app.add_flag("--strict", strict, "Exit with status 1 on any rejected or unprocessed reaction");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitConfig;
  }

  try {
    cfg.laws = build_laws(law_names, relations);
  } catch (const std::invalid_argument& e) {
    std::cerr << "reacproc: " << e.what() << '\n';
    return kExitConfig;
  }
  cfg.mode = order == "lex" ? reacproc::OrderingMode::kTrueLex
                            : reacproc::OrderingMode::kDict;
  cfg.outdir = outdir;
  cfg.jobs = jobs;
  for (const auto& in : inputs) cfg.inputs.emplace_back(in);

  reacproc::RunSummary summary;
  try {
    const auto tables =
        reacproc::load_tables(cfg.dict_path, cfg.props_path, cfg.leptons_path);
    for (const auto& w : tables.properties.warnings())
      std::cerr << "reacproc: warning: " << w << '\n';
    summary = reacproc::process_file(cfg, tables);
  } catch (const reacproc::TableError& e) {
    std::cerr << "reacproc: table error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const reacproc::BatchError& e) {
    std::cerr << "reacproc: " << e.what() << '\n';
    return kExitConfig;
  }

  std::cout << "accepted " << summary.accepted << ", rejected " << summary.rejected
            << ", unknown " << summary.unknown << ", parse errors "
            << summary.parse_failed << '\n';
  for (const auto& [law, n] : summary.violations_per_law)
    std::cout << "  " << law << ": " << n << " violation(s)\n";

  const bool findings = summary.rejected + summary.unknown + summary.parse_failed > 0;
  return strict && findings ? kExitFindings : 0;
}
