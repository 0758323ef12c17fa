// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure.

#include <cctype>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "reacproc/batch.hpp"
#include "reacproc/canonical.hpp"
#include "reacproc/conservation.hpp"
#include "reacproc/parser.hpp"
#include "reacproc/render.hpp"
#include "support/fixtures.hpp"
#include "support/generators.hpp"

using namespace reacproc;
namespace fs = std::filesystem;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

/// Collects failure messages for one criterion.
class Check {
 public:
  void expect(bool ok, const std::string& what) {
    if (!ok && failures_.size() < 5) failures_.push_back(what);
    if (!ok) ++failed_;
  }
  bool ok() const { return failed_ == 0; }
  std::string summary() const {
    std::string out = std::to_string(failed_) + " failure(s)";
    for (const auto& f : failures_) out += "\n        " + f;
    return out;
  }
  std::string note;

 private:
  std::vector<std::string> failures_;
  std::size_t failed_ = 0;
};

const Dictionary& dict() { return testing::shipped_tables().dict; }

// 1. Golden canonicalization of the worked example, both modes, < 1 s.
void golden_canonicalization(Check& c) {
  const auto start = Clock::now();
  const Reaction parsed = parse_reaction(testing::kWorkedExample);
  const std::string lex = render_reaction(canonicalize(parsed, OrderingMode::kTrueLex, dict()));
  const std::string dct = render_reaction(canonicalize(parsed, OrderingMode::kDict, dict()));
  const double elapsed = seconds_since(start);
  c.expect(lex == testing::kWorkedExampleLex, "lex: got '" + lex + "'");
  c.expect(dct == testing::kWorkedExampleDict, "dict: got '" + dct + "'");
  c.expect(elapsed < 1.0, "took " + std::to_string(elapsed) + " s");
}

// 2. expand_groups vs the brute-force distribution oracle, 1000 final states
//    (depth <= 3, <= 4 alternatives per bracket, <= 6 particles per group), < 10 s.
void bracket_expansion(Check& c) {
  testing::Rng rng(2024);
  testing::TreeShape shape;
  shape.max_depth = 3;
  shape.max_groups = 4;
  shape.max_particles = 6;
  shape.decay_p = 0.0;
  shape.compo_p = 0.12;
  const auto start = Clock::now();
  std::size_t compo_nodes = 0;
  std::size_t produced = 0;
  for (int accepted = 0; accepted < 1000;) {
    const FinalState fs = testing::random_final_state(rng, shape, 0);
    const auto expected = testing::normalized(testing::oracle_alternatives(fs));
    if (expected.size() > 20000) continue;  // keep the run bounded
    ++accepted;
    compo_nodes += count_compo(fs);
    const FinalState out = expand_groups(fs);
    produced += out.groups.size();
    c.expect(count_compo(out) == 0, "?compo left in " + render_final_state(out));
    c.expect(testing::groups_as_alternatives(out) == expected,
             "mismatch for " + render_final_state(fs));
  }
  const double elapsed = seconds_since(start);
  c.expect(elapsed < 10.0, "took " + std::to_string(elapsed) + " s");
  c.note = std::to_string(compo_nodes) + " brackets, " + std::to_string(produced) +
           " expanded groups";
}

// 3. Idempotence and sibling-permutation invariance over 500 random reactions.
void idempotence_and_permutations(Check& c) {
  testing::Rng rng(3003);
  constexpr std::size_t kExhaustiveLimit = 720;
  constexpr int kSamples = 200;
  std::size_t exhaustive = 0;
  std::size_t variants = 0;
  for (int i = 0; i < 500; ++i) {
    const Reaction r = testing::random_reaction(rng);
    for (auto mode : {OrderingMode::kDict, OrderingMode::kTrueLex}) {
      const Reaction once = canonicalize(r, mode, dict());
      c.expect(structural_equal(canonicalize(once, mode, dict()), once),
               "not idempotent: " + render_reaction(r));
    }
    const std::string expected = render_reaction(canonicalize(r, OrderingMode::kDict, dict()));
    const auto sizes = testing::sibling_list_sizes(r);
    auto check_variant = [&](const std::vector<std::vector<std::size_t>>& perms) {
      ++variants;
      const Reaction p = testing::apply_permutations(r, perms);
      c.expect(render_reaction(canonicalize(p, OrderingMode::kDict, dict())) == expected,
               "permutation changed canonical form of " + render_reaction(r));
    };
    if (testing::permutation_count(sizes, kExhaustiveLimit) <= kExhaustiveLimit) {
      ++exhaustive;
      auto perms = testing::identity_permutations(sizes);
      do check_variant(perms);
      while (testing::next_permutations(perms));
    } else {
      for (int k = 0; k < kSamples; ++k) check_variant(testing::random_permutations(rng, sizes));
    }
  }
  c.note = std::to_string(exhaustive) + "/500 enumerated exhaustively, " +
           std::to_string(variants) + " variants";
}

// 4. parse(render(r)) == expand_counts(r) for 500 random canonical reactions.
void round_trip(Check& c) {
  testing::Rng rng(4004);
  std::size_t with_counts = 0;
  for (int i = 0; i < 500; ++i) {
    const auto mode = i % 2 == 0 ? OrderingMode::kDict : OrderingMode::kTrueLex;
    const Reaction r = canonicalize(testing::random_reaction(rng), mode, dict());
    const std::string text = render_reaction(r);
    if (!structural_equal(expand_counts(r), r)) ++with_counts;
    try {
      c.expect(structural_equal(parse_reaction(text), expand_counts(r)), "differs: " + text);
    } catch (const ParseError& e) {
      c.expect(false, "does not parse: " + text + " (" + e.what() + ")");
    }
  }
  c.note = std::to_string(with_counts) + " with merged multiplicities";
}

// 5. Fixed 20-reaction conservation corpus with hand-computed verdicts.
struct Expected {
  const char* text;
  Status status;
  std::vector<Violation> violations;
  std::vector<std::string> unknown;
};

void conservation_suite(Check& c) {
  const std::vector<Expected> corpus = {
      {"e+ e- --> mu+ mu- ;", Status::kAccept, {}, {}},
      {"e- --> gamma gamma ;", Status::kReject,
       {{"charge", "final[0]", -3, 0}, {"Le", "final[0]", 1, 0}}, {}},
      {"p --> e+ gamma ;", Status::kReject,
       {{"baryon", "final[0]", 3, 0}, {"Le", "final[0]", 0, -1}}, {}},
      {"e+ e- --> XYZZY ;", Status::kUnknown, {}, {"XYZZY"}},
      {"pi+ --> mu+ nu(mu) ;", Status::kAccept, {}, {}},
      {"n --> p e- nu(e)bar ;", Status::kAccept, {}, {}},
      {"n --> p e- nu(e) ;", Status::kReject, {{"Le", "final[0]", 0, 2}}, {}},
      {"K+ --> pi+ pi0 ;", Status::kReject, {{"S", "final[0]", 1, 0}}, {}},
      {"Lambda --> p pi- ;", Status::kReject, {{"S", "final[0]", -1, 0}}, {}},
      {"p pbar --> pi+ pi- pi0 ;", Status::kAccept, {}, {}},
      {"pi- p --> K0 Lambda ;", Status::kAccept, {}, {}},
      {"pi- p --> K- Sigma+ ;", Status::kReject, {{"S", "final[0]", 0, -2}}, {}},
      {"mu- --> e- nu(e)bar nu(mu) ;", Status::kAccept, {}, {}},
      {"mu- --> e- gamma ;", Status::kReject,
       {{"Le", "final[0]", 0, 1}, {"Lmu", "final[0]", 1, 0}}, {}},
      {"E+ E- --> W+ < E+ NUE + MU+ NUMU > W- < TAU- NUTAUBAR > ;", Status::kAccept, {}, {}},
      {"e+ e- --> W+ < e+ nu(mu) > W- ;", Status::kReject,
       {{"Le", "final[0].W+.decay[0]", 0, -1}, {"Lmu", "final[0].W+.decay[0]", 0, 1}}, {}},
      {"e+ e- --> mu+ mu- + tau+ tau- + pi+ ;", Status::kReject,
       {{"charge", "final[2]", 0, 3}}, {}},
      {"D0 --> K- pi+ ;", Status::kReject,
       {{"S", "final[0]", 0, -1}, {"C", "final[0]", 1, 0}}, {}},
      {"gamma --> e+ e- ;", Status::kAccept, {}, {}},
      {testing::kWorkedExample, Status::kUnknown, {}, {"QUARK", "QUARKBAR"}},
  };
  const PropertyTable& table = testing::shipped_tables().properties;
  std::size_t agree = 0;
  for (const auto& e : corpus) {
    const Reaction r = canonicalize(parse_reaction(e.text), OrderingMode::kDict, dict());
    const Verdict v = check_all_laws(r, default_laws(), table);
    const bool ok =
        v.status == e.status && v.violations == e.violations && v.unknown_names == e.unknown;
    if (ok) ++agree;
    std::string got = std::string(to_string(v.status));
    for (const auto& x : v.violations)
      got += " " + x.law + "@" + x.location + "(" + std::to_string(x.initial_sum) + "," +
             std::to_string(x.final_sum) + ")";
    c.expect(ok, std::string(e.text) + " -> " + got);
  }
  c.note = std::to_string(agree) + "/" + std::to_string(corpus.size()) + " agree";
}

// 6. CLI run on the corpus: six files, partition and line-count invariants,
//    and a byte-identical re-run on rp-accept-s.txt.
std::map<std::string, std::size_t> parse_summary(const std::string& text) {
  std::map<std::string, std::size_t> out;
  std::istringstream in(text);
  std::string line;
  std::getline(in, line);
  std::istringstream fields(line);
  std::string word;
  std::string key;
  while (fields >> word) {
    if (!word.empty() && word.back() == ',') word.pop_back();
    if (!word.empty() && std::isdigit(static_cast<unsigned char>(word[0]))) {
      out[key] = std::stoul(word);
      key.clear();
    } else {
      key += key.empty() ? word : " " + word;
    }
  }
  return out;
}

std::multiset<std::string> lines_of(const fs::path& p) {
  std::multiset<std::string> out;
  std::ifstream in(p);
  std::string line;
  while (std::getline(in, line)) out.insert(line);
  return out;
}

int run_cli(const std::string& args, const fs::path& stdout_file) {
  const std::string cmd =
      std::string("\"") + REACPROC_CLI + "\" " + args + " > \"" + stdout_file.string() + "\"";
  return std::system(cmd.c_str());
}

void batch_routing(Check& c) {
  const fs::path corpus = fs::path(REACPROC_TEST_DATA_DIR) / "corpus.txt";
  const fs::path dir = testing::scratch_dir("acceptance-batch");
  const fs::path first = dir / "first";
  const fs::path second = dir / "second";

  const int rc = run_cli("--outdir \"" + first.string() + "\" \"" + corpus.string() + "\"",
                         dir / "first.out");
  c.expect(rc == 0, "CLI exit status " + std::to_string(rc));

  const char* files[] = {kAcceptFile, kAcceptSortedFile, kRejectFile,
                         kRejectSortedFile, kUnknownFile, kLogFile};
  for (const char* f : files)
    c.expect(fs::exists(first / f), std::string("missing ") + f);

  std::ifstream in(corpus);
  const auto statements = assemble_statements(in);
  std::multiset<std::string> originals;
  for (const auto& s : statements) originals.insert(s.text);

  std::multiset<std::string> routed;
  for (const char* f : {kAcceptFile, kRejectFile, kUnknownFile})
    for (const auto& l : lines_of(first / f)) routed.insert(l);
  c.expect(routed == originals, "statements not partitioned across accept/reject/unknown");

  const std::size_t accepted = testing::count_lines(first / kAcceptFile);
  const std::size_t rejected = testing::count_lines(first / kRejectFile);
  const std::size_t unknown = testing::count_lines(first / kUnknownFile);
  c.expect(accepted == testing::count_lines(first / kAcceptSortedFile), "|accept| != |accept-s|");
  c.expect(rejected == testing::count_lines(first / kRejectSortedFile), "|reject| != |reject-s|");
  c.expect(testing::count_lines(first / kLogFile) == statements.size(), "log lines != statements");

  const auto summary = parse_summary(testing::read_file(dir / "first.out"));
  c.expect(summary.count("accepted") && summary.at("accepted") == accepted, "accepted count");
  c.expect(summary.count("rejected") && summary.at("rejected") == rejected, "rejected count");
  c.expect(summary.count("unknown") && summary.count("parse errors") &&
               summary.at("unknown") + summary.at("parse errors") == unknown,
           "unknown count");

  const int rc2 = run_cli("--outdir \"" + second.string() + "\" \"" +
                              (first / kAcceptSortedFile).string() + "\"",
                          dir / "second.out");
  c.expect(rc2 == 0, "re-run exit status " + std::to_string(rc2));
  const std::string canonical = testing::read_file(first / kAcceptSortedFile);
  c.expect(testing::read_file(second / kAcceptSortedFile) == canonical,
           "rp-accept-s.txt changed on re-run");
  c.expect(testing::read_file(second / kAcceptFile) == canonical,
           "re-run did not accept every canonical reaction");
  c.expect(testing::count_lines(second / kRejectFile) == 0 &&
               testing::count_lines(second / kUnknownFile) == 0,
           "re-run produced rejects or unknowns");

  c.note = std::to_string(statements.size()) + " statements: " + std::to_string(accepted) +
           " accept, " + std::to_string(rejected) + " reject, " + std::to_string(unknown) +
           " unknown";
}

// 7. Grammar conformance, one or more statements per production.
struct GrammarCase {
  const char* text;
  bool parses;
  const char* rendered;  // canonical spacing of the parse, when it parses
};

void grammar_conformance(Check& c) {
  const std::vector<GrammarCase> cases = {
      // reaction := initial_state ARROW final_state END ; target may be empty
      {"E- --> E- ;", true, "E- --> E- ;"},
      {"E+ E- --> MU+ MU- ;", true, "E+ E- --> MU+ MU- ;"},
      {"p p p --> X ;", true, "p p p --> X ;"},
      {"A -->B;", true, "A --> B ;"},
      {"CCbar --> CCbar ;", true, "CCbar --> CCbar ;"},
      {"nu(tau) --> nu(tau) ;", true, "nu(tau) --> nu(tau) ;"},
      // decay_group may be empty
      {"A --> ;", true, "A --> ;"},
      {"A --> B + ;", true, "A --> B + ;"},
      {"A --> - B ;", true, "A --> - B ;"},
      // final_state joined with PLUS / MINUS
      {"A --> B - C ;", true, "A --> B - C ;"},
      {"A --> B + C - D ;", true, "A --> B + C - D ;"},
      // particle := PARTICLE LC final_state RC
      {"A --> W+ < e+ nu(e) > ;", true, "A --> W+ < e+ nu(e) > ;"},
      {"A --> W+ < > ;", true, "A --> W+ < > ;"},
      {"A --> W+ < tau+ < pi+ nu(tau)bar > nu(tau) > ;", true,
       "A --> W+ < tau+ < pi+ nu(tau)bar > nu(tau) > ;"},
      // particle := LP final_state RP
      {"A --> ( B + C ) D ;", true, "A --> ( B + C ) D ;"},
      {"A --> ( ) ;", true, "A --> ( ) ;"},
      {"A --> ( ( B + C ) + D ) ;", true, "A --> ( ( B + C ) + D ) ;"},
      {"A --> ( B - C ) ;", true, "A --> ( B - C ) ;"},
      {"A --> W+ < ( e+ + mu+ ) nu > ;", true, "A --> W+ < ( e+ + mu+ ) nu > ;"},
      {"A --> ( W+ < e+ nu(e) > + Z0 ) ;", true, "A --> ( W+ < e+ nu(e) > + Z0 ) ;"},
      // final_state PLUS CC
      {"A --> B + CC ;", true, "A --> B + CC ;"},
      {"A --> + CC ;", true, "A --> + CC ;"},
      {"A --> B - C + CC ;", true, "A --> B - C + CC ;"},
      {"A --> B + CC + CC ;", true, "A --> B + CC ;"},
      // violations
      {"A --> B", false, nullptr},
      {"A B ;", false, nullptr},
      {"--> B ;", false, nullptr},
      {"A --> ( B ;", false, nullptr},
      {"A --> B ) ;", false, nullptr},
      {"A --> W+ < B ;", false, nullptr},
      {"A --> B > ;", false, nullptr},
      {"A --> B + CC + D ;", false, nullptr},
      {"A --> W+ < B + CC > ;", false, nullptr},  // CC only on the reaction's final state
      {"A ( B ) --> C ;", false, nullptr},
      {"A < B > --> C ;", false, nullptr},
      {"A --> B ; C", false, nullptr},
      {"A --> B ;;", false, nullptr},
      {"A --> CC ;", false, nullptr},
      {"A --> B @ ;", false, nullptr},
      {"A-->B;", false, nullptr},  // maximal munch: "A--" ">" "B"
      {"A --> --> B ;", false, nullptr},
      {"A --> < B > ;", false, nullptr},
      {"", false, nullptr},
  };
  for (const auto& gc : cases) {
    try {
      const Reaction r = parse_reaction(gc.text);
      c.expect(gc.parses, std::string("accepted: ") + gc.text);
      if (gc.parses) {
        const std::string text = render_reaction(r);
        c.expect(text == gc.rendered, std::string(gc.text) + " rendered as " + text);
        c.expect(structural_equal(parse_reaction(text), r), "re-parse differs: " + text);
      }
    } catch (const ParseError& e) {
      c.expect(!gc.parses, std::string("rejected: ") + gc.text + " (" + e.what() + ")");
    }
  }

  // reaction := error END
  const auto outcomes = parse_script("A B ; E- --> E- ; A --> ( ; p --> X ;");
  c.expect(outcomes.size() == 4, "recovery: expected 4 outcomes");
  if (outcomes.size() == 4) {
    c.expect(std::holds_alternative<ParseError>(outcomes[0]), "recovery: first should fail");
    c.expect(std::holds_alternative<Reaction>(outcomes[1]), "recovery: second should parse");
    c.expect(std::holds_alternative<ParseError>(outcomes[2]), "recovery: third should fail");
    c.expect(std::holds_alternative<Reaction>(outcomes[3]), "recovery: fourth should parse");
  }
  c.note = std::to_string(cases.size()) + " statements + recovery script";
}

// 8. 10,000 simple reactions end to end in < 5 s.
void throughput(Check& c) {
  const fs::path dir = testing::scratch_dir("acceptance-throughput");
  const std::vector<std::string> templates = {
      "E+ E- --> MU+ MU- ;", "p --> e+ gamma ;", "pi- p --> K0 Lambda ;",
      "n --> p e- nu(e)bar ;", "e+ e- --> ( e+ e- + mu+ mu- ) gamma ;",
      "K+ --> pi+ pi0 ;", "e+ e- --> W+ < e+ nu(e) > W- < mu- nu(mu)bar > ;",
      "e+ e- --> XYZZY ;"};
  std::string text;
  for (int i = 0; i < 10000; ++i) text += templates[static_cast<std::size_t>(i) % templates.size()] + "\n";
  testing::write_file(dir / "in.txt", text);

  RunConfig cfg;
  cfg.inputs = {dir / "in.txt"};
  cfg.dict_path = testing::data_dir() / "dict-syn.txt";
  cfg.props_path = testing::data_dir() / "particles.txt";
  cfg.leptons_path = testing::data_dir() / "leptons.txt";
  cfg.outdir = dir / "out";
  const auto start = Clock::now();
  const RunSummary s = process_file(cfg);
  const double elapsed = seconds_since(start);
  c.expect(s.total() == 10000, "processed " + std::to_string(s.total()));
  c.expect(elapsed < 5.0, "took " + std::to_string(elapsed) + " s");
  std::ostringstream note;
  note << std::fixed << std::setprecision(3) << elapsed << " s for 10000 reactions";
  c.note = note.str();
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Check&)>>> criteria = {
      {"1 golden canonicalization", golden_canonicalization},
      {"2 bracket-expansion oracle", bracket_expansion},
      {"3 idempotence & permutation invariance", idempotence_and_permutations},
      {"4 round-trip", round_trip},
      {"5 conservation suite", conservation_suite},
      {"6 batch routing", batch_routing},
      {"7 grammar conformance", grammar_conformance},
      {"8 throughput", throughput},
  };
  int failed = 0;
  for (const auto& [name, run] : criteria) {
    Check c;
    const auto start = Clock::now();
    try {
      run(c);
    } catch (const std::exception& e) {
      c.expect(false, std::string("exception: ") + e.what());
    }
    const double elapsed = seconds_since(start);
    std::cout << (c.ok() ? "[PASS] " : "[FAIL] ") << name << " (" << std::fixed
              << std::setprecision(3) << elapsed << " s)";
    if (!c.note.empty()) std::cout << " - " << c.note;
    if (!c.ok()) {
      std::cout << "\n        " << c.summary();
      ++failed;
    }
    std::cout << '\n';
  }
  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed")
            << '\n';
  return failed == 0 ? EXIT_SUCCESS : EXIT_FAILURE;
}
