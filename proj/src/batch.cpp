#include "reacproc/batch.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <istream>
#include <thread>

#include "reacproc/parser.hpp"
#include "reacproc/render.hpp"

namespace reacproc {

namespace {

constexpr std::string_view kBlanks = " \t\r\n";

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(kBlanks);
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(kBlanks);
  return s.substr(first, last - first + 1);
}

std::string_view rtrim(std::string_view s) {
  const auto last = s.find_last_not_of(kBlanks);
  return last == std::string_view::npos ? std::string_view{} : s.substr(0, last + 1);
}

void split_logical_line(std::string_view logical, std::size_t first,
                        std::size_t last, std::vector<Statement>& out) {
  std::size_t start = 0;
  for (auto semi = logical.find(';'); semi != std::string_view::npos;
       semi = logical.find(';', start)) {
    out.push_back(
        {std::string(trim(logical.substr(start, semi + 1 - start))), first, last, true});
    start = semi + 1;
  }
  const auto rest = trim(logical.substr(start));
  if (!rest.empty()) out.push_back({std::string(rest), first, last, false});
}

std::string span_of(const std::string& file, const Statement& s) {
  std::string out = file + ":" + std::to_string(s.first_line);
  if (s.last_line != s.first_line) out += "-" + std::to_string(s.last_line);
  return out;
}

std::string describe(const std::vector<Violation>& violations) {
  std::string out;
  for (const auto& v : violations) {
    if (!out.empty()) out += "; ";
    out += v.law + " at " + v.location + ": " + std::to_string(v.initial_sum) +
           " vs " + std::to_string(v.final_sum);
  }
  return out;
}

std::string join(const std::vector<std::string>& names) {
  std::string out;
  for (const auto& n : names) {
    if (!out.empty()) out += ", ";
    out += n;
  }
  return out;
}

std::ofstream create_output(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::out | std::ios::trunc | std::ios::binary);
  if (!out) throw BatchError("cannot create " + path.string());
  return out;
}

}  // namespace

std::vector<Statement> assemble_statements(std::istream& in) {
  std::vector<Statement> out;
  std::string line;
  std::string logical;
  std::size_t line_no = 0;
  std::size_t first = 0;
  bool continued = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (!continued) {
      logical.clear();
      first = line_no;
    }
    const std::string_view stripped = rtrim(line);
    if (!stripped.empty() && stripped.back() == '\\') {
      logical.append(stripped.substr(0, stripped.size() - 1));
      logical += ' ';
      continued = true;
      continue;
    }
    logical += line;
    continued = false;
    split_logical_line(logical, first, line_no, out);
  }
  if (continued) split_logical_line(logical, first, line_no, out);
  return out;
}

std::string_view to_string(Disposition d) {
  switch (d) {
    case Disposition::kAccept: return "ACCEPT";
    case Disposition::kReject: return "REJECT";
    case Disposition::kUnknownParticle: return "UNKNOWN";
    case Disposition::kParseError: return "PARSE_ERROR";
  }
  return "?";
}

Tables load_tables(const std::filesystem::path& dict,
                   const std::filesystem::path& props,
                   const std::filesystem::path& leptons) {
  Tables t;
  t.dict = load_dictionary_file(dict);
  t.properties = load_property_files(props, leptons, t.dict);
  return t;
}

Outcome Processor::process(const Statement& s) const {
  Outcome out;
  if (!s.complete) {
    out.reason = "incomplete statement: missing ';'";
    return out;
  }
  Reaction parsed;
  try {
    parsed = parse_reaction(s.text);
  } catch (const ParseError& e) {
    out.reason = std::string("syntax error: ") + e.what();
    return out;
  }

  Reaction canonical = canonicalize(parsed, mode_, tables_.dict);
  out.canonical = render_reaction(canonical);
  out.verdict = check_all_laws(canonical, laws_, tables_.properties);
  switch (out.verdict.status) {
    case Status::kAccept:
      out.disposition = Disposition::kAccept;
      out.reason = "canonical: " + out.canonical;
      break;
    case Status::kReject:
      out.disposition = Disposition::kReject;
      out.reason = "violated " + describe(out.verdict.violations) +
                   "; canonical: " + out.canonical;
      break;
    case Status::kUnknown:
      out.disposition = Disposition::kUnknownParticle;
      out.reason = "unknown particle " + join(out.verdict.unknown_names) +
                   "; canonical: " + out.canonical;
      break;
  }
  return out;
}

RunSummary process_file(const RunConfig& cfg) {
  const Tables tables = load_tables(cfg.dict_path, cfg.props_path, cfg.leptons_path);
  return process_file(cfg, tables);
}

RunSummary process_file(const RunConfig& cfg, const Tables& tables) {
  struct Item {
    std::string file;
    Statement statement;
  };
  std::vector<Item> items;
  for (const auto& path : cfg.inputs) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw BatchError("cannot open input " + path.string());
    for (auto& s : assemble_statements(in))
      items.push_back({path.filename().string(), std::move(s)});
    if (in.bad()) throw BatchError("read error on " + path.string());
  }

  std::error_code ec;
  std::filesystem::create_directories(cfg.outdir, ec);
  if (ec) throw BatchError("cannot create " + cfg.outdir.string() + ": " + ec.message());
  auto accept = create_output(cfg.outdir / kAcceptFile);
  auto accept_sorted = create_output(cfg.outdir / kAcceptSortedFile);
  auto reject = create_output(cfg.outdir / kRejectFile);
  auto reject_sorted = create_output(cfg.outdir / kRejectSortedFile);
  auto unknown = create_output(cfg.outdir / kUnknownFile);
  auto log = create_output(cfg.outdir / kLogFile);

  const Processor processor(tables, cfg.mode, cfg.laws);
  std::vector<Outcome> outcomes(items.size());
  const unsigned workers =
      std::max(1u, std::min<unsigned>(cfg.jobs, static_cast<unsigned>(items.size())));
  if (workers <= 1) {
    for (std::size_t i = 0; i < items.size(); ++i)
      outcomes[i] = processor.process(items[i].statement);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w)
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < items.size(); i = next++)
          outcomes[i] = processor.process(items[i].statement);
      });
  }

  RunSummary summary;
  for (std::size_t i = 0; i < items.size(); ++i) {
    const Statement& s = items[i].statement;
    const Outcome& o = outcomes[i];
    switch (o.disposition) {
      case Disposition::kAccept:
        ++summary.accepted;
        accept << s.text << '\n';
        accept_sorted << o.canonical << '\n';
        break;
      case Disposition::kReject:
        ++summary.rejected;
        reject << s.text << '\n';
        reject_sorted << o.canonical << '\n';
        for (const auto& v : o.verdict.violations) ++summary.violations_per_law[v.law];
        break;
      case Disposition::kUnknownParticle:
        ++summary.unknown;
        unknown << s.text << '\n';
        break;
      case Disposition::kParseError:
        ++summary.parse_failed;
        unknown << s.text << '\n';
        break;
    }
    log << to_string(o.disposition) << '\t' << span_of(items[i].file, s) << ": "
        << o.reason << '\t' << s.text << '\n';
  }

  for (auto* f : {&accept, &accept_sorted, &reject, &reject_sorted, &unknown, &log}) {
    f->flush();
    if (!*f) throw BatchError("write error in " + cfg.outdir.string());
  }
  return summary;
}

}  // namespace reacproc
