#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "catfam/bijections.hpp"
#include "catfam/counting.hpp"
#include "catfam/dynamics.hpp"
#include "catfam/errors.hpp"
#include "catfam/family.hpp"
#include "catfam/sequence.hpp"
#include "catfam/transforms.hpp"
#include "catfam/verify.hpp"

namespace {

using catfam::BigCount;
using catfam::Sequence;
using ordered_json = nlohmann::ordered_json;

// exit codes shared by every subcommand
constexpr int kOk = 0;
constexpr int kVerifyFailed = 1;
constexpr int kParseError = 2;
constexpr int kDomainError = 3;
constexpr int kCapExceeded = 4;

enum class OutputFormat { json_lines, csv, bfile };

struct GlobalOptions {
  int cap = catfam::kDefaultGenerationCap;
  int workers = 0;
  std::string format = "json-lines";

  OutputFormat output_format() const {
    if (format == "json-lines") return OutputFormat::json_lines;
    if (format == "csv") return OutputFormat::csv;
    if (format == "bfile") return OutputFormat::bfile;
    throw std::invalid_argument("unknown format: " + format);
  }

  catfam::CensusOptions census() const { return {workers, cap}; }

  void check_cap(int generation) const {
    if (generation > cap) {
      throw catfam::CapExceeded("generation " + std::to_string(generation) +
                                " exceeds cap " + std::to_string(cap) +
                                " (raise with --cap)");
    }
  }
};

struct GenerationSpan {
  int first = 0;
  int last = 0;
};

// "a..b" inclusive, or a single "n"
GenerationSpan parse_span(const std::string& text) {
  const auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      const int n = std::stoi(text);
      return {n, n};
    }
    const int a = std::stoi(text.substr(0, dots));
    const int b = std::stoi(text.substr(dots + 2));
    if (a < 0 || b < a) throw std::invalid_argument("");
    return {a, b};
  } catch (const std::exception&) {
    throw std::invalid_argument("bad range '" + text + "', expected N or A..B");
  }
}

std::string quote_csv(const std::string& field) { return '"' + field + '"'; }

// ---------------------------------------------------------------------------
// count rows

struct CountRow {
  int n = 0;
  std::optional<int> r;
  std::optional<BigCount> brute;
  std::optional<BigCount> closed;
};

void emit_count_header(OutputFormat format, const CountRow& shape) {
  if (format != OutputFormat::csv) return;
  std::string header = shape.r ? "n,r" : "n";
  header += shape.brute && shape.closed ? ",brute,closed,match" : ",count";
  std::cout << header << "\n";
}

void emit_count_row(OutputFormat format, const CountRow& row) {
  const bool dual = row.brute && row.closed;
  switch (format) {
    case OutputFormat::json_lines: {
      ordered_json line;
      line["n"] = row.n;
      if (row.r) line["r"] = *row.r;
      if (dual) {
        line["brute"] = row.brute->str();
        line["closed"] = row.closed->str();
        line["match"] = *row.brute == *row.closed;
      } else {
        line["count"] = row.brute ? row.brute->str() : row.closed->str();
      }
      std::cout << line.dump() << "\n";
      break;
    }
    case OutputFormat::csv: {
      std::cout << row.n;
      if (row.r) std::cout << ',' << *row.r;
      if (dual) {
        std::cout << ',' << row.brute->str() << ',' << row.closed->str() << ','
                  << (*row.brute == *row.closed ? "true" : "false");
      } else {
        std::cout << ',' << (row.brute ? row.brute->str() : row.closed->str());
      }
      std::cout << "\n";
      break;
    }
    case OutputFormat::bfile: {
      if (row.r) {
        throw std::invalid_argument("bfile format needs one value per n");
      }
      std::cout << row.n << ' ' << (row.brute ? row.brute->str() : row.closed->str())
                << "\n";
      break;
    }
  }
}

// ---------------------------------------------------------------------------
// subcommand bodies

int run_transform(const std::string& endo_name, const std::string& seq_text) {
  const auto endo = catfam::parse_endomorphism(endo_name);
  if (!endo) throw std::invalid_argument("unknown endomorphism: " + endo_name);
  const Sequence s = catfam::parse_sequence(seq_text);
  std::cout << catfam::apply(*endo, s) << "\n";
  return kOk;
}

int run_orbit(const std::string& endo_name, const std::string& seq_text) {
  const auto endo = catfam::parse_endomorphism(endo_name);
  if (!endo) throw std::invalid_argument("unknown endomorphism: " + endo_name);
  const Sequence s = catfam::parse_sequence(seq_text);
  if (!catfam::is_subdiagonal(s)) {
    throw std::domain_error("orbit: input is not subdiagonal");
  }
  const catfam::OrbitTrace trace = catfam::orbit(s, *endo);
  for (const Sequence& step : trace.visited) std::cout << step << "\n";
  std::cout << "steps=" << trace.steps_to_cycle << " period=" << trace.period << "\n";
  return kOk;
}

int run_enumerate(const GlobalOptions& global, const std::string& kind, int n,
                  std::optional<catfam::Term> m) {
  if ((kind == "m-increase") != m.has_value()) {
    throw std::invalid_argument("--m is required for m-increase and only there");
  }
  if (n < 0) throw std::invalid_argument("negative generation");
  global.check_cap(n);

  const OutputFormat format = global.output_format();
  if (format == OutputFormat::bfile) {
    throw std::invalid_argument("enumerate has no bfile form; use count");
  }
  if (format == OutputFormat::csv) std::cout << "seq\n";
  const auto emit = [&](const Sequence& s) {
    if (format == OutputFormat::json_lines) {
      ordered_json line;
      line["seq"] = catfam::to_string(s);
      std::cout << line.dump() << "\n";
    } else {
      std::cout << quote_csv(catfam::to_string(s)) << "\n";
    }
  };

  if (kind == "all") {
    for (const Sequence& s : catfam::GenerationRange(n)) emit(s);
  } else if (kind == "family") {
    catfam::visit_family_generation(n, [&](const catfam::FamilyNode& node) {
      emit(node.full_name);
    });
  } else if (kind == "fixed") {
    for (const Sequence& s : catfam::GenerationRange(n)) {
      if (catfam::delta(s) == s) emit(s);
    }
  } else if (kind == "double") {
    for (const Sequence& s : catfam::GenerationRange(n)) {
      if (catfam::gamma(catfam::gamma(s)) == s) emit(s);
    }
  } else if (kind == "unit-increase") {
    for (const Sequence& s : catfam::unit_increase_range(n)) emit(s);
  } else if (kind == "m-increase") {
    for (const Sequence& s : catfam::MIncreaseRange(*m, n)) emit(s);
  } else {
    throw std::invalid_argument("unknown enumerate kind: " + kind);
  }
  return kOk;
}

int run_count(const GlobalOptions& global, const std::string& kind,
              const std::string& span_text, std::optional<catfam::Term> m) {
  const GenerationSpan span = parse_span(span_text);
  const OutputFormat format = global.output_format();
  const bool needs_m = kind == "m-increase" || kind == "fuss-catalan";
  if (needs_m != m.has_value()) {
    throw std::invalid_argument("--m is required for m-increase/fuss-catalan and only there");
  }
  const bool brute_kind = kind == "fixed" || kind == "double" || kind == "name-dist" ||
                          kind == "unit-increase" || kind == "m-increase";
  if (brute_kind) global.check_cap(span.last);

  bool header_done = false;
  const auto emit = [&](const CountRow& row) {
    if (!header_done) {
      emit_count_header(format, row);
      header_done = true;
    }
    emit_count_row(format, row);
  };

  for (int n = span.first; n <= span.last; ++n) {
    const auto nu = static_cast<std::uint64_t>(n);
    if (kind == "fixed") {
      emit({n, {}, BigCount(catfam::count_fixed_points_delta(n, global.census())),
            catfam::catalan(nu + 1)});
    } else if (kind == "double") {
      emit({n, {}, BigCount(catfam::count_double_points_gamma(n, global.census())), {}});
    } else if (kind == "name-dist") {
      const catfam::NameDistribution dist = catfam::name_distribution(n);
      for (int r = 0; r <= n; ++r) {
        emit({n, r, BigCount(dist.counts[static_cast<std::size_t>(r)]),
              catfam::name_distribution_closed(nu, static_cast<std::uint64_t>(r))});
      }
    } else if (kind == "unit-increase") {
      std::uint64_t census = 0;
      for ([[maybe_unused]] const Sequence& s : catfam::unit_increase_range(n)) ++census;
      emit({n, {}, BigCount(census), catfam::catalan(nu + 1)});
    } else if (kind == "m-increase") {
      std::uint64_t census = 0;
      for ([[maybe_unused]] const Sequence& s : catfam::MIncreaseRange(*m, n)) ++census;
      emit({n, {}, BigCount(census), catfam::fuss_catalan(*m, nu + 1)});
    } else if (kind == "catalan") {
      emit({n, {}, {}, catfam::catalan(nu)});
    } else if (kind == "fuss-catalan") {
      emit({n, {}, {}, catfam::fuss_catalan(*m, nu)});
    } else {
      throw std::invalid_argument("unknown count kind: " + kind);
    }
  }
  return kOk;
}

int run_verify(const GlobalOptions& global, const std::string& level) {
  catfam::VerifyOptions opts;
  opts.workers = global.workers;
  if (level == "quick") {
    opts.exhaustive_max = 6;
  } else if (level == "full") {
    opts.exhaustive_max = global.cap;
  } else {
    throw std::invalid_argument("verify level must be quick or full");
  }
  return catfam::report_verification(catfam::run_verification(opts), std::cout) == 0
             ? kOk
             : kVerifyFailed;
}

int run_biject(const std::string& direction, const std::string& input, catfam::Term m) {
  if (m < 1) throw std::invalid_argument("--m must be >= 1");
  if (direction == "encode") {
    const Sequence a = catfam::parse_sequence(input);
    std::cout << catfam::to_string(catfam::encode_ballot_m(a, m)) << "\n";
  } else if (direction == "decode") {
    const catfam::BallotWord w = catfam::parse_ballot_word(input);
    std::cout << catfam::decode_ballot_m(w, m) << "\n";
  } else if (direction == "west") {
    const Sequence a = catfam::parse_sequence(input);
    const std::vector<catfam::Term> labels = catfam::west_tree_labels_m(a, m);
    for (std::size_t i = 0; i < labels.size(); ++i) {
      std::cout << (i > 0 ? "," : "") << labels[i];
    }
    std::cout << "\n";
  } else {
    throw std::invalid_argument("direction must be encode, decode or west");
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"self-describing sequences, the Catalan family tree and friends"};
  app.require_subcommand(1);

  GlobalOptions global;
  app.add_option("--cap", global.cap, "highest generation brute-force jobs may touch")
      ->capture_default_str();
  app.add_option("--workers", global.workers, "threads for censuses (0 = all cores)")
      ->capture_default_str();
  app.add_option("--format", global.format, "json-lines, csv or bfile")
      ->capture_default_str();

  std::string endo_name, seq_text, kind, span_text, level, direction, input;
  int generation = 0;
  std::optional<catfam::Term> m_opt;
  catfam::Term m_biject = 1;

  CLI::App* transform = app.add_subcommand("transform", "apply one endomorphism once");
  transform->add_option("endomorphism", endo_name, "delta, delta-fast, gamma or mu")
      ->required();
  transform->add_option("sequence", seq_text, "comma-separated terms")->required();

  CLI::App* orbit = app.add_subcommand("orbit", "iterate until the orbit closes");
  orbit->add_option("endomorphism", endo_name, "delta, delta-fast, gamma or mu")
      ->required();
  orbit->add_option("sequence", seq_text, "comma-separated terms")->required();

  CLI::App* enumerate =
      app.add_subcommand("enumerate", "list one generation of a sequence family");
  enumerate
      ->add_option("kind", kind, "all, family, fixed, double, unit-increase or m-increase")
      ->required();
  enumerate->add_option("generation", generation)->required();
  enumerate->add_option("--m", m_opt, "increase bound for m-increase");

  CLI::App* count = app.add_subcommand("count", "count a family over a generation range");
  count
      ->add_option("kind", kind,
                   "fixed, double, name-dist, unit-increase, m-increase, catalan or "
                   "fuss-catalan")
      ->required();
  count->add_option("range", span_text, "N or A..B (inclusive)")->required();
  count->add_option("--m", m_opt, "parameter for m-increase/fuss-catalan");

  CLI::App* verify = app.add_subcommand("verify", "run the invariant suite");
  verify->add_option("level", level, "quick or full")->required();

  CLI::App* biject = app.add_subcommand("biject", "ballot encodings and label shifts");
  biject->add_option("direction", direction, "encode, decode or west")->required();
  biject->add_option("input", input, "sequence or ballot word")->required();
  biject->add_option("--m", m_biject, "increase bound")->capture_default_str();

  for (CLI::App* sub : {transform, orbit, enumerate, count, verify, biject}) {
    sub->fallthrough();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return kParseError;
  }

  try {
    if (*transform) return run_transform(endo_name, seq_text);
    if (*orbit) return run_orbit(endo_name, seq_text);
    if (*enumerate) return run_enumerate(global, kind, generation, m_opt);
    if (*count) return run_count(global, kind, span_text, m_opt);
    if (*verify) return run_verify(global, level);
    if (*biject) return run_biject(direction, input, m_biject);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kParseError;
  } catch (const catfam::CapExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kCapExceeded;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kDomainError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kVerifyFailed;
  }
  return kParseError;
}
