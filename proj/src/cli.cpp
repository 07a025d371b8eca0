#include "hopfcyc/cli.hpp"

#include <chrono>
#include <fstream>
#include <optional>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "hopfcyc/actions.hpp"
#include "hopfcyc/cohomology.hpp"
#include "hopfcyc/enveloping.hpp"
#include "hopfcyc/io.hpp"

namespace hopfcyc::cli {

namespace {

struct RunConfig {
  std::string subcommand;
  std::string input;
  std::optional<std::string> character;
  unsigned max_degree = 0;
  std::string method = "both";
  std::uint64_t seed = 1;
  bool require_involution = false;
  std::string output;
  bool verbose = false;
};

struct Outcome {
  std::string report;
  bool passed = true;
};

// Bad flag values or names; exit code 2.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string header(const RunConfig& c, const std::string& algebra, const std::string& character) {
  std::string out = "command: " + c.subcommand + "\n";
  out += "algebra: " + algebra + "\n";
  if (!character.empty()) out += "character: " + character + "\n";
  if (c.max_degree > 0) out += "max-degree: " + std::to_string(c.max_degree) + "\n";
  out += "seed: " + std::to_string(c.seed) + "\n";
  return out;
}

std::string result_line(bool passed) { return std::string("result: ") + (passed ? "pass" : "FAIL") + "\n"; }

Character pick_character(const FiniteHopf& h, const std::string& name) {
  try {
    return h.character(name);
  } catch (const std::out_of_range& e) {
    throw ConfigError(e.what());
  }
}

Outcome check_hopf(const RunConfig& c) {
  FiniteHopf const h = io::load_hopf(c.input);
  std::vector<std::string> names;
  if (c.character) {
    pick_character(h, *c.character);
    names.push_back(*c.character);
  } else {
    names = h.character_names();
  }
  Outcome o;
  CheckReport report = check_hopf_axioms(h);
  std::string info;
  for (const auto& name : names) {
    Character const d = pick_character(h, name);
    CheckReport twisted = check_twisted_properties(h, d);
    for (auto item : twisted.items()) {
      item.instance = item.instance.empty() ? name : name + " " + item.instance;
      report.add(std::move(item));
    }
    InvolutionResult const inv = check_involution(h, d);
    if (c.require_involution) {
      CheckItem item;
      item.id = "twisted_involution";
      item.instance = name;
      item.passed = inv.holds;
      if (!inv.holds) item.witness = "at " + h.label(*inv.witness) + ": " + inv.detail;
      report.add(std::move(item));
    } else {
      info += "info: twisted_involution " + name + ": " + (inv.holds ? "holds" : "fails");
      if (!inv.holds) info += " at " + h.label(*inv.witness) + ": " + inv.detail;
      info += "\n";
    }
  }
  o.passed = report.passed();
  o.report = header(c, h.name(), c.character.value_or("")) + report.to_text() + info + result_line(o.passed);
  return o;
}

Outcome cyclic_relations(const RunConfig& c) {
  std::string const text = io::read_file(c.input);
  Outcome o;
  if (io::detect_kind(text) == io::InputKind::Lie) {
    io::LieInput const in = io::parse_lie(text);
    if (c.character) throw ConfigError("--character is not used with Lie input; set \"character\" in the file");
    EnvelopingModel const m(Enveloping(in.algebra), in.character);
    std::mt19937_64 rng(c.seed);
    std::map<unsigned, std::vector<Tensor<Monomial>>> samples;
    std::size_t count = 0;
    for (unsigned n = 0; n <= c.max_degree; ++n) {
      samples[n] = sample_tensors(m.algebra(), n, 3, 50, rng);
      count += samples[n].size();
    }
    CheckReport report = check_enveloping(m, c.max_degree);
    report.append(symbolic::relation_suite(m, samples, c.max_degree, [&](const Tensor<Monomial>& t) {
      return m.algebra().format(t);
    }));
    std::string character = "(";
    for (std::size_t i = 0; i < in.character.generator_values().size(); ++i) {
      character += (i ? ", " : "") + in.character.generator_values()[i].to_string();
    }
    character += ")";
    o.passed = report.passed();
    o.report = header(c, "U(" + in.name + ")", character) + "samples: " + std::to_string(count) + "\n" +
               report.to_text() + result_line(o.passed);
    return o;
  }
  FiniteHopf const h = io::parse_hopf(text);
  std::string const name = c.character.value_or("epsilon");
  HopfCyclicModule const m(h, pick_character(h, name));
  CheckReport const report = relation_suite(m, c.max_degree);
  o.passed = report.passed();
  o.report = header(c, h.name(), name) + report.to_text() + result_line(o.passed);
  return o;
}

Outcome cohomology(const RunConfig& c) {
  CohomologyOptions opts;
  opts.max_degree = c.max_degree;
  try {
    opts.method = parse_method(c.method);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  FiniteHopf const h = io::load_hopf(c.input);
  std::string const name = c.character.value_or("epsilon");
  HopfCyclicModule const m(h, pick_character(h, name));
  Outcome o;
  try {
    ComplexReport const r = compute_cohomology(m, name, opts);
    o.passed = r.methods_agree && r.euler_consistent;
    o.report = "command: cohomology\nseed: " + std::to_string(c.seed) + "\n" + r.to_text() + result_line(o.passed);
  } catch (const NotCyclic& e) {
    o.passed = false;
    o.report = header(c, h.name(), name) + "refused: " + e.what() + "\n" + result_line(false);
  }
  return o;
}

Outcome pair(const RunConfig& c) {
  io::PairInput const in = io::load_pair(c.input);
  AlgebraCochainModule const am(in.algebra);
  Cochain const phi = in.cochain(am);
  CheckReport const cocycle = check_cyclic_cocycle(am, phi);
  Outcome o;
  std::string body = "degree: " + std::to_string(in.degree) + "\n" + cocycle.to_text();
  try {
    SimilarityResult const s = similarity_invariance(am, phi, in.idempotent, in.units, in.conjugations, c.seed);
    body += "pairing: " + s.base.to_string() + "\n";
    body += "conjugations: " + std::to_string(s.values.size()) + "\n";
    for (std::size_t k = 0; k < s.values.size(); ++k) {
      body += "conjugate " + std::to_string(k) + ": " + s.values[k].to_string() + "\n";
    }
    body += std::string("similarity_invariant: ") + (s.invariant ? "yes" : "no") + "\n";
    o.passed = cocycle.passed() && s.invariant;
  } catch (const NotIdempotent& e) {
    body += std::string("refused: ") + e.what() + "\n";
    o.passed = false;
  }
  o.report = header(c, in.algebra.name(), "") + body + result_line(o.passed);
  return o;
}

Outcome gamma_check(const RunConfig& c) {
  io::GammaInput const in = io::load_gamma(c.input);
  std::string const name = c.character.value_or(in.character.value_or("epsilon"));
  Character const delta = pick_character(in.hopf, name);
  CheckReport report = check_action(in.hopf, in.algebra, in.action);
  if (!report.passed()) {
    Outcome o{header(c, in.hopf.name() + " on " + in.algebra.name(), name) + report.to_text() + result_line(false),
              false};
    return o;
  }
  report.append(check_trace(in.algebra, in.trace));
  report.append(check_delta_invariance(in.hopf, delta, in.algebra, in.action, in.trace));
  HopfCyclicModule const hm(in.hopf, delta);
  AlgebraCochainModule const am(in.algebra);
  report.append(check_gamma_morphism(hm, am, in.action, in.trace, c.max_degree));
  std::string values;
  SparseMatrix const g1 = characteristic_map(hm, am, in.action, in.trace, 1);
  for (std::size_t j = 0; j < g1.cols(); ++j) {
    values += "gamma(" + hm.basis_label(1, j) + ") = " + am.format(1, g1.column(j)) + "\n";
  }
  Outcome o;
  o.passed = report.passed();
  o.report = header(c, in.hopf.name() + " on " + in.algebra.name(), name) + report.to_text() + values +
             result_line(o.passed);
  return o;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Hopf cyclic cohomology toolkit", "hopfcyc"};
  app.require_subcommand(1);
  RunConfig config;
  struct Spec {
    const char* name;
    const char* help;
    unsigned default_degree;
  };
  std::vector<Spec> const specs{
      {"check-hopf", "Check Hopf axioms and twisted antipode properties", 0},
      {"cyclic-relations", "Verify every cyclic category relation up to --max-degree", 4},
      {"cohomology", "Hochschild and cyclic cohomology dimensions", 4},
      {"pair", "Pair a cyclic cocycle with an idempotent", 0},
      {"gamma-check", "Check the characteristic map against the cyclic operators", 3}};
  std::map<std::string, unsigned> degree_defaults;
  for (const auto& s : specs) {
    CLI::App* sub = app.add_subcommand(s.name, s.help);
    degree_defaults[s.name] = s.default_degree;
    sub->add_option("--input", config.input, "Input file (JSON)")->required();
    sub->add_option("--character", config.character, "Character name");
    if (s.default_degree > 0) {
      sub->add_option("--max-degree", config.max_degree, "Highest degree N")->check(CLI::PositiveNumber);
    }
    if (std::string(s.name) == "cohomology") {
      sub->add_option("--method", config.method, "lambda, bB or both")
          ->check(CLI::IsMember({"lambda", "bB", "both"}));
    }
    sub->add_option("--seed", config.seed, "Sample seed");
    if (std::string(s.name) == "check-hopf") {
      sub->add_flag("--require-involution", config.require_involution,
                    "Fail unless the twisted antipode squares to the identity");
    }
    sub->add_option("--output", config.output, "Write the report here instead of stdout");
    sub->add_flag("-v,--verbose", config.verbose, "Timing on stderr");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kParseError;
  }
  config.subcommand = app.get_subcommands().front()->get_name();
  if (config.max_degree == 0) config.max_degree = degree_defaults[config.subcommand];

  auto const start = std::chrono::steady_clock::now();
  Outcome outcome;
  try {
    if (config.subcommand == "check-hopf") {
      outcome = check_hopf(config);
    } else if (config.subcommand == "cyclic-relations") {
      outcome = cyclic_relations(config);
    } else if (config.subcommand == "cohomology") {
      outcome = cohomology(config);
    } else if (config.subcommand == "pair") {
      outcome = pair(config);
    } else {
      outcome = gamma_check(config);
    }
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kParseError;
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << "\n";
    return kParseError;
  } catch (const std::length_error& e) {
    err << "error: " << e.what() << "\n";
    return kParseError;
  }
  if (config.verbose) {
    auto const ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
    err << config.subcommand << ": " << ms.count() << " ms\n";
  }

  if (config.output.empty()) {
    out << outcome.report;
  } else {
    std::ofstream file(config.output, std::ios::binary);
    if (!file) {
      err << "error: cannot write " << config.output << "\n";
      return kParseError;
    }
    file << outcome.report;
  }
  return outcome.passed ? kPass : kFail;
}

}  // namespace hopfcyc::cli
