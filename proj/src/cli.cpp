#include "cqsym/cli.hpp"

#include <cctype>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "cqsym/characters.hpp"
#include "cqsym/error.hpp"
#include "cqsym/json_io.hpp"
#include "cqsym/oracle.hpp"
#include "cqsym/verify.hpp"

namespace cqsym::cli {

namespace {

using json_io::Json;

struct Flags {
  std::optional<int> colors;
  std::optional<int> max_n;
  std::optional<int> alphabet;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> input;
  std::optional<std::string> suite;
  std::optional<std::string> basis;
  int indent = -1;
};

// One parsed command and its input source.
class Command {
 public:
  Command(std::string verb, std::string op, Flags flags, std::istream& in)
      : verb_(std::move(verb)), op_(std::move(op)), flags_(std::move(flags)), in_(in) {}

  const std::string& verb() const { return verb_; }
  const std::string& op() const { return op_; }
  const Flags& flags() const { return flags_; }

  /// The JSON payload: inline text, a file, or standard input.
  const Json& payload() {
    if (!payload_) payload_ = load();
    return *payload_;
  }

  int colors(int fallback) const { return flags_.colors.value_or(fallback); }
  int max_n(int fallback) const { return flags_.max_n.value_or(fallback); }
  int alphabet(int fallback) const { return flags_.alphabet.value_or(fallback); }

  [[noreturn]] void unknown_op() const {
    throw ParseError("operation", "unknown operation \"" + op_ + "\" for \"" + verb_ + "\"");
  }

 private:
  Json load() {
    std::string text;
    const auto& source = flags_.input;
    if (!source || *source == "-") {
      std::ostringstream buffer;
      buffer << in_.rdbuf();
      text = buffer.str();
    } else if (!source->empty() && (source->front() == '{' || source->front() == '[')) {
      text = *source;
    } else {
      std::ifstream file(*source);
      if (!file) throw ParseError("--in", "cannot read file \"" + *source + "\"");
      std::ostringstream buffer;
      buffer << file.rdbuf();
      text = buffer.str();
    }
    try {
      return Json::parse(text);
    } catch (const Json::parse_error& e) {
      throw ParseError("input:" + std::to_string(e.byte), e.what());
    }
  }

  std::string verb_;
  std::string op_;
  Flags flags_;
  std::istream& in_;
  std::optional<Json> payload_;
};

// ---------------------------------------------------------------------------
// Character expressions: names, inv(.), bar(.), nu(.) and '*' for convolution.

template <class Algebra>
class ExpressionParser {
 public:
  using Factory = Character<Algebra> (*)(const std::string&, int);

  ExpressionParser(std::string text, int colors, Factory make) : text_(std::move(text)), colors_(colors), make_(make) {}

  Character<Algebra> parse() {
    auto out = product();
    skip();
    if (pos_ != text_.size()) fail("unexpected input");
    return out;
  }

 private:
  Character<Algebra> product() {
    auto out = factor();
    while (skip(), pos_ < text_.size() && text_[pos_] == '*') {
      ++pos_;
      out = convolve(out, factor());
    }
    return out;
  }

  Character<Algebra> factor() {
    skip();
    const auto start = pos_;
    while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == ':')) ++pos_;
    const auto word = text_.substr(start, pos_ - start);
    if (word.empty()) fail("expected a character");
    skip();
    if (pos_ < text_.size() && text_[pos_] == '(') {
      ++pos_;
      auto inner = product();
      skip();
      if (pos_ >= text_.size() || text_[pos_] != ')') fail("expected ')'");
      ++pos_;
      if (word == "inv") return inverse(inner);
      if (word == "bar") return bar(inner);
      if (word == "nu") return nu(inner);
      pos_ = start;
      fail("unknown function \"" + word + "\"");
    }
    return make_(word, colors_);
  }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError("character:" + std::to_string(pos_ + 1), message);
  }

  std::string text_;
  int colors_;
  Factory make_;
  std::size_t pos_ = 0;
};

PosetCharacter parse_poset_character(const std::string& text, int colors) {
  return ExpressionParser<PosetHopf>(text, colors, poset_character).parse();
}

QSymCharacter parse_qsym_character(const std::string& text, int colors) {
  return ExpressionParser<QSymHopf>(text, colors, qsym_character).parse();
}

std::string read_string(const Json& value, const std::string& at) {
  if (!value.is_string()) throw ParseError(at, "expected a string");
  return value.get<std::string>();
}

// ---------------------------------------------------------------------------
// Shared payload shapes

/// A single poset, or a poset algebra element when "terms" is present.
PosetAlgebraElement read_poset_like(const Json& value, const std::string& at) {
  if (value.is_object() && value.contains("terms")) return json_io::read_poset_element(value, at);
  return PosetAlgebraElement::basis(json_io::read_poset(value, at));
}

std::optional<Basis> requested_basis(const Command& command) {
  if (!command.flags().basis) return std::nullopt;
  try {
    return parse_basis(*command.flags().basis);
  } catch (const ParseError& e) {
    throw ParseError("--basis", e.what());
  }
}

Json write_in_basis(const Command& command, const QSymElement& element) {
  const auto basis = requested_basis(command);
  return json_io::write_element(basis ? to_basis(element, *basis) : element);
}

Json write_tensor_in_basis(const Command& command, const QSymTensor& tensor) {
  const auto basis = requested_basis(command);
  if (!basis || *basis == tensor.basis) return json_io::write_tensor(tensor);
  if (*basis != Basis::M) throw ParseError("--basis", "tensors convert only to M");
  return json_io::write_tensor(to_m(tensor));
}

Json composition_object(const ColoredComposition& alpha) {
  return {{"m", alpha.colors()}, {"comp", json_io::write_composition(alpha)}};
}

Json composition_list(int colors, const std::vector<ColoredComposition>& list) {
  Json comps = Json::array();
  for (const auto& alpha : list) comps.push_back(json_io::write_composition(alpha));
  return {{"m", colors}, {"comps", comps}};
}

ColoredComposition read_composition_payload(Command& command) {
  const auto& p = command.payload();
  return json_io::read_composition(json_io::member(p, "comp", ""), json_io::read_colors(p, ""), "/comp");
}

// ---------------------------------------------------------------------------
// Verbs

Json run_comp(Command& command) {
  const auto& op = command.op();
  if (op == "enumerate" || op == "peaks") {
    const int colors = command.colors(1);
    std::vector<ColoredComposition> all;
    for (int n = 0; n <= command.max_n(3); ++n) {
      for (auto& alpha : op == "peaks" ? enumerate_peak_compositions(colors, n) : enumerate_compositions(colors, n)) {
        all.push_back(std::move(alpha));
      }
    }
    return composition_list(colors, all);
  }
  const auto alpha = read_composition_payload(command);
  if (op == "hat") return composition_object(hat(alpha));
  if (op == "conjugate") return composition_object(conjugate(alpha));
  if (op == "reverse") return composition_object(reverse(alpha));
  if (op == "is-peak") return {{"peak", is_peak_composition(alpha)}};
  if (op == "coarsenings") return composition_list(alpha.colors(), coarsenings(alpha));
  if (op == "refinements") return composition_list(alpha.colors(), refinements(alpha));
  if (op == "chain") return json_io::write_poset(ColoredPoset::chain(representative_chain(alpha)));
  command.unknown_op();
}

Json run_perm(Command& command) {
  const auto& p = command.payload();
  const auto pi = json_io::read_permutation(json_io::member(p, "perm", ""), json_io::read_colors(p, ""), "/perm");
  const auto& op = command.op();
  if (op == "descent") {
    return {{"m", pi.colors()}, {"comp", json_io::write_composition(descent_composition(pi))}, {"set", descent_set(pi)}};
  }
  if (op == "peak") {
    return {{"m", pi.colors()}, {"comp", json_io::write_composition(peak_composition(pi))}, {"set", peak_set(pi)}};
  }
  if (op == "chain") return json_io::write_poset(ColoredPoset::chain(pi));
  command.unknown_op();
}

Json run_poset(Command& command) {
  const auto& op = command.op();
  if (op == "enumerate") {
    const int colors = command.colors(1);
    Json posets = Json::array();
    Json counts = Json::array();
    for (int n = 0; n <= command.max_n(3); ++n) {
      const auto all = enumerate_canonical_posets(colors, n);
      counts.push_back(all.size());
      for (const auto& poset : all) posets.push_back(json_io::write_poset_body(poset));
    }
    return {{"m", colors}, {"counts", counts}, {"posets", posets}};
  }
  const auto& p = command.payload();
  if (op == "equivalent") {
    const int colors = json_io::read_colors(p, "");
    const auto& pair = json_io::member(p, "posets", "");
    if (!pair.is_array() || pair.size() != 2) throw ParseError("/posets", "expected two posets");
    return {{"equivalent", equivalent(json_io::read_poset_body(pair[0], colors, "/posets/0"),
                                      json_io::read_poset_body(pair[1], colors, "/posets/1"))}};
  }
  if (op == "product") {
    const auto left = read_poset_like(json_io::member(p, "left", ""), "/left");
    const auto right = read_poset_like(json_io::member(p, "right", ""), "/right");
    return json_io::write_poset_element(product(left, right));
  }
  if (op == "coproduct") return json_io::write_poset_tensor(coproduct(read_poset_like(p, "")));
  if (op == "antipode") return json_io::write_poset_element(antipode(read_poset_like(p, "")));
  if (op == "gamma") return write_in_basis(command, gamma(read_poset_like(p, "")));
  if (op == "lambda") return write_in_basis(command, lambda(read_poset_like(p, "")));

  const auto poset = json_io::read_poset(p, "");
  if (op == "canonical") return json_io::write_poset(canonical_form(poset));
  if (op == "ideals") {
    Json out = Json::array();
    for (const auto& ideal : ideals(poset)) {
      Json values = Json::array();
      for (const auto& e : ideal.lower.elements()) values.push_back(e.value);
      out.push_back(values);
    }
    return {{"ideals", out}};
  }
  if (op == "extensions") {
    Json out = Json::array();
    for (const auto& pi : linear_extensions(poset)) out.push_back(json_io::write_permutation(pi));
    return {{"m", poset.colors()}, {"extensions", out}};
  }
  if (op == "natural") return {{"naturally_labeled", is_naturally_labeled(poset)}};
  command.unknown_op();
}

Json run_qsym(Command& command) {
  const auto& op = command.op();
  const auto& p = command.payload();
  if (op == "multiply") {
    const auto left = json_io::read_element(json_io::member(p, "left", ""), "/left");
    const auto right = json_io::read_element(json_io::member(p, "right", ""), "/right");
    return write_in_basis(command, multiply(left, right));
  }
  if (op == "multiply-factors") return write_in_basis(command, multiply_factors(json_io::read_tensor(p, "")));
  const auto element = json_io::read_element(p, "");
  if (op == "convert") {
    if (!command.flags().basis) throw ParseError("--basis", "convert needs --basis");
    return write_in_basis(command, element);
  }
  if (op == "coproduct") return write_tensor_in_basis(command, coproduct(element));
  if (op == "antipode") return write_in_basis(command, antipode(element));
  if (op == "theta") return write_in_basis(command, theta(element));
  if (op == "counit") return {{"counit", json_io::write_rational(element.counit())}};
  command.unknown_op();
}

// Characters act on {"character": expr, "poset": ...} or {"character": expr, "element": ...}.
Json run_char(Command& command) {
  const auto& p = command.payload();
  const auto& op = command.op();
  const bool on_posets = p.is_object() && p.contains("poset");
  if (!on_posets && !(p.is_object() && p.contains("element"))) {
    throw ParseError("", "expected a \"poset\" or an \"element\" member");
  }
  const auto poset_value = on_posets ? read_poset_like(p["poset"], "/poset") : PosetAlgebraElement();
  const auto qsym_value = on_posets ? QSymElement() : json_io::read_element(p["element"], "/element");
  const int colors = on_posets ? poset_value.colors() : qsym_value.colors();

  if (op == "eval") {
    const auto text = read_string(json_io::member(p, "character", ""), "/character");
    const Rational value =
        on_posets ? parse_poset_character(text, colors)(poset_value) : parse_qsym_character(text, colors)(qsym_value);
    return {{"value", json_io::write_rational(value)}};
  }
  if (op == "psi") {
    const auto& tuple = json_io::member(p, "tuple", "");
    if (tuple.is_string()) {
      const auto kind = tuple.get<std::string>();
      if (kind != "zeta" && kind != "nu") throw ParseError("/tuple", "expected \"zeta\", \"nu\" or a list of characters");
      if (on_posets) return json_io::write_element(psi(poset_value, kind == "zeta" ? zeta_p_tuple(colors) : nu_p_tuple(colors)));
      return json_io::write_element(psi(qsym_value, kind == "zeta" ? zeta_q_tuple(colors) : nu_q_tuple(colors)));
    }
    if (!tuple.is_array()) throw ParseError("/tuple", "expected \"zeta\", \"nu\" or a list of characters");
    if (on_posets) {
      CharacterTuple<PosetHopf> factors;
      for (std::size_t j = 0; j < tuple.size(); ++j) {
        factors.push_back(parse_poset_character(read_string(tuple[j], "/tuple/" + std::to_string(j)), colors));
      }
      return json_io::write_element(psi(poset_value, factors));
    }
    CharacterTuple<QSymHopf> factors;
    for (std::size_t j = 0; j < tuple.size(); ++j) {
      factors.push_back(parse_qsym_character(read_string(tuple[j], "/tuple/" + std::to_string(j)), colors));
    }
    return json_io::write_element(psi(qsym_value, factors));
  }
  command.unknown_op();
}

Json run_oracle(Command& command) {
  const auto& op = command.op();
  const int alphabet = command.alphabet(2);
  const auto& p = command.payload();
  if (op == "truncate") return json_io::write_polynomial(truncate(json_io::read_element(p, ""), alphabet));
  const auto poset = json_io::read_poset(p, "");
  if (op == "ppartitions") return json_io::write_polynomial(enumerate_ppartitions(poset, alphabet));
  if (op == "enriched") return json_io::write_polynomial(enumerate_enriched(poset, alphabet));
  if (op == "split") {
    const auto report = split_alphabet_report(poset, alphabet);
    return {{"whole_count", json_io::write_rational(report.whole_count)},
            {"split_count", json_io::write_rational(report.split_count)},
            {"polynomials_equal", report.polynomials_equal},
            {"holds", report.holds()}};
  }
  command.unknown_op();
}

Json grid_json(const VerifyOptions& options) {
  return {{"m", options.colors},
          {"max_size", options.max_size},
          {"max_degree", options.max_degree},
          {"max_N", options.alphabet},
          {"seed", options.seed}};
}

Json report_json(const SuiteReport& report) {
  return {{"suite", report.suite},
          {"passed", report.passed()},
          {"checks", report.checks},
          {"failures", report.failures},
          {"counterexamples", report.counterexamples},
          {"grid", grid_json(report.options)}};
}

Json run_verify(Command& command, int& exit_code) {
  std::string name = command.op();
  if (command.flags().suite) {
    if (!name.empty() && name != *command.flags().suite) throw ParseError("--suite", "two different suites named");
    name = *command.flags().suite;
  }
  if (name.empty()) throw ParseError("suite", "name a suite, \"all\" or \"list\"");
  if (name == "list") {
    Json out = Json::array();
    for (const auto& info : suites()) {
      out.push_back({{"name", info.name}, {"summary", info.summary}, {"defaults", grid_json(info.defaults)}});
    }
    return {{"suites", out}};
  }
  auto options_for = [&](const SuiteInfo& info) {
    auto options = info.defaults;
    if (command.flags().colors) options.colors = *command.flags().colors;
    if (command.flags().max_n) options.max_size = options.max_degree = *command.flags().max_n;
    if (command.flags().alphabet) options.alphabet = *command.flags().alphabet;
    if (command.flags().seed) options.seed = *command.flags().seed;
    return options;
  };
  if (name == "all") {
    Json reports = Json::array();
    bool passed = true;
    for (const auto& info : suites()) {
      const auto report = run_suite(info.name, options_for(info));
      passed = passed && report.passed();
      reports.push_back(report_json(report));
    }
    if (!passed) exit_code = kExitVerifyFailed;
    return {{"passed", passed}, {"suites", reports}};
  }
  const auto report = run_suite(name, options_for(suite_info(name)));
  if (!report.passed()) exit_code = kExitVerifyFailed;
  return report_json(report);
}

Json run_dims(Command& command) {
  std::vector<int> colors;
  if (command.flags().colors) {
    colors.push_back(*command.flags().colors);
  } else {
    colors = {1, 2, 3};
  }
  Json rows = Json::array();
  for (int m : colors) {
    for (const auto& row : dimension_rows(m, command.max_n(5))) {
      rows.push_back({{"m", row.colors},
                      {"n", row.n},
                      {"qsym", row.qsym_enumerated},
                      {"qsym_formula", row.qsym_formula},
                      {"peak", row.peak_enumerated},
                      {"peak_recurrence", row.peak_recurrence},
                      {"peak_rank", row.peak_rank}});
    }
  }
  return {{"rows", rows}};
}

Json error_json(const std::string& kind, const std::string& key, const std::string& value, const std::string& message) {
  return {{"error", {{"kind", kind}, {key, value}, {"message", message}}}};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::istream& in) {
  CLI::App app{"Colored posets, colored quasisymmetric functions and colored peak algebras"};
  app.name("cqsym");
  app.require_subcommand(1);

  Flags flags;
  app.add_option("--m", flags.colors, "Number of colors");
  app.add_option("--max-n", flags.max_n, "Largest size or degree");
  app.add_option("--max-N", flags.alphabet, "Alphabet truncation N (first index <= N)");
  app.add_option("--seed", flags.seed, "Seed for sampled checks");
  app.add_option("--in", flags.input, "Inline JSON, a file path, or - for standard input");
  app.add_option("--suite", flags.suite, "Verification suite");
  app.add_option("--basis", flags.basis, "Output basis: M, F or K");
  app.add_option("--json-indent", flags.indent, "Indent width; -1 prints one line");

  const std::vector<std::pair<std::string, std::string>> verbs{
      {"comp", "hat, conjugate, reverse, is-peak, coarsenings, refinements, chain, enumerate, peaks"},
      {"perm", "descent, peak, chain"},
      {"poset", "canonical, ideals, extensions, natural, equivalent, enumerate, product, coproduct, antipode, gamma, lambda"},
      {"qsym", "convert, multiply, multiply-factors, coproduct, antipode, theta, counit"},
      {"char", "eval, psi"},
      {"oracle", "ppartitions, enriched, truncate, split"},
      {"verify", "run a property suite; \"list\" and \"all\" are accepted"},
      {"dims", "graded dimensions of QSym and the peak algebra"},
  };
  std::string op;
  for (const auto& [verb, ops] : verbs) {
    auto* sub = app.add_subcommand(verb, ops);
    sub->fallthrough();
    if (verb != "dims") sub->add_option("operation", op, "Operation");
  }

  auto emit = [&](const Json& value) { out << value.dump(flags.indent) << "\n"; };
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::Success&) {
    const auto subs = app.get_subcommands();
    out << (subs.empty() ? app.help() : subs.front()->help());
    return kExitOk;
  } catch (const CLI::Error& e) {
    emit(error_json("parse", "location", "arguments", e.what()));
    return kExitParse;
  }

  const std::string verb = app.get_subcommands().front()->get_name();
  int exit_code = kExitOk;
  try {
    Command command(verb, op, flags, in);
    Json result;
    if (verb == "comp") {
      result = run_comp(command);
    } else if (verb == "perm") {
      result = run_perm(command);
    } else if (verb == "poset") {
      result = run_poset(command);
    } else if (verb == "qsym") {
      result = run_qsym(command);
    } else if (verb == "char") {
      result = run_char(command);
    } else if (verb == "oracle") {
      result = run_oracle(command);
    } else if (verb == "verify") {
      result = run_verify(command, exit_code);
    } else {
      result = run_dims(command);
    }
    emit(result);
  } catch (const ParseError& e) {
    emit(error_json("parse", "location", e.location(), e.what()));
    return kExitParse;
  } catch (const InvariantError& e) {
    emit(error_json("invariant", "invariant", e.invariant(), e.what()));
    return kExitInvariant;
  } catch (const Json::exception& e) {
    emit(error_json("parse", "location", "input", e.what()));
    return kExitParse;
  }
  return exit_code;
}

}  // namespace cqsym::cli
