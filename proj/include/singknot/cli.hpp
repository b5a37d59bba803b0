#pragma once

// Command-line front end. Kept in a header so tests can drive it in-process.
//
// Exit codes: 0 success, 2 parse or validation error, 3 precondition error,
// 4 invariance violation found by fuzzing.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "singknot/alexander.hpp"
#include "singknot/bracket.hpp"
#include "singknot/diagram.hpp"
#include "singknot/moves.hpp"
#include "singknot/poly.hpp"

namespace singknot::cli {

enum ExitCode : int { kOk = 0, kInvalidInput = 2, kPrecondition = 3, kViolation = 4 };

inline nlohmann::ordered_json poly_json(const LaurentPoly& p) {
  nlohmann::ordered_json terms = nlohmann::ordered_json::array();
  for (const auto& [e, c] : p.terms())
    terms.push_back({{"coefficient", c.str()}, {"a", e.a}, {"b", e.b}});
  return {{"text", p.to_string()}, {"arity", p.arity()}, {"terms", terms}};
}

inline nlohmann::ordered_json diagram_json(const SingularDiagram& d) {
  return {{"long", d.is_long()},
          {"vertices", d.vertices().size()},
          {"crossings", d.crossing_count()},
          {"double_points", d.double_point_count()},
          {"writhe", d.writhe()},
          {"faces", d.faces().size()},
          {"components", d.component_count()}};
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::MalformedLine, "cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

/// Parses "Bi=k" (or "B=k" for B1).
inline std::pair<std::size_t, long long> parse_substitution(const std::string& text) {
  auto eq = text.find('=');
  if (eq == std::string::npos || eq == 0 || text[0] != 'B') throw CLI::ValidationError("--at", "expected Bi=k, got " + text);
  std::string var = text.substr(1, eq - 1);
  std::size_t index = 1;
  try {
    if (!var.empty()) index = std::stoul(var);
    return {index, std::stoll(text.substr(eq + 1))};
  } catch (const std::exception&) {
    throw CLI::ValidationError("--at", "expected Bi=k, got " + text);
  }
}

inline std::string witness_text(const InvertibilityCertificate& c) {
  if (!c.not_invertible) return "Inconclusive";
  std::ostringstream out;
  out << "NotInvertible";
  if (c.permutation) {
    out << " (invariant of -K is the invariant of K under";
    for (std::size_t i = 0; i < c.permutation->size(); ++i)
      if ((*c.permutation)[i] != i + 1) out << " B" << i + 1 << "->B" << (*c.permutation)[i];
    out << ")";
  }
  out << "; differing B-patterns:";
  for (const auto& pat : c.differing_patterns) {
    out << " (";
    for (std::size_t i = 0; i < pat.size(); ++i) out << (i ? "," : "") << pat[i];
    out << ")";
  }
  return out.str();
}

inline nlohmann::ordered_json certificate_json(const InvertibilityCertificate& c) {
  nlohmann::ordered_json j{{"verdict", c.not_invertible ? "NotInvertible" : "Inconclusive"},
                           {"forward", poly_json(c.forward)},
                           {"inverse", poly_json(c.inverse)},
                           {"differing_patterns", c.differing_patterns}};
  j["permutation"] = c.permutation ? nlohmann::ordered_json(*c.permutation) : nlohmann::ordered_json(nullptr);
  return j;
}

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Singular knot invariants: singular Jones and Alexander polynomials, move fuzzing"};
  app.require_subcommand(1);

  std::string path;
  std::string format = "text";
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("file", path, "diagram file")->required();
    sub->add_option("--format", format, "output format")->check(CLI::IsMember({"text", "json"}));
  };

  auto* compute = app.add_subcommand("compute", "compute an invariant");
  add_common(compute);
  std::string invariant = "jones", mode_name = "single";
  bool identify = false;
  std::vector<std::string> at;
  unsigned jobs = 1;
  compute->add_option("--invariant", invariant, "bracket, jones or alexander")
      ->check(CLI::IsMember({"bracket", "jones", "alexander"}));
  compute->add_option("--mode", mode_name, "single: one variable B; indexed: B1..Bd by first passage")
      ->check(CLI::IsMember({"single", "indexed"}));
  compute->add_flag("--identify-B", identify, "identify B1..Bd with B after computing");
  compute->add_option("--at", at, "substitute Bi=k (repeatable)");
  compute->add_option("--jobs", jobs, "worker threads for the bracket state sum")->check(CLI::PositiveNumber);

  auto* invertible = app.add_subcommand("invertible", "compare a long knot with its inverse");
  add_common(invertible);

  auto* fuzz = app.add_subcommand("fuzz", "apply random moves and check both invariants");
  add_common(fuzz);
  std::size_t steps = 100, max_vertices = 12;
  std::uint64_t seed = 1;
  double bias = 1.0;
  bool corrupt = false;
  fuzz->add_option("--steps", steps, "number of moves");
  fuzz->add_option("--seed", seed, "random seed");
  fuzz->add_option("--max-vertices", max_vertices, "no introductions beyond this size");
  fuzz->add_option("--bias", bias, "relative weight of R1+/R2 introductions");
  fuzz->add_flag("--corrupt-table", corrupt, "negative control: perturb the double-point Alexander weights");

  auto* info = app.add_subcommand("info", "print diagram statistics");
  add_common(info);
  auto* canon = app.add_subcommand("canon", "print the canonical form");
  add_common(canon);
  auto* inverse = app.add_subcommand("inverse", "print the inverse long knot");
  add_common(inverse);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  }

  const bool json = format == "json";
  SingularDiagram d;
  try {
    d = parse_diagram(read_file(path));
  } catch (const Error& e) {
    err << path << ": " << e.what() << '\n';
    return kInvalidInput;
  }

  try {
    if (*compute) {
      Mode mode = mode_name == "indexed" ? Mode::IndexedB : Mode::SingleB;
      LaurentPoly result;
      nlohmann::ordered_json extra;
      if (invariant == "alexander") {
        result = alexander_s(d, AlexanderOptions{mode, QuadrantWeightTable::standard()});
      } else {
        BracketOptions opt{mode, jobs, DoublePointWeightTable::standard()};
        BracketResult br = singular_bracket_states(d, opt);
        extra["states"] = br.states;
        result = br.value;
        if (invariant == "jones") result = jones_vs(d, opt);
      }
      if (identify) result = identify_b_variables(result);
      for (const auto& s : at) {
        auto [i, v] = parse_substitution(s);
        if (i == 0 || i > result.arity()) throw CLI::ValidationError("--at", "no variable B" + std::to_string(i));
        result = substitute_b(result, i, v);
      }
      if (json) {
        nlohmann::ordered_json j;
        j["request"] = {{"input", path}, {"invariant", invariant}, {"mode", mode_name}, {"identify_B", identify}, {"at", at}};
        j["diagram"] = diagram_json(d);
        if (!extra.empty()) j["states"] = extra["states"];
        j["result"] = poly_json(result);
        out << j.dump(2) << '\n';
      } else {
        out << result.to_string() << '\n';
      }
      return kOk;
    }
    if (*invertible) {
      auto cv = invertibility_certificate_v(d);
      auto ca = invertibility_certificate_alex(d);
      if (json) {
        nlohmann::ordered_json j;
        j["input"] = path;
        j["jones"] = certificate_json(cv);
        j["alexander"] = certificate_json(ca);
        out << j.dump(2) << '\n';
      } else {
        out << "jones: " << witness_text(cv) << '\n' << "alexander: " << witness_text(ca) << '\n';
      }
      return kOk;
    }
    if (*fuzz) {
      FuzzOptions opt;
      opt.steps = steps;
      opt.seed = seed;
      opt.max_vertices = max_vertices;
      opt.introduction_bias = bias;
      if (corrupt) opt.alexander_table.double_point[2] = LaurentPoly::a_power(1, 1);
      FuzzReport r = fuzz_invariance(d, opt);
      if (json) {
        nlohmann::ordered_json j;
        j["input"] = path;
        j["seed"] = r.seed;
        j["jones_digest"] = r.jones_digest;
        j["alexander_digest"] = r.alexander_digest;
        nlohmann::ordered_json list = nlohmann::ordered_json::array();
        for (const auto& s : r.steps)
          list.push_back({{"step", s.step},
                          {"move", to_string(s.move.kind)},
                          {"variant", s.move.variant},
                          {"site", s.move.site},
                          {"vertices", s.vertices},
                          {"jones_digest", s.jones_digest},
                          {"alexander_digest", s.alexander_digest},
                          {"ok", s.jones_ok && s.alexander_ok}});
        j["steps"] = list;
        j["first_failure"] = r.first_failure ? nlohmann::ordered_json(r.steps[*r.first_failure].step) : nlohmann::ordered_json(nullptr);
        out << j.dump(2) << '\n';
      } else {
        for (const auto& s : r.steps)
          out << r.seed << ' ' << s.step << ' ' << describe(s.move) << " n=" << s.vertices << " jones=" << s.jones_digest
              << (s.alexander_digest.empty() ? "" : " alexander=" + s.alexander_digest) << (s.jones_ok && s.alexander_ok ? "" : " VIOLATION")
              << '\n';
        if (r.success()) out << "ok: " << r.steps.size() << " moves, invariants unchanged\n";
        else out << "violation at step " << r.steps[*r.first_failure].step << '\n';
      }
      return r.success() ? kOk : kViolation;
    }
    if (*info) {
      auto j = diagram_json(d);
      if (d.is_long()) {
        std::vector<std::size_t> order;
        for (int v : d.double_point_order()) order.push_back(static_cast<std::size_t>(v));
        j["double_point_order"] = order;
      }
      if (json) {
        out << j.dump(2) << '\n';
      } else {
        for (const auto& [k, v] : j.items()) out << k << ": " << v.dump() << '\n';
      }
      return kOk;
    }
    if (*canon) {
      out << d.canonical().serialize();
      return kOk;
    }
    if (*inverse) {
      out << inverse_long_knot(d).serialize();
      return kOk;
    }
  } catch (const Error& e) {
    err << path << ": " << e.what() << '\n';
    return is_validation_error(e.code()) ? kInvalidInput : kPrecondition;
  } catch (const CLI::ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  }
  return kOk;
}

}  // namespace singknot::cli
