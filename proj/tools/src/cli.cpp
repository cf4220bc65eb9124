#include "jetforge_cli/cli.hpp"

#include <CLI/CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <optional>
#include <sstream>
#include <thread>

#include "jetforge/error.hpp"
#include "jetforge/fan.hpp"
#include "jetforge/flatness.hpp"
#include "jetforge/jets.hpp"
#include "jetforge/json.hpp"
#include "jetforge/newton.hpp"
#include "jetforge/text.hpp"

namespace jetforge::cli {

namespace {

struct Options {
  std::vector<std::string> vars;
  std::vector<std::string> params;
  std::string poly;
  std::string base;
  std::string family;
  std::vector<std::string> perturb;
  std::string f;
  std::string g;
  std::size_t m = 1;
  std::vector<std::uint32_t> primes;
  std::vector<std::string> assign;
  std::vector<std::string> samples;
  std::vector<std::int64_t> powers;
  std::string mode;
  std::optional<std::uint64_t> torus_bound;
  std::string format = "json";
  unsigned workers = std::max(1U, std::thread::hardware_concurrency());
  std::uint64_t max_enumeration = CountOptions{}.max_enumeration;
  std::string input;
};

// Declarations and polynomials read from an --input file.
struct InputFile {
  std::vector<std::string> vars;
  std::vector<std::string> params;
  std::vector<std::string> polynomials;
};

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  return s.substr(b, s.find_last_not_of(" \t\r\n") - b + 1);
}

std::vector<std::string> split_names(const std::string& list) {
  std::vector<std::string> out;
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

InputFile read_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open input file '" + path + "'");
  InputFile file;
  std::string line;
  while (std::getline(in, line)) {
    line = trim(line.substr(0, line.find('#')));
    if (line.empty()) continue;
    if (line.rfind("vars:", 0) == 0) {
      file.vars = split_names(line.substr(5));
    } else if (line.rfind("params:", 0) == 0) {
      file.params = split_names(line.substr(7));
    } else {
      file.polynomials.push_back(line);
    }
  }
  return file;
}

class Session {
 public:
  Session(const Options& options, std::ostream& out) : opt_(options), out_(out) {
    if (!opt_.input.empty()) file_ = read_input(opt_.input);
    auto vars = opt_.vars.empty() ? file_.vars : opt_.vars;
    auto params = opt_.params.empty() ? file_.params : opt_.params;
    if (vars.empty()) throw InputError("no variables declared (use --vars or a 'vars:' header)");
    symbols_ = Symbols(std::move(vars), std::move(params));
    if (opt_.format != "json" && opt_.format != "text") throw InputError("--format must be json or text");
  }

  int jet_ideal_command() {
    const auto F = parse(primary(), symbols_);
    emit(to_json(jet_ideal(F, opt_.m), symbols_));
    return ok;
  }

  int newton_command() {
    emit(to_json(newton_polyhedron(rational(primary()))));
    return ok;
  }

  int fan_command() {
    emit(to_json(newton_fan(newton_polyhedron(rational(primary())))));
    return ok;
  }

  int resolve_command() {
    const auto P = newton_polyhedron(rational(primary()));
    emit(to_json(resolve(newton_fan(P), P)));
    return ok;
  }

  int nondegenerate_command() {
    const auto f = rational(primary());
    NondegeneracyOptions options;
    options.primes = opt_.primes.empty() ? std::vector<std::uint32_t>{5, 7, 11} : opt_.primes;
    options.torus_bound = opt_.torus_bound;
    options.workers = opt_.workers;
    if (opt_.mode.empty()) {
      options.mode = f.variable_count() == 2 ? NondegeneracyOptions::Mode::exact2d : NondegeneracyOptions::Mode::sample;
    } else if (opt_.mode == "exact2d") {
      options.mode = NondegeneracyOptions::Mode::exact2d;
    } else if (opt_.mode == "sample") {
      options.mode = NondegeneracyOptions::Mode::sample;
    } else {
      throw InputError("--mode must be exact2d or sample");
    }
    const auto result = nondegenerate(f, options);
    Json witness = nullptr;
    if (result.witness) {
      const auto& w = *result.witness;
      witness = Json{{"face_direction", w.face_direction},
                     {"field", w.modulus == 0 ? std::string("Q") : "F_" + std::to_string(w.modulus)},
                     {"point", w.point}};
      if (!w.repeated_factor.empty()) witness["repeated_factor"] = w.repeated_factor;
    }
    emit(Json{{"polynomial", to_string(f, symbols_.variables())},
              {"verdict", to_string(result.verdict)},
              {"witness", witness},
              {"notes", result.notes}});
    return result.verdict == Verdict::degenerate ? negative_verdict : ok;
  }

  int gamma_command() {
    Polynomial<Rational> base;
    std::vector<Polynomial<Rational>> perturbations;
    if (!opt_.family.empty()) {
      const auto decomposed = FamilyPolynomial::decompose(parse(opt_.family, symbols_));
      base = decomposed.base();
      perturbations = decomposed.perturbations();
    } else {
      const std::string base_text = !opt_.base.empty() ? opt_.base : file_line(0, "--base");
      base = rational(base_text);
      std::vector<std::string> texts = opt_.perturb;
      if (texts.empty() && file_.polynomials.size() > 1)
        texts.assign(file_.polynomials.begin() + 1, file_.polynomials.end());
      for (const auto& t : texts) perturbations.push_back(rational(t));
    }
    const auto report = gamma_deformation_valid(base, perturbations);
    Json perturbation_texts = Json::array();
    for (const auto& g : perturbations) perturbation_texts.push_back(to_string(g, symbols_.variables()));
    Json violations = Json::array();
    for (const auto& v : report.violations)
      violations.push_back(Json{{"perturbation", v.perturbation + 1}, {"exponent", v.exponent}});
    emit(Json{{"base", to_string(base, symbols_.variables())},
              {"perturbations", perturbation_texts},
              {"valid", report.valid},
              {"violations", violations}});
    return report.valid ? ok : negative_verdict;
  }

  int integral_closure_command() {
    const auto f = rational(primary());
    if (opt_.powers.size() != f.variable_count())
      throw InputError("--powers needs one exponent per variable");
    Json failing = Json::array();
    for (const auto& e : exponent_support(f))
      if (!integral_closure_member(e, opt_.powers)) failing.push_back(e);
    const bool member = failing.empty();
    emit(Json{{"polynomial", to_string(f, symbols_.variables())},
              {"powers", opt_.powers},
              {"member", member},
              {"failing_exponents", failing}});
    return member ? ok : negative_verdict;
  }

  int count_command() {
    const auto F = parse(primary(), symbols_);
    const auto assignment = parse_assignment(opt_.assign, symbols_);
    if (opt_.primes.empty()) throw InputError("count needs --prime");
    Json counts = Json::array();
    for (auto q : opt_.primes) {
      const auto report = count_points(F, assignment, opt_.m, q, count_options());
      counts.push_back(Json{{"q", report.q}, {"count", report.count}});
    }
    emit(Json{{"family", to_string(F, symbols_)},
              {"m", opt_.m},
              {"assignment", to_json(assignment, symbols_)},
              {"counts", counts}});
    return ok;
  }

  int diagnose_command() {
    const auto F = parse(primary(), symbols_);
    const auto primes = opt_.primes.empty() ? std::vector<std::uint32_t>{3, 5} : opt_.primes;
    std::vector<ParameterAssignment> samples;
    for (const auto& s : opt_.samples) samples.push_back(parse_assignment(split_names(s), symbols_));
    if (opt_.samples.empty()) samples = default_samples();
    const auto report = flatness_diagnostic(F, symbols_, opt_.m, primes, samples, count_options());
    emit(to_json(report, symbols_));
    return report.verdict == dimension_jump ? negative_verdict : ok;
  }

  int leibniz_command() {
    const std::string f_text = !opt_.f.empty() ? opt_.f : file_line(0, "--f");
    const std::string g_text = !opt_.g.empty() ? opt_.g : file_line(1, "--g");
    const auto f = rational(f_text);
    const auto g = rational(g_text);
    bool holds = false;
    Json field = "Q";
    if (opt_.primes.empty()) {
      holds = leibniz_check(f, g, opt_.m);
    } else {
      holds = leibniz_check(reduce_mod(f, opt_.primes.front()), reduce_mod(g, opt_.primes.front()), opt_.m);
      field = "F_" + std::to_string(opt_.primes.front());
    }
    emit(Json{{"f", to_string(f, symbols_.variables())},
              {"g", to_string(g, symbols_.variables())},
              {"m", opt_.m},
              {"field", field},
              {"holds", holds}});
    return holds ? ok : negative_verdict;
  }

 private:
  std::string file_line(std::size_t index, const char* flag) const {
    if (index < file_.polynomials.size()) return file_.polynomials[index];
    throw InputError(std::string("missing polynomial (use ") + flag + " or --input)");
  }

  std::string primary() const {
    if (!opt_.poly.empty()) return opt_.poly;
    if (!opt_.family.empty()) return opt_.family;
    return file_line(0, "--poly");
  }

  Polynomial<Rational> rational(const std::string& text) const { return drop_parameters(parse(text, symbols_)); }

  CountOptions count_options() const {
    CountOptions options;
    options.max_enumeration = opt_.max_enumeration;
    options.workers = opt_.workers;
    return options;
  }

  // Every parameter set to 0 or 1, first parameter most significant.
  std::vector<ParameterAssignment> default_samples() const {
    const std::size_t l = symbols_.parameters().size();
    if (l > 16) throw LimitError("too many parameters for the default 0/1 samples");
    std::vector<ParameterAssignment> out;
    for (std::size_t mask = 0; mask < (std::size_t{1} << l); ++mask) {
      ParameterAssignment a(l);
      for (std::size_t j = 0; j < l; ++j) a[j] = Rational(static_cast<long>((mask >> (l - 1 - j)) & 1U));
      out.push_back(std::move(a));
    }
    return out;
  }

  static void flatten(const Json& value, const std::string& key, std::ostream& out) {
    const bool scalar_array =
        value.is_array() && std::all_of(value.begin(), value.end(), [](const Json& v) {
          return v.is_primitive() || (v.is_array() && std::all_of(v.begin(), v.end(), [](const Json& w) {
                                        return w.is_primitive();
                                      }));
        });
    if (value.is_object()) {
      if (value.empty()) out << key << ": {}\n";
      for (const auto& [k, v] : value.items()) flatten(v, key.empty() ? k : key + "." + k, out);
    } else if (value.is_array() && !scalar_array) {
      for (std::size_t i = 0; i < value.size(); ++i) flatten(value[i], key + "[" + std::to_string(i) + "]", out);
    } else if (value.is_string()) {
      out << key << ": " << value.get<std::string>() << "\n";
    } else {
      out << key << ": " << value.dump() << "\n";
    }
  }

  // Indented JSON with arrays of scalars kept on one line.
  static void pretty(const Json& value, std::size_t indent, std::ostream& out) {
    const std::string pad(indent + 2, ' ');
    const bool flat_array = value.is_array() && std::all_of(value.begin(), value.end(), [](const Json& v) {
      return v.is_primitive();
    });
    if (value.is_object() && !value.empty()) {
      out << "{\n";
      std::size_t i = 0;
      for (const auto& [k, v] : value.items()) {
        out << pad << Json(k).dump() << ": ";
        pretty(v, indent + 2, out);
        out << (++i < value.size() ? ",\n" : "\n");
      }
      out << std::string(indent, ' ') << "}";
    } else if (value.is_array() && !value.empty() && !flat_array) {
      out << "[\n";
      for (std::size_t i = 0; i < value.size(); ++i) {
        out << pad;
        pretty(value[i], indent + 2, out);
        out << (i + 1 < value.size() ? ",\n" : "\n");
      }
      out << std::string(indent, ' ') << "]";
    } else {
      out << value.dump();
    }
  }

  void emit(const Json& doc) {
    if (opt_.format == "json") {
      pretty(doc, 0, out_);
      out_ << "\n";
    } else {
      flatten(doc, "", out_);
    }
  }

  const Options& opt_;
  std::ostream& out_;
  InputFile file_;
  Symbols symbols_;
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"Jet-space equations, Newton polyhedra and fans, and finite-field point counts", "jetforge"};
  app.fallthrough();
  app.require_subcommand(1);
  app.set_config("--config", "", "Read options from a TOML or INI file; command-line flags take precedence");

  app.add_option("--vars", opt.vars, "Ambient variable names, comma separated")->delimiter(',');
  app.add_option("--params", opt.params, "Parameter names, comma separated")->delimiter(',');
  app.add_option("--poly", opt.poly, "Input polynomial");
  app.add_option("--family", opt.family, "Family polynomial f + s_1 g_1 + ... in the declared parameters");
  app.add_option("--base", opt.base, "Base polynomial f of a deformation");
  app.add_option("--perturb", opt.perturb, "Perturbation polynomial g_j (repeatable)");
  app.add_option("--f", opt.f, "First factor for the Leibniz check");
  app.add_option("--g", opt.g, "Second factor for the Leibniz check");
  app.add_option("-m,--order", opt.m, "Jet order m")->capture_default_str();
  app.add_option("--prime,--primes", opt.primes, "Primes q, comma separated")->delimiter(',');
  app.add_option("--assign", opt.assign, "Parameter values name=value for count (repeatable)");
  app.add_option("--samples", opt.samples,
                 "Parameter samples for diagnose-flatness, one per value, e.g. s=0 s=1 or s=0,t=1");
  app.add_option("--powers", opt.powers, "Pure-power exponents a_1,...,a_n for integral-closure")->delimiter(',');
  app.add_option("--mode", opt.mode, "Non-degeneracy mode: exact2d or sample");
  app.add_option("--torus-bound", opt.torus_bound, "Largest torus size searched per face and prime");
  app.add_option("--format", opt.format, "Output format: json or text")->capture_default_str();
  app.add_option("--workers", opt.workers, "Worker threads for enumeration")->capture_default_str();
  app.add_option("--max-enumeration", opt.max_enumeration, "Largest number of jet tuples enumerated")
      ->capture_default_str();
  app.add_option("--input", opt.input,
                 "Input file: 'vars: x,y' and 'params: s' headers, then one polynomial per line ('#' comments)");

  auto* jet = app.add_subcommand("jet-ideal", "Generators G_0..G_m of the m-jet space of --poly or --family");
  auto* newton = app.add_subcommand("newton", "Newton polyhedron of --poly");
  auto* fan = app.add_subcommand("fan", "Newton fan of --poly");
  auto* res = app.add_subcommand("resolve", "Regular admissible refinement of the Newton fan of --poly");
  auto* check = app.add_subcommand("check", "Polyhedral checks");
  check->require_subcommand(1);
  auto* nondeg = check->add_subcommand("nondegenerate", "Non-degeneracy of --poly with respect to its Newton boundary");
  auto* gamma = check->add_subcommand("gamma-deformation", "Check P(g_j) within P(f) for --base and --perturb");
  auto* closure = check->add_subcommand("integral-closure",
                                        "Check every term of --poly against the pure powers --powers");
  auto* count = app.add_subcommand("count", "Count F_q-points of the m-jet space of --poly at --assign values");
  auto* diagnose = app.add_subcommand("diagnose-flatness", "Compare fiber dimension estimates of a family");
  auto* leibniz = app.add_subcommand("leibniz", "Check the Leibniz rule for the jets of --f and --g");

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? ok : input_error;
  }

  try {
    Session session(opt, out);
    if (jet->parsed()) return session.jet_ideal_command();
    if (newton->parsed()) return session.newton_command();
    if (fan->parsed()) return session.fan_command();
    if (res->parsed()) return session.resolve_command();
    if (nondeg->parsed()) return session.nondegenerate_command();
    if (gamma->parsed()) return session.gamma_command();
    if (closure->parsed()) return session.integral_closure_command();
    if (count->parsed()) return session.count_command();
    if (diagnose->parsed()) return session.diagnose_command();
    if (leibniz->parsed()) return session.leibniz_command();
    err << "error: no subcommand\n";
    return input_error;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return input_error;
  } catch (const LimitError& e) {
    err << "limit exceeded: " << e.what() << "\n";
    return limit_error;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return internal_error;
  }
}

}  // namespace jetforge::cli
