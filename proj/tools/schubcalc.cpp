// Command-line surface for the library.  Six verbs: print a Schubert
// polynomial, evaluate a structure constant two ways, decide vanishing
// through the layered strategy (filters, then the exact expansion where
// it is cheap, then the randomized group test), emit a lifted polynomial
// system, count the solutions of such a system over a prime field, and
// run the acceptance battery.  Machine verbs print JSON, human verbs
// aligned text, --format overrides either way, and every verb is
// byte-deterministic for a fixed --seed.
//
// Exit codes: 0 success, 1 usage or input error, 2 computation refused
// by a size guard, 3 internal invariant violation (or a failed selftest).

#include "schubert/filters.hpp"
#include "schubert/fp.hpp"
#include "schubert/groebner.hpp"
#include "schubert/lifted.hpp"
#include "schubert/schubert.hpp"
#include "schubert/selftest.hpp"
#include "schubert/vanish.hpp"
#include "schubert/weyl.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <algorithm>
#include <cerrno>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

using nlohmann::json;
using namespace schubert;

namespace {

struct GlobalFlags {
  std::uint64_t seed = 0;
  std::optional<std::uint64_t> prime;
  int trials = 3;
  std::string type = "A";
  std::string format;  // empty = the verb's default
  std::string output;  // empty = stdout
};

// --prime wins, then SCHUBCALC_PRIME, then 2^31 - 1; validated either way.
std::uint64_t resolve_prime(const std::optional<std::uint64_t>& flag) {
  std::uint64_t p = (1ull << 31) - 1;
  if (flag) {
    p = *flag;
  } else if (const char* env = std::getenv("SCHUBCALC_PRIME")) {
    errno = 0;
    char* end = nullptr;
    const unsigned long long parsed = std::strtoull(env, &end, 10);
    if (errno != 0 || end == env || *end != '\0')
      throw std::invalid_argument("SCHUBCALC_PRIME must be a decimal integer");
    p = parsed;
  }
  if (p < 3 || p % 2 == 0 || p >= (1ull << 62) || !is_prime_u64(p))
    throw std::invalid_argument("the working modulus must be an odd prime below 2^62");
  return p;
}

void deliver(const std::string& payload, const std::string& path) {
  if (path.empty()) {
    std::cout << payload;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot open output file: " + path);
  out << payload;
}

bool use_json(const std::string& format, bool machine_default) {
  if (format == "json") return true;
  if (format == "text") return false;
  return machine_default;
}

const char* family_text(LieFamily f) {
  switch (f) {
    case LieFamily::A: return "A";
    case LieFamily::B: return "B";
    case LieFamily::C: return "C";
    case LieFamily::D: return "D";
  }
  return "?";
}

// Signed windows accept the m-prefix spelling (m2,1 for -2,1) so they can
// be passed without an option-terminating "--".
SignedPermutation parse_signed(std::string text) {
  std::replace(text.begin(), text.end(), 'm', '-');
  return SignedPermutation::parse(text);
}

std::string aligned(std::initializer_list<std::pair<const char*, std::string>> rows) {
  std::ostringstream out;
  for (const auto& [key, value] : rows) {
    out << key;
    for (std::size_t k = std::string(key).size(); k < 12; ++k) out << ' ';
    out << value << "\n";
  }
  return out.str();
}

// ---------------------------------------------------------------------------

int cmd_poly(const std::string& wtext, const GlobalFlags& g) {
  const Permutation w = Permutation::parse(wtext);
  if (w.trimmed().size() > 8)
    throw SizeGuardError("polynomials are computed for windows up to size 8");
  const IntPolynomial p = schubert_poly_dd(w);
  std::string payload;
  if (use_json(g.format, false)) {
    json terms = json::array();
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it)
      terms.push_back({{"coefficient", it->second.str()}, {"monomial", it->first.to_string()}});
    payload = json{{"polynomial", p.to_string()},
                   {"terms", terms},
                   {"w", w.trimmed().to_string()}}
                  .dump(2) +
              "\n";
  } else {
    payload = p.to_string() + "\n";
  }
  deliver(payload, g.output);
  return 0;
}

int cmd_coeff(const std::string& ut, const std::string& vt, const std::string& wt,
              const std::string& method, const GlobalFlags& g) {
  const Permutation u = Permutation::parse(ut).trimmed();
  const Permutation v = Permutation::parse(vt).trimmed();
  const Permutation w = Permutation::parse(wt).trimmed();
  const int widest = std::max({u.size(), v.size(), w.size()});
  BigInt c;
  if (method == "ps") {
    if (widest > 5)
      throw SizeGuardError("the triple-sum method is available for windows up to size 5");
    c = coeff_ps(u, v, w);
  } else {
    if (widest > 6)
      throw SizeGuardError("exact expansion is available for windows up to size 6");
    c = coeff_exact(u, v, w);
  }
  std::string payload;
  if (use_json(g.format, false)) {
    payload = json{{"coefficient", c.str()},
                   {"method", method},
                   {"u", u.to_string()},
                   {"v", v.to_string()},
                   {"w", w.to_string()}}
                  .dump(2) +
              "\n";
  } else {
    payload = c.str() + "\n";
  }
  deliver(payload, g.output);
  return 0;
}

int cmd_vanish(const std::string& ut, const std::string& vt, const std::string& wt,
               const GlobalFlags& g) {
  const LieFamily fam = parse_family(g.type);
  std::string verdict, provenance, reason, cu, cv, cw;
  int trials = 0;
  std::uint64_t prime = 0;

  if (fam == LieFamily::A) {
    const Permutation u = Permutation::parse(ut).trimmed();
    const Permutation v = Permutation::parse(vt).trimmed();
    const Permutation w = Permutation::parse(wt).trimmed();
    cu = u.to_string();
    cv = v.to_string();
    cw = w.to_string();
    const int n = std::max({u.size(), v.size(), w.size(), 1});
    if (const auto cert = filter_vanish(u, v, w)) {
      verdict = vanish_tag_name(VanishTag::ZeroCertified);
      provenance = std::string("filter:") + filter_name(cert->filter);
      reason = cert->witness;
    } else if (n <= 5) {
      const BigInt c = coeff_exact(u, v, w);
      verdict = vanish_tag_name(c == 0 ? VanishTag::ZeroCertified
                                       : VanishTag::NonzeroCertified);
      provenance = "exact";
      reason = "structure constant equals " + c.str();
    } else {
      const VanishOptions opt{resolve_prime(g.prime), g.trials, g.seed};
      const VanishVerdict out = vanish_test(u, v, w, LieType{LieFamily::A, n}, opt);
      verdict = vanish_tag_name(out.tag);
      provenance = "randomized";
      reason = out.reason;
      trials = out.trials;
      prime = out.prime;
    }
  } else {
    const SignedPermutation u = parse_signed(ut);
    const SignedPermutation v = parse_signed(vt);
    const SignedPermutation w = parse_signed(wt);
    if (v.size() != u.size() || w.size() != u.size())
      throw std::invalid_argument("signed windows must share one rank");
    cu = u.to_string();
    cv = v.to_string();
    cw = w.to_string();
    const VanishOptions opt{resolve_prime(g.prime), g.trials, g.seed};
    const VanishVerdict out = vanish_test(u, v, w, LieType{fam, u.size()}, opt);
    verdict = vanish_tag_name(out.tag);
    provenance = "randomized";
    reason = out.reason;
    trials = out.trials;
    prime = out.prime;
  }

  std::string payload;
  if (use_json(g.format, true)) {
    payload = json{{"prime", prime},
                   {"provenance", provenance},
                   {"reason", reason},
                   {"trials", trials},
                   {"type", family_text(fam)},
                   {"u", cu},
                   {"v", cv},
                   {"verdict", verdict},
                   {"w", cw}}
                  .dump(2) +
              "\n";
  } else {
    payload = aligned({{"verdict", verdict},
                       {"provenance", provenance},
                       {"reason", reason},
                       {"trials", std::to_string(trials)},
                       {"prime", std::to_string(prime)},
                       {"type", family_text(fam)},
                       {"u", cu},
                       {"v", cv},
                       {"w", cw}});
  }
  deliver(payload, g.output);
  return 0;
}

int cmd_emit(const std::string& ut, const std::string& vt, const std::string& wt,
             const std::string& formulation, const GlobalFlags& g) {
  const LieFamily fam = parse_family(g.type);
  const Formulation form = parse_formulation(formulation);
  LiftedSystem sys;
  if (fam == LieFamily::A) {
    const Permutation u = Permutation::parse(ut).trimmed();
    const Permutation v = Permutation::parse(vt).trimmed();
    const Permutation w = Permutation::parse(wt).trimmed();
    const int n = std::max({u.size(), v.size(), w.size(), 1});
    sys = coefficient_system(u, v, w, LieType{LieFamily::A, n}, form);
  } else {
    const SignedPermutation u = parse_signed(ut);
    const SignedPermutation v = parse_signed(vt);
    const SignedPermutation w = parse_signed(wt);
    if (v.size() != u.size() || w.size() != u.size())
      throw std::invalid_argument("signed windows must share one rank");
    sys = coefficient_system(u, v, w, LieType{fam, u.size()}, form);
  }
  const SerialFormat sf =
      use_json(g.format, true) ? SerialFormat::Json : SerialFormat::Text;
  deliver(serialize(sys, sf), g.output);
  return 0;
}

int cmd_count(const std::string& path, const GlobalFlags& g) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open input file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  const std::string data = buf.str();
  const std::size_t first = data.find_first_not_of(" \t\r\n");
  const SerialFormat sf = first != std::string::npos && data[first] == '{'
                              ? SerialFormat::Json
                              : SerialFormat::Text;
  const LiftedSystem sys = deserialize(data, sf);
  const std::uint64_t p = resolve_prime(g.prime);
  const auto gb = buchberger(specialize(sys, p, g.seed));
  const auto count = solution_count(gb, static_cast<int>(sys.variables.size()));
  std::string payload;
  if (use_json(g.format, true)) {
    payload = (count ? json{{"count", *count}} : json{{"status", "not_zero_dimensional"}})
                  .dump() +
              "\n";
  } else {
    payload = (count ? std::to_string(*count) : std::string("not_zero_dimensional")) + "\n";
  }
  deliver(payload, g.output);
  return 0;
}

int cmd_selftest(int level, const GlobalFlags& g) {
  const std::vector<CriterionResult> results = run_acceptance(level);
  bool all = true;
  std::string payload;
  if (use_json(g.format, false)) {
    json arr = json::array();
    int passed = 0;
    for (const CriterionResult& r : results) {
      arr.push_back(
          {{"detail", r.detail}, {"id", r.id}, {"name", r.name}, {"pass", r.pass}});
      if (r.pass) ++passed;
    }
    all = passed == static_cast<int>(results.size());
    payload = json{{"criteria", arr},
                   {"level", level},
                   {"passed", passed},
                   {"total", static_cast<int>(results.size())}}
                  .dump(2) +
              "\n";
  } else {
    // Timings are omitted so that identical invocations print identical bytes.
    std::ostringstream out;
    all = print_acceptance(results, out, /*with_times=*/false);
    payload = out.str();
  }
  deliver(payload, g.output);
  return all ? 0 : 3;
}

int run(int argc, char** argv) {
  CLI::App app{
      "Schubert calculus toolkit: polynomials, structure constants, vanishing\n"
      "certificates, lifted polynomial systems, and solution counts over prime\n"
      "fields.  Signed windows (types B/C/D) spell -2 as m2, e.g. m2,1."};
  app.require_subcommand(1);

  GlobalFlags g;
  app.add_option("--seed", g.seed, "Seed for every randomized step")
      ->capture_default_str();
  app.add_option("--prime", g.prime,
                 "Working modulus, an odd prime below 2^62 "
                 "(default: SCHUBCALC_PRIME or 2147483647)");
  app.add_option("--trials", g.trials, "Random trials for the vanishing test")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--type", g.type, "Lie family A|B|C|D")
      ->check(CLI::IsMember({"A", "B", "C", "D"}, CLI::ignore_case))
      ->capture_default_str();
  app.add_option("--format", g.format, "Force json or text output")
      ->check(CLI::IsMember({"json", "text"}));
  app.add_option("--output", g.output, "Write the result to a file instead of stdout");

  std::string arg_u, arg_v, arg_w, method = "expand", formulation = "cell", count_file;
  int level = 1;

  CLI::App* poly = app.add_subcommand("poly", "Print the Schubert polynomial of a window");
  poly->add_option("w", arg_w, "One-line window, e.g. 1432")->required();
  poly->fallthrough();

  CLI::App* coeff =
      app.add_subcommand("coeff", "Print the structure constant of a triple");
  coeff->add_option("u", arg_u, "First window")->required();
  coeff->add_option("v", arg_v, "Second window")->required();
  coeff->add_option("w", arg_w, "Target window")->required();
  coeff->add_option("--method", method, "expand (exact) or ps (triple sum)")
      ->check(CLI::IsMember({"expand", "ps"}))
      ->capture_default_str();
  coeff->fallthrough();

  CLI::App* vanish = app.add_subcommand(
      "vanish", "Decide whether a structure constant vanishes, with provenance");
  vanish->add_option("u", arg_u, "First window")->required();
  vanish->add_option("v", arg_v, "Second window")->required();
  vanish->add_option("w", arg_w, "Target window")->required();
  vanish->fallthrough();

  CLI::App* emit =
      app.add_subcommand("emit", "Write the lifted polynomial system of a triple");
  emit->add_option("u", arg_u, "First window")->required();
  emit->add_option("v", arg_v, "Second window")->required();
  emit->add_option("w", arg_w, "Target window")->required();
  emit->add_option("--formulation", formulation, "cell or borel")
      ->check(CLI::IsMember({"cell", "borel"}))
      ->capture_default_str();
  emit->fallthrough();

  CLI::App* count = app.add_subcommand(
      "count", "Specialize an emitted system and count its solutions");
  count->add_option("file", count_file, "Serialized system, JSON or text")->required();
  count->fallthrough();

  CLI::App* selftest =
      app.add_subcommand("selftest", "Run the acceptance battery");
  selftest->add_option("--level", level, "1 = quick smoke scale, 2 = full scale")
      ->check(CLI::Range(1, 2))
      ->capture_default_str();
  selftest->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  if (app.got_subcommand(poly)) return cmd_poly(arg_w, g);
  if (app.got_subcommand(coeff)) return cmd_coeff(arg_u, arg_v, arg_w, method, g);
  if (app.got_subcommand(vanish)) return cmd_vanish(arg_u, arg_v, arg_w, g);
  if (app.got_subcommand(emit)) return cmd_emit(arg_u, arg_v, arg_w, formulation, g);
  if (app.got_subcommand(count)) return cmd_count(count_file, g);
  if (app.got_subcommand(selftest)) return cmd_selftest(level, g);
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const SizeGuardError& e) {
    std::cerr << "refused: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::logic_error& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
