#include <cstdio>
#include <exception>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "percount/acceptance.hpp"
#include "percount/bern.hpp"
#include "percount/json_io.hpp"
#include "percount/polyops.hpp"
#include "percount/realis.hpp"
#include "percount/recur.hpp"
#include "percount/seqlab.hpp"

namespace {

using namespace percount;
using json = json_io::json;

// Exit codes: 0 computed (even a negative verdict), 1 bad input, 2 broken invariant.
constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitInternal = 2;

struct OutputOptions {
  std::string format = "json";
};

void add_format_flag(CLI::App* cmd, OutputOptions& out) {
  cmd->add_option("--format", out.format, "Output format")
      ->check(CLI::IsMember({"json", "csv", "text"}))
      ->capture_default_str();
}

void emit_csv_value(const json& v, std::string& line) {
  if (!line.empty()) line += ',';
  if (v.is_string())
    line += v.get<std::string>();
  else
    line += v.dump();
}

// csv: sequences become one comma-separated row; objects become key,value rows
// with scalar arrays joined in place. Nested objects fall back to compact JSON.
void emit(const json& j, const OutputOptions& out) {
  if (out.format == "json") {
    std::printf("%s\n", j.dump(2).c_str());
    return;
  }
  if (j.is_object() && j.contains("terms") && j.size() <= 2) {
    const json& terms = j["terms"];
    if (out.format == "csv") {
      std::string line;
      for (const json& t : terms) emit_csv_value(t, line);
      std::printf("%s\n", line.c_str());
    } else {
      for (const json& t : terms) std::printf("%s\n", t.get<std::string>().c_str());
    }
    return;
  }
  if (out.format == "csv") {
    for (const auto& [key, value] : j.items()) {
      std::string line = key;
      if (value.is_array()) {
        std::string cells;
        for (const json& v : value) emit_csv_value(v, cells);
        line += ',' + cells;
      } else if (value.is_string()) {
        line += ',' + value.get<std::string>();
      } else {
        line += ',' + value.dump();
      }
      std::printf("%s\n", line.c_str());
    }
    return;
  }
  std::printf("%s\n", j.dump(2).c_str());
}

std::vector<Int> parse_int_list(const std::string& csv) {
  return parse_terms_csv(csv).terms;
}

struct SequenceInput {
  std::string file;
  std::string terms;
  std::string generate;
  std::string power_base = "2";
  std::string coeffs;
  std::string inits;
  std::string matrix;
  std::string poly;
  std::size_t limit = 50;

  void add_flags(CLI::App* cmd) {
    cmd->add_option("--file", file, "Sequence file, one integer per line");
    cmd->add_option("--terms", terms, "Inline comma-separated terms");
    cmd->add_option("--generate", generate,
                    "Built-in family: power, mersenne, lucas, jacobsthal_lucas, "
                    "s_plus, recurrence, trace, lehmer_pierce");
    cmd->add_option("--a", power_base, "Base for --generate power");
    cmd->add_option("--coeffs", coeffs, "Recurrence coefficients a_1,...,a_k");
    cmd->add_option("--inits", inits, "Recurrence initial terms u_1,...,u_k");
    cmd->add_option("--matrix", matrix, "Matrix, rows ';'-separated: \"0,1;1,1\"");
    cmd->add_option("--poly", poly, "Monic polynomial, \"x^2-x-1\" or \"1,-1,-1\"");
    cmd->add_option("--limit", limit, "Number of terms")->capture_default_str();
  }

  Sequence resolve() const {
    int sources = !file.empty() + !terms.empty() + !generate.empty();
    if (sources != 1)
      throw std::invalid_argument(
          "provide exactly one of --file, --terms, --generate");
    if (!file.empty()) return read_sequence_file(file);
    if (!terms.empty()) return parse_terms_csv(terms);

    seqlab::GeneratorSpec spec;
    using Kind = seqlab::GeneratorSpec::Kind;
    if (generate == "power") {
      spec.kind = Kind::power;
      spec.a = parse_int(power_base);
    } else if (generate == "mersenne") {
      spec.kind = Kind::mersenne;
    } else if (generate == "lucas") {
      spec.kind = Kind::lucas;
    } else if (generate == "jacobsthal_lucas") {
      spec.kind = Kind::jacobsthal_lucas;
    } else if (generate == "s_plus") {
      spec.kind = Kind::s_plus;
    } else if (generate == "recurrence") {
      spec.kind = Kind::linear_recurrence;
      if (coeffs.empty() || inits.empty())
        throw std::invalid_argument("--generate recurrence needs --coeffs and --inits");
      spec.coeffs = parse_int_list(coeffs);
      spec.inits = parse_int_list(inits);
    } else if (generate == "trace") {
      spec.kind = Kind::matrix_trace;
      if (matrix.empty()) throw std::invalid_argument("--generate trace needs --matrix");
      spec.matrix = parse_matrix(matrix);
    } else if (generate == "lehmer_pierce") {
      spec.kind = Kind::lehmer_pierce;
      if (poly.empty())
        throw std::invalid_argument("--generate lehmer_pierce needs --poly");
      spec.poly = IntPolynomial::parse(poly);
    } else {
      throw std::invalid_argument("unknown generator: " + generate);
    }
    return seqlab::generate(spec, limit);
  }
};

int run(int argc, char** argv) {
  CLI::App app{"Exact tools for sequences counting periodic points"};
  app.require_subcommand(1);

  OutputOptions out;

  // check
  auto* check = app.add_subcommand("check", "Realisability test on a sequence prefix");
  SequenceInput check_in;
  check_in.add_flags(check);
  add_format_flag(check, out);

  // transform
  auto* transform = app.add_subcommand("transform", "Mobius transform u -> u*");
  SequenceInput transform_in;
  transform_in.add_flags(transform);
  bool invert = false;
  transform->add_flag("--invert", invert, "Treat input as u* and recover u");
  add_format_flag(transform, out);

  // certificate
  auto* certificate =
      app.add_subcommand("certificate", "Orbit-count certificate c_n = u*_n / n");
  SequenceInput cert_in;
  cert_in.add_flags(certificate);
  add_format_flag(certificate, out);

  // generate
  auto* generate = app.add_subcommand("generate", "Emit a built-in sequence family");
  SequenceInput gen_in;
  gen_in.add_flags(generate);
  add_format_flag(generate, out);

  // local
  auto* local = app.add_subcommand("local", "p-part sequences and local realisability");
  SequenceInput local_in;
  local_in.add_flags(local);
  unsigned long local_prime = 0;
  unsigned long local_prime_bound = 0;
  local->add_option("--prime", local_prime, "Single prime: emit the p-part sequence");
  local->add_option("--prime-bound", local_prime_bound,
                    "Check local realisability at every prime up to the bound");
  add_format_flag(local, out);

  // classify
  auto* classify = app.add_subcommand(
      "classify", "Realisable subspace of u_{n+2} = B u_{n+1} - C u_n");
  std::vector<std::string> binary;
  std::string classify_poly;
  std::size_t classify_prefix = 50;
  bool conjugate = false;
  classify->add_option("--binary", binary, "Coefficients B C")->expected(2);
  classify->add_option("--poly", classify_poly, "Quadratic x^2 - Bx + C instead");
  classify->add_option("--limit", classify_prefix, "Generator prefix length")
      ->capture_default_str();
  classify->add_flag("--conjugate", conjugate,
                     "Also emit the non-negative conjugate matrix");
  add_format_flag(classify, out);

  // analyze
  auto* analyze =
      app.add_subcommand("analyze", "Factor count, dominant root, realisability bound");
  std::string analyze_poly;
  std::vector<std::string> supplied_factors;
  analyze->add_option("--poly", analyze_poly, "Monic integer polynomial")->required();
  analyze->add_option("--factor", supplied_factors,
                      "Claimed monic factor (repeatable); verified, then counted");
  add_format_flag(analyze, out);

  // bernoulli
  auto* bernoulli = app.add_subcommand("bernoulli", "Bernoulli denominator sequences");
  std::size_t bern_limit = 30;
  std::string bern_seq = "denominator";
  unsigned long bern_prime_bound = 0;
  bool bern_probe = false;
  bernoulli->add_option("--limit", bern_limit, "Number of terms (index n in B_2n)")
      ->capture_default_str();
  bernoulli->add_option("--sequence", bern_seq, "Which sequence")
      ->check(CLI::IsMember({"denominator", "denom2n", "num2n", "denom4n"}))
      ->capture_default_str();
  bernoulli->add_option("--prime-bound", bern_prime_bound,
                        "Run the local checks at every prime up to the bound");
  bernoulli->add_flag("--probe", bern_probe,
                      "Probe the three observed local statements instead");
  add_format_flag(bernoulli, out);

  // kummer
  auto* kummer = app.add_subcommand("kummer", "Kummer congruence instance");
  unsigned long kp = 0, kr = 0;
  std::size_t kn = 0, knprime = 0;
  kummer->add_option("--p", kp, "Prime p")->required();
  kummer->add_option("--r", kr, "Congruence level r")->required();
  kummer->add_option("--n", kn, "Even index n")->required();
  kummer->add_option("--nprime", knprime, "Even index n'")->required();
  add_format_flag(kummer, out);

  // congruence
  auto* congruence = app.add_subcommand(
      "congruence", "Trace congruences and star divisibility for a matrix");
  std::string cong_matrix;
  unsigned long cong_prime = 2, cong_r = 1;
  std::size_t cong_limit = 30;
  congruence->add_option("--matrix", cong_matrix, "Integer matrix")->required();
  congruence->add_option("--prime", cong_prime, "Prime p")->capture_default_str();
  congruence->add_option("--r", cong_r, "Exponent r")->capture_default_str();
  congruence->add_option("--limit", cong_limit, "Star divisibility horizon")
      ->capture_default_str();
  add_format_flag(congruence, out);

  // reproduce
  auto* reproduce =
      app.add_subcommand("reproduce", "Run the full reproduction suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  if (check->parsed()) {
    Sequence u = check_in.resolve();
    emit(json_io::to_json(realis::check_realisable(u)), out);
    return kExitOk;
  }

  if (transform->parsed()) {
    Sequence u = transform_in.resolve();
    if (invert) {
      realis::MobiusTransform star{u.terms};
      emit(json_io::to_json(realis::inverse_transform(star)), out);
    } else {
      emit(json_io::to_json(realis::mobius_transform(u)), out);
    }
    return kExitOk;
  }

  if (certificate->parsed()) {
    Sequence u = cert_in.resolve();
    try {
      realis::OrbitCertificate c = realis::orbit_certificate(u);
      json j = json{{"realisable", true}, {"certificate", json_io::to_json(c)}};
      emit(j, out);
    } catch (const realis::NotRealisableError& e) {
      json j = json{{"realisable", false}, {"verdict", json_io::to_json(e.verdict)}};
      emit(j, out);
    }
    return kExitOk;
  }

  if (generate->parsed()) {
    emit(json_io::to_json(gen_in.resolve()), out);
    return kExitOk;
  }

  if (local->parsed()) {
    Sequence u = local_in.resolve();
    if ((local_prime != 0) == (local_prime_bound != 0))
      throw std::invalid_argument("provide exactly one of --prime, --prime-bound");
    if (local_prime != 0) {
      Sequence lp = realis::local_sequence(u, local_prime);
      json j = json{{"prime", local_prime},
                    {"terms", json_io::to_json(lp)["terms"]},
                    {"verdict", json_io::to_json(realis::check_realisable(lp))}};
      emit(j, out);
    } else {
      emit(json_io::to_json(realis::check_everywhere_local(u, local_prime_bound)),
           out);
    }
    return kExitOk;
  }

  if (classify->parsed()) {
    recur::BinaryRecurrence rec;
    if (!binary.empty() && classify_poly.empty()) {
      rec.b = parse_int(binary[0]);
      rec.c = parse_int(binary[1]);
    } else if (binary.empty() && !classify_poly.empty()) {
      IntPolynomial f = IntPolynomial::parse(classify_poly);
      if (f.degree() != 2)
        throw std::invalid_argument("--poly must be quadratic for classify");
      rec.b = Int(-f.coeffs[1]);
      rec.c = f.coeffs[0];
    } else {
      throw std::invalid_argument("provide exactly one of --binary, --poly");
    }
    json j = json_io::to_json(recur::classify(rec, classify_prefix));
    if (conjugate) {
      auto [e, m] = recur::nonneg_conjugate(rec);
      j["conjugator"] = json_io::to_json(e);
      j["conjugate"] = json_io::to_json(m);
    }
    emit(j, out);
    return kExitOk;
  }

  if (analyze->parsed()) {
    IntPolynomial f = IntPolynomial::parse(analyze_poly);
    if (!supplied_factors.empty()) {
      std::vector<IntPolynomial> factors;
      for (const std::string& s : supplied_factors)
        factors.push_back(IntPolynomial::parse(s));
      if (!recur::verify_factorisation(f, factors))
        throw std::invalid_argument("supplied factors do not multiply back to --poly");
      polyops::Poly g = polyops::gcd(f.coeffs, polyops::derivative(f.coeffs));
      json j = json{{"separable", polyops::degree(g) == 0},
                    {"factor_count", factors.size()},
                    {"factors_verified", true}};
      emit(j, out);
    } else {
      emit(json_io::to_json(recur::realisable_bound(f)), out);
    }
    return kExitOk;
  }

  if (bernoulli->parsed()) {
    if (bern_probe) {
      if (bern_prime_bound == 0)
        throw std::invalid_argument("--probe needs --prime-bound");
      emit(json_io::to_json(bern::probe_conjectures(bern_limit, bern_prime_bound)),
           out);
    } else if (bern_prime_bound != 0) {
      emit(json_io::to_json(bern::check_theorem3_local(bern_limit, bern_prime_bound)),
           out);
    } else {
      bern::BernoulliTable table = bern::bernoulli_table(bern_limit);
      Sequence s;
      if (bern_seq == "denominator")
        s = bern::bernoulli_denominator_sequence(table, bern_limit);
      else if (bern_seq == "denom2n")
        s = bern::denom_b2n_over_2n(table, bern_limit);
      else if (bern_seq == "num2n")
        s = bern::num_b2n_over_2n(table, bern_limit);
      else
        s = bern::denom_b2n_over_4n(table, bern_limit);
      emit(json_io::to_json(s), out);
    }
    return kExitOk;
  }

  if (kummer->parsed()) {
    std::size_t high = std::max(kn, knprime);
    bern::BernoulliTable table = bern::bernoulli_table(high / 2 + high % 2);
    emit(json_io::to_json(bern::kummer_check(table, kp, kr, kn, knprime)), out);
    return kExitOk;
  }

  if (congruence->parsed()) {
    IntMatrix a = parse_matrix(cong_matrix);
    json j = json{
        {"euler_fermat",
         json_io::to_json(seqlab::verify_matrix_euler_fermat(a, cong_prime, cong_r))},
        {"star_divisibility",
         json_io::to_json(seqlab::verify_star_divisibility(a, cong_limit))}};
    emit(j, out);
    return kExitOk;
  }

  if (reproduce->parsed()) {
    std::vector<acceptance::CriterionResult> results = acceptance::run_all();
    int failed = 0;
    for (const auto& r : results) {
      std::printf("%s criterion %2d: %s%s%s\n", r.pass ? "PASS" : "FAIL", r.id,
                  r.name.c_str(), r.detail.empty() ? "" : " -- ", r.detail.c_str());
      if (!r.pass) ++failed;
    }
    std::printf("%d/%zu criteria passed\n",
                static_cast<int>(results.size()) - failed, results.size());
    return failed == 0 ? kExitOk : kExitInternal;
  }

  return kExitInput;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitInput;
  } catch (const std::domain_error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitInput;
  } catch (const std::logic_error& e) {
    std::fprintf(stderr, "internal error: %s\n", e.what());
    return kExitInternal;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "internal error: %s\n", e.what());
    return kExitInternal;
  }
}
