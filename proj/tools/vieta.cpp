// Command-line front end: parse a system, run one computation, print the
// exact result as text or JSON.

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "vieta/errors.hpp"
#include "vieta/flags.hpp"
#include "vieta/formulas.hpp"
#include "vieta/parse.hpp"
#include "vieta/residue.hpp"
#include "vieta/symbol.hpp"
#include "vieta/verify.hpp"

using json = nlohmann::ordered_json;
using namespace vieta;

namespace {

enum Exit { kOk = 0, kUsage = 1, kPrecondition = 2, kConsistency = 3 };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::size_t n = 0;
  std::vector<std::string> system;
  std::string f0;
  std::string vertex;
  std::string job;
  std::string format = "text";
  std::string out;
  std::uint64_t seed = 1;
  std::size_t cases = 0;
  int suite = 0;
};

struct Job {
  std::size_t n = 0;
  std::vector<LaurentPolynomial> system;
  std::optional<LaurentPolynomial> f0;
};

struct Report {
  json data;
  std::string text;
  int exit = kOk;
};

LaurentPolynomial polynomial_from_json(const json& j, std::size_t n) {
  if (j.is_string()) return parse_laurent(j.get<std::string>(), n);
  if (!j.is_object() || !j.contains("terms")) {
    throw UsageError("polynomial must be a string or an object with \"terms\"");
  }
  LaurentPolynomial f(n);
  for (const auto& term : j.at("terms")) {
    const auto exp = term.at("exp").get<Exponent>();
    if (exp.size() != n) throw UsageError("exponent has wrong length");
    const json& c = term.at("coeff");
    f.add_term(exp, c.is_string() ? parse_rational(c.get<std::string>())
                                  : Rational(c.get<std::int64_t>()));
  }
  return f;
}

std::string read_all(const std::string& path) {
  if (path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), {});
  }
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open job file " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Job load_job(const Options& o) {
  Job job;
  if (!o.job.empty()) {
    json j;
    try {
      j = json::parse(read_all(o.job));
    } catch (const json::parse_error& e) {
      throw ParseError(std::string("invalid JSON: ") + e.what(), e.byte);
    }
    try {
      job.n = j.at("n").get<std::size_t>();
      if (job.n == 0) throw UsageError("n must be at least 1");
      for (const auto& p : j.at("system")) job.system.push_back(polynomial_from_json(p, job.n));
      if (j.contains("f0")) job.f0 = polynomial_from_json(j.at("f0"), job.n);
    } catch (const json::exception& e) {
      throw UsageError(std::string("bad job: ") + e.what());
    }
  } else {
    if (o.n == 0) throw UsageError("--n is required (or --job)");
    job.n = o.n;
    for (const auto& s : o.system) job.system.push_back(parse_laurent(s, job.n));
  }
  if (!o.f0.empty()) job.f0 = parse_laurent(o.f0, job.n);
  if (job.system.size() != job.n) {
    throw UsageError("expected " + std::to_string(job.n) + " polynomials, got " +
                         std::to_string(job.system.size()));
  }
  return job;
}

Exponent parse_vertex(const std::string& text, std::size_t n) {
  if (text.empty()) throw UsageError("--vertex is required");
  Exponent v;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string::npos) comma = text.size();
    const std::string item = text.substr(pos, comma - pos);
    try {
      std::size_t used = 0;
      v.push_back(std::stoll(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::logic_error&) {
      throw ParseError("bad vertex coordinate '" + item + "'", pos);
    }
    pos = comma + 1;
  }
  if (v.size() != n) throw UsageError("vertex needs " + std::to_string(n) + " coordinates");
  return v;
}

std::string vertex_text(const Exponent& e) {
  std::string s = "(";
  for (std::size_t i = 0; i < e.size(); ++i) s += (i ? "," : "") + std::to_string(e[i]);
  return s + ")";
}

LaurentPolynomial f0_or_one(const Job& job) {
  return job.f0 ? *job.f0 : LaurentPolynomial::constant(job.n, Rational(1));
}

Report cmd_developed(const Job& job) {
  std::vector<Polytope> polys;
  for (const auto& f : job.system) {
    if (f.is_zero()) throw PreconditionError("zero polynomial in the system");
    polys.push_back(newton_polytope(f));
  }
  const Developedness d = check_developed(polys);
  Report r;
  r.data["developed"] = d.developed;
  r.text = d.developed ? "true" : "false";
  if (!d.developed) {
    if (d.witness) {
      r.data["witness"] = *d.witness;
      r.text += "\nwitness w=" + vertex_text(*d.witness);
    }
    r.data["reason"] = d.reason;
  }
  return r;
}

Report cmd_mv(const Job& job) {
  SystemInstance sys(job.system);
  const Integer ie = mixed_volume_ie(sys.minkowski().summands());
  const Integer bn = bernstein_number(sys);
  Report r;
  r.data["mixed_volume"] = ie.str();
  r.data["bernstein_number"] = bn.str();
  r.text = "mixed_volume " + ie.str() + "\nbernstein_number " + bn.str();
  return r;
}

Report cmd_coeffs(const Job& job) {
  SystemInstance sys(job.system);
  const auto vertices = sys.vertices();
  Report r;
  r.data["vertices"] = json::array();
  for (std::size_t v = 0; v < vertices.size(); ++v) {
    r.data["vertices"].push_back({{"vertex", vertices[v]}, {"c", sys.coefficients()[v]}});
    if (v) r.text += "\n";
    r.text += vertex_text(vertices[v]) + " " + std::to_string(sys.coefficients()[v]);
  }
  return r;
}

Monomial require_monomial(const Job& job) {
  if (!job.f0) throw PreconditionError("--f0 is required");
  if (!job.f0->is_monomial()) throw PreconditionError("f0 must be a single monomial");
  return job.f0->as_monomial();
}

Report cmd_symbol(const Job& job, const Options& o) {
  const Monomial f0 = require_monomial(job);
  SystemInstance sys(job.system);
  const std::size_t v = sys.vertex_index(parse_vertex(o.vertex, job.n));
  const FactoredRational fr =
      factored_vertex_symbol(f0, sys.system(), sys.minkowski(), v).canonical();
  Report r;
  json factors = json::array();
  for (const auto& [base, e] : fr.factors) factors.push_back({base.str(), e.str()});
  r.data["factored"] = {{"sign", fr.sign}, {"factors", factors}};
  r.text = "factored " + fr.to_string();
  try {
    const std::string value = to_string(fr.value());
    r.data["value"] = value;
    r.text = value + "\n" + r.text;
  } catch (const PreconditionError&) {
    r.data["value"] = nullptr; // too large to expand
  }
  return r;
}

Report cmd_residue(const Job& job, const Options& o) {
  const Exponent vertex = parse_vertex(o.vertex, job.n);
  const Rational res = log_form_residue(f0_or_one(job), job.system, vertex);
  Report r;
  r.data["residue"] = to_string(res);
  r.text = to_string(res);
  return r;
}

Report cmd_product(const Job& job) {
  const Monomial f0 = require_monomial(job);
  SystemInstance sys(job.system);
  const Rational p = product_over_roots(f0, sys);
  Report r;
  r.data["product"] = to_string(p);
  r.text = to_string(p);
  return r;
}

Report cmd_sum(const Job& job) {
  SystemInstance sys(job.system);
  const Rational s = sum_over_roots(f0_or_one(job), sys);
  Report r;
  r.data["sum"] = to_string(s);
  r.text = to_string(s);
  return r;
}

Report cmd_verify(const Options& o) {
  VerifyOptions vo;
  vo.seed = o.seed;
  if (o.cases > 0) vo.cases = o.cases;
  std::vector<SuiteResult> results;
  if (o.suite > 0) {
    results.push_back(run_suite(o.suite, vo));
  } else {
    results = run_all_suites(vo);
  }
  Report r;
  r.data["seed"] = o.seed;
  r.data["suites"] = json::array();
  std::ostringstream text;
  for (const auto& s : results) {
    r.data["suites"].push_back({{"id", s.id},
                                {"name", s.name},
                                {"passed", s.passed()},
                                {"cases", s.cases},
                                {"failures", s.failures},
                                {"resampled", s.resampled},
                                {"seconds", s.seconds},
                                {"message", s.message}});
    char line[160];
    std::snprintf(line, sizeof line, "%d  %-20s %-4s %6zu cases %4zu failed %8.3fs", s.id,
                  s.name.c_str(), s.passed() ? "PASS" : "FAIL", s.cases, s.failures, s.seconds);
    text << line;
    if (!s.message.empty()) text << "  " << s.message;
    text << "\n";
    if (!s.passed()) r.exit = kConsistency;
  }
  r.text = text.str();
  if (!r.text.empty()) r.text.pop_back();
  return r;
}

void emit(const Report& r, const Options& o, const std::string& command) {
  std::string body;
  if (o.format == "json") {
    json out = {{"command", command}};
    for (auto it = r.data.begin(); it != r.data.end(); ++it) out[it.key()] = it.value();
    body = out.dump(2);
  } else {
    body = r.text;
  }
  body += "\n";
  if (o.out.empty()) {
    std::cout << body;
  } else {
    std::ofstream f(o.out);
    if (!f) throw PreconditionError("cannot write " + o.out);
    f << body;
  }
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact products and sums over the roots of developed Laurent systems"};
  app.require_subcommand(1);
  Options o;

  auto add_io = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--out", o.out, "Write the report to a file");
  };
  auto add_system = [&](CLI::App* sub) {
    sub->add_option("--n", o.n, "Number of variables");
    sub->add_option("--system", o.system, "n polynomials in t1..tn");
    sub->add_option("--job", o.job, "JSON job file ('-' for stdin)");
    sub->add_option("--f0", o.f0, "Function to aggregate");
    add_io(sub);
  };

  struct Command {
    const char* name;
    const char* help;
    bool vertex;
  };
  const Command commands[] = {
      {"developed", "Check developedness; prints a witness covector when it fails", false},
      {"mv", "Mixed volume by inclusion-exclusion and by the sum formula", false},
      {"coeffs", "Combinatorial coefficient of every vertex", false},
      {"symbol", "Vertex symbol of f0 and the leading monomials", true},
      {"residue", "Residue of f0 dt/t / (f_1 ... f_n) at a vertex", true},
      {"product", "Product of the monomial f0 over the roots", false},
      {"sum", "Sum of f0 over the roots", false},
  };
  for (const auto& c : commands) {
    CLI::App* sub = app.add_subcommand(c.name, c.help);
    add_system(sub);
    if (c.vertex) sub->add_option("--vertex", o.vertex, "Vertex as comma-separated integers");
  }
  CLI::App* verify = app.add_subcommand("verify", "Run the oracle equivalence suites");
  verify->add_option("--seed", o.seed, "Random seed");
  verify->add_option("--cases", o.cases, "Cases per suite (default: each suite's own count)");
  verify->add_option("--suite", o.suite, "Run a single suite (1-8)")->check(CLI::Range(1, kSuiteCount));
  add_io(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  try {
    Report r;
    if (command == "verify") {
      r = cmd_verify(o);
    } else {
      const Job job = load_job(o);
      if (command == "developed") r = cmd_developed(job);
      else if (command == "mv") r = cmd_mv(job);
      else if (command == "coeffs") r = cmd_coeffs(job);
      else if (command == "symbol") r = cmd_symbol(job, o);
      else if (command == "residue") r = cmd_residue(job, o);
      else if (command == "product") r = cmd_product(job);
      else r = cmd_sum(job);
    }
    emit(r, o, command);
    return r.exit;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const UsageError& e) {
    std::cerr << "usage: " << e.what() << "\n";
    return kUsage;
  } catch (const PreconditionError& e) {
    std::cerr << "precondition failed: " << e.what() << "\n";
    return kPrecondition;
  } catch (const ConsistencyError& e) {
    std::cerr << "consistency failure: " << e.what() << "\n";
    return kConsistency;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kConsistency;
  }
}
