#include "cli.hpp"

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "lindep/charpoly.hpp"
#include "lindep/errors.hpp"
#include "lindep/graph.hpp"
#include "lindep/invariants.hpp"

namespace lindep::cli {

namespace {

std::string_view format_name(Format f) {
  switch (f) {
    case Format::json: return "json";
    case Format::dot: return "dot";
    case Format::csv: return "csv";
    case Format::markdown: return "markdown";
  }
  return "?";
}

std::string_view command_name(Command c) {
  switch (c) {
    case Command::build: return "build";
    case Command::charpoly: return "charpoly";
    case Command::verify: return "verify";
    case Command::invariants: return "invariants";
  }
  return "?";
}

Format resolve_format(const CliConfig& c, Format fallback,
                      std::initializer_list<Format> allowed) {
  const Format f = c.format.value_or(fallback);
  for (Format a : allowed) {
    if (a == f) return f;
  }
  throw std::invalid_argument("format " + std::string(format_name(f)) +
                              " is not available for " + std::string(command_name(c.command)));
}

gf::FieldSpec field(const CliConfig& c) {
  if (c.modulus_override) return gf::FieldSpec::with_modulus(c.p, c.k, *c.modulus_override);
  return gf::FieldSpec::make(c.p, c.k);
}

graph::IntMatrix matrix_of(const graph::DepGraph& g, spectra::MatrixKind kind) {
  switch (kind) {
    case spectra::MatrixKind::adjacency: return graph::adjacency_matrix(g);
    case spectra::MatrixKind::laplacian: return graph::laplacian_matrix(g);
    case spectra::MatrixKind::distance: return graph::distance_matrix(g);
  }
  throw std::logic_error("matrix kind");
}

void require_spectra_bound(const graph::DepGraph& g, const CliConfig& c) {
  if (g.num_vertices() > c.bounds.spectra) {
    throw CapacityError("order " + std::to_string(g.num_vertices()) +
                        " exceeds spectra bound " + std::to_string(c.bounds.spectra) +
                        " (raise --max-spectra-vertices)");
  }
}

std::string oracle_value(const invariants::OracleResult& r) {
  if (const auto* i = std::get_if<std::int64_t>(&r.value)) return std::to_string(*i);
  if (const auto* b = std::get_if<bool>(&r.value)) return *b ? "true" : "false";
  return std::get<std::string>(r.value);
}

std::string cmd_build(const CliConfig& c, std::ostream& err) {
  const Format f = resolve_format(c, Format::json, {Format::json, Format::dot, Format::csv});
  const auto g = graph::build_graph(field(c), c.n, c.bounds.graph);
  err << "vertices: " << g.num_vertices() << ", edges: " << g.adjacency.edge_count() << "\n";
  switch (f) {
    case Format::dot: return graph::to_dot(g);
    case Format::csv: return graph::to_csv(matrix_of(g, c.matrix));
    default: return graph::to_json(g) + "\n";
  }
}

std::string cmd_charpoly(const CliConfig& c) {
  const Format f = resolve_format(c, Format::markdown, {Format::markdown, Format::json});
  const auto spec = field(c);
  const auto g = graph::build_graph(spec, c.n, c.bounds.graph);
  require_spectra_bound(g, c);
  const auto computed = spectra::charpoly_exact(matrix_of(g, c.matrix));
  const auto predicted = spectra::predicted_poly(spec.q, c.n, c.matrix);
  const bool equal = computed == predicted;
  if (f == Format::json) {
    nlohmann::ordered_json j;
    j["matrix"] = std::string(spectra::to_string(c.matrix));
    j["computed"] = computed.to_string();
    j["predicted"] = predicted.to_string();
    auto coeffs = [](const ExactPoly& p) {
      nlohmann::ordered_json a = nlohmann::ordered_json::array();
      for (const auto& x : p.coeffs()) a.push_back(x.str());
      return a;
    };
    j["computed_coeffs"] = coeffs(computed);
    j["predicted_coeffs"] = coeffs(predicted);
    j["equal"] = equal;
    return j.dump(2) + "\n";
  }
  std::ostringstream os;
  os << "matrix: " << spectra::to_string(c.matrix) << "\n"
     << "computed:  " << computed.to_string() << "\n"
     << "predicted: " << predicted.to_string() << "\n"
     << "equal=" << (equal ? "true" : "false") << "\n";
  return os.str();
}

std::string cmd_invariants(const CliConfig& c) {
  const Format f = resolve_format(c, Format::json, {Format::json, Format::markdown});
  const auto g = graph::build_graph(field(c), c.n, c.bounds.graph);
  const auto results = invariants::evaluate_all(g.adjacency, c.bounds.search);
  if (f == Format::json) return invariants::to_json(results) + "\n";
  std::ostringstream os;
  os << "| invariant | value |\n|---|---|\n";
  for (const auto& r : results) os << "| " << r.name << " | " << oracle_value(r) << " |\n";
  return os.str();
}

void emit(const CliConfig& c, const std::string& text, std::ostream& out) {
  if (!c.out) {
    out << text;
    return;
  }
  std::ofstream file(*c.out, std::ios::binary);
  if (!file) throw std::runtime_error("cannot write " + *c.out);
  file << text;
  if (!file) throw std::runtime_error("cannot write " + *c.out);
}

}  // namespace

std::vector<gf::Coeff> parse_modulus(const std::string& text) {
  std::vector<gf::Coeff> coeffs;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    unsigned long v = 0;
    try {
      v = std::stoul(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size() || v > 0xffffffffUL) {
      throw std::invalid_argument("bad modulus coefficient '" + item + "'");
    }
    coeffs.push_back(static_cast<gf::Coeff>(v));
  }
  if (coeffs.empty()) throw std::invalid_argument("empty modulus");
  return coeffs;
}

int run_command(const CliConfig& c, std::ostream& out, std::ostream& err) {
  try {
    switch (c.command) {
      case Command::build:
        emit(c, cmd_build(c, err), out);
        return kOk;
      case Command::charpoly:
        emit(c, cmd_charpoly(c), out);
        return kOk;
      case Command::invariants:
        emit(c, cmd_invariants(c), out);
        return kOk;
      case Command::verify: {
        const Format f = resolve_format(c, Format::json, {Format::json, Format::markdown});
        verifier::Options opts;
        opts.bounds = c.bounds;
        const auto report = verifier::run_suite(field(c), c.n, opts);
        emit(c,
             verifier::render_report(report, f == Format::json
                                                 ? verifier::ReportFormat::json
                                                 : verifier::ReportFormat::markdown),
             out);
        if (report.has_failures()) {
          err << "theorem mismatch\n";
          return kMismatch;
        }
        if (c.strict && report.has_known_discrepancies()) {
          err << "known corollary discrepancies present (--strict)\n";
          return kMismatch;
        }
        return kOk;
      }
    }
  } catch (const CapacityError& e) {
    err << "error: " << e.what() << "\n";
    return kCapacity;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Linear dependence graphs of vector spaces over finite fields"};
  app.require_subcommand(1);

  CliConfig c;
  std::string modulus;
  std::string format;
  std::string matrix = "adjacency";
  std::string out_path;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--p", c.p, "field characteristic (prime)")->required();
    sub->add_option("--k", c.k, "extension degree, q = p^k")->capture_default_str();
    sub->add_option("--n", c.n, "dimension of V")->required();
    sub->add_option("--modulus", modulus,
                    "irreducible modulus, ascending coefficients, e.g. 1,1,1");
    sub->add_option("--format", format, "json | dot | csv | markdown");
    sub->add_option("--out", out_path, "write output to this file");
    sub->add_option("--max-vertices", c.bounds.graph, "graph construction bound")
        ->capture_default_str();
    sub->add_option("--max-spectra-vertices", c.bounds.spectra,
                    "characteristic polynomial bound")
        ->capture_default_str();
    sub->add_option("--max-search-vertices", c.bounds.search,
                    "bound for exponential oracles")
        ->capture_default_str();
  };

  auto* build = app.add_subcommand("build", "construct the graph and export it");
  common(build);
  build->add_option("--matrix", matrix, "matrix for csv export");
  auto* charpoly = app.add_subcommand("charpoly", "exact characteristic polynomial");
  common(charpoly);
  charpoly->add_option("--matrix", matrix, "adjacency | laplacian | distance");
  auto* verify = app.add_subcommand("verify", "check every claim and emit a report");
  common(verify);
  verify->add_flag("--strict", c.strict, "treat known corollary discrepancies as failures");
  auto* inv = app.add_subcommand("invariants", "brute-force invariant oracles");
  common(inv);

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kOk : kUsage;
  }

  if (*build) c.command = Command::build;
  if (*charpoly) c.command = Command::charpoly;
  if (*verify) c.command = Command::verify;
  if (*inv) c.command = Command::invariants;

  try {
    static const std::map<std::string, Format> formats = {
        {"json", Format::json}, {"dot", Format::dot},
        {"csv", Format::csv},   {"markdown", Format::markdown},
        {"md", Format::markdown}};
    if (!format.empty()) {
      auto it = formats.find(format);
      if (it == formats.end()) throw std::invalid_argument("unknown format '" + format + "'");
      c.format = it->second;
    }
    c.matrix = spectra::matrix_kind_from_string(matrix);
    if (!modulus.empty()) c.modulus_override = parse_modulus(modulus);
    if (!out_path.empty()) c.out = out_path;
    if (c.n < 1) throw std::invalid_argument("n must be at least 1");
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return run_command(c, out, err);
}

}  // namespace lindep::cli
