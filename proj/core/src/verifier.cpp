#include "lindep/verifier.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <future>
#include <optional>
#include <stdexcept>

#include "lindep/charpoly.hpp"
#include "lindep/closedform.hpp"
#include "lindep/errors.hpp"
#include "lindep/root_finder.hpp"

namespace lindep::verifier {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

const std::vector<ClaimSpec> kRegistry = {
    {"completeness", "Gamma(V) is complete iff n = 1"},
    {"size", "|E(Gamma(V))| = q (q^n - 1) / 2"},
    {"connected_diameter", "Gamma(V) is connected; diam = 2 for n >= 2"},
    {"domination", "gamma(Gamma(V)) = 1"},
    {"independence", "alpha(Gamma(V)) = q^(n-1) + ... + q + 1"},
    {"isomorphism", "V ~= W iff Gamma(V) ~= Gamma(W)"},
    {"maximal_cliques", "maximal cliques are exactly the 1-dimensional subspaces"},
    {"clique_number", "omega(Gamma(V)) = q"},
    {"chromatic_number", "chi(Gamma(V)) = q"},
    {"eulerian", "Gamma(V) is Eulerian iff q is odd"},
    {"edge_connectivity", "lambda(Gamma(V)) = q - 1"},
    {"vertex_connectivity", "kappa(Gamma(V)) = 1 for n >= 2"},
    {"planarity", "Gamma(V) is planar iff q in {2, 3, 4}"},
    {"charpoly_adjacency",
     "P_A(x) = {x^2 - (q-2)x - (q^n-1)} {x - (q-2)}^(N-1) (x+1)^((q-2)N)"},
    {"adjacency_energy_corollary", "E(Gamma(V)) = 2 (q-2) N", true},
    {"adjacency_energy_spectrum", "E(Gamma(V)) = sum |lambda_i| over the spectrum of A"},
    {"charpoly_laplacian", "P_L(x) = x (x - q^n) (x-1)^(N-1) (x-q)^((q-2)N)"},
    {"algebraic_connectivity", "a(Gamma(V)) = 1 for n >= 2"},
    {"spanning_trees", "tau(Gamma(V)) = q^((q-2)N)"},
    {"laplacian_energy", "LE(Gamma(V)) = sum |mu_i - 2m/q^n|"},
    {"charpoly_distance",
     "P_D(x) = [x^2 - {2(q^n-1) - q}x - (q^n-1)] (x+q)^(N-1) (x+1)^((q-2)N)"},
    {"distance_energy_corollary", "E_D(Gamma(V)) = 2 (2q^n - q - 2)", true},
    {"distance_energy_spectrum", "E_D(Gamma(V)) = sum |lambda_i| over the spectrum of D"},
};

bool reals_close(const Real& a, const Real& b) {
  const Real scale = std::max(Real(abs(a)), Real(abs(b)));
  if (scale == 0) return true;
  return Real(abs(a - b)) <= Real(kRelativeTolerance) * scale;
}

std::optional<Real> as_real(const ClaimValue& v) {
  if (const auto* r = std::get_if<Real>(&v)) return *r;
  if (const auto* i = std::get_if<BigInt>(&v)) return Real(*i);
  return std::nullopt;
}

BigInt big(std::uint64_t v) { return BigInt(v); }

Real to_real(const BigRational& r) {
  return Real(boost::multiprecision::numerator(r)) /
         Real(boost::multiprecision::denominator(r));
}

// Results of the spectral stage for one matrix.
struct SpectralStage {
  ExactPoly computed;
  std::vector<spectra::NumericRoot> roots;
};

SpectralStage spectral(const graph::IntMatrix& m) {
  SpectralStage s;
  s.computed = spectra::charpoly_exact(m);
  s.roots = spectra::real_roots(s.computed);
  return s;
}

// Values computed by the generic oracles, or the reason they were not.
struct OracleStage {
  bool complete = false;
  std::size_t edges = 0;
  std::optional<std::size_t> diameter;
  bool eulerian = false;
  invariants::EdgeCutResult edge_cut;
  invariants::SetResult separator;
  invariants::Planarity planarity = invariants::Planarity::unknown;

  bool searched = false;
  invariants::SetResult domination;
  invariants::SetResult independence;
  invariants::SetResult clique;
  invariants::ColoringResult coloring;
  std::vector<invariants::VertexSet> cliques;

  std::optional<bool> isomorphism;
  std::string isomorphism_note;
};

OracleStage run_oracles(const graph::DepGraph& g, const gf::FieldSpec& spec,
                        std::uint32_t n, const Bounds& bounds) {
  const SimpleGraph& s = g.adjacency;
  OracleStage o;
  o.complete = invariants::is_complete(s);
  o.edges = invariants::edge_count(s);
  o.diameter = invariants::diameter(s);
  o.eulerian = invariants::is_eulerian(s);
  o.edge_cut = invariants::edge_connectivity(s);
  o.separator = invariants::vertex_connectivity(s);
  o.planarity = invariants::planarity_by_blocks(s);

  if (s.order() <= bounds.search) {
    o.searched = true;
    o.domination = invariants::domination_number(s, bounds.search);
    o.independence = invariants::independence_number(s, bounds.search);
    o.clique = invariants::clique_number(s, bounds.search);
    o.coloring = invariants::chromatic_number(s, bounds.search);
    o.cliques = invariants::maximal_cliques(s, bounds.search);
  }

  if (s.order() <= bounds.isomorphism) {
    // Gamma(F_q^n) must match the windmill on N blades, and must differ from
    // Gamma(F_q^m) for every other m within reach.
    bool ok = invariants::are_isomorphic(
        s, graph::build_windmill(g.meta.q, g.meta.N).adjacency, bounds.isomorphism);
    if (!ok) o.isomorphism_note = "not isomorphic to the windmill";
    std::uint64_t order = g.meta.q;
    for (std::uint32_t m = 1; ok && order <= bounds.isomorphism; ++m, order *= g.meta.q) {
      const auto other = graph::build_graph(spec, m, bounds.graph);
      const bool iso = invariants::are_isomorphic(s, other.adjacency, bounds.isomorphism);
      if (iso != (m == n)) {
        ok = false;
        o.isomorphism_note = "dimension " + std::to_string(m) + " disagrees";
      }
    }
    o.isomorphism = ok;
  }
  return o;
}

// Every maximal clique must be theta together with one whole class.
bool cliques_are_lines(const graph::DepGraph& g,
                       const std::vector<invariants::VertexSet>& cliques) {
  std::vector<invariants::VertexSet> expected;
  std::size_t pos = 1;
  for (const auto& cls : g.classes) {
    invariants::VertexSet c{0};
    for (std::size_t i = 0; i < cls.size(); ++i) c.push_back(pos++);
    expected.push_back(std::move(c));
  }
  auto got = cliques;
  std::sort(got.begin(), got.end());
  std::sort(expected.begin(), expected.end());
  return got == expected;
}

class ClaimBuilder {
 public:
  explicit ClaimBuilder(VerificationReport& r) : report_(r) {}

  void add(std::string_view id, ClaimValue predicted, ClaimValue computed,
           std::string note = {}) {
    const ClaimSpec& spec = find(id);
    Claim c;
    c.claim_id = std::string(spec.id);
    c.paper_anchor = std::string(spec.anchor);
    c.predicted = std::move(predicted);
    c.computed = std::move(computed);
    c.match = values_match(c.predicted, c.computed);
    if (c.match) {
      c.status = ClaimStatus::pass;
    } else if (spec.known_discrepancy) {
      c.status = ClaimStatus::known_discrepancy;
      if (note.empty()) note = "corollary inconsistent with spectrum theorem";
    } else {
      c.status = ClaimStatus::fail;
    }
    c.note = std::move(note);
    report_.claims.push_back(std::move(c));
  }

  void skip(std::string_view id, ClaimValue predicted, std::string reason) {
    const ClaimSpec& spec = find(id);
    Claim c;
    c.claim_id = std::string(spec.id);
    c.paper_anchor = std::string(spec.anchor);
    c.predicted = std::move(predicted);
    c.status = ClaimStatus::skipped;
    c.note = std::move(reason);
    report_.claims.push_back(std::move(c));
  }

 private:
  static const ClaimSpec& find(std::string_view id) {
    for (const auto& s : kRegistry) {
      if (s.id == id) return s;
    }
    throw std::logic_error("unregistered claim " + std::string(id));
  }

  VerificationReport& report_;
};

}  // namespace

std::string_view to_string(ClaimStatus s) {
  switch (s) {
    case ClaimStatus::pass: return "pass";
    case ClaimStatus::known_discrepancy: return "known-discrepancy";
    case ClaimStatus::fail: return "fail";
    case ClaimStatus::skipped: return "skipped";
  }
  return "?";
}

const std::vector<ClaimSpec>& claim_registry() { return kRegistry; }

const Claim& VerificationReport::claim(std::string_view id) const {
  for (const auto& c : claims) {
    if (c.claim_id == id) return c;
  }
  throw std::out_of_range("no claim " + std::string(id));
}

bool VerificationReport::has_failures() const {
  return std::any_of(claims.begin(), claims.end(),
                     [](const Claim& c) { return c.status == ClaimStatus::fail; });
}

bool VerificationReport::has_known_discrepancies() const {
  return std::any_of(claims.begin(), claims.end(), [](const Claim& c) {
    return c.status == ClaimStatus::known_discrepancy;
  });
}

bool values_match(const ClaimValue& predicted, const ClaimValue& computed) {
  if (std::holds_alternative<std::monostate>(predicted) ||
      std::holds_alternative<std::monostate>(computed)) {
    return false;
  }
  if (std::holds_alternative<Real>(predicted) || std::holds_alternative<Real>(computed)) {
    const auto a = as_real(predicted);
    const auto b = as_real(computed);
    return a && b && reals_close(*a, *b);
  }
  return predicted == computed;
}

VerificationReport run_suite(const gf::FieldSpec& spec, std::uint32_t n,
                             const Options& options) {
  using spectra::MatrixKind;
  const auto t_total = Clock::now();
  const Bounds& bounds = options.bounds;

  const auto pred = closedform::predict_all(spec.q, n);

  auto t0 = Clock::now();
  const graph::DepGraph g = graph::build_graph(spec, n, bounds.graph);
  const double build_ms = ms_since(t0);

  VerificationReport r;
  r.meta = {spec.p, spec.k, n, spec.q, pred.N};

  const std::uint64_t nv = g.num_vertices();
  const bool do_spectra = nv <= bounds.spectra;
  const auto launch = options.parallel ? std::launch::async : std::launch::deferred;

  // Spectral work and oracle work are independent; results are collected in
  // a fixed order below.
  std::future<SpectralStage> fa, fl, fd;
  std::future<BigInt> ftrees;
  if (do_spectra) {
    fa = std::async(launch, [&] { return spectral(graph::adjacency_matrix(g)); });
    fl = std::async(launch, [&] { return spectral(graph::laplacian_matrix(g)); });
    fd = std::async(launch, [&] { return spectral(graph::distance_matrix(g)); });
    ftrees = std::async(launch, [&] {
      return spectra::spanning_trees_kirchhoff(graph::laplacian_matrix(g));
    });
  }
  t0 = Clock::now();
  const OracleStage o = run_oracles(g, spec, n, bounds);
  const double oracle_ms = ms_since(t0);

  t0 = Clock::now();
  std::optional<SpectralStage> sa, sl, sd;
  BigInt trees;
  if (do_spectra) {
    sa = fa.get();
    sl = fl.get();
    sd = fd.get();
    trees = ftrees.get();
  }
  const double spectra_wait_ms = ms_since(t0);

  ClaimBuilder add(r);
  const std::string search_skip =
      "order " + std::to_string(nv) + " exceeds search bound " + std::to_string(bounds.search);
  const std::string spectra_skip =
      "order " + std::to_string(nv) + " exceeds spectra bound " + std::to_string(bounds.spectra);

  add.add("completeness", pred.complete, o.complete);
  add.add("size", pred.size, big(o.edges));
  if (o.diameter) {
    add.add("connected_diameter", big(pred.diameter), big(*o.diameter));
  } else {
    add.add("connected_diameter", big(pred.diameter), std::string("disconnected"));
  }

  if (o.searched) {
    const SimpleGraph& s = g.adjacency;
    auto certified = [&](std::string_view id, ClaimValue want, const invariants::SetResult& res,
                         bool witness_ok) {
      if (witness_ok) {
        add.add(id, std::move(want), big(res.value));
      } else {
        add.add(id, std::move(want), std::string("invalid witness"), "witness check failed");
      }
    };
    certified("domination", big(pred.domination), o.domination,
              invariants::is_dominating_set(s, o.domination.witness) &&
                  o.domination.witness.size() == o.domination.value);
    certified("independence", pred.independence, o.independence,
              invariants::is_independent_set(s, o.independence.witness) &&
                  o.independence.witness.size() == o.independence.value);
  } else {
    add.skip("domination", big(pred.domination), search_skip);
    add.skip("independence", pred.independence, search_skip);
  }

  if (o.isomorphism) {
    add.add("isomorphism", true, *o.isomorphism, o.isomorphism_note);
  } else {
    add.skip("isomorphism", true,
             "order " + std::to_string(nv) + " exceeds isomorphism bound " +
                 std::to_string(bounds.isomorphism));
  }

  if (o.searched) {
    const SimpleGraph& s = g.adjacency;
    if (cliques_are_lines(g, o.cliques)) {
      add.add("maximal_cliques", pred.N, big(o.cliques.size()));
    } else {
      add.add("maximal_cliques", pred.N, big(o.cliques.size()),
              "cliques differ from the 1-dimensional subspaces");
      r.claims.back().match = false;
      r.claims.back().status = ClaimStatus::fail;
    }
    if (invariants::is_clique(s, o.clique.witness) &&
        o.clique.witness.size() == o.clique.value) {
      add.add("clique_number", big(pred.clique), big(o.clique.value));
    } else {
      add.add("clique_number", big(pred.clique), std::string("invalid witness"),
              "witness check failed");
    }
    if (invariants::is_proper_coloring(s, o.coloring.assignment)) {
      add.add("chromatic_number", big(pred.chromatic), big(o.coloring.colors));
    } else {
      add.add("chromatic_number", big(pred.chromatic), std::string("invalid witness"),
              "witness check failed");
    }
  } else {
    add.skip("maximal_cliques", pred.N, search_skip);
    add.skip("clique_number", big(pred.clique), search_skip);
    add.skip("chromatic_number", big(pred.chromatic), search_skip);
  }

  add.add("eulerian", pred.eulerian, o.eulerian);
  add.add("edge_connectivity", big(pred.edge_connectivity), big(o.edge_cut.value));
  add.add("vertex_connectivity", big(pred.vertex_connectivity), big(o.separator.value));
  add.add("planarity",
          std::string(pred.planar ? "planar" : "nonplanar"),
          std::string(invariants::to_string(o.planarity)));

  const auto predicted_a = spectra::predicted_poly(spec.q, n, MatrixKind::adjacency);
  if (do_spectra) {
    add.add("charpoly_adjacency", predicted_a.to_string(), sa->computed.to_string());
    const Real energy = spectra::absolute_deviation_sum(sa->roots);
    add.add("adjacency_energy_corollary", pred.energy_paper, energy);
    add.add("adjacency_energy_spectrum", pred.energy_derived, energy);
  } else {
    add.skip("charpoly_adjacency", predicted_a.to_string(), spectra_skip);
    add.skip("adjacency_energy_corollary", pred.energy_paper, spectra_skip);
    add.skip("adjacency_energy_spectrum", pred.energy_derived, spectra_skip);
  }

  const auto predicted_l = spectra::predicted_poly(spec.q, n, MatrixKind::laplacian);
  const Real predicted_ac = to_real(pred.algebraic_connectivity);
  const Real predicted_le = to_real(pred.laplacian_energy_paper);
  if (do_spectra) {
    add.add("charpoly_laplacian", predicted_l.to_string(), sl->computed.to_string());
    // Roots come back ascending with multiplicity; the smallest is 0.
    Real second = 0;
    std::uint64_t seen = 0;
    for (const auto& root : sl->roots) {
      seen += root.multiplicity;
      if (seen >= 2) {
        second = root.value;
        break;
      }
    }
    add.add("algebraic_connectivity", predicted_ac, second);
    add.add("spanning_trees", pred.spanning_trees, trees);
    const Real mean = Real(2 * BigInt(o.edges)) / Real(BigInt(nv));
    add.add("laplacian_energy", predicted_le,
            spectra::absolute_deviation_sum(sl->roots, mean));
  } else {
    add.skip("charpoly_laplacian", predicted_l.to_string(), spectra_skip);
    add.skip("algebraic_connectivity", predicted_ac, spectra_skip);
    add.skip("spanning_trees", pred.spanning_trees, spectra_skip);
    add.skip("laplacian_energy", predicted_le, spectra_skip);
  }

  const auto predicted_d = spectra::predicted_poly(spec.q, n, MatrixKind::distance);
  if (do_spectra) {
    add.add("charpoly_distance", predicted_d.to_string(), sd->computed.to_string());
    const Real energy = spectra::absolute_deviation_sum(sd->roots);
    add.add("distance_energy_corollary", pred.distance_energy_paper, energy);
    add.add("distance_energy_spectrum", pred.distance_energy_derived, energy);
  } else {
    add.skip("charpoly_distance", predicted_d.to_string(), spectra_skip);
    add.skip("distance_energy_corollary", pred.distance_energy_paper, spectra_skip);
    add.skip("distance_energy_spectrum", pred.distance_energy_derived, spectra_skip);
  }

  if (do_spectra) {
    r.charpoly_checks.push_back(
        {MatrixKind::adjacency, sa->computed, predicted_a, sa->computed == predicted_a});
    r.charpoly_checks.push_back(
        {MatrixKind::laplacian, sl->computed, predicted_l, sl->computed == predicted_l});
    r.charpoly_checks.push_back(
        {MatrixKind::distance, sd->computed, predicted_d, sd->computed == predicted_d});
  }

  r.timings = {{"build", build_ms},
               {"oracles", oracle_ms},
               {"spectra_wait", spectra_wait_ms},
               {"total", ms_since(t_total)}};
  return r;
}

}  // namespace lindep::verifier
