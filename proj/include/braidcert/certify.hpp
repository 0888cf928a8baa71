#pragma once

// End-to-end certificate that every automorphism of P_s acts on
// Gamma2/Gamma3 with eigenvalue 1, hence has infinite Reidemeister number.
//
// The pipeline works from a stored GeneratorSet (the matrices of omega_k and
// epsilon on pairs and triples). Every element matrix used by the character,
// eigenvalue and determinant checks is a product of those stored generators,
// so a corrupted generator surfaces as a failed check.

#include "braidrep.hpp"
#include "characters.hpp"
#include "partitions.hpp"
#include "reidemeister.hpp"
#include "serialize.hpp"
#include "stembridge.hpp"
#include "symgrp.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace braidcert {

inline constexpr const char* kVerdictCertified = "R-infinity certified at level Gamma2/Gamma3";
inline constexpr const char* kVerdictP4 = "R-infinity certified for P4 via even-layer bound";
inline constexpr const char* kVerdictOutOfScope = "out of scope";
inline constexpr int kMaxStrands = 14;
inline constexpr int kMaxExhaustiveStrands = 7;
inline constexpr int kDefaultSample = 500;

enum class Check : unsigned {
  relations = 1u << 0,
  characters = 1u << 1,
  irrep = 1u << 2,
  stembridge = 1u << 3,
  eigen = 1u << 4,
};
inline constexpr unsigned kAllChecks = 0x1f;

inline std::vector<std::pair<Check, std::string>> check_names() {
  return {{Check::relations, "relations"},
          {Check::characters, "char"},
          {Check::irrep, "irrep"},
          {Check::stembridge, "stembridge"},
          {Check::eigen, "eigen"}};
}

inline unsigned parse_check(const std::string& name) {
  if (name == "all") return kAllChecks;
  for (const auto& [c, n] : check_names())
    if (n == name) return static_cast<unsigned>(c);
  throw std::invalid_argument("unknown check: " + name);
}

struct CertifyOptions {
  int strands = 0;
  unsigned checks = kAllChecks;
  std::optional<int> sample;  // 0 = exhaustive; unset = exhaustive up to 7 strands, else 500
  std::uint64_t seed = 1;
  int p4_levels = 5;

  bool wants(Check c) const { return (checks & static_cast<unsigned>(c)) != 0; }
};

/// The stored generator matrices of the automorphism action.
struct GeneratorSet {
  int strands = 0;
  std::vector<SignedMonomialMatrix> pair_omega;    // omega_1 .. omega_{s-1} on pairs
  SignedMonomialMatrix pair_epsilon;
  std::vector<SignedMonomialMatrix> triple_omega;  // omega_1 .. omega_{s-1} on triples
  SignedMonomialMatrix triple_epsilon;

  static GeneratorSet build(int s) {
    if (s < 4) throw std::invalid_argument("generator set needs at least 4 strands");
    GeneratorSet g;
    g.strands = s;
    for (int k = 1; k < s; ++k) {
      g.pair_omega.push_back(pair_matrix(GeneratorTag::omega(k), s));
      g.triple_omega.push_back(triple_matrix(GeneratorTag::omega(k), s));
    }
    g.pair_epsilon = pair_matrix(GeneratorTag::epsilon(), s);
    g.triple_epsilon = triple_matrix(GeneratorTag::epsilon(), s);
    return g;
  }
};

struct CheckResult {
  std::string name;
  bool passed = true;
  std::string detail;
};

struct TraceEntry {
  CycleType mu;             // class in S_N
  Permutation element;      // representative in S_s (fixing the letter N)
  std::int64_t trace = 0;   // of the generator-word matrix
  std::int64_t character = 0;  // chi_{(N-3,1,1,1)}(mu), Murnaghan-Nakayama
  BigInt closed_form;          // row F of the low-dimensional table
};

struct DetEntry {
  Permutation element;
  BigInt det;
};

struct IrrepSummary {
  Partition shape;
  Rational self_inner_product;
  bool twist_check_skipped = false;
  std::optional<CycleType> odd_class;
  std::int64_t value_at_odd_class = 0;
  std::int64_t twist_value_at_odd_class = 0;
};

struct ObstructionSummary {
  ObstructionResult result;
  std::array<BigInt, 5> measured_rhs;
  std::array<BigInt, 5> formula_rhs;
};

struct Certificate {
  int strands = 0;
  int degree = 0;  // N = s + 1
  BigInt dim;
  std::string path;  // "full", "p4" or "out_of_scope"
  std::string note;
  std::vector<std::string> checks_run;
  std::string element_mode;  // "exhaustive" or "sampled"
  std::uint64_t seed = 0;
  std::size_t elements_checked = 0;

  std::optional<GeneratorSet> generators;
  std::vector<CheckResult> results;
  std::vector<TraceEntry> trace_table;
  std::optional<IrrepSummary> irrep;
  std::optional<ObstructionSummary> obstruction;
  std::vector<TableauCertificate> tableaux;
  std::vector<DetEntry> det_entries;
  std::optional<P4LayerBound> p4;

  std::string verdict;

  bool falsified() const { return verdict.rfind("FALSIFIED", 0) == 0; }
};

namespace detail {

inline bool all_equal_identity(const SignedMonomialMatrix& m) {
  return m == SignedMonomialMatrix::identity(m.dim());
}

/// omega_k^2 = 1, commuting for |k - j| >= 2, braid relation, epsilon^2 = 1
/// and epsilon central.
inline std::vector<std::string> relation_failures(const std::vector<SignedMonomialMatrix>& omega,
                                                  const SignedMonomialMatrix& epsilon, const std::string& level) {
  std::vector<std::string> fails;
  const auto n = omega.size();
  for (std::size_t k = 0; k < n; ++k) {
    const auto tag = level + " omega_" + std::to_string(k + 1);
    if (!all_equal_identity(omega[k] * omega[k])) fails.push_back(tag + "^2 != 1");
    for (std::size_t j = k + 2; j < n; ++j)
      if (omega[k] * omega[j] != omega[j] * omega[k])
        fails.push_back(tag + " does not commute with omega_" + std::to_string(j + 1));
    if (k + 1 < n && omega[k] * omega[k + 1] * omega[k] != omega[k + 1] * omega[k] * omega[k + 1])
      fails.push_back(tag + " fails the braid relation");
    if (epsilon * omega[k] != omega[k] * epsilon) fails.push_back(level + " epsilon does not commute with omega_" + std::to_string(k + 1));
  }
  if (!all_equal_identity(epsilon * epsilon)) fails.push_back(level + " epsilon^2 != 1");
  return fails;
}

inline std::string join(const std::vector<std::string>& v, std::size_t limit = 5) {
  std::string out;
  for (std::size_t i = 0; i < v.size() && i < limit; ++i) out += (i ? "; " : "") + v[i];
  if (v.size() > limit) out += "; ... (" + std::to_string(v.size()) + " total)";
  return out;
}

/// Elements to check: all of S_s in lexicographic order, or the class
/// representatives, the generators and `sample` random elements.
inline std::vector<Permutation> element_set(int s, int sample, std::uint64_t seed) {
  std::vector<Permutation> out;
  if (sample == 0) {
    std::vector<int> img(static_cast<std::size_t>(s));
    for (int i = 0; i < s; ++i) img[static_cast<std::size_t>(i)] = i + 1;
    do out.emplace_back(img);
    while (std::next_permutation(img.begin(), img.end()));
    return out;
  }
  std::set<Permutation> seen;
  auto add = [&](Permutation p) {
    if (seen.insert(p).second) out.push_back(std::move(p));
  };
  for (const auto& p : partitions_of(s)) add(class_representative(CycleType(p)));
  for (int k = 1; k < s; ++k) add(Permutation::adjacent_transposition(s, k));
  std::mt19937_64 rng(seed);
  for (int i = 0; i < sample; ++i) out.push_back(Permutation::random(s, rng));
  return out;
}

}  // namespace detail

/// Runs the checks of `opt` against the stored generators `gens`.
inline Certificate run_pipeline(const GeneratorSet& gens, const CertifyOptions& opt) {
  const int s = gens.strands;
  if (s < 5) throw std::invalid_argument("run_pipeline: the full pipeline needs at least 5 strands");
  if (s > kMaxStrands) throw std::invalid_argument("run_pipeline: at most 14 strands are supported");
  if (static_cast<int>(gens.pair_omega.size()) != s - 1 || static_cast<int>(gens.triple_omega.size()) != s - 1)
    throw std::invalid_argument("run_pipeline: generator set is incomplete");

  const int N = s + 1;
  const auto lambda = Partition::hook_with_three_legs(N);
  int sample = opt.sample.value_or(s <= kMaxExhaustiveStrands ? 0 : kDefaultSample);
  if (sample < 0) throw std::invalid_argument("sample size must be non-negative");
  if (sample == 0 && s > kMaxExhaustiveStrands)
    throw std::invalid_argument("exhaustive mode is limited to 7 strands; pass --sample");

  Certificate cert;
  cert.strands = s;
  cert.degree = N;
  cert.dim = binom_poly(s, 3);
  cert.path = "full";
  cert.seed = opt.seed;
  cert.element_mode = sample == 0 ? "exhaustive" : "sampled";
  cert.generators = gens;
  for (const auto& [c, name] : check_names())
    if (opt.wants(c)) cert.checks_run.push_back(name);

  auto record = [&](std::string name, const std::vector<std::string>& fails) {
    cert.results.push_back({std::move(name), fails.empty(), detail::join(fails)});
  };

  const auto elements = detail::element_set(s, sample, opt.seed);
  cert.elements_checked = elements.size();

  // Matrices of every element, built from the stored generators.
  const bool need_elements = opt.wants(Check::relations) || opt.wants(Check::characters) ||
                             opt.wants(Check::stembridge) || opt.wants(Check::eigen);
  std::vector<SignedMonomialMatrix> triple_mats, pair_mats;
  if (need_elements) {
    triple_mats.reserve(elements.size());
    for (const auto& p : elements) {
      triple_mats.push_back(matrix_from_word(gens.triple_omega, p));
      pair_mats.push_back(matrix_from_word(gens.pair_omega, p));
    }
  }

  if (opt.wants(Check::relations)) {
    std::vector<std::string> def;
    for (int k = 1; k < s; ++k) {
      if (gens.pair_omega[static_cast<std::size_t>(k - 1)] != pair_matrix(GeneratorTag::omega(k), s))
        def.push_back("pair omega_" + std::to_string(k) + " differs from the action on pairs");
      if (gens.triple_omega[static_cast<std::size_t>(k - 1)] != triple_matrix(GeneratorTag::omega(k), s))
        def.push_back("triple omega_" + std::to_string(k) + " differs from the action on triples");
    }
    record("generators_match_action", def);

    std::vector<std::string> eps;
    if (gens.pair_epsilon != SignedMonomialMatrix::negative_identity(s * (s - 1) / 2))
      eps.push_back("epsilon is not -I on pairs");
    if (gens.triple_epsilon != epsilon_triple_action(s)) eps.push_back("epsilon is not I on triples");
    record("epsilon_action", eps);

    record("pair_relations", detail::relation_failures(gens.pair_omega, gens.pair_epsilon, "pair"));
    record("triple_relations", detail::relation_failures(gens.triple_omega, gens.triple_epsilon, "triple"));

    std::vector<std::string> hom;
    for (std::size_t i = 0; i < elements.size(); ++i) {
      if (triple_mats[i] != rho_matrix(elements[i], s))
        hom.push_back("triple word product differs from direct action at " + elements[i].to_string());
      if (pair_mats[i] != pair_action_matrix(elements[i], s))
        hom.push_back("pair word product differs from direct action at " + elements[i].to_string());
    }
    record("word_products_match_action", hom);
  }

  // Trace table over the classes of S_N that have a fixed point.
  std::map<CycleType, std::int64_t> trace_data;
  if (opt.wants(Check::characters) || opt.wants(Check::irrep)) {
    std::vector<std::string> fails;
    for (const auto& p : partitions_of(N)) {
      CycleType mu(p);
      if (mu.count(1) == 0) continue;
      const auto rep = class_representative(remove_fixed_point(mu));
      TraceEntry e{mu, rep, smm_trace(matrix_from_word(gens.triple_omega, rep)), mn_character(lambda, mu),
                   chi_closed_form(LowRep::F, mu)};
      if (e.trace != e.character)
        fails.push_back("trace " + std::to_string(e.trace) + " != character " + std::to_string(e.character) + " at " +
                        mu.to_string());
      if (BigInt(e.character) != e.closed_form) fails.push_back("closed form disagrees at " + mu.to_string());
      trace_data[mu] = e.trace;
      cert.trace_table.push_back(std::move(e));
    }
    if (opt.wants(Check::characters)) record("trace_table", fails);
  }

  if (opt.wants(Check::characters)) {
    std::vector<std::string> fails;
    for (std::size_t i = 0; i < elements.size(); ++i) {
      const auto ct = cycle_type(elements[i]);
      const auto embedded = cycle_type(embed_fixing_last(elements[i], N));
      const auto chi = mn_character(lambda, embedded);
      if (smm_trace(triple_mats[i]) != chi)
        fails.push_back("triple trace differs from character at " + elements[i].to_string());
      const std::int64_t fixed_pairs = ct.count(1) * (ct.count(1) - 1) / 2 + ct.count(2);
      if (smm_trace(pair_mats[i]) != fixed_pairs)
        fails.push_back("pair trace differs from fixed-pair count at " + elements[i].to_string());
    }
    record("element_traces", fails);
  }

  if (opt.wants(Check::irrep)) {
    std::vector<std::string> fails;
    try {
      const auto id = identify_irrep(s, trace_data);
      IrrepSummary sum{id.shape, inner_product(irreducible_character(id.shape), irreducible_character(id.shape)),
                       id.twist_check_skipped, id.odd_class, id.value_at_odd_class, id.twist_value_at_odd_class};
      if (sum.shape != lambda) fails.push_back("identified shape " + sum.shape.to_string());
      if (sum.self_inner_product != 1) fails.push_back("character is not irreducible");
      cert.irrep = sum;
    } catch (const std::exception& ex) {
      fails.push_back(ex.what());
    }
    record("irrep_identification", fails);

    if (N >= 13) {
      std::vector<std::string> ofails;
      ObstructionSummary os;
      os.formula_rhs = obstruction_rhs_formulas(N);
      const auto classes = obstruction_classes(N);
      for (std::size_t i = 0; i < 5; ++i) os.measured_rhs[i] = trace_data.at(classes[i]);
      if (os.measured_rhs != os.formula_rhs) ofails.push_back("measured traces differ from the fixed-element counts");
      try {
        os.result = obstruction_system(N, os.measured_rhs);
        const std::array<Rational, 5> expected{5 - N, 1, 5 - N, N - 5, 1};
        if (os.result.solution != expected) ofails.push_back("unexpected solution of the obstruction system");
        if (!os.result.contradiction) ofails.push_back("obstruction system admits a decomposition");
      } catch (const std::exception& ex) {
        ofails.push_back(ex.what());
      }
      cert.obstruction = os;
      record("obstruction_system", ofails);
    }
  }

  if (opt.wants(Check::stembridge)) {
    std::vector<std::string> fails;
    try {
      cert.tableaux = eigenvalue_one_certificates(N);
      for (const auto& c : cert.tableaux)
        if (!certificate_is_valid(c)) fails.push_back("invalid tableau certificate for " + c.mu.to_string());
    } catch (const std::exception& ex) {
      fails.push_back(ex.what());
    }
    record("tableau_certificates", fails);

    std::vector<std::string> xfails;
    std::map<CycleType, CyclicExponentMultiset> expected;
    for (std::size_t i = 0; i < elements.size(); ++i) {
      const auto mu = cycle_type(embed_fixing_last(elements[i], N));
      auto it = expected.find(mu);
      if (it == expected.end()) it = expected.emplace(mu, cyclic_exponents(lambda, mu)).first;
      try {
        if (eigen_exponents(triple_mats[i], mu.order()) != it->second)
          xfails.push_back("eigenvalues differ from cyclic exponents at " + elements[i].to_string());
      } catch (const std::exception& ex) {
        xfails.push_back(std::string(ex.what()) + " at " + elements[i].to_string());
      }
    }
    record("cyclic_exponents_match_eigenvalues", xfails);
  }

  if (opt.wants(Check::eigen)) {
    std::vector<std::string> fails;
    std::set<CycleType> stored;
    for (std::size_t i = 0; i < elements.size(); ++i) {
      const auto d = det_I_minus(triple_mats[i]);
      if (d != 0) fails.push_back("det(I - M) = " + d.str() + " at " + elements[i].to_string());
      if (stored.insert(cycle_type(elements[i])).second) cert.det_entries.push_back({elements[i], d});
    }
    // Dense cross-check on the stored class representatives; Bareiss is cubic
    // in the dimension, so past 10 strands only the first few are redone.
    const std::size_t dense = cert.dim <= 120 ? cert.det_entries.size() : std::min<std::size_t>(4, cert.det_entries.size());
    for (std::size_t i = 0; i < dense; ++i) {
      const auto& e = cert.det_entries[i];
      const auto dense = IntegerMatrix::from_signed_monomial(matrix_from_word(gens.triple_omega, e.element));
      if (determinant(IntegerMatrix::identity(dense.dim()) - dense) != e.det)
        fails.push_back("dense determinant disagrees at " + e.element.to_string());
    }
    record("det_I_minus_zero", fails);
  }

  const auto failed = std::find_if(cert.results.begin(), cert.results.end(), [](const auto& r) { return !r.passed; });
  if (failed != cert.results.end())
    cert.verdict = "FALSIFIED: " + failed->name;
  else if (opt.checks == kAllChecks)
    cert.verdict = kVerdictCertified;
  else
    cert.verdict = "PARTIAL: selected checks passed";
  return cert;
}

inline Certificate certify(const CertifyOptions& opt) {
  const int s = opt.strands;
  if (s < 3) throw std::invalid_argument("certify: strand count must be at least 3");
  if (s > kMaxStrands) throw std::invalid_argument("certify: at most 14 strands are supported");
  if (s == 3) {
    Certificate c;
    c.strands = 3;
    c.degree = 4;
    c.dim = 1;
    c.path = "out_of_scope";
    c.note = "P3 = F2 x Z; the R-infinity property follows from that of the free group F2, which is not certified here";
    c.verdict = kVerdictOutOfScope;
    return c;
  }
  if (s == 4) {
    Certificate c;
    c.strands = 4;
    c.degree = 5;
    c.dim = 4;
    c.path = "p4";
    c.note =
        "Gamma_k/Gamma_{k+1} of P4 modulo centre and second derived subgroup has rank 5(k-1) for k >= 3 (taken as "
        "given); each even layer has odd rank, a finite-order automorphism of it has eigenvalue +-1, so R >= 2^{L-1} "
        "for every L";
    c.seed = opt.seed;
    c.p4 = p4_even_layer_bound(opt.p4_levels, opt.seed);
    c.verdict = kVerdictP4;
    return c;
  }
  return run_pipeline(GeneratorSet::build(s), opt);
}

// ---------------------------------------------------------------------------
// JSON

inline Json generators_to_json(const GeneratorSet& g) {
  const PairBasis pairs(g.strands);
  const TripleBasis triples(g.strands);
  Json pj = Json::array(), tj = Json::array();
  for (const auto& m : g.pair_omega) pj.push_back(pair_matrix_to_json(m, pairs));
  for (const auto& m : g.triple_omega) tj.push_back(triple_matrix_to_json(m, triples));
  return Json{{"pair_omega", std::move(pj)},
              {"pair_epsilon", pair_matrix_to_json(g.pair_epsilon, pairs)},
              {"triple_omega", std::move(tj)},
              {"triple_epsilon", triple_matrix_to_json(g.triple_epsilon, triples)}};
}

inline GeneratorSet generators_from_json(int s, const Json& j) {
  const PairBasis pairs(s);
  const TripleBasis triples(s);
  GeneratorSet g;
  g.strands = s;
  for (const auto& m : j.at("pair_omega")) g.pair_omega.push_back(pair_matrix_from_json(m, pairs));
  for (const auto& m : j.at("triple_omega")) g.triple_omega.push_back(triple_matrix_from_json(m, triples));
  g.pair_epsilon = pair_matrix_from_json(j.at("pair_epsilon"), pairs);
  g.triple_epsilon = triple_matrix_from_json(j.at("triple_epsilon"), triples);
  return g;
}

inline Json to_json(const Certificate& c) {
  Json j{{"strands", c.strands}, {"degree", c.degree}, {"dim", bigint_to_json(c.dim)}, {"path", c.path}};
  if (!c.note.empty()) j["note"] = c.note;
  if (c.path == "full") {
    j["checks"] = c.checks_run;
    j["element_mode"] = c.element_mode;
    j["seed"] = c.seed;
    j["elements_checked"] = c.elements_checked;
    Json res = Json::array();
    for (const auto& r : c.results) {
      Json e{{"name", r.name}, {"passed", r.passed}};
      if (!r.detail.empty()) e["detail"] = r.detail;
      res.push_back(std::move(e));
    }
    j["results"] = std::move(res);
    if (!c.trace_table.empty()) {
      Json tt = Json::array();
      for (const auto& e : c.trace_table)
        tt.push_back(Json{{"class", to_json(e.mu)},
                          {"element", to_json(e.element)},
                          {"trace", e.trace},
                          {"character", e.character},
                          {"closed_form", bigint_to_json(e.closed_form)}});
      j["trace_table"] = std::move(tt);
    }
    if (c.irrep) {
      Json ir{{"shape", to_json(c.irrep->shape)},
              {"self_inner_product", rational_to_json(c.irrep->self_inner_product)},
              {"twist_check_skipped", c.irrep->twist_check_skipped}};
      if (c.irrep->odd_class) {
        ir["odd_class"] = to_json(*c.irrep->odd_class);
        ir["value"] = c.irrep->value_at_odd_class;
        ir["twist_value"] = c.irrep->twist_value_at_odd_class;
      }
      j["irrep"] = std::move(ir);
    }
    if (c.obstruction) {
      Json sol = Json::array(), meas = Json::array(), form = Json::array();
      for (const auto& v : c.obstruction->result.solution) sol.push_back(rational_to_json(v));
      for (const auto& v : c.obstruction->measured_rhs) meas.push_back(bigint_to_json(v));
      for (const auto& v : c.obstruction->formula_rhs) form.push_back(bigint_to_json(v));
      j["obstruction"] = Json{{"n", c.obstruction->result.n},
                              {"measured_rhs", std::move(meas)},
                              {"formula_rhs", std::move(form)},
                              {"solution", std::move(sol)},
                              {"contradiction", c.obstruction->result.contradiction}};
    }
    if (!c.tableaux.empty()) {
      Json tj = Json::array();
      for (const auto& t : c.tableaux) tj.push_back(to_json(t));
      j["tableaux"] = std::move(tj);
    }
    if (!c.det_entries.empty()) {
      Json dj = Json::array();
      for (const auto& d : c.det_entries) dj.push_back(Json{{"element", to_json(d.element)}, {"det", bigint_to_json(d.det)}});
      j["det_entries"] = std::move(dj);
    }
    if (c.generators) j["generators"] = generators_to_json(*c.generators);
  }
  if (c.p4) {
    Json ranks = Json::object(), pm1 = Json::object();
    for (const auto& [k, r] : c.p4->ranks) ranks[std::to_string(k)] = r;
    for (const auto& [k, b] : c.p4->odd_rank_has_pm1) pm1[std::to_string(k)] = b;
    Json bounds = Json::object();
    for (int l = 2; l <= c.p4->levels; ++l)
      bounds[std::to_string(l)] = bigint_to_json(boost::multiprecision::pow(BigInt(2), static_cast<unsigned>(l - 1)));
    j["p4"] = Json{{"levels", c.p4->levels},
                   {"bound", bigint_to_json(c.p4->bound)},
                   {"bounds_by_level", std::move(bounds)},
                   {"ranks", std::move(ranks)},
                   {"odd_rank_has_pm1", std::move(pm1)}};
  }
  j["verdict"] = c.verdict;
  return j;
}

inline std::string to_text(const Certificate& c) {
  std::ostringstream os;
  os << "strands: " << c.strands << "  group: S_" << c.degree << "  dim Gamma2/Gamma3: " << c.dim << '\n';
  if (!c.note.empty()) os << "note: " << c.note << '\n';
  if (c.path == "full") {
    os << "elements: " << c.elements_checked << " (" << c.element_mode;
    if (c.element_mode == "sampled") os << ", seed " << c.seed;
    os << ")\n";
    for (const auto& r : c.results) {
      os << "  [" << (r.passed ? "pass" : "FAIL") << "] " << r.name;
      if (!r.detail.empty()) os << ": " << r.detail;
      os << '\n';
    }
    if (!c.trace_table.empty()) {
      os << "trace table (class in S_" << c.degree << " -> trace, character):\n";
      for (const auto& e : c.trace_table) os << "  " << e.mu.to_string() << " -> " << e.trace << ", " << e.character << '\n';
    }
    if (c.irrep) {
      os << "identified shape: " << c.irrep->shape.to_string() << ", <chi,chi> = " << c.irrep->self_inner_product;
      if (c.irrep->twist_check_skipped)
        os << ", self-conjugate (twist check skipped)";
      else if (c.irrep->odd_class)
        os << ", twist separated at " << c.irrep->odd_class->to_string() << " (" << c.irrep->value_at_odd_class
           << " vs " << c.irrep->twist_value_at_odd_class << ")";
      os << '\n';
    }
    if (c.obstruction) {
      os << "obstruction solution:";
      for (const auto& v : c.obstruction->result.solution) os << ' ' << v;
      os << (c.obstruction->result.contradiction ? " (contradiction)" : "") << '\n';
    }
    if (!c.tableaux.empty()) {
      os << "zero-index tableaux:\n";
      for (const auto& t : c.tableaux) {
        os << "  mu " << t.mu.to_string() << " m=" << t.modulus << " case " << static_cast<char>(t.construction)
           << " descents {";
        for (std::size_t i = 0; i < t.descents.size(); ++i) os << (i ? "," : "") << t.descents[i];
        os << "} weight " << t.weight << '\n';
      }
    }
  }
  if (c.p4) {
    os << "P4 bound: R >= " << c.p4->bound << " at L = " << c.p4->levels << "; ranks";
    for (const auto& [k, r] : c.p4->ranks) os << ' ' << k << ":" << r;
    os << '\n';
  }
  os << "verdict: " << c.verdict << '\n';
  return os.str();
}

/// Reloads a stored certificate: rebuilds the pipeline from its stored
/// generators and options, and re-validates the stored tableaux and
/// determinant entries. The returned certificate carries the recomputed
/// verdict.
inline Certificate verify_certificate(const Json& j) {
  const int s = j.at("strands").get<int>();
  const auto path = j.at("path").get<std::string>();
  if (path != "full") {
    CertifyOptions opt;
    opt.strands = s;
    if (j.contains("p4")) opt.p4_levels = j.at("p4").at("levels").get<int>();
    if (j.contains("seed")) opt.seed = j.at("seed").get<std::uint64_t>();
    return certify(opt);
  }

  CertifyOptions opt;
  opt.strands = s;
  opt.checks = 0;
  for (const auto& name : j.at("checks")) opt.checks |= parse_check(name.get<std::string>());
  opt.seed = j.at("seed").get<std::uint64_t>();
  const auto mode = j.at("element_mode").get<std::string>();
  const auto count = j.at("elements_checked").get<int>();
  if (mode == "exhaustive") {
    opt.sample = 0;
  } else {
    // Sampled sets are the class representatives and generators followed by
    // the random draws.
    const int fixed = static_cast<int>(detail::element_set(s, 1, opt.seed).size()) - 1;
    opt.sample = count - fixed;
  }

  auto cert = run_pipeline(generators_from_json(s, j.at("generators")), opt);

  std::vector<std::string> fails;
  if (j.contains("tableaux")) {
    for (const auto& t : j.at("tableaux")) {
      try {
        const auto c = tableau_certificate_from_json(t);
        if (c.mu.degree() != s + 1 || !certificate_is_valid(c))
          fails.push_back("stored tableau for " + c.mu.to_string() + " does not re-validate");
      } catch (const std::exception& ex) {
        fails.push_back(std::string("unreadable tableau: ") + ex.what());
      }
    }
  }
  if (j.contains("det_entries")) {
    for (const auto& d : j.at("det_entries")) {
      const auto p = permutation_from_json(d.at("element"));
      const auto recomputed = det_I_minus(rho_matrix(p, s));
      if (recomputed != 0 || bigint_from_json(d.at("det")) != recomputed)
        fails.push_back("stored det entry does not recompute to 0 at " + p.to_string());
    }
  }
  cert.results.push_back({"stored_entries_revalidate", fails.empty(), detail::join(fails)});
  if (!fails.empty() && !cert.falsified()) cert.verdict = "FALSIFIED: stored_entries_revalidate";
  return cert;
}

}  // namespace braidcert
