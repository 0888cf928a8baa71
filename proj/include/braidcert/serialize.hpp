#pragma once

// JSON encodings:
//   permutation        one-line image array, 1-based
//   cycle type         descending integer array
//   tableau            array of rows
//   signed monomial    { "dim": d, "map": [[source, target, sign], ...] }
//                      with source/target given as basis pairs or triples
//   count              integer, or the string "infinity"
//   integer matrix     array of rows

#include "braidrep.hpp"
#include "characters.hpp"
#include "partitions.hpp"
#include "reidemeister.hpp"
#include "stembridge.hpp"
#include "symgrp.hpp"

#include <nlohmann/json.hpp>

#include <stdexcept>
#include <string>
#include <vector>

namespace braidcert {

using Json = nlohmann::ordered_json;

/// Big integers go out as JSON numbers when they fit in 64 bits, otherwise as
/// decimal strings.
inline Json bigint_to_json(const BigInt& v) {
  if (v >= BigInt(std::numeric_limits<std::int64_t>::min()) && v <= BigInt(std::numeric_limits<std::int64_t>::max()))
    return v.convert_to<std::int64_t>();
  return v.str();
}

inline BigInt bigint_from_json(const Json& j) {
  if (j.is_number_integer()) return BigInt(j.get<std::int64_t>());
  if (j.is_string()) return BigInt(j.get<std::string>());
  throw std::invalid_argument("expected an integer");
}

inline Json rational_to_json(const Rational& r) {
  if (denominator(r) == 1) return bigint_to_json(numerator(r));
  return numerator(r).str() + "/" + denominator(r).str();
}

inline Json to_json(const Permutation& p) { return p.images(); }
inline Permutation permutation_from_json(const Json& j) { return Permutation(j.get<std::vector<int>>()); }

inline Json to_json(const Partition& p) { return p.parts(); }
inline Partition partition_from_json(const Json& j) { return Partition(j.get<std::vector<int>>()); }

inline Json to_json(const CycleType& mu) { return mu.parts(); }
inline CycleType cycle_type_from_json(const Json& j) { return CycleType(partition_from_json(j)); }

inline Json to_json(const StandardTableau& t) { return t.rows(); }
inline StandardTableau tableau_from_json(const Json& j) {
  return StandardTableau(j.get<std::vector<std::vector<int>>>());
}

inline Json to_json(const ReidemeisterCount& r) {
  if (r.is_infinite()) return "infinity";
  return bigint_to_json(r.value());
}

inline ReidemeisterCount reidemeister_count_from_json(const Json& j) {
  if (j.is_string() && j.get<std::string>() == "infinity") return ReidemeisterCount::infinite();
  return ReidemeisterCount::finite(bigint_from_json(j));
}

inline Json to_json(const IntegerMatrix& m) {
  Json rows = Json::array();
  for (const auto& r : m.rows()) {
    Json row = Json::array();
    for (const auto& v : r) row.push_back(bigint_to_json(v));
    rows.push_back(std::move(row));
  }
  return rows;
}

inline IntegerMatrix integer_matrix_from_json(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("matrix must be an array of rows");
  std::vector<std::vector<BigInt>> rows;
  for (const auto& r : j) {
    if (!r.is_array()) throw std::invalid_argument("matrix rows must be arrays");
    std::vector<BigInt> row;
    for (const auto& v : r) row.push_back(bigint_from_json(v));
    rows.push_back(std::move(row));
  }
  return IntegerMatrix(std::move(rows));
}

/// Signed monomial matrix over the triple basis of s strands.
inline Json triple_matrix_to_json(const SignedMonomialMatrix& m, const TripleBasis& basis) {
  if (m.dim() != basis.size()) throw std::invalid_argument("matrix does not match the triple basis");
  Json map = Json::array();
  for (int i = 0; i < m.dim(); ++i) map.push_back(Json::array({basis[i], basis[m.target(i)], m.sign(i)}));
  return Json{{"dim", m.dim()}, {"map", std::move(map)}};
}

inline Json pair_matrix_to_json(const SignedMonomialMatrix& m, const PairBasis& basis) {
  if (m.dim() != basis.size()) throw std::invalid_argument("matrix does not match the pair basis");
  Json map = Json::array();
  for (int i = 0; i < m.dim(); ++i) map.push_back(Json::array({basis[i], basis[m.target(i)], m.sign(i)}));
  return Json{{"dim", m.dim()}, {"map", std::move(map)}};
}

namespace detail {
template <typename Basis, typename Elem>
SignedMonomialMatrix smm_from_json(const Json& j, const Basis& basis) {
  const int dim = j.at("dim").get<int>();
  if (dim != basis.size()) throw std::invalid_argument("stored matrix dimension does not match the basis");
  const auto& map = j.at("map");
  if (static_cast<int>(map.size()) != dim) throw std::invalid_argument("stored matrix map has the wrong length");
  std::vector<int> target(static_cast<std::size_t>(dim), -1), sign(static_cast<std::size_t>(dim), 0);
  for (const auto& e : map) {
    const int src = basis.index(e.at(0).get<Elem>());
    target[static_cast<std::size_t>(src)] = basis.index(e.at(1).get<Elem>());
    sign[static_cast<std::size_t>(src)] = e.at(2).get<int>();
  }
  return SignedMonomialMatrix(std::move(target), std::move(sign));
}
}  // namespace detail

inline SignedMonomialMatrix triple_matrix_from_json(const Json& j, const TripleBasis& basis) {
  return detail::smm_from_json<TripleBasis, Triple>(j, basis);
}

inline SignedMonomialMatrix pair_matrix_from_json(const Json& j, const PairBasis& basis) {
  return detail::smm_from_json<PairBasis, Pair>(j, basis);
}

inline Json to_json(const TableauCertificate& c) {
  return Json{{"mu", to_json(c.mu)},
              {"m", c.modulus},
              {"tableau", to_json(c.tableau)},
              {"descents", c.descents},
              {"index", c.index},
              {"weight", c.weight},
              {"case", std::string(1, static_cast<char>(c.construction))}};
}

inline TableauCertificate tableau_certificate_from_json(const Json& j) {
  const auto cs = j.at("case").get<std::string>();
  if (cs.size() != 1 || cs[0] < 'a' || cs[0] > 'e') throw std::invalid_argument("unknown construction case");
  return TableauCertificate{cycle_type_from_json(j.at("mu")),
                            j.at("m").get<std::int64_t>(),
                            tableau_from_json(j.at("tableau")),
                            j.at("descents").get<std::vector<int>>(),
                            j.at("weight").get<std::int64_t>(),
                            j.at("index").get<std::int64_t>(),
                            static_cast<ZeroIndexCase>(cs[0])};
}

/// Character table of S_n: rows are irreducibles, columns classes, both in
/// canonical partition order.
inline Json character_table_json(int n) {
  const auto parts = partitions_of(n);
  Json classes = Json::array(), rows = Json::array(), table = Json::array();
  for (const auto& p : parts) {
    classes.push_back(to_json(p));
    rows.push_back(to_json(p));
    Json row = Json::array();
    for (const auto& q : parts) row.push_back(mn_character(p, CycleType(q)));
    table.push_back(std::move(row));
  }
  return Json{{"n", n}, {"irreducibles", std::move(rows)}, {"classes", std::move(classes)}, {"values", std::move(table)}};
}

}  // namespace braidcert
