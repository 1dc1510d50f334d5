#pragma once

#include <vector>

#include <json.hpp>

#include "qg/construction.hpp"
#include "qg/properties.hpp"
#include "qg/subquasigroups.hpp"
#include "qg/table.hpp"
#include "qg/table_io.hpp"

namespace qg {

/// Structured verdicts for one table. polynomially_complete is always
/// simple && !affine; the subquasigroup list is the module output verbatim.
struct AnalysisReport {
  int order = 0;
  std::vector<std::vector<int>> subquasigroups;
  bool simple = false;
  bool affine = false;
  bool polynomially_complete = false;
  long associative_triples = 0;
  bool doubly_transitive = false;
};

inline AnalysisReport analyze(const Table& Q) {
  AnalysisReport report;
  report.order = Q.n();
  report.subquasigroups = find_all_subquasigroups(Q);
  report.simple = is_simple(Q);
  report.affine = is_affine(Q).has_value();
  report.polynomially_complete = report.simple && !report.affine;
  report.associative_triples = count_associative_triples(Q);
  report.doubly_transitive =
      mult_group_orbit_pairs(Q) == static_cast<long>(Q.n()) * (Q.n() - 1);
  return report;
}

inline nlohmann::ordered_json sets_to_json(
    const std::vector<std::vector<int>>& sets, int base) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& s : sets) {
    nlohmann::ordered_json one = nlohmann::ordered_json::array();
    for (int x : s) one.push_back(x + base);
    arr.push_back(std::move(one));
  }
  return arr;
}

inline nlohmann::ordered_json report_to_json(const AnalysisReport& r,
                                             int base = 0) {
  nlohmann::ordered_json doc;
  doc["order"] = r.order;
  doc["subquasigroups"] = sets_to_json(r.subquasigroups, base);
  doc["simple"] = r.simple;
  doc["affine"] = r.affine;
  doc["polynomially_complete"] = r.polynomially_complete;
  doc["associative_triples"] = r.associative_triples;
  doc["doubly_transitive"] = r.doubly_transitive;
  return doc;
}

inline nlohmann::ordered_json params_to_json(const ConstructionParams& p) {
  const Field& F = p.field;
  nlohmann::ordered_json doc;
  doc["p"] = F.p();
  doc["r"] = F.r();
  doc["modulus"] = F.modulus();
  doc["beta"] = F.tag(p.beta);
  doc["m"] = p.m;
  doc["d"] = p.d;
  doc["alpha"] = F.tag(p.alpha);
  doc["c"] = F.tag(p.c);
  return doc;
}

inline nlohmann::ordered_json root_count_to_json(const Field& F,
                                                 const RootCount& rc) {
  nlohmann::ordered_json doc;
  doc["gamma"] = F.tag(rc.gamma);
  doc["rank"] = rc.circulant_rank;
  doc["count"] = rc.count;
  nlohmann::ordered_json roots = nlohmann::ordered_json::array();
  for (const auto& x : rc.roots) roots.push_back(F.tag(x));
  doc["roots"] = std::move(roots);
  return doc;
}

inline nlohmann::ordered_json trace_to_json(const GenerationTrace& t, int a,
                                            int base = 0) {
  nlohmann::ordered_json doc;
  doc["element"] = a + base;
  doc["chain"] = sets_to_json(t.chain, base);
  doc["result"] = sets_to_json({t.result}, base)[0];
  return doc;
}

}  // namespace qg
