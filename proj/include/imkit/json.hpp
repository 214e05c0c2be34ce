#pragma once

#include <string>

#include <json.hpp>

#include "imkit/classify.hpp"
#include "imkit/containment.hpp"
#include "imkit/criticality.hpp"
#include "imkit/matrix.hpp"

namespace imkit {

using ordered_json = nlohmann::ordered_json;

inline std::string to_string(Transform t) {
  switch (t) {
    case Transform::Identity: return "Identity";
    case Transform::Rotate90: return "Rotate90";
    case Transform::Rotate180: return "Rotate180";
    case Transform::Rotate270: return "Rotate270";
    case Transform::FlipHorizontal: return "FlipHorizontal";
    case Transform::FlipVertical: return "FlipVertical";
    case Transform::Transpose: return "Transpose";
    case Transform::AntiTranspose: return "AntiTranspose";
  }
  throw UsageError("unknown transform");
}

inline ordered_json to_json(Cell e) { return ordered_json::array({e.row, e.col}); }

inline ordered_json to_json(LineRef line) {
  return {{"axis", line.axis == Axis::Row ? "row" : "column"}, {"index", line.index}};
}

inline ordered_json to_json(const BinaryMatrix& m) {
  ordered_json rows = ordered_json::array();
  for (int i = 1; i <= m.rows(); ++i) {
    std::string row;
    for (int j = 1; j <= m.cols(); ++j) row += m.at(i, j) ? '1' : '0';
    rows.push_back(row);
  }
  return rows;
}

inline ordered_json to_json(const Partition& p) {
  return {{"rowBounds", p.row_bounds}, {"colBounds", p.col_bounds}};
}

inline ordered_json to_json(const LineCover& c) {
  ordered_json lines = ordered_json::array();
  for (const LineRef& l : c.lines) lines.push_back(to_json(l));
  return {{"size", c.size}, {"lines", lines}};
}

inline ordered_json to_json(const WalkCover& c) {
  ordered_json walks = ordered_json::array();
  for (const auto& walk : c.walks) {
    ordered_json cells = ordered_json::array();
    for (const Cell& e : walk) cells.push_back(to_json(e));
    walks.push_back(cells);
  }
  return {{"walks", walks}};
}

inline ordered_json to_json(const QOccurrence& occ) {
  return {{"rows", occ.rows}, {"cols", occ.cols}};
}

inline ordered_json to_json(const CriticalityReport& r) {
  ordered_json zero_map = ordered_json::array();
  for (const auto& [cell, pairs] : r.per_zero_entry) {
    ordered_json critical_for = ordered_json::array();
    for (const auto& [idx, e] : pairs)
      critical_for.push_back({{"pattern", idx + 1}, {"entry", to_json(e)}});
    zero_map.push_back({{"entry", to_json(cell)}, {"criticalFor", critical_for}});
  }
  ordered_json rel = ordered_json::object();
  for (const auto& [key, value] : r.relative_row_complexity) {
    std::string name = "P" + std::to_string(key.first + 1) + ":(" +
                       std::to_string(key.second.row) + "," + std::to_string(key.second.col) +
                       ")";
    rel[name] = value;
  }
  return {{"critical", r.is_critical},
          {"zeroEntryMap", zero_map},
          {"relComplexity", rel},
          {"rowComplexity", r.row_complexity},
          {"colComplexity", r.column_complexity}};
}

inline ordered_json to_json(const ClassificationReport& r) {
  ordered_json report;
  report["pattern"] = to_json(r.pattern);
  report["rowBounding"] = r.row_bounding;
  if (r.q_witness)
    report["qWitness"] = {{"q", r.q_witness->first},
                          {"rows", r.q_witness->second.rows},
                          {"cols", r.q_witness->second.cols}};
  else
    report["qWitness"] = nullptr;
  ordered_json cases = ordered_json::array();
  for (StructureCase c : r.structure_cases) cases.push_back(to_string(c));
  report["structureCase"] = cases;
  report["twoLineCoverable"] = r.two_line_coverable;
  if (r.normal_form)
    report["normalForm"] = {{"transform", to_string(r.normal_form->transform)},
                            {"type", r.normal_form->type},
                            {"rows", r.normal_form->rows},
                            {"cols", r.normal_form->cols}};
  else
    report["normalForm"] = nullptr;
  ordered_json certs = ordered_json::array();
  for (const auto& [cell, names] : r.entry_certificates)
    certs.push_back({{"entry", to_json(cell)}, {"certificates", names}});
  report["entryCertificates"] = certs;
  return report;
}

}  // namespace imkit
