#include "tropcheck/json_io.hpp"

namespace tropcheck {

Json to_json(std::span<const Rational> v) {
  Json out = Json::array();
  for (const auto& q : v) out.push_back(to_string(q));
  return out;
}

Json to_json(const MatrixQ& m) {
  Json out = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(to_json(m.row(r)));
  return out;
}

Json to_json(const Polyhedron& p) {
  Json out = Json::array();
  for (const auto& c : p.constraints)
    out.push_back({{"coeffs", to_json(c.form.coeffs)},
                   {"constant", to_string(c.form.constant)},
                   {"relation", c.rel == Relation::Equal ? "=" : ">="}});
  return out;
}

Json to_json(const LinearPiece& p) {
  Json out;
  out["id"] = p.id;
  out["matrix"] = to_json(p.matrix);
  out["offset"] = to_json(p.offset);
  out["constraints"] = to_json(p.cell);
  out["jac"] = p.jac ? Json(to_string(*p.jac)) : Json(nullptr);
  return out;
}

Json to_json(const Decomposition& d) {
  Json pieces = Json::array();
  for (const auto& p : d.pieces) pieces.push_back(to_json(p));
  return {{"dimension", d.dim}, {"outputs", d.outputs}, {"count", d.size()}, {"pieces", std::move(pieces)}};
}

Json to_json(const Preimage& p) {
  Json points = Json::array();
  for (const auto& q : p.points) points.push_back({{"point", to_json(q.point)}, {"pieces", q.pieces}});
  return {{"points", std::move(points)}, {"degenerate_pieces", p.degenerate_pieces}};
}

Json to_json(const ClarkeSet& c) {
  Json out;
  out["point"] = to_json(c.point);
  out["pieces"] = c.piece_ids;
  Json matrices = Json::array();
  for (const auto& m : c.matrices) matrices.push_back(to_json(m));
  out["matrices"] = std::move(matrices);
  out["verdict"] = to_string(c.verdict);
  if (!c.witness) {
    out["witness"] = nullptr;
    return out;
  }
  const auto& w = *c.witness;
  Json witness;
  if (w.weights) {
    // Only the pieces that carry weight.
    Json ids = Json::array(), weights = Json::array();
    for (std::size_t i = 0; i < w.weights->size(); ++i) {
      if ((*w.weights)[i] == 0) continue;
      ids.push_back(c.piece_ids.empty() ? i + 1 : c.piece_ids[i]);
      weights.push_back(to_string((*w.weights)[i]));
    }
    witness["pieces"] = std::move(ids);
    witness["weights"] = std::move(weights);
    witness["exact"] = true;
  } else {
    witness["from"] = to_json(w.from);
    witness["to"] = to_json(w.to);
    witness["t_interval"] = {to_string(w.lo), to_string(w.hi)};
    witness["exact"] = false;
  }
  out["witness"] = std::move(witness);
  return out;
}

Json to_json(const AnalysisReport& r) {
  Json out;
  out["verdict"] = to_string(r.verdict);
  out["reason"] = to_string(r.reason);
  out["pieces"] = r.piece_count;
  out["signs"] = {{"pos", r.signs.pos}, {"neg", r.signs.neg}, {"zero", r.signs.zero}};
  out["degree"] = r.degree ? Json(*r.degree) : Json(nullptr);
  if (r.regular_value) {
    out["regular_value"] = to_json(r.regular_value->y0);
    out["regular_value_source"] = to_json(r.regular_value->source_point);
    out["checked_facets"] = r.regular_value->checked_facets;
  } else {
    out["regular_value"] = nullptr;
  }
  Json fiber = Json::array(), witnesses = Json::array();
  for (const auto& p : r.fiber) fiber.push_back(to_json(p));
  for (const auto& p : r.witnesses) witnesses.push_back(to_json(p));
  out["fiber"] = std::move(fiber);
  out["witnesses"] = std::move(witnesses);
  out["inverse_pieces"] = r.inverse ? to_json(*r.inverse)["pieces"] : Json(nullptr);
  out["plane_fast_path"] = r.fast_path ? Json(to_string(*r.fast_path)) : Json(nullptr);
  if (!r.diagnostics.empty()) out["diagnostics"] = r.diagnostics;
  return out;
}

}  // namespace tropcheck
