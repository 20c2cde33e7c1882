#pragma once

// Flat per-triple output records: one JSON object per line, or a CSV row.

#include "classify.hpp"
#include "grouppres.hpp"
#include "pretzel.hpp"

#include <json.hpp>

#include <optional>
#include <string>

namespace pretzelsurg {

struct OutputRecord {
  PretzelParams params;
  JsjResult jsj;
  std::optional<Decision> oracle;
  std::optional<LaurentPoly> alexander;
  std::optional<LaurentPoly> jones;

  /// Oracle verdict consistent with the case table (true when no oracle ran).
  bool oracle_agrees() const {
    if (!oracle) return true;
    if (oracle->verdict == Verdict::undecided) return false;
    if (is_unknot(params)) return true;
    return (oracle->verdict == Verdict::exceptional) == cut_is_nonhyperbolic(params);
  }
};

inline OutputRecord make_record(const PretzelParams& k) { return {k, classify(k), std::nullopt, std::nullopt, std::nullopt}; }

inline nlohmann::json to_json(const LaurentPoly& poly) {
  nlohmann::json out = nlohmann::json::object();
  for (const auto& [e, c] : poly.terms()) out[std::to_string(e)] = static_cast<long long>(c);
  return out;
}

inline nlohmann::json to_json(const JsjPiece& piece) {
  nlohmann::json out{{"kind", piece_kind_name(piece.kind)}};
  if (piece.kind == PieceKind::seifert_annulus) out["order"] = piece.order;
  if (piece.chirality) out["chirality"] = chirality_name(*piece.chirality);
  return out;
}

/// Keys are emitted sorted, so identical records serialize to identical bytes.
inline nlohmann::json to_json(const OutputRecord& rec) {
  nlohmann::json out{
      {"format", 1},
      {"p", rec.params.p},
      {"q", rec.params.q},
      {"r", rec.params.r},
      {"knot", rec.params.knot_name()},
      {"case", rec.jsj.case_label},
      {"tori", rec.jsj.tori},
  };
  out["pieces"] = nlohmann::json::array();
  for (const auto& piece : rec.jsj.pieces) out["pieces"].push_back(to_json(piece));
  out["trace"] = rec.jsj.trace;
  if (rec.oracle) {
    out["oracle"] = {{"verdict", verdict_name(rec.oracle->verdict)},
                     {"states", rec.oracle->states},
                     {"agrees", rec.oracle_agrees()}};
    if (rec.oracle->pattern) out["oracle"]["pattern"] = pattern_str(*rec.oracle->pattern);
  }
  if (rec.alexander) out["alexander"] = to_json(*rec.alexander);
  if (rec.jones) out["jones"] = to_json(*rec.jones);
  return out;
}

inline std::string csv_header() { return "p,q,r,case,tori,pieces,oracle"; }

/// Pieces as "kind[:order|:chirality]" joined by ';'; oracle as "verdict:states".
inline std::string csv_row(const OutputRecord& rec) {
  std::string pieces;
  for (const auto& piece : rec.jsj.pieces) {
    if (!pieces.empty()) pieces += ";";
    pieces += piece_kind_name(piece.kind);
    if (piece.kind == PieceKind::seifert_annulus) pieces += ":" + std::to_string(piece.order);
    if (piece.chirality) pieces += ":" + chirality_name(*piece.chirality);
  }
  std::string oracle;
  if (rec.oracle) oracle = verdict_name(rec.oracle->verdict) + ":" + std::to_string(rec.oracle->states);
  return std::to_string(rec.params.p) + "," + std::to_string(rec.params.q) + "," + std::to_string(rec.params.r) +
         "," + rec.jsj.case_label + "," + std::to_string(rec.jsj.tori) + "," + pieces + "," + oracle;
}

}  // namespace pretzelsurg
