#pragma once

// Machine-readable result documents. One top-level object per command with
// fields in a fixed order: schema, command, inputs, verdict, witness, timing.

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "htour/classify.hpp"
#include "htour/completion.hpp"
#include "htour/core.hpp"
#include "htour/io.hpp"
#include "htour/ramsey.hpp"

namespace htour {

using Json = nlohmann::ordered_json;

inline constexpr const char* kReportSchema = "htour-report/1";

inline Json make_report(const std::string& command, Json inputs, Json verdict, Json witness) {
  Json r;
  r["schema"] = kReportSchema;
  r["command"] = command;
  r["inputs"] = std::move(inputs);
  r["verdict"] = std::move(verdict);
  r["witness"] = std::move(witness);
  r["timing"] = nullptr;
  return r;
}

inline void set_timing(Json& report, std::optional<double> elapsed_ms) {
  if (elapsed_ms) report["timing"] = Json{{"elapsed_ms", *elapsed_ms}};
  else report["timing"] = nullptr;
}

inline std::string render(const Json& report) { return report.dump(2) + "\n"; }

inline Json to_json(const Quadruple& q) { return Json::array({q[0], q[1], q[2], q[3]}); }

inline Json to_json(const Triple& t) { return Json::array({t.a, t.b, t.c}); }

inline Json structure_json(const HoleyHT& A) { return Json(emit_lines(A)); }

inline Json structure_inputs(const HoleyHT& A) {
  Json j;
  j["n"] = A.size();
  j["triples"] = A.cells().size();
  j["holes"] = A.hole_count();
  return j;
}

inline Json solve_json(const SolveResult& s) {
  Json j;
  j["verdict"] = s.sat() ? "Sat" : "Unsat";
  if (s.sat()) {
    j["completion"] = structure_json(*s.completion);
  } else {
    Json cert = Json::array();
    for (const auto& q : s.certificate) cert.push_back(to_json(q));
    j["certificate"] = std::move(cert);
  }
  j["search"] = Json{{"decisions", s.stats.decisions},
                     {"conflicts", s.stats.conflicts},
                     {"forced", s.stats.forced}};
  return j;
}

inline Json report_complete(const HoleyHT& A, const ConstraintSet& allowed) {
  Json inputs = structure_inputs(A);
  inputs["allow"] = allowed.to_string();
  const SolveResult s = complete(A, allowed);
  Json witness = solve_json(s);
  witness.erase("verdict");
  return make_report("complete", std::move(inputs), s.sat() ? "Sat" : "Unsat", std::move(witness));
}

inline Json report_enumerate(const HoleyHT& A, const ConstraintSet& allowed,
                             std::optional<std::size_t> cap) {
  Json inputs = structure_inputs(A);
  inputs["allow"] = allowed.to_string();
  inputs["cap"] = cap ? Json(*cap) : Json(nullptr);
  const auto all = all_completions(A, allowed, cap);
  Json list = Json::array();
  for (const auto& c : all) list.push_back(structure_json(c));
  Json witness;
  witness["count"] = all.size();
  witness["truncated"] = cap.has_value() && all.size() >= *cap;
  witness["completions"] = std::move(list);
  return make_report("enumerate", std::move(inputs), all.empty() ? "Unsat" : "Sat",
                     std::move(witness));
}

inline Json report_minimal_obstruction(const HoleyHT& A, const ConstraintSet& allowed, int jobs) {
  Json inputs = structure_inputs(A);
  inputs["allow"] = allowed.to_string();
  const ObstructionReport r = is_minimal_obstruction(A, allowed, jobs);
  Json deletions = Json::array();
  for (std::size_t i = 0; i < r.deletions.size(); ++i) {
    Json d;
    d["vertex"] = i + 1;
    const Json solved = solve_json(r.deletions[i]);
    for (const auto& [k, v] : solved.items()) d[k] = v;
    deletions.push_back(std::move(d));
  }
  Json witness;
  witness["whole"] = solve_json(r.whole);
  witness["deletions"] = std::move(deletions);
  return make_report("minimal-obstruction", std::move(inputs),
                     r.minimal ? "minimal" : "not-minimal", std::move(witness));
}

inline Json report_member(const HoleyHT& A, const ConstraintSet& allowed) {
  Json inputs = structure_inputs(A);
  inputs["allow"] = allowed.to_string();
  const Membership m = class_member(A, allowed);
  Json witness = nullptr;
  if (!m.member) {
    witness = Json{{"quadruple", to_json(*m.witness)}, {"type", to_string(*m.witness_type)}};
  }
  return make_report("member", std::move(inputs), m.member ? "member" : "non-member",
                     std::move(witness));
}

inline Json report_classify4(const HoleyHT& A) {
  const FourType t = four_type(A);
  return make_report("classify4", structure_inputs(A), to_string(t),
                     Json{{"hat_natural", [&] {
                            Json e = Json::array();
                            for (const auto& h : hat(A, LinearOrder::natural(4)).hyperedges)
                              e.push_back(to_json(h));
                            return e;
                          }()}});
}

inline Json report_hat(const HoleyHT& A, const LinearOrder& ord) {
  Json inputs = structure_inputs(A);
  inputs["order"] = ord.perm();
  const Hypergraph3 H = hat(A, ord);
  Json edges = Json::array();
  for (const auto& t : H.hyperedges) edges.push_back(to_json(t));
  return make_report("hat", std::move(inputs), H.hyperedges.size(),
                     Json{{"hyperedges", std::move(edges)}});
}

inline Json report_validate(const HTDocument& doc) {
  Json inputs = structure_inputs(doc.ht);
  inputs["has_order"] = doc.order.has_value();
  inputs["has_graph"] = doc.graph.has_value();
  return make_report("validate", std::move(inputs), "valid",
                     Json{{"canonical", emit_lines(doc)}});
}

inline Json report_orders_count(const HoleyHT& A) {
  const auto orders = compatible_orders_cyclic(A);
  Json list = Json::array();
  for (const auto& o : orders) list.push_back(o.perm());
  return make_report("orders-count", structure_inputs(A), orders.size(),
                     Json{{"orders", std::move(list)}});
}

inline Json report_ramsey(const OrderedHT& C, const OrderedHT& B, const OrderedHT& A,
                          const ArrowOptions& opt) {
  Json inputs;
  inputs["kind"] = to_string(C.kind);
  inputs["sizes"] = Json{{"C", C.size()}, {"B", B.size()}, {"A", A.size()}};
  inputs["prune"] = opt.prune;
  const ArrowVerdict v = arrow_check(C, B, A, opt);
  Json witness;
  witness["a_embeddings"] = v.a_embeddings.size();
  witness["b_copies"] = v.b_copies;
  if (v.counterexample) {
    Json colouring = Json::array();
    for (std::size_t i = 0; i < v.a_embeddings.size(); ++i)
      colouring.push_back(Json{{"embedding", v.a_embeddings[i]}, {"colour", (*v.counterexample)[i]}});
    witness["counterexample"] = std::move(colouring);
  } else {
    witness["counterexample"] = nullptr;
  }
  return make_report("ramsey", std::move(inputs), v.holds ? "holds" : "fails", std::move(witness));
}

}  // namespace htour
