#include "io/report.hpp"

#include "group/structure.hpp"
#include "io/covariant_file.hpp"
#include "lab/covariant_ops.hpp"
#include "lab/image_dim.hpp"
#include "lab/matrix_rep.hpp"
#include "reps/character_table.hpp"
#include "reps/faithful.hpp"

namespace covdim::io {

using nlohmann::json;

json error_json(const Error& e) {
  json pos = e.position() == Error::npos ? json(nullptr) : json(e.position());
  return {{"error", {{"code", error_code_name(e.code())}, {"message", e.what()}, {"position", pos}}}};
}

json interval_json(const engine::DimInterval& d) {
  return json::array({d.lo, d.hi ? json(*d.hi) : json(nullptr)});
}

json certificate_json(const engine::Certificate& c) {
  json premises = json::array();
  for (const auto& p : c.premises) premises.push_back({{"group", p.group}, {"fact", p.name}, {"value", p.value}});
  json out = {{"rule", c.rule},
              {"cite", c.cite},
              {"premises", premises},
              {"summed", c.summed},
              {"offset", c.offset},
              {"conclusion", {{"group", c.conclusion.group}, {"fact", c.conclusion.name}, {"value", c.conclusion.value}}}};
  if (!c.note.empty()) out["note"] = c.note;
  return out;
}

namespace {

json center_json(const CenterInfo& z) { return {{"order", z.order}, {"rank", z.rank}, {"cyclic", z.cyclic}}; }

json degree_matrix_json(const lab::DegreeMatrix& a) {
  json rows = json::array();
  for (const auto& r : a.entries) rows.push_back(r);
  return rows;
}

lab::MatrixRep with_trivial_block(const lab::MatrixRep& rho) {
  auto blocks = rho.generator_blocks();
  for (auto& g : blocks) g.push_back({{CycNumber::from_int(1)}});
  auto dims = rho.space().block_dims();
  dims.push_back(1);
  return lab::MatrixRep(rho.group(), lab::GradedSpace(dims), blocks);
}

}  // namespace

json analyze_report(const dsl::BuiltGroup& g, const engine::EngineOptions& options) {
  engine::Engine e(options);
  const auto id = e.analyze(engine::GroupInput::from(g));
  json certs = json::array();
  for (const auto& c : e.derivation(id)) certs.push_back(certificate_json(c));
  const auto f = e.faithful(id);
  return {{"group", g.text},
          {"order", g.group.order()},
          {"center", center_json(e.center_info(id))},
          {"faithful", f ? json(*f) : json(nullptr)},
          {"covdim", interval_json(e.covdim(id))},
          {"edim", interval_json(e.edim(id))},
          {"flags", e.flags(id)},
          {"universe", e.size()},
          {"certificates", certs}};
}

json faithful_report(const dsl::BuiltGroup& g) {
  const auto table = character_table(g.group);
  const auto v = faithful_verdict(g.group, table);
  json out = {{"group", g.text},
              {"order", g.group.order()},
              {"gaschutz", v.gaschutz},
              {"character_table", v.character_table},
              {"agree", v.gaschutz == v.character_table},
              {"faithful", v.faithful()},
              {"trivial_convention", v.trivial_convention}};
  if (!g.group.is_trivial()) {
    const Subgroup n = socle_abelian(g.group);
    json gens = json::array();
    for (Elem x : n.generators()) gens.push_back(g.group.element(x).cycle_string());
    out["socle_abelian"] = {{"order", n.order()}, {"generators", gens}};
  } else {
    out["socle_abelian"] = nullptr;
  }
  return out;
}

json table_report(const dsl::BuiltGroup& g) {
  const auto t = character_table(g.group);
  json classes = json::array();
  for (const auto& c : t.classes())
    classes.push_back({{"representative", g.group.element(c.representative).cycle_string()},
                       {"size", c.members.size()},
                       {"element_order", c.element_order}});
  json chars = json::array();
  for (const auto& ch : t.irreducibles()) {
    json vals = json::array();
    for (const auto& x : ch.values) vals.push_back(x.to_string());
    chars.push_back({{"degree", ch.degree}, {"values", vals}});
  }
  return {{"group", g.text},     {"order", g.group.order()}, {"conductor", t.conductor()},
          {"classes", classes}, {"characters", chars},      {"verified", t.verify()}};
}

json covariant_report(const std::string& op, const std::string& file_text, const std::vector<std::uint64_t>& beta,
                      std::uint64_t seed) {
  if (op != "check" && op != "degrees" && op != "phimax" && op != "dim" && op != "faithful")
    fail(ErrorCode::InvalidArgument, "unknown covariant operation '" + op + "'");
  CovariantFile file = parse_covariant_file(file_text);
  auto s = setup(file);
  lab::PolyMap phi = file.map;
  lab::MatrixRep rho_w = s.rho_w;
  json out = {{"op", op}, {"group", s.group.text}};
  if (file.denominator) {
    phi = lab::regularize(lab::RationalPolyMap(file.map, *file.denominator));
    rho_w = with_trivial_block(s.rho_w);
    out["regularized"] = true;
  }
  if (op == "check") {
    out["equivariant"] = lab::is_equivariant(phi, s.rho_v, rho_w);
    out["domain_faithful"] = s.rho_v.is_faithful();
    out["multihomogeneous"] = lab::is_multihomogeneous(phi);
  } else if (op == "degrees") {
    const auto a = lab::degree_matrix(phi);
    out["degree_matrix"] = degree_matrix_json(a);
    out["rank"] = a.rank();
    out["determinant"] = a.rows() == a.cols() ? json(a.determinant().get_str()) : json(nullptr);
  } else if (op == "phimax") {
    const std::vector<std::uint64_t> b = beta.empty() ? lab::choose_generic_beta(phi, seed) : beta;
    const auto m = lab::phi_max(phi, b);
    out["beta"] = b;
    out["seed"] = seed;
    out["equivariant_before"] = lab::is_equivariant(phi, s.rho_v, rho_w);
    out["equivariant_after"] = lab::is_equivariant(m, s.rho_v, rho_w);
    out["degree_matrix"] = degree_matrix_json(lab::degree_matrix(m));
    CovariantFile res = file;
    res.map = m;
    res.denominator.reset();
    if (file.denominator) {
      res.codomain = m.codomain();
      for (auto& g : res.rep_codomain) g.push_back({{CycNumber::from_int(1, file.conductor)}});
    }
    out["covariant"] = to_json(res);
  } else if (op == "dim") {
    out["seed"] = seed;
    out["image_dimension"] = lab::image_dimension(phi, seed);
    try {
      out["projective_image_dimension"] = lab::projective_image_dimension(phi, seed);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::ChartDegenerate && e.code() != ErrorCode::ZeroComponent &&
          e.code() != ErrorCode::NotMultihomogeneous)
        throw;
      out["projective_image_dimension"] = nullptr;
      out["projective_note"] = e.what();
    }
  } else {
    out["seed"] = seed;
    out["faithful_covariant"] = lab::is_faithful_covariant(phi, s.rho_v, rho_w, seed);
  }
  return out;
}

json catalog_report(const std::vector<engine::CatalogResult>& results) {
  json entries = json::array();
  std::size_t passed = 0;
  for (const auto& r : results) {
    json expected = json::object();
    if (r.entry.covdim) expected["covdim"] = *r.entry.covdim;
    if (r.entry.edim) expected["edim"] = *r.entry.edim;
    json e = {{"spec", r.entry.spec},   {"family", r.entry.family}, {"order", r.order},
              {"covdim", interval_json(r.covdim)}, {"edim", interval_json(r.edim)}, {"expected", expected},
              {"pass", r.pass},         {"certificates", r.certificates.size()}};
    if (!r.error.empty()) e["error"] = r.error;
    passed += r.pass ? 1 : 0;
    entries.push_back(e);
  }
  return {{"entries", entries}, {"passed", passed}, {"failed", results.size() - passed}};
}

std::string render(const json& j) { return j.dump(2) + "\n"; }

}  // namespace covdim::io
