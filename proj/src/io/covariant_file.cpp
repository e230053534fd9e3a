#include "io/covariant_file.hpp"

#include "common/error.hpp"

namespace covdim::io {

using nlohmann::json;

namespace {

const json& member(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) fail(ErrorCode::FormatError, std::string("missing field '") + key + "'");
  return j.at(key);
}

unsigned to_unsigned(const json& j, const char* what) {
  if (!j.is_number_integer() || j.get<long long>() < 0) fail(ErrorCode::FormatError, std::string(what) + " must be a nonnegative integer");
  return j.get<unsigned>();
}

std::vector<unsigned> dims(const json& j, const char* what) {
  if (!j.is_array()) fail(ErrorCode::FormatError, std::string(what) + " must be an array of block dimensions");
  std::vector<unsigned> out;
  for (const auto& d : j) out.push_back(to_unsigned(d, what));
  return out;
}

CycNumber coeff(const json& j, unsigned conductor) {
  if (j.is_string()) return CycNumber::parse(j.get<std::string>(), conductor);
  if (j.is_number_integer()) return CycNumber::from_int(j.get<long long>(), conductor);
  fail(ErrorCode::FormatError, "coefficients must be strings or integers");
}

lab::Polynomial poly(const json& terms, std::size_t nvars, unsigned conductor) {
  if (!terms.is_array()) fail(ErrorCode::FormatError, "a polynomial must be an array of terms");
  lab::Polynomial p(nvars);
  for (const auto& t : terms) {
    const json& e = member(t, "exponents");
    if (!e.is_array() || e.size() != nvars)
      fail(ErrorCode::FormatError, "exponent vector must have " + std::to_string(nvars) + " entries");
    lab::Exponents ex;
    for (const auto& x : e) ex.push_back(to_unsigned(x, "exponent"));
    p.add_term(ex, coeff(member(t, "coeff"), conductor));
  }
  return p;
}

std::vector<lab::CMatrix> blocks(const json& j, const lab::GradedSpace& space, unsigned conductor) {
  if (!j.is_array() || j.size() != space.blocks())
    fail(ErrorCode::FormatError, "expected one matrix per block (" + std::to_string(space.blocks()) + ")");
  std::vector<lab::CMatrix> out;
  for (std::size_t b = 0; b < j.size(); ++b) {
    const unsigned d = space.dim(b);
    if (!j[b].is_array() || j[b].size() != d) fail(ErrorCode::FormatError, "block matrix has the wrong number of rows");
    lab::CMatrix m;
    for (const auto& row : j[b]) {
      if (!row.is_array() || row.size() != d) fail(ErrorCode::FormatError, "block matrix row has the wrong length");
      m.emplace_back();
      for (const auto& x : row) m.back().push_back(coeff(x, conductor));
    }
    out.push_back(std::move(m));
  }
  return out;
}

json matrix_json(const lab::CMatrix& m) {
  json rows = json::array();
  for (const auto& r : m) {
    json row = json::array();
    for (const auto& x : r) row.push_back(x.to_string());
    rows.push_back(row);
  }
  return rows;
}

}  // namespace

json poly_to_json(const lab::Polynomial& p) {
  json terms = json::array();
  for (const auto& [e, c] : p.terms()) terms.push_back({{"coeff", c.to_string()}, {"exponents", e}});
  return terms;
}

json map_to_json(const lab::PolyMap& phi) {
  json out = json::array();
  for (const auto& block : phi.blocks()) {
    json b = json::array();
    for (const auto& p : block) b.push_back(poly_to_json(p));
    out.push_back(b);
  }
  return out;
}

CovariantFile parse_covariant_file(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::FormatError, std::string("invalid JSON: ") + e.what(), e.byte == 0 ? 0 : e.byte - 1);
  }
  CovariantFile f;
  try {
    const json& g = member(j, "group");
    if (!g.is_string()) fail(ErrorCode::FormatError, "group must be a spec string");
    f.group_spec = g.get<std::string>();
    f.conductor = j.contains("conductor") ? to_unsigned(j.at("conductor"), "conductor") : 1;
    if (f.conductor == 0) fail(ErrorCode::FormatError, "conductor must be positive");
    const json& sp = member(j, "spaces");
    f.domain = lab::GradedSpace(dims(member(sp, "domain"), "domain"));
    f.codomain = lab::GradedSpace(dims(member(sp, "codomain"), "codomain"));
    if (j.contains("rep_matrices")) {
      f.has_reps = true;
      const json& reps = j.at("rep_matrices");
      if (!reps.is_array()) fail(ErrorCode::FormatError, "rep_matrices must be an array");
      for (const auto& r : reps) {
        f.rep_domain.push_back(blocks(member(r, "domain"), f.domain, f.conductor));
        f.rep_codomain.push_back(blocks(member(r, "codomain"), f.codomain, f.conductor));
      }
    }
    const json& m = member(j, "map");
    if (!m.is_array() || m.size() != f.codomain.blocks())
      fail(ErrorCode::FormatError, "map must have one entry per codomain block");
    std::vector<lab::PolyMap::Block> bl;
    for (std::size_t b = 0; b < m.size(); ++b) {
      if (!m[b].is_array() || m[b].size() != f.codomain.dim(b))
        fail(ErrorCode::FormatError, "map block " + std::to_string(b) + " has the wrong number of coordinates");
      bl.emplace_back();
      for (const auto& p : m[b]) bl.back().push_back(poly(p, f.domain.total_dim(), f.conductor));
    }
    f.map = lab::PolyMap(f.domain, f.codomain, std::move(bl));
    if (j.contains("denominator")) f.denominator = poly(j.at("denominator"), f.domain.total_dim(), f.conductor);
  } catch (const json::exception& e) {
    fail(ErrorCode::FormatError, e.what());
  }
  return f;
}

json to_json(const CovariantFile& f) {
  json j;
  j["group"] = f.group_spec;
  j["conductor"] = f.conductor;
  j["spaces"] = {{"domain", f.domain.block_dims()}, {"codomain", f.codomain.block_dims()}};
  if (f.has_reps) {
    json reps = json::array();
    for (std::size_t g = 0; g < f.rep_domain.size(); ++g) {
      json d = json::array(), c = json::array();
      for (const auto& m : f.rep_domain[g]) d.push_back(matrix_json(m));
      for (const auto& m : f.rep_codomain[g]) c.push_back(matrix_json(m));
      reps.push_back({{"domain", d}, {"codomain", c}});
    }
    j["rep_matrices"] = reps;
  }
  j["map"] = map_to_json(f.map);
  if (f.denominator) j["denominator"] = poly_to_json(*f.denominator);
  return j;
}

std::string dump(const CovariantFile& f) { return to_json(f).dump(2) + "\n"; }

CovariantSetup setup(const CovariantFile& f) {
  auto g = dsl::build(f.group_spec);
  if (!f.has_reps) {
    auto v = lab::MatrixRep::trivial(g.group, f.domain);
    auto w = lab::MatrixRep::trivial(g.group, f.codomain);
    return {std::move(g), std::move(v), std::move(w)};
  }
  if (f.rep_domain.size() != g.group.generator_count())
    fail(ErrorCode::FormatError, "rep_matrices has " + std::to_string(f.rep_domain.size()) + " entries but the group has " +
                                     std::to_string(g.group.generator_count()) + " generators");
  lab::MatrixRep v(g.group, f.domain, f.rep_domain);
  lab::MatrixRep w(g.group, f.codomain, f.rep_codomain);
  return {std::move(g), std::move(v), std::move(w)};
}

}  // namespace covdim::io
