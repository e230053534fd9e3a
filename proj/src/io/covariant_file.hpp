#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "dsl/group_spec.hpp"
#include "lab/matrix_rep.hpp"
#include "lab/poly_map.hpp"

// Covariant files:
//
//   {"group": "<group spec>",
//    "conductor": N,                       coefficients live in Q(zeta_N)
//    "spaces": {"domain": [dims], "codomain": [dims]},
//    "rep_matrices": [ {"domain": [block matrices], "codomain": [...]} per group generator ],
//    "map": [ block [ coordinate [ {"coeff": "...", "exponents": [...]} ] ] ],
//    "denominator": [ terms ]}             optional
//
// Matrices are lists of rows of coefficient strings such as "1/2 - z^2".
// "rep_matrices" may be omitted for the trivial action.
namespace covdim::io {

struct CovariantFile {
  std::string group_spec;
  unsigned conductor = 1;
  lab::GradedSpace domain, codomain;
  std::vector<std::vector<lab::CMatrix>> rep_domain, rep_codomain;  // generator -> block -> matrix
  bool has_reps = false;
  lab::PolyMap map;
  std::optional<lab::Polynomial> denominator;
};

// Throws FormatError on malformed input.
CovariantFile parse_covariant_file(const std::string& text);
nlohmann::json to_json(const CovariantFile& f);
std::string dump(const CovariantFile& f);

nlohmann::json poly_to_json(const lab::Polynomial& p);
nlohmann::json map_to_json(const lab::PolyMap& phi);

struct CovariantSetup {
  dsl::BuiltGroup group;
  lab::MatrixRep rho_v, rho_w;
};
// Builds the group and both representations; trivial ones without reps.
CovariantSetup setup(const CovariantFile& f);

}  // namespace covdim::io
