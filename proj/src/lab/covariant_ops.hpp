#pragma once

#include <cstdint>
#include <vector>

#include "lab/matrix_rep.hpp"
#include "lab/poly_map.hpp"

namespace covdim::lab {

// (f^mu_1 phi_1, ..., f^mu_m phi_m) for a multihomogeneous phi with degree
// matrix A. mu must lie in the column space of A over Q and be nonnegative.
// Throws MuNotInColumnSpace, InvalidArgument (negative mu).
PolyMap twist_by_invariant(const PolyMap& phi, const Polynomial& f, const std::vector<long long>& mu);

// Same, additionally checking that f is invariant (NotInvariant) and that the
// result is again equivariant when phi is.
PolyMap twist_by_invariant(const PolyMap& phi, const Polynomial& f, const std::vector<long long>& mu,
                           const MatrixRep& rho_v, const MatrixRep& rho_w);

// Twist allowing negative exponents; the result has denominator f^s with
// s = max(0, -min mu).
RationalPolyMap twist_rational(const PolyMap& phi, const Polynomial& f, const std::vector<long long>& mu);

// (f psi_1, ..., f psi_m, f) into the codomain extended by a 1-dim block.
// f defaults to the denominator. Throws PreconditionViolated if f psi is not
// polynomial.
PolyMap regularize(const RationalPolyMap& psi);
PolyMap regularize(const RationalPolyMap& psi, const Polynomial& f);

// For phi equivariant under a product G_1 x ... x G_n acting blockwise, with
// p dividing every |Z(G_i)|: checks that the degree matrix is the identity
// mod p and has nonzero determinant. Throws PreconditionViolated when the
// hypotheses fail.
bool degree_congruences(const PolyMap& phi, const MatrixRep& rho_v, const MatrixRep& rho_w,
                        const std::vector<std::uint64_t>& factor_center_orders, std::uint64_t p);

}  // namespace covdim::lab
