#pragma once

#include "springerlab/labels.hpp"
#include "springerlab/representation.hpp"

namespace springerlab {

/// Integral matrices of the ordinary irreducible module with this label, one
/// per simple reflection. Traces reproduce the character table row.
///   A:   Specht module in the standard polytabloid basis
///   B/C: induced from S^a (inflated) x S^b twisted by the product-of-signs
///        character
///   D:   restriction of B; equal pairs split by a commuting involution
///   G2:  explicit matrices
QRep ordinary_matrices(const WeylGroup& w, const IrrLabel& label);

/// Specht module matrix of an arbitrary permutation (perm[i] = image of i).
QMatrix specht_matrix(const Partition& lambda, const std::vector<int>& perm);

/// Matrix of a signed permutation on the hyperoctahedral module chi^(a,b).
QMatrix bn_module_matrix(const Partition& a, const Partition& b, const std::vector<int>& perm, const std::vector<int>& sign);

}  // namespace springerlab
