#pragma once

#include <map>
#include <vector>

#include "springerlab/root_system.hpp"

namespace springerlab {

using Exponent = std::vector<int>;
/// Integer polynomial in a fixed number of variables, sparse.
using IPoly = std::map<Exponent, long>;

namespace ipoly {
IPoly variable(int nvars, int i);
IPoly constant(int nvars, long c);
IPoly add(const IPoly& a, const IPoly& b);
IPoly scale(const IPoly& a, long c);
IPoly mul(const IPoly& a, const IPoly& b);
IPoly power(const IPoly& a, int e);
/// Linear form sum_i c_i x_i.
IPoly linear(const std::vector<long>& coeffs);
/// Substitute x_j -> forms[j].
IPoly substitute(const IPoly& a, const std::vector<IPoly>& forms);
int degree(const IPoly& a);
bool is_homogeneous(const IPoly& a);
/// Elementary symmetric polynomial e_k of the given polynomials.
IPoly elementary(const std::vector<IPoly>& xs, int k);
/// Divides out the content; sign fixed so the leading coefficient is positive.
IPoly primitive(const IPoly& a);
}  // namespace ipoly

/// All exponent vectors of total degree d, lexicographically decreasing.
std::vector<Exponent> monomials(int nvars, int d);

/// The polynomial model of the reflection representation of a Weyl group:
/// number of variables, substitution of every simple reflection, integral
/// fundamental invariants and the positive-root linear forms.
struct PolynomialModel {
  int nvars = 0;
  std::vector<std::vector<IPoly>> generator_substitutions;
  std::vector<IPoly> invariants;
  std::vector<IPoly> positive_root_forms;
  std::vector<int> fundamental_degrees;
};

PolynomialModel polynomial_model(const RootSystem& rs);

}  // namespace springerlab
