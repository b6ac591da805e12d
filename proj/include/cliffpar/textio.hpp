#ifndef CLIFFPAR_TEXTIO_HPP_
#define CLIFFPAR_TEXTIO_HPP_

#include <string>
#include <string_view>

#include "cliffpar/subspace.hpp"

namespace cliffpar {

// Text syntax, bit-exact and round-tripping:
//   scalars      "p", "p/q"                (rationals)
//                "s^2*t + 1", "(s^2*t + 1)/(s + t)"   (GF(2)(s,t))
//   quaternions  "c0 + c1*i + c2*j + c3*k" (basis i,j,k over the rationals,
//                u,v,w in characteristic two); zero terms are omitted, unit
//                coefficients print as the bare basis letter, multi-term
//                or fractional coefficients of basis letters are
//                parenthesised, e.g. "(s + 1)*u".
//   subspaces    semicolon-separated echelon rows, e.g. "1; i";
//                the zero subspace prints as "0".

template <FieldScalar K>
std::string quat_str(const Quat<K>& q);

template <FieldScalar K>
std::string subspace_str(const Subspace<K>& s);

template <FieldScalar K>
Quat<K> parse_quat(std::string_view text);

template <FieldScalar K>
Subspace<K> parse_subspace(std::string_view text);

}  // namespace cliffpar

#endif  // CLIFFPAR_TEXTIO_HPP_
