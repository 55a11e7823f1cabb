/*
 *   Copyright 2026 The laxrel authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/**
 * @file
 *
 * V-categories: sets with a reflexive transitive V-relation. Generalizes
 * preorders (boolean quantale) and metric-like spaces (grid quantales).
 * Includes the natural order, separatedness, powers V^S, the closure
 * operator, dense maps, and the extension of a V-valued functor along a
 * fully faithful embedding.
 */

#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "laxrel/vrel.hpp"

namespace laxrel {

/// A pair (X, a) with 1_X <= a and a.a <= a. Construction does not validate;
/// run check_vcat to certify.
struct VCat {
	FinSet obj;
	VRel a;

	const QuantalePtr& quantale() const { return a.quantale(); }

	nlohmann::json to_json() const { return {{"obj", obj.name()}, {"a", a.to_json()}}; }
};

/// A map f with f.a <= b.f, i.e. a(x,y) <= b(f x, f y).
struct VFunctor {
	VCat dom, cod;
	FinMap map;
};

LawReport check_vcat(const FinSet& X, const VRel& a);
inline LawReport check_vcat(const VCat& A) { return check_vcat(A.obj, A.a); }
LawReport check_vfunctor(const FinMap& f, const VCat& A, const VCat& B);

/// x <= y iff k <= a(x,y).
std::vector<std::vector<bool>> natural_order(const VCat& A);
/// Separated iff the natural order is antisymmetric.
bool is_separated(const VCat& A);

VCat dual(const VCat& A);

/// (V, hom) as a V-category on the carrier set. Finite carriers only.
VCat quantale_vcat(const QuantalePtr& q);

/// The S-power V^S with structure [h,l] = /\_s hom(h(s), l(s)).
VCat power_vcat(const QuantalePtr& q, const FinSet& S, std::size_t cap = kDefaultCap);
/// The structure of (V^S)^op, as used when reading predicate liftings off
/// the power category.
VRel power_vcat_op_structure(const QuantalePtr& q, const FinSet& S,
                             std::size_t cap = kDefaultCap);

/// x in cl(M) iff k <= \/_{z in M} a(x,z) (x) a(z,x). Takes and returns
/// sorted element indices.
std::vector<std::uint32_t> closure(const VCat& A, std::span<const std::uint32_t> M);

/// i is dense in (X, a) iff a = a.i.i°.a.
bool is_dense_map(const FinMap& i, const VCat& A);

/// Extends phi: A -> (V,hom) along a fully faithful i: A -> X to a V-functor
/// psi: X -> (V,hom) with psi o i = phi, via psi(x) = \/_z phi(z) (x) b(i z, x).
/// Throws InputError with a witness pair when i is not fully faithful
/// (a = i°.b.i fails).
VFunctor extend_along_embedding(const VFunctor& i, const VFunctor& phi);

} // namespace laxrel
