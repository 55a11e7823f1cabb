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
 * V-relations between finite sets as dense matrices, with composition,
 * converse, graphs of functions and the residual calculus:
 *
 *   compose(s, r)      (s . r)(x,z) = \/_y r(x,y) (x) s(y,z)
 *   lift(r, s)         (r -o s)(z,x) = /\_y hom(r(x,y), s(z,y)),
 *                      right adjoint to post-composition: r.t <= s iff t <= r -o s
 *   ext(s, r)          (s o- r)(x,z) = /\_y hom(r(y,x), s(y,z)),
 *                      right adjoint to pre-composition: t.r <= s iff t <= s o- r
 *   rel_dist(r, s)     [r,s] = /\_{x,y} hom(r(x,y), s(x,y))
 *
 * Matrices are dense and exact; empty sets are legal everywhere, with the
 * usual conventions that meets over an empty index set are top and joins are
 * bottom.
 */

#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "laxrel/finset.hpp"
#include "laxrel/quantale.hpp"

namespace laxrel {

inline constexpr std::size_t kDefaultCap = 4096;

/// A V-valued matrix between two finite sets; the universal currency of the
/// library. Immutable in spirit: operations return fresh values.
class VRel {
public:
	VRel() = default;
	VRel(QuantalePtr q, FinSet src, FinSet tgt, std::vector<Value> entries);

	static VRel constant(QuantalePtr q, FinSet src, FinSet tgt, const Value& v);
	static VRel bottom(QuantalePtr q, FinSet src, FinSet tgt);
	static VRel top(QuantalePtr q, FinSet src, FinSet tgt);
	/// Identity 1_X: k on the diagonal, bottom elsewhere.
	static VRel identity(QuantalePtr q, const FinSet& X);

	const QuantalePtr& quantale() const { return q_; }
	const FinSet& src() const { return src_; }
	const FinSet& tgt() const { return tgt_; }
	std::size_t rows() const { return src_.size(); }
	std::size_t cols() const { return tgt_.size(); }

	const Value& at(std::size_t x, std::size_t y) const { return e_[x * cols_ + y]; }
	VRel with(std::size_t x, std::size_t y, const Value& v) const;

	friend bool operator==(const VRel& a, const VRel& b);
	friend bool operator!=(const VRel& a, const VRel& b) { return !(a == b); }

	nlohmann::json to_json() const;
	static VRel from_json(QuantalePtr q, const FinSet& src, const FinSet& tgt,
	                      const nlohmann::json& j);

	/// Matrix with row/column labels, elements printed as canonical names.
	std::string pretty() const;

private:
	QuantalePtr q_;
	FinSet src_, tgt_;
	std::size_t cols_ = 0;
	std::vector<Value> e_;
};

// -- composition and order ---------------------------------------------------

/// (s . r)(x,z) = \/_y r(x,y) (x) s(y,z); requires r.tgt = s.src.
VRel compose(const VRel& s, const VRel& r);
VRel converse(const VRel& r);
/// Interprets a function as the V-relation sending its graph to k.
VRel graph(const QuantalePtr& q, const FinMap& f);
VRel cograph(const QuantalePtr& q, const FinMap& f);

bool leq(const VRel& r, const VRel& s);
VRel join(const VRel& r, const VRel& s);
VRel meet(const VRel& r, const VRel& s);
/// Empty meet is the top relation, empty join the bottom relation.
VRel meet_all(const QuantalePtr& q, const FinSet& src, const FinSet& tgt,
              std::span<const VRel> rs);
VRel join_all(const QuantalePtr& q, const FinSet& src, const FinSet& tgt,
              std::span<const VRel> rs);

// -- residuals ---------------------------------------------------------------

/// Lift r -o s of s: Z -|-> Y along r: X -|-> Y.
VRel lift(const VRel& r, const VRel& s);
/// Extension s o- r of s: Y -|-> Z along r: Y -|-> X.
VRel ext(const VRel& s, const VRel& r);
/// [r,s] for parallel relations.
Value rel_dist(const VRel& r, const VRel& s);
/// Entrywise u (x) r(x,y).
VRel scalar_tensor(const Value& u, const VRel& r);

// -- powers, currying and relation spaces -------------------------------------

/// Materializes V^S as a finite set of |S|-tuples in lexicographic carrier
/// order (first coordinate most significant). Requires a finite carrier and
/// |V|^|S| <= cap.
FinSet power_set(const QuantalePtr& q, const FinSet& S, std::size_t cap = kDefaultCap);
/// Value of coordinate `pos` of tuple `idx` of V^S with |S| = arity.
Value power_coord(const QuantalePtr& q, std::size_t idx, std::size_t pos, std::size_t arity);
/// Tuple index from coordinates.
std::size_t power_index(const QuantalePtr& q, std::span<const Value> coords);

/// r^sharp : X -> V^kappa.
FinMap curry(const VRel& r, std::size_t cap = kDefaultCap);
/// f^flat : X -|-> kappa for f : X -> V^kappa.
VRel uncurry(const QuantalePtr& q, const FinMap& f, const FinSet& kappa);
/// ev_kappa : V^kappa -|-> kappa, ev(h, i) = h(i).
VRel eval_rel(const QuantalePtr& q, const FinSet& kappa, std::size_t cap = kDefaultCap);

/// The hom-set of all V-relations X -|-> Y, enumerated in lexicographic
/// matrix order (row-major, first entry most significant). Count must stay
/// under the cap.
class RelSpace {
public:
	RelSpace(QuantalePtr q, FinSet src, FinSet tgt, std::size_t cap = kDefaultCap);

	std::size_t count() const { return count_; }
	VRel at(std::size_t i) const;
	std::size_t index_of(const VRel& r) const;

	const FinSet& src() const { return src_; }
	const FinSet& tgt() const { return tgt_; }

private:
	QuantalePtr q_;
	FinSet src_, tgt_;
	std::size_t cells_ = 0;
	std::size_t count_ = 1;
};

} // namespace laxrel
