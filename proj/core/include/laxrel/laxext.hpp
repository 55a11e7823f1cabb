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
 * Lax extensions as first-class values: rules sending r : X -|-> Y to
 * E r : FX -|-> FY subject to
 *
 *   (L1)  r <= r'  implies  E r <= E r'
 *   (L2)  E s . E r <= E (s . r)
 *   (L3)  F f <= E f  and  (F f)° <= E (f°)
 *
 * An extension is a closed algebraic term (identity | barr | hausdorff |
 * kantorovich | neigh-ext | dual | meet | initial | user rule), evaluated on
 * demand; extensional equality is only ever decided on explicitly enumerated
 * hom-sets. The Kantorovich construction
 *
 *   E^mu r = /\_{g : Y -|-> kappa} mu(g) -o mu(g . r)
 *
 * iterates g in lexicographic matrix order and folds meets incrementally
 * with early exit at bottom; it is the only hot loop in the library and can
 * be partitioned across threads with bitwise-identical results.
 */

#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "laxrel/plift.hpp"
#include "laxrel/vcat.hpp"

namespace laxrel {

class LaxExtension {
public:
	enum class Kind {
		Identity,
		Barr,
		Hausdorff,
		Kantorovich,
		NeighExt,
		Dual,
		Meet,
		Initial,
		UserRule,
	};

	/// Which powerset carries the Hausdorff-style extension: subsets (two) or
	/// V-valued predicates (the full carrier as a subquantale of itself).
	enum class Subquantale { Two, FullCarrier };

	static LaxExtension identity(QuantalePtr q, std::size_t cap = kDefaultCap);
	/// Boolean quantale only: tabulates r as a span (R, p1, p2) and returns
	/// F p2 . (F p1)°.
	static LaxExtension barr(FinFunctor F);
	static LaxExtension hausdorff(QuantalePtr q, Subquantale w, std::size_t cap = kDefaultCap);
	/// Rejects non-monotone liftings and infinite carriers.
	static LaxExtension kantorovich(FinFunctor F, std::vector<PredicateLifting> M);
	static LaxExtension neigh_ext(QuantalePtr q, std::size_t kappa,
	                              std::size_t cap = kDefaultCap);
	static LaxExtension dual_of(LaxExtension e);
	static LaxExtension meet_of(std::vector<LaxExtension> es);
	static LaxExtension symmetrise(const LaxExtension& e);
	static LaxExtension initial(std::vector<NatTrans> alphas, std::vector<LaxExtension> inner);
	static LaxExtension user_rule(FinFunctor F, std::string name,
	                              std::function<VRel(const VRel&)> rule);

	VRel apply(const VRel& r, int threads = 1) const;

	Kind kind() const;
	const FinFunctor& functor() const;
	const QuantalePtr& quantale() const;
	std::size_t cap() const;
	std::string describe() const;
	/// Kantorovich only: the underlying liftings.
	std::span<const PredicateLifting> liftings() const;

	// Opaque term node; only the factories above can build one.
	struct Impl;
	explicit LaxExtension(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}

private:
	std::shared_ptr<const Impl> impl_;
};

/// Sample family driving the law checkers: which sets to quantify over, how
/// large a hom-set may be before exhaustive enumeration gives way to seeded
/// sampling, and the seed.
struct SamplePlan {
	std::vector<FinSet> sets;
	std::size_t exhaustive_limit = 256;
	std::size_t samples_per_homset = 24;
	std::size_t map_limit = 16;
	std::uint64_t seed = 2026;

	/// Default family: sets of size 0, 1, 2.
	static SamplePlan standard();
};

/// All relations X -|-> Y when the hom-set is small, a seeded sample
/// otherwise.
std::vector<VRel> plan_relations(const QuantalePtr& q, const FinSet& X, const FinSet& Y,
                                 const SamplePlan& plan);

/// L1-L3 with witnesses, plus the strict-composite equalities
/// E(s.f) = E(s).F(f) and E(g°.s) = (F g)°.E(s), plus an informational
/// identity-preservation line.
LawReport check_lax_laws(const LaxExtension& E, const SamplePlan& plan);

/// The three checkable enrichment conditions -- [r,r'] <= [E r, E r'],
/// u (x) 1_FX <= E(u (x) 1_X), and u (x) E r <= E(u (x) r) -- reported
/// individually (informational) together with a required agreement line:
/// on exhaustive instances the three verdicts must coincide.
LawReport check_enrichment(const LaxExtension& E, const SamplePlan& plan);

/// (FX, E a): the lifting of F to V-categories.
VCat lift_to_vcat(const LaxExtension& E, const VCat& A);

struct SimResult {
	VRel dist;
	std::size_t iterations = 0;
	bool reflexive = false;
	bool transitive = false;
	std::vector<VRel> trace;  // filled when keep_trace is set
};

/// Greatest fixpoint of r |-> c° . E(r) . c from the top relation, by
/// monotone descent. Finite carriers terminate by lattice height; the
/// exact-rational kind is guarded by max_iter and raises CapError beyond it.
SimResult sim_distance(const LaxExtension& E, const FinMap& coalgebra, bool keep_trace = false,
                       std::size_t max_iter = 1000, int threads = 1);

} // namespace laxrel
