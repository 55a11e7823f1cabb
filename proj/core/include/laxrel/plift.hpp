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
 * Predicate liftings of a finite Set-functor, stored as Yoneda elements: a
 * kappa-ary lifting is a value table on F(V^kappa), and its component at X
 * sends f : X -|-> kappa to the table read along F(f^sharp). Naturality is
 * structural, never checked. Includes Moss-lifting extraction from a lax
 * extension, inducedness detection, least/greatest induced liftings,
 * transposes into the monotone-neighbourhood functor, separating classes and
 * pushforwards along natural transformations.
 */

#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "laxrel/functor.hpp"
#include "laxrel/vcat.hpp"
#include "laxrel/vrel.hpp"

namespace laxrel {

class LaxExtension;

/// The singleton target of predicates FX -|-> 1.
FinSet unit_set();

class PredicateLifting {
public:
	/// yoneda is indexed by F(V^kappa) in its canonical element order.
	PredicateLifting(FinFunctor F, std::size_t kappa, std::vector<Value> yoneda);

	const FinFunctor& functor() const { return F_; }
	const QuantalePtr& quantale() const { return F_.quantale(); }
	std::size_t arity() const { return kappa_.size(); }
	const FinSet& kappa() const { return kappa_; }
	const FinSet& power() const { return power_; }    // V^kappa
	const FinSet& fpower() const { return fpower_; }  // F(V^kappa)
	const std::vector<Value>& yoneda() const { return yoneda_; }

	/// mu(f) : FX -|-> 1 for f : X -|-> kappa.
	VRel eval(const VRel& f) const;
	/// The yoneda table as a relation F(V^kappa) -|-> 1; equals eval(ev_kappa).
	VRel yoneda_rel() const;

	nlohmann::json to_json() const;
	static PredicateLifting from_json(const FinFunctor& F, const nlohmann::json& j);

	friend bool operator==(const PredicateLifting& a, const PredicateLifting& b) {
		return a.F_ == b.F_ && a.kappa_ == b.kappa_ && a.yoneda_ == b.yoneda_;
	}

private:
	FinFunctor F_;
	FinSet kappa_, power_, fpower_;
	std::vector<Value> yoneda_;
};

PredicateLifting make_lifting(FinFunctor F, std::size_t kappa, std::vector<Value> yoneda);

// Built-ins. diamond: \/-along-membership for pow (subsets) and vpow
// (V-valued subsets); box: /\-along-membership for pow; identity: the unary
// lifting of Id reading the value off; top/bottom: constants.
PredicateLifting builtin_diamond(const FinFunctor& F);
PredicateLifting builtin_box(const FinFunctor& F);
PredicateLifting builtin_identity(const QuantalePtr& q, std::size_t cap = kDefaultCap);
PredicateLifting builtin_top(const FinFunctor& F, std::size_t kappa);
PredicateLifting builtin_bottom(const FinFunctor& F, std::size_t kappa);

/// Monotonicity of every component at sets of size <= bound: f <= f'
/// implies mu(f) <= mu(f').
LawReport is_monotone(const PredicateLifting& mu, std::size_t bound = 2,
                      std::size_t exhaustive_limit = 256, std::uint64_t seed = 5);
/// V-enrichment of every component: [f,f'] <= [mu(f), mu(f')].
LawReport is_enriched(const PredicateLifting& mu, std::size_t bound = 2,
                      std::size_t exhaustive_limit = 256, std::uint64_t seed = 5);

/// mu-bar : F => Neigh(kappa), with mu-bar(x)(g) = mu(g)(x).
struct TransposedLifting {
	PredicateLifting mu;

	FinMap at(const FinSet& X) const;
	NatTrans as_nat_trans() const;
};
TransposedLifting transpose(const PredicateLifting& mu);

/// Joint injectivity of the transposes on FX, decided directly on FX without
/// materializing the neighbourhood functor. Every lifting in M must be a
/// lifting of F; the empty class separates only when |FX| <= 1.
bool is_separating(const FinFunctor& F, std::span<const PredicateLifting> M, const FinSet& X);

/// P_V(i) . mu: the lifting of G obtained by precomposing the yoneda table
/// with the component of i at V^kappa.
PredicateLifting pushforward(const NatTrans& i, const PredicateLifting& mu);

// -- operations that consume a lax extension ----------------------------------

/// The Moss lifting mu^k of E at an element k of F(kappa): yoneda table
/// k° . E(ev_kappa), double-checked against mu^k(f) = k° . E(f) on samples.
PredicateLifting moss_lifting(const LaxExtension& E, std::size_t elem, std::size_t kappa);

struct InducedResult {
	bool induced = false;
	VRel certificate;  // the witnessing relation F(kappa) -|-> 1 when induced
};

/// Decides whether mu is induced by E via the two equivalent yoneda-style
/// conditions; their disagreement is a library bug and throws.
InducedResult is_induced_by(const PredicateLifting& mu, const LaxExtension& E);

PredicateLifting least_induced(const LaxExtension& E, std::size_t kappa);
PredicateLifting greatest_induced(const LaxExtension& E, std::size_t kappa);

/// mu(ev) = mu(1_kappa) . (F 1_kappa^sharp)° . E(h), where h is the structure
/// of (V^kappa)^op. Cross-module consistency check.
bool prop_op_power_factorisation(const LaxExtension& E, const PredicateLifting& mu);

} // namespace laxrel
