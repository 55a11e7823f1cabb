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
 * Finite Set-endofunctors with enumerable object action and computable
 * morphism action, generated by the grammar
 *
 *   F ::= Id | Const(C) | Pow | VPow | F x F | F + F | F o F | Neigh(k)
 *
 * Pow materializes subsets as bitmasks over the canonical element order.
 * VPow is the V-valued powerset X |-> V^X (the W = V variant of the
 * Hausdorff construction); Neigh(k) X is the set of monotone maps from the
 * hom-set of relations X -|-> k (pointwise order) to V. Every materialized
 * set is guarded by a size cap; exceeding it raises CapError rather than
 * truncating.
 */

#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "laxrel/vrel.hpp"

namespace laxrel {

struct FunctorTerm;
using FunctorTermPtr = std::shared_ptr<const FunctorTerm>;

struct FunctorTerm {
	enum class Op { Identity, Constant, Pow, VPow, Product, Coproduct, Compose, Neigh };

	Op op = Op::Identity;
	FinSet constant;                   // Constant
	std::size_t kappa = 1;             // Neigh
	std::vector<FunctorTermPtr> args;  // Product/Coproduct/Compose: exactly 2

	static FunctorTermPtr identity();
	static FunctorTermPtr constant_set(FinSet C);
	static FunctorTermPtr pow();
	static FunctorTermPtr vpow();
	static FunctorTermPtr product(FunctorTermPtr a, FunctorTermPtr b);
	static FunctorTermPtr coproduct(FunctorTermPtr a, FunctorTermPtr b);
	static FunctorTermPtr compose(FunctorTermPtr outer, FunctorTermPtr inner);
	static FunctorTermPtr neigh(std::size_t kappa);

	std::string str() const;
	nlohmann::json to_json() const;
	static FunctorTermPtr from_json(const nlohmann::json& j);
};

/// A functor instance bound to a quantale (needed by VPow and Neigh) and a
/// size cap. Object/morphism actions are pure and deterministic: applying
/// the functor to equal sets yields equal encodings. Object results are
/// memoized behind a mutex, so instances stay safe to share across threads.
class FinFunctor {
public:
	FinFunctor() = default;
	FinFunctor(QuantalePtr q, FunctorTermPtr term, std::size_t cap = kDefaultCap);

	FinSet on_obj(const FinSet& X) const;
	FinMap on_map(const FinMap& f) const;

	const FunctorTermPtr& term() const { return term_; }
	const QuantalePtr& quantale() const { return q_; }
	std::size_t cap() const { return cap_; }
	std::string str() const { return term_->str(); }

	friend bool operator==(const FinFunctor& a, const FinFunctor& b);

private:
	struct ObjCache;
	FinSet on_obj_uncached(const FinSet& X) const;

	QuantalePtr q_;
	FunctorTermPtr term_;
	std::size_t cap_ = kDefaultCap;
	std::shared_ptr<ObjCache> cache_;
};

/// The carrier of Neigh(kappa) X: all monotone maps from the relation space
/// Rel(X, kappa) under its pointwise order into V, each encoded as the value
/// table over the domain in lexicographic matrix order.
struct NeighSpace {
	FinSet set;
	RelSpace domain;                         // Rel(X, kappa)
	std::vector<std::vector<Value>> tables;  // tables[i][g]

	std::size_t index_of_table(std::span<const Value> table) const;
};

NeighSpace neigh_space(const QuantalePtr& q, std::size_t kappa, const FinSet& X,
                       std::size_t cap = kDefaultCap);
FinSet neigh_obj(const QuantalePtr& q, std::size_t kappa, const FinSet& X,
                 std::size_t cap = kDefaultCap);

/// Functoriality spot-check over sample sets: F(id) = id and
/// F(g o f) = F(g) o F(f) on generated maps. The callable overload exists so
/// corrupted actions can be checked as a negative control.
LawReport check_functoriality(const std::function<FinSet(const FinSet&)>& on_obj,
                              const std::function<FinMap(const FinMap&)>& on_map,
                              std::span<const FinSet> samples, std::uint64_t seed = 17);
LawReport check_functoriality(const FinFunctor& F, std::span<const FinSet> samples,
                              std::uint64_t seed = 17);

/// A natural transformation given by a component rule; naturality is checked
/// on samples, not assumed.
struct NatTrans {
	FinFunctor src, tgt;
	std::function<FinMap(const FinSet&)> component;

	FinMap at(const FinSet& X) const { return component(X); }
};

LawReport check_naturality(const NatTrans& alpha, std::span<const FinSet> samples,
                           std::uint64_t seed = 17);

/// Generates every map between two small sets (used by exhaustive law
/// checks) or a seeded sample when the space is too large.
std::vector<FinMap> all_maps(const FinSet& X, const FinSet& Y, std::size_t limit,
                             std::uint64_t seed);

} // namespace laxrel
