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
 * A self-describing JSON workspace: one quantale, named sets, maps,
 * relations, V-categories, functor terms, liftings, extension terms and
 * coalgebras. All references must resolve and every object shares the
 * workspace quantale. This is the batch front end's input format; parsing
 * round-trips (to_json of a parsed workspace re-parses to equal objects).
 */

#pragma once

#include <map>
#include <string>

#include "laxrel/laxext.hpp"

namespace laxrel {

struct Coalgebra {
	FinFunctor functor;
	FinMap map;  // X -> FX
};

class Workspace {
public:
	QuantalePtr quantale;
	std::size_t cap = kDefaultCap;

	std::map<std::string, FinSet> sets;
	std::map<std::string, FinMap> maps;
	std::map<std::string, VRel> relations;
	std::map<std::string, VCat> vcats;
	std::map<std::string, FinFunctor> functors;
	std::map<std::string, PredicateLifting> liftings;
	std::map<std::string, LaxExtension> extensions;
	std::map<std::string, Coalgebra> coalgebras;

	static Workspace from_json(const nlohmann::json& j, std::size_t cap_override = 0);
	static Workspace load(const std::string& path, std::size_t cap_override = 0);
	nlohmann::json to_json() const;

	const FinSet& set(const std::string& name) const;
	const FinMap& map_of(const std::string& name) const;
	const VRel& relation(const std::string& name) const;
	const VCat& vcat(const std::string& name) const;
	const FinFunctor& functor(const std::string& name) const;
	const PredicateLifting& lifting(const std::string& name) const;
	const LaxExtension& extension(const std::string& name) const;
	const Coalgebra& coalgebra(const std::string& name) const;

	/// Extension term language: {"op":"identity"} | {"op":"barr","functor":F}
	/// | {"op":"hausdorff","w":"two"|"full"} | {"op":"kantorovich",
	/// "liftings":[names]} | {"op":"neigh-ext","kappa":n} | {"op":"dual",
	/// "arg":T} | {"op":"meet","args":[T...]}.
	LaxExtension parse_extension_term(const nlohmann::json& t) const;
	/// Functor reference: a workspace name or an inline grammar term.
	FinFunctor parse_functor_ref(const nlohmann::json& t) const;

private:
	std::map<std::string, nlohmann::json> functor_src_;
	std::map<std::string, nlohmann::json> extension_src_;
	std::map<std::string, nlohmann::json> lifting_src_;
	std::map<std::string, nlohmann::json> coalgebra_src_;
	std::map<std::string, std::string> vcat_src_;  // relation name backing each vcat
};

} // namespace laxrel
