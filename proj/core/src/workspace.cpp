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

#include "laxrel/workspace.hpp"

#include <fstream>

namespace laxrel {
namespace {

template <typename M>
const typename M::mapped_type& lookup(const M& m, const std::string& name, const char* what) {
	auto it = m.find(name);
	if (it == m.end()) throw InputError(std::string("unknown ") + what + ": " + name);
	return it->second;
}

} // namespace

const FinSet& Workspace::set(const std::string& n) const { return lookup(sets, n, "set"); }
const FinMap& Workspace::map_of(const std::string& n) const { return lookup(maps, n, "map"); }
const VRel& Workspace::relation(const std::string& n) const {
	return lookup(relations, n, "relation");
}
const VCat& Workspace::vcat(const std::string& n) const { return lookup(vcats, n, "vcat"); }
const FinFunctor& Workspace::functor(const std::string& n) const {
	return lookup(functors, n, "functor");
}
const PredicateLifting& Workspace::lifting(const std::string& n) const {
	return lookup(liftings, n, "lifting");
}
const LaxExtension& Workspace::extension(const std::string& n) const {
	return lookup(extensions, n, "extension");
}
const Coalgebra& Workspace::coalgebra(const std::string& n) const {
	return lookup(coalgebras, n, "coalgebra");
}

FinFunctor Workspace::parse_functor_ref(const nlohmann::json& t) const {
	if (t.is_string()) return functor(t.get<std::string>());
	return FinFunctor(quantale, FunctorTerm::from_json(t), cap);
}

LaxExtension Workspace::parse_extension_term(const nlohmann::json& t) const {
	const std::string op = t.at("op").get<std::string>();
	if (op == "identity") return LaxExtension::identity(quantale, cap);
	if (op == "barr") return LaxExtension::barr(parse_functor_ref(t.at("functor")));
	if (op == "hausdorff") {
		const std::string w = t.value("w", "two");
		if (w == "two") return LaxExtension::hausdorff(quantale, LaxExtension::Subquantale::Two, cap);
		if (w == "full")
			return LaxExtension::hausdorff(quantale, LaxExtension::Subquantale::FullCarrier, cap);
		throw InputError("hausdorff subquantale must be 'two' or 'full'");
	}
	if (op == "kantorovich") {
		std::vector<PredicateLifting> M;
		for (const auto& name : t.at("liftings")) M.push_back(lifting(name.get<std::string>()));
		if (M.empty()) throw InputError("kantorovich term needs at least one lifting");
		FinFunctor F = M.front().functor();
		return LaxExtension::kantorovich(std::move(F), std::move(M));
	}
	if (op == "neigh-ext")
		return LaxExtension::neigh_ext(quantale, t.at("kappa").get<std::size_t>(), cap);
	if (op == "dual") return LaxExtension::dual_of(parse_extension_term(t.at("arg")));
	if (op == "meet") {
		std::vector<LaxExtension> es;
		for (const auto& a : t.at("args")) es.push_back(parse_extension_term(a));
		return LaxExtension::meet_of(std::move(es));
	}
	throw InputError("unknown extension op: " + op);
}

Workspace Workspace::from_json(const nlohmann::json& j, std::size_t cap_override) {
	Workspace ws;
	ws.quantale = Quantale::make(QuantaleSpec::from_json(j.at("quantale")));
	ws.cap = cap_override ? cap_override : j.value("cap", kDefaultCap);

	for (const auto& s : j.value("sets", nlohmann::json::array())) {
		const std::string name = s.at("name").get<std::string>();
		if (!ws.sets.emplace(name, FinSet(name, s.at("elements").get<std::vector<std::string>>()))
		         .second)
			throw InputError("duplicate set name: " + name);
	}
	for (const auto& s : j.value("maps", nlohmann::json::array())) {
		const std::string name = s.at("name").get<std::string>();
		const FinSet& src = ws.set(s.at("src").get<std::string>());
		const FinSet& tgt = ws.set(s.at("tgt").get<std::string>());
		auto images = s.at("assignment").get<std::vector<std::string>>();
		if (!ws.maps.emplace(name, FinMap::of_names(src, tgt, images)).second)
			throw InputError("duplicate map name: " + name);
	}
	for (const auto& s : j.value("relations", nlohmann::json::array())) {
		const std::string name = s.at("name").get<std::string>();
		const FinSet& src = ws.set(s.at("src").get<std::string>());
		const FinSet& tgt = ws.set(s.at("tgt").get<std::string>());
		if (!ws.relations.emplace(name, VRel::from_json(ws.quantale, src, tgt, s)).second)
			throw InputError("duplicate relation name: " + name);
	}
	for (const auto& s : j.value("vcats", nlohmann::json::array())) {
		const std::string name = s.at("name").get<std::string>();
		const FinSet& obj = ws.set(s.at("obj").get<std::string>());
		const auto& aref = s.at("a");
		VRel a = aref.is_string() ? ws.relation(aref.get<std::string>())
		                          : VRel::from_json(ws.quantale, obj, obj, aref);
		if (a.src() != obj || a.tgt() != obj)
			throw InputError("vcat structure of " + name + " is not an endo-relation on its objects");
		if (!ws.vcats.emplace(name, VCat{obj, std::move(a)}).second)
			throw InputError("duplicate vcat name: " + name);
		ws.vcat_src_[name] = aref.is_string() ? aref.get<std::string>() : "";
	}
	for (const auto& s : j.value("functors", nlohmann::json::array())) {
		const std::string name = s.at("name").get<std::string>();
		auto term = FunctorTerm::from_json(s.at("term"));
		if (!ws.functors.emplace(name, FinFunctor(ws.quantale, term, ws.cap)).second)
			throw InputError("duplicate functor name: " + name);
		ws.functor_src_[name] = s.at("term");
	}
	for (const auto& s : j.value("liftings", nlohmann::json::array())) {
		const std::string name = s.at("name").get<std::string>();
		PredicateLifting mu = [&]() {
			if (s.contains("builtin")) {
				const std::string b = s.at("builtin").get<std::string>();
				if (b == "identity") return builtin_identity(ws.quantale, ws.cap);
				const FinFunctor& F = ws.functor(s.at("functor").get<std::string>());
				if (b == "diamond") return builtin_diamond(F);
				if (b == "box") return builtin_box(F);
				if (b == "top") return builtin_top(F, s.value("kappa", std::size_t{1}));
				if (b == "bottom") return builtin_bottom(F, s.value("kappa", std::size_t{1}));
				throw InputError("unknown builtin lifting: " + b);
			}
			const FinFunctor& F = ws.functor(s.at("functor").get<std::string>());
			return PredicateLifting::from_json(F, s);
		}();
		if (!ws.liftings.emplace(name, std::move(mu)).second)
			throw InputError("duplicate lifting name: " + name);
		ws.lifting_src_[name] = s;
	}
	for (const auto& s : j.value("extensions", nlohmann::json::array())) {
		const std::string name = s.at("name").get<std::string>();
		if (!ws.extensions.emplace(name, ws.parse_extension_term(s.at("term"))).second)
			throw InputError("duplicate extension name: " + name);
		ws.extension_src_[name] = s.at("term");
	}
	for (const auto& s : j.value("coalgebras", nlohmann::json::array())) {
		const std::string name = s.at("name").get<std::string>();
		const FinFunctor& F = ws.functor(s.at("functor").get<std::string>());
		const FinSet& X = ws.set(s.at("carrier").get<std::string>());
		FinSet FX = F.on_obj(X);
		auto images = s.at("assignment").get<std::vector<std::string>>();
		FinMap c = FinMap::of_names(X, FX, images);
		if (!ws.coalgebras.emplace(name, Coalgebra{F, std::move(c)}).second)
			throw InputError("duplicate coalgebra name: " + name);
		ws.coalgebra_src_[name] = s;
	}
	return ws;
}

Workspace Workspace::load(const std::string& path, std::size_t cap_override) {
	std::ifstream in(path);
	if (!in) throw InputError("cannot open workspace file: " + path);
	nlohmann::json j;
	try {
		in >> j;
	} catch (const nlohmann::json::exception& e) {
		throw InputError("workspace is not valid JSON: " + std::string(e.what()));
	}
	return from_json(j, cap_override);
}

nlohmann::json Workspace::to_json() const {
	nlohmann::json j;
	j["quantale"] = quantale->spec().to_json();
	j["cap"] = cap;
	auto arr = nlohmann::json::array();
	for (const auto& [name, s] : sets)
		arr.push_back({{"name", name}, {"elements", s.elements()}});
	j["sets"] = arr;
	arr = nlohmann::json::array();
	for (const auto& [name, f] : maps) {
		std::vector<std::string> images;
		for (std::size_t i = 0; i < f.src().size(); ++i) images.push_back(f.tgt().element(f(i)));
		arr.push_back({{"name", name},
		               {"src", f.src().name()},
		               {"tgt", f.tgt().name()},
		               {"assignment", images}});
	}
	j["maps"] = arr;
	arr = nlohmann::json::array();
	for (const auto& [name, r] : relations) {
		nlohmann::json obj = r.to_json();
		obj["name"] = name;
		arr.push_back(std::move(obj));
	}
	j["relations"] = arr;
	arr = nlohmann::json::array();
	for (const auto& [name, c] : vcats) {
		const std::string& backing = vcat_src_.at(name);
		nlohmann::json obj = {{"name", name}, {"obj", c.obj.name()}};
		if (!backing.empty())
			obj["a"] = backing;
		else
			obj["a"] = c.a.to_json();
		arr.push_back(std::move(obj));
	}
	j["vcats"] = arr;
	arr = nlohmann::json::array();
	for (const auto& [name, src] : functor_src_) arr.push_back({{"name", name}, {"term", src}});
	j["functors"] = arr;
	arr = nlohmann::json::array();
	for (const auto& [name, src] : lifting_src_) arr.push_back(src);
	j["liftings"] = arr;
	arr = nlohmann::json::array();
	for (const auto& [name, src] : extension_src_) arr.push_back({{"name", name}, {"term", src}});
	j["extensions"] = arr;
	arr = nlohmann::json::array();
	for (const auto& [name, src] : coalgebra_src_) arr.push_back(src);
	j["coalgebras"] = arr;
	return j;
}

} // namespace laxrel
