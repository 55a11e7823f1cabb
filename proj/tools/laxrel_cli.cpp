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

// laxrel: batch front end for quantale-enriched relation algebra.
//
// Subcommands: laws | extend | kantorovich | moss | represent | distance |
// closure | extend-functor. Exit codes: 0 success, 1 law failure or
// mismatch, 2 input error, 3 cap exceeded.

#include <algorithm>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "laxrel/workspace.hpp"

using namespace laxrel;

namespace {

struct Common {
	std::string workspace;
	std::size_t cap = 0;
	int threads = 1;
	bool json = false;
};

void add_common(CLI::App* cmd, Common& c, bool need_ws = true) {
	auto* o = cmd->add_option("--workspace", c.workspace, "workspace JSON file");
	if (need_ws) o->required();
	cmd->add_option("--cap", c.cap, "override the enumeration size cap");
	cmd->add_option("--threads", c.threads, "worker threads for inner enumerations");
	cmd->add_flag("--json", c.json, "emit machine-readable JSON");
}

SamplePlan plan_for(const Workspace& ws) {
	SamplePlan plan = SamplePlan::standard();
	std::vector<std::string> names;
	for (const auto& [name, s] : ws.sets)
		if (s.size() <= 3) names.push_back(name);
	std::sort(names.begin(), names.end());
	if (names.size() > 4) names.resize(4);
	if (!names.empty()) {
		plan.sets.clear();
		plan.sets.push_back(FinSet("O", {}));
		for (const auto& n : names) plan.sets.push_back(ws.set(n));
	}
	return plan;
}

int emit_reports(const std::vector<LawReport>& reports, bool json) {
	bool ok = true;
	if (json) {
		nlohmann::json arr = nlohmann::json::array();
		for (const auto& r : reports) arr.push_back(r.to_json());
		std::cout << arr.dump(2) << "\n";
	} else {
		for (const auto& r : reports) std::cout << r.text();
	}
	for (const auto& r : reports) ok = ok && r.all_pass();
	return ok ? 0 : 1;
}

std::vector<std::string> split_list(const std::string& s) {
	std::vector<std::string> out;
	std::stringstream in(s);
	std::string item;
	while (std::getline(in, item, ','))
		if (!item.empty()) out.push_back(item);
	return out;
}

int cmd_laws(const Common& c, const std::vector<std::string>& targets) {
	Workspace ws = Workspace::load(c.workspace, c.cap);
	SamplePlan plan = plan_for(ws);
	std::vector<LawReport> reports;
	auto run_target = [&](const std::string& t) {
		if (t == "quantale") {
			reports.push_back(check_quantale_laws(*ws.quantale));
		} else if (ws.extensions.count(t)) {
			reports.push_back(check_lax_laws(ws.extension(t), plan));
			reports.push_back(check_enrichment(ws.extension(t), plan));
		} else if (ws.vcats.count(t)) {
			reports.push_back(check_vcat(ws.vcat(t)));
		} else if (ws.liftings.count(t)) {
			LawReport m = is_monotone(ws.lifting(t));
			m.subject = "lifting " + t + ": " + m.subject;
			reports.push_back(std::move(m));
			LawReport e = is_enriched(ws.lifting(t));
			e.subject = "lifting " + t + ": " + e.subject;
			e.checks.front().required = false;  // enrichment is optional structure
			reports.push_back(std::move(e));
		} else {
			throw InputError("laws target not found in workspace: " + t);
		}
	};
	if (!targets.empty()) {
		for (const auto& t : targets) run_target(t);
	} else {
		run_target("quantale");
		for (const auto& [name, _] : ws.vcats) run_target(name);
		for (const auto& [name, _] : ws.liftings) run_target(name);
		for (const auto& [name, _] : ws.extensions) run_target(name);
	}
	return emit_reports(reports, c.json);
}

int cmd_extend(const Common& c, const std::string& ext, const std::string& rel) {
	Workspace ws = Workspace::load(c.workspace, c.cap);
	VRel out = ws.extension(ext).apply(ws.relation(rel), c.threads);
	if (c.json)
		std::cout << out.to_json().dump(2) << "\n";
	else
		std::cout << out.pretty();
	return 0;
}

int cmd_kantorovich(const Common& c, const std::string& liftings, const std::string& rel) {
	Workspace ws = Workspace::load(c.workspace, c.cap);
	std::vector<PredicateLifting> M;
	for (const auto& name : split_list(liftings)) M.push_back(ws.lifting(name));
	if (M.empty()) throw InputError("kantorovich needs at least one lifting");
	LaxExtension E = LaxExtension::kantorovich(M.front().functor(), M);
	VRel out = E.apply(ws.relation(rel), c.threads);
	if (c.json)
		std::cout << out.to_json().dump(2) << "\n";
	else
		std::cout << out.pretty();
	return 0;
}

int cmd_moss(const Common& c, const std::string& ext, std::size_t kappa) {
	Workspace ws = Workspace::load(c.workspace, c.cap);
	const LaxExtension& E = ws.extension(ext);
	FinSet kset = FinSet::ordinal(kappa, "k" + std::to_string(kappa));
	FinSet Fk = E.functor().on_obj(kset);
	nlohmann::json arr = nlohmann::json::array();
	for (std::size_t e = 0; e < Fk.size(); ++e) {
		PredicateLifting mu = moss_lifting(E, e, kappa);
		if (c.json) {
			nlohmann::json obj = mu.to_json();
			obj["element"] = Fk.element(e);
			arr.push_back(std::move(obj));
		} else {
			std::cout << "moss lifting at " << Fk.element(e) << ":\n";
			std::cout << converse(mu.yoneda_rel()).pretty();
		}
	}
	if (c.json) std::cout << arr.dump(2) << "\n";
	return 0;
}

int cmd_represent(const Common& c, const std::string& ext, const std::string& rel) {
	Workspace ws = Workspace::load(c.workspace, c.cap);
	const LaxExtension& E = ws.extension(ext);
	const VRel& r = ws.relation(rel);
	const std::size_t kappa = r.tgt().size();
	FinSet kset = FinSet::ordinal(kappa, "k" + std::to_string(kappa));
	FinSet Fk = E.functor().on_obj(kset);

	VRel lhs = E.apply(r, c.threads);
	VRel rhs = VRel::top(E.quantale(), lhs.src(), lhs.tgt());
	for (std::size_t e = 0; e < Fk.size(); ++e) {
		LaxExtension Emu =
		    LaxExtension::kantorovich(E.functor(), {moss_lifting(E, e, kappa)});
		rhs = meet(rhs, Emu.apply(r, c.threads));
	}
	const bool equal = lhs == rhs;
	if (c.json) {
		nlohmann::json out = {{"kappa", kappa},
		                      {"moss_liftings", Fk.size()},
		                      {"represented", equal},
		                      {"extension", lhs.to_json()}};
		if (!equal) out["kantorovich_of_moss"] = rhs.to_json();
		std::cout << out.dump(2) << "\n";
	} else if (equal) {
		std::cout << "represented: E r equals the Kantorovich meet over all " << Fk.size()
		          << " Moss liftings of arity " << kappa << "\n";
	} else {
		std::cout << "MISMATCH: E r differs from the Kantorovich meet of its Moss liftings\n";
		std::cout << "E r:\n" << lhs.pretty();
		std::cout << "meet over Moss liftings:\n" << rhs.pretty();
	}
	return equal ? 0 : 1;
}

int cmd_distance(const Common& c, const std::string& ext, const std::string& coalg, bool steps,
                 std::size_t max_iter) {
	Workspace ws = Workspace::load(c.workspace, c.cap);
	const LaxExtension& E = ws.extension(ext);
	const Coalgebra& co = ws.coalgebra(coalg);
	SimResult res = sim_distance(E, co.map, steps, max_iter, c.threads);
	if (c.json) {
		nlohmann::json out = {{"distance", res.dist.to_json()},
		                      {"iterations", res.iterations},
		                      {"reflexive", res.reflexive},
		                      {"transitive", res.transitive}};
		if (steps) {
			nlohmann::json tr = nlohmann::json::array();
			for (const auto& t : res.trace) tr.push_back(t.to_json());
			out["trace"] = tr;
		}
		std::cout << out.dump(2) << "\n";
	} else {
		if (steps) {
			for (std::size_t i = 0; i < res.trace.size(); ++i)
				std::cout << "step " << i << ":\n" << res.trace[i].pretty();
		}
		std::cout << res.dist.pretty();
		std::cout << "iterations: " << res.iterations << "  reflexive: " << (res.reflexive ? "yes" : "no")
		          << "  transitive: " << (res.transitive ? "yes" : "no") << "\n";
	}
	return 0;
}

int cmd_closure(const Common& c, const std::string& vcat_name, const std::string& subset,
                const std::string& dense_map) {
	Workspace ws = Workspace::load(c.workspace, c.cap);
	const VCat& A = ws.vcat(vcat_name);
	nlohmann::json out;
	if (!subset.empty() || dense_map.empty()) {
		std::vector<std::uint32_t> M;
		for (const auto& name : split_list(subset))
			M.push_back(static_cast<std::uint32_t>(A.obj.index_of(name)));
		std::sort(M.begin(), M.end());
		auto cl = closure(A, M);
		std::vector<std::string> names;
		for (auto i : cl) names.push_back(A.obj.element(i));
		if (c.json)
			out["closure"] = names;
		else {
			std::cout << "closure:";
			for (const auto& n : names) std::cout << " " << n;
			std::cout << "\n";
		}
	}
	if (!dense_map.empty()) {
		bool dense = is_dense_map(ws.map_of(dense_map), A);
		if (c.json)
			out["dense"] = dense;
		else
			std::cout << "dense: " << (dense ? "yes" : "no") << "\n";
	}
	if (c.json) std::cout << out.dump(2) << "\n";
	return 0;
}

int cmd_extend_functor(const Common& c, const std::string& dom, const std::string& cod,
                       const std::string& emb, const std::string& phi_values) {
	Workspace ws = Workspace::load(c.workspace, c.cap);
	const VCat& A = ws.vcat(dom);
	const VCat& X = ws.vcat(cod);
	const auto& q = ws.quantale;
	VCat V = quantale_vcat(q);
	auto vals = split_list(phi_values);
	if (vals.size() != A.obj.size())
		throw InputError("--phi needs one value per element of " + A.obj.name());
	std::vector<std::uint32_t> img;
	for (const auto& v : vals) img.push_back(q->parse(v).index());
	VFunctor phi{A, V, FinMap(A.obj, V.obj, std::move(img))};
	VFunctor i{A, X, ws.map_of(emb)};
	VFunctor psi = extend_along_embedding(i, phi);

	bool extends = true;
	for (std::size_t z = 0; z < A.obj.size(); ++z)
		extends = extends && psi.map(i.map(z)) == phi.map(z);
	bool functor_ok = check_vfunctor(psi.map, X, V).all_pass();
	if (c.json) {
		std::vector<std::string> names;
		for (std::size_t x = 0; x < X.obj.size(); ++x)
			names.push_back(q->name(q->element(psi.map(x))));
		std::cout << nlohmann::json({{"psi", names},
		                             {"extends_phi", extends},
		                             {"vfunctor", functor_ok}})
		                 .dump(2)
		          << "\n";
	} else {
		for (std::size_t x = 0; x < X.obj.size(); ++x)
			std::cout << X.obj.element(x) << " |-> " << q->name(q->element(psi.map(x))) << "\n";
		std::cout << "extends phi: " << (extends ? "yes" : "no")
		          << "  vfunctor: " << (functor_ok ? "yes" : "no") << "\n";
	}
	return extends && functor_ok ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
	CLI::App app{"laxrel: lax extensions, predicate liftings and Kantorovich constructions "
	             "over commutative quantales"};
	app.require_subcommand(1);

	Common c_laws, c_extend, c_kant, c_moss, c_rep, c_dist, c_clo, c_ext;

	auto* laws = app.add_subcommand("laws", "run law suites and print verdicts with witnesses");
	std::vector<std::string> law_targets;
	std::string law_ext_file;
	add_common(laws, c_laws, false);
	laws->add_option("--target", law_targets, "quantale | extension | vcat | lifting name");
	laws->add_option("--extension", law_ext_file,
	                 "workspace file whose extensions are all law-checked");

	auto* extend = app.add_subcommand("extend", "apply an extension to a relation");
	std::string e_ext, e_rel;
	add_common(extend, c_extend);
	extend->add_option("--extension", e_ext, "extension name")->required();
	extend->add_option("--relation", e_rel, "relation name")->required();

	auto* kant = app.add_subcommand("kantorovich",
	                                "apply the Kantorovich extension of named liftings");
	std::string k_liftings, k_rel;
	add_common(kant, c_kant);
	kant->add_option("--liftings", k_liftings, "comma-separated lifting names")->required();
	kant->add_option("--relation", k_rel, "relation name")->required();

	auto* moss = app.add_subcommand("moss", "list the Moss liftings of an extension at arity k");
	std::string m_ext;
	std::size_t m_kappa = 1;
	add_common(moss, c_moss);
	moss->add_option("--extension", m_ext, "extension name")->required();
	moss->add_option("--kappa", m_kappa, "arity")->required();

	auto* rep = app.add_subcommand(
	    "represent", "check E r against the Kantorovich meet of its Moss liftings (k = |tgt r|)");
	std::string r_ext, r_rel;
	add_common(rep, c_rep);
	rep->add_option("--extension", r_ext, "extension name")->required();
	rep->add_option("--relation", r_rel, "relation name")->required();

	auto* dist = app.add_subcommand("distance",
	                                "greatest-fixpoint simulation distance of a coalgebra");
	std::string d_ext, d_coalg;
	bool d_steps = false;
	std::size_t d_max_iter = 1000;
	add_common(dist, c_dist);
	dist->add_option("--extension", d_ext, "extension name")->required();
	dist->add_option("--coalgebra", d_coalg, "coalgebra name")->required();
	dist->add_flag("--steps", d_steps, "print the iteration trace");
	dist->add_option("--max-iter", d_max_iter, "iteration bound for infinite carriers");

	auto* clo = app.add_subcommand("closure", "closure of a subset in a V-category");
	std::string c_vcat, c_subset, c_dense;
	add_common(clo, c_clo);
	clo->add_option("--vcat", c_vcat, "V-category name")->required();
	clo->add_option("--subset", c_subset, "comma-separated element names");
	clo->add_option("--dense-map", c_dense, "map name to test for density");

	auto* extf = app.add_subcommand("extend-functor",
	                                "extend phi: A -> V along a fully faithful embedding");
	std::string x_dom, x_cod, x_emb, x_phi;
	add_common(extf, c_ext);
	extf->add_option("--dom", x_dom, "domain V-category")->required();
	extf->add_option("--cod", x_cod, "codomain V-category")->required();
	extf->add_option("--embedding", x_emb, "map name A -> X")->required();
	extf->add_option("--phi", x_phi, "comma-separated quantale values on A")->required();

	CLI11_PARSE(app, argc, argv);

	try {
		if (laws->parsed()) {
			if (c_laws.workspace.empty()) c_laws.workspace = law_ext_file;
			if (c_laws.workspace.empty())
				throw InputError("laws needs --workspace or --extension FILE");
			return cmd_laws(c_laws, law_targets);
		}
		if (extend->parsed()) return cmd_extend(c_extend, e_ext, e_rel);
		if (kant->parsed()) return cmd_kantorovich(c_kant, k_liftings, k_rel);
		if (moss->parsed()) return cmd_moss(c_moss, m_ext, m_kappa);
		if (rep->parsed()) return cmd_represent(c_rep, r_ext, r_rel);
		if (dist->parsed()) return cmd_distance(c_dist, d_ext, d_coalg, d_steps, d_max_iter);
		if (clo->parsed()) return cmd_closure(c_clo, c_vcat, c_subset, c_dense);
		if (extf->parsed()) return cmd_extend_functor(c_ext, x_dom, x_cod, x_emb, x_phi);
	} catch (const CapError& e) {
		std::cerr << "cap exceeded: " << e.what() << "\n";
		return 3;
	} catch (const InputError& e) {
		std::cerr << "input error: " << e.what() << "\n";
		return 2;
	} catch (const Error& e) {
		std::cerr << "error: " << e.what() << "\n";
		return 2;
	}
	return 2;
}
