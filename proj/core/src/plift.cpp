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

#include "laxrel/plift.hpp"

#include <algorithm>

#include "laxrel/laxext.hpp"

namespace laxrel {
namespace {

const FinSet& one() {
	static const FinSet s("1", {"*"});
	return s;
}

// f^sharp as indices into V^kappa, without materializing tuple names.
std::vector<std::uint32_t> sharp_indices(const VRel& f) {
	const auto& q = f.quantale();
	std::vector<std::uint32_t> out(f.rows());
	std::vector<Value> row(f.cols());
	for (std::size_t x = 0; x < f.rows(); ++x) {
		for (std::size_t y = 0; y < f.cols(); ++y) row[y] = f.at(x, y);
		out[x] = static_cast<std::uint32_t>(power_index(q, row));
	}
	return out;
}

} // namespace

FinSet unit_set() { return one(); }

PredicateLifting::PredicateLifting(FinFunctor F, std::size_t kappa, std::vector<Value> yoneda)
    : F_(std::move(F)), kappa_(FinSet::ordinal(kappa, "k" + std::to_string(kappa))),
      power_(power_set(F_.quantale(), kappa_, F_.cap())), fpower_(F_.on_obj(power_)),
      yoneda_(std::move(yoneda)) {
	if (yoneda_.size() != fpower_.size())
		throw InputError("yoneda table has " + std::to_string(yoneda_.size()) +
		                 " entries, expected " + std::to_string(fpower_.size()));
}

VRel PredicateLifting::eval(const VRel& f) const {
	if (f.cols() != kappa_.size())
		throw InputError("lifting of arity " + std::to_string(kappa_.size()) +
		                 " applied to a relation into a set of size " + std::to_string(f.cols()));
	const auto& q = F_.quantale();
	FinMap fs(f.src(), power_, sharp_indices(f));
	FinMap Ffs = F_.on_map(fs);
	std::vector<Value> e(Ffs.src().size(), q->bottom());
	for (std::size_t x = 0; x < e.size(); ++x) e[x] = yoneda_[Ffs(x)];
	return VRel(q, Ffs.src(), one(), std::move(e));
}

VRel PredicateLifting::yoneda_rel() const {
	return VRel(F_.quantale(), fpower_, one(), yoneda_);
}

nlohmann::json PredicateLifting::to_json() const {
	const auto& q = F_.quantale();
	nlohmann::json tab = nlohmann::json::object();
	for (std::size_t i = 0; i < fpower_.size(); ++i)
		tab[fpower_.element(i)] = q->value_to_json(yoneda_[i]);
	return {{"functor", F_.term()->to_json()}, {"kappa", kappa_.size()}, {"yoneda", tab}};
}

PredicateLifting PredicateLifting::from_json(const FinFunctor& F, const nlohmann::json& j) {
	const std::size_t kappa = j.at("kappa").get<std::size_t>();
	FinSet kset = FinSet::ordinal(kappa, "k" + std::to_string(kappa));
	FinSet power = power_set(F.quantale(), kset, F.cap());
	FinSet fpower = F.on_obj(power);
	const auto& tab = j.at("yoneda");
	std::vector<Value> yoneda(fpower.size(), F.quantale()->bottom());
	for (std::size_t i = 0; i < fpower.size(); ++i) {
		if (!tab.contains(fpower.element(i)))
			throw InputError("yoneda table misses element " + fpower.element(i));
		yoneda[i] = F.quantale()->value_from_json(tab.at(fpower.element(i)));
	}
	return PredicateLifting(F, kappa, std::move(yoneda));
}

PredicateLifting make_lifting(FinFunctor F, std::size_t kappa, std::vector<Value> yoneda) {
	return PredicateLifting(std::move(F), kappa, std::move(yoneda));
}

PredicateLifting builtin_diamond(const FinFunctor& F) {
	const auto& q = F.quantale();
	if (!q->finite()) throw InputError("diamond lifting needs a finite carrier");
	const std::size_t m = q->size();
	if (F.term()->op == FunctorTerm::Op::Pow) {
		// yoneda({h_1,...}) = \/ h_i(0)
		const std::size_t n = std::size_t{1} << m;
		if (n > F.cap()) throw CapError("diamond: P(V^1) exceeds the cap");
		std::vector<Value> yoneda(n, q->bottom());
		for (std::size_t mask = 0; mask < n; ++mask) {
			Value acc = q->bottom();
			for (std::size_t h = 0; h < m; ++h)
				if (mask & (std::size_t{1} << h)) acc = q->join(acc, q->element(h));
			yoneda[mask] = acc;
		}
		return PredicateLifting(F, 1, std::move(yoneda));
	}
	if (F.term()->op == FunctorTerm::Op::VPow) {
		// yoneda(Phi) = \/_h Phi(h) (x) h(0)
		std::size_t n = 1;
		for (std::size_t i = 0; i < m; ++i) {
			if (n > F.cap() / m) throw CapError("diamond: V^(V^1) exceeds the cap");
			n *= m;
		}
		std::vector<Value> yoneda(n, q->bottom());
		for (std::size_t p = 0; p < n; ++p) {
			Value acc = q->bottom();
			for (std::size_t h = 0; h < m; ++h)
				acc = q->join(acc, q->tensor(power_coord(q, p, h, m), q->element(h)));
			yoneda[p] = acc;
		}
		return PredicateLifting(F, 1, std::move(yoneda));
	}
	throw InputError("diamond lifting is defined for pow and vpow functors");
}

PredicateLifting builtin_box(const FinFunctor& F) {
	const auto& q = F.quantale();
	if (!q->finite()) throw InputError("box lifting needs a finite carrier");
	if (F.term()->op != FunctorTerm::Op::Pow)
		throw InputError("box lifting is defined for the pow functor");
	const std::size_t m = q->size();
	const std::size_t n = std::size_t{1} << m;
	if (n > F.cap()) throw CapError("box: P(V^1) exceeds the cap");
	std::vector<Value> yoneda(n, q->top());
	for (std::size_t mask = 0; mask < n; ++mask) {
		Value acc = q->top();
		for (std::size_t h = 0; h < m; ++h)
			if (mask & (std::size_t{1} << h)) acc = q->meet(acc, q->element(h));
		yoneda[mask] = acc;
	}
	return PredicateLifting(F, 1, std::move(yoneda));
}

PredicateLifting builtin_identity(const QuantalePtr& q, std::size_t cap) {
	if (!q->finite()) throw InputError("identity lifting needs a finite carrier");
	FinFunctor Id(q, FunctorTerm::identity(), cap);
	std::vector<Value> yoneda(q->size(), q->bottom());
	for (std::size_t h = 0; h < q->size(); ++h) yoneda[h] = q->element(h);
	return PredicateLifting(std::move(Id), 1, std::move(yoneda));
}

PredicateLifting builtin_top(const FinFunctor& F, std::size_t kappa) {
	const auto& q = F.quantale();
	FinSet kset = FinSet::ordinal(kappa, "k" + std::to_string(kappa));
	FinSet fpower = F.on_obj(power_set(q, kset, F.cap()));
	return PredicateLifting(F, kappa, std::vector<Value>(fpower.size(), q->top()));
}

PredicateLifting builtin_bottom(const FinFunctor& F, std::size_t kappa) {
	const auto& q = F.quantale();
	FinSet kset = FinSet::ordinal(kappa, "k" + std::to_string(kappa));
	FinSet fpower = F.on_obj(power_set(q, kset, F.cap()));
	return PredicateLifting(F, kappa, std::vector<Value>(fpower.size(), q->bottom()));
}

namespace {

std::vector<FinSet> sample_sets(std::size_t bound) {
	static const char* const names[] = {"p", "q", "u", "w"};
	std::vector<FinSet> out;
	for (std::size_t n = 0; n <= bound && n <= 4; ++n) {
		std::vector<std::string> elems;
		for (std::size_t i = 0; i < n; ++i) elems.push_back(names[i]);
		out.push_back(FinSet("S" + std::to_string(n), std::move(elems)));
	}
	return out;
}

} // namespace

LawReport is_monotone(const PredicateLifting& mu, std::size_t bound,
                      std::size_t exhaustive_limit, std::uint64_t seed) {
	LawReport rep;
	rep.subject = "monotonicity of lifting (arity " + std::to_string(mu.arity()) + ")";
	SamplePlan plan;
	plan.sets = sample_sets(bound);
	plan.exhaustive_limit = exhaustive_limit;
	plan.seed = seed;
	const auto& q = mu.quantale();
	bool ok = true;
	std::string w;
	for (const auto& X : plan.sets) {
		auto fs = plan_relations(q, X, mu.kappa(), plan);
		std::vector<VRel> vals;
		vals.reserve(fs.size());
		for (const auto& f : fs) vals.push_back(mu.eval(f));
		for (std::size_t i = 0; i < fs.size() && ok; ++i)
			for (std::size_t j = 0; j < fs.size() && ok; ++j)
				if (leq(fs[i], fs[j]) && !leq(vals[i], vals[j])) {
					ok = false;
					w = "X=" + X.name() + " f<=f' but mu(f)</=mu(f')";
				}
		if (!ok) break;
	}
	rep.add("monotone-components", ok, w);
	return rep;
}

LawReport is_enriched(const PredicateLifting& mu, std::size_t bound,
                      std::size_t exhaustive_limit, std::uint64_t seed) {
	LawReport rep;
	rep.subject = "enrichment of lifting (arity " + std::to_string(mu.arity()) + ")";
	SamplePlan plan;
	plan.sets = sample_sets(bound);
	plan.exhaustive_limit = exhaustive_limit;
	plan.seed = seed;
	const auto& q = mu.quantale();
	bool ok = true;
	std::string w;
	for (const auto& X : plan.sets) {
		auto fs = plan_relations(q, X, mu.kappa(), plan);
		std::vector<VRel> vals;
		vals.reserve(fs.size());
		for (const auto& f : fs) vals.push_back(mu.eval(f));
		for (std::size_t i = 0; i < fs.size() && ok; ++i)
			for (std::size_t j = 0; j < fs.size() && ok; ++j)
				if (!q->leq(rel_dist(fs[i], fs[j]), rel_dist(vals[i], vals[j]))) {
					ok = false;
					w = "X=" + X.name() + " [f,f'] </= [mu(f),mu(f')]";
				}
		if (!ok) break;
	}
	rep.add("enriched-components", ok, w);
	return rep;
}

FinMap TransposedLifting::at(const FinSet& X) const {
	const auto& q = mu.quantale();
	NeighSpace N = neigh_space(q, mu.arity(), X, mu.functor().cap());
	FinSet FX = mu.functor().on_obj(X);
	const std::size_t d = N.domain.count();
	std::vector<VRel> vals;
	vals.reserve(d);
	for (std::size_t g = 0; g < d; ++g) vals.push_back(mu.eval(N.domain.at(g)));
	std::vector<std::uint32_t> img(FX.size());
	std::vector<Value> table(d, q->bottom());
	for (std::size_t x = 0; x < FX.size(); ++x) {
		for (std::size_t g = 0; g < d; ++g) table[g] = vals[g].at(x, 0);
		img[x] = static_cast<std::uint32_t>(N.index_of_table(table));
	}
	return FinMap(FX, N.set, std::move(img));
}

NatTrans TransposedLifting::as_nat_trans() const {
	FinFunctor tgt(mu.quantale(), FunctorTerm::neigh(mu.arity()), mu.functor().cap());
	TransposedLifting self = *this;
	return NatTrans{mu.functor(), std::move(tgt),
	                [self](const FinSet& X) { return self.at(X); }};
}

TransposedLifting transpose(const PredicateLifting& mu) { return TransposedLifting{mu}; }

bool is_separating(const FinFunctor& F, std::span<const PredicateLifting> M, const FinSet& X) {
	const auto& q = F.quantale();
	for (const auto& mu : M)
		if (!(mu.functor() == F)) throw InputError("separating class must share one functor");
	FinSet FX = F.on_obj(X);
	const std::size_t n = FX.size();
	if (n <= 1) return true;
	std::vector<std::vector<bool>> distinct(n, std::vector<bool>(n, false));
	std::size_t missing = n * (n - 1) / 2;
	for (const auto& mu : M) {
		RelSpace gs(q, X, mu.kappa(), F.cap());
		for (std::size_t g = 0; g < gs.count() && missing > 0; ++g) {
			VRel val = mu.eval(gs.at(g));
			for (std::size_t x = 0; x < n; ++x)
				for (std::size_t y = x + 1; y < n; ++y)
					if (!distinct[x][y] && !(val.at(x, 0) == val.at(y, 0))) {
						distinct[x][y] = true;
						--missing;
					}
		}
		if (missing == 0) return true;
	}
	return missing == 0;
}

PredicateLifting pushforward(const NatTrans& i, const PredicateLifting& mu) {
	if (!(i.tgt == mu.functor()))
		throw InputError("pushforward: transformation does not land in the lifting's functor");
	FinMap comp = i.at(mu.power());
	if (comp.tgt() != mu.fpower())
		throw InputError("pushforward: component at V^kappa has the wrong target");
	std::vector<Value> yoneda(comp.src().size(), mu.quantale()->bottom());
	for (std::size_t u = 0; u < yoneda.size(); ++u) yoneda[u] = mu.yoneda()[comp(u)];
	return PredicateLifting(i.src, mu.arity(), std::move(yoneda));
}

PredicateLifting moss_lifting(const LaxExtension& E, std::size_t elem, std::size_t kappa) {
	const auto& q = E.quantale();
	if (!q->finite()) throw InputError("Moss liftings need a finite carrier");
	const FinFunctor& F = E.functor();
	FinSet kset = FinSet::ordinal(kappa, "k" + std::to_string(kappa));
	FinSet Fk = F.on_obj(kset);
	if (elem >= Fk.size())
		throw InputError("element index " + std::to_string(elem) + " out of range for " +
		                 Fk.name());
	VRel ev = eval_rel(q, kset, E.cap());
	VRel Eev = E.apply(ev);
	std::vector<Value> yoneda(Eev.rows(), q->bottom());
	for (std::size_t y = 0; y < Eev.rows(); ++y) yoneda[y] = Eev.at(y, elem);
	PredicateLifting mu(F, kappa, std::move(yoneda));

	// mu(f) must coincide with k° . E f; spot-check the equivalent route
	SamplePlan plan;
	plan.sets = sample_sets(1);
	plan.samples_per_homset = 8;
	for (const auto& X : plan.sets) {
		for (const auto& f : plan_relations(q, X, kset, plan)) {
			VRel lhs = mu.eval(f);
			VRel Ef = E.apply(f);
			bool same = true;
			for (std::size_t x = 0; x < lhs.rows() && same; ++x)
				same = lhs.at(x, 0) == Ef.at(x, elem);
			if (!same)
				throw InputError("rule is not strict-compositional: the two Moss-lifting routes "
				                 "disagree at " +
				                 Fk.element(elem));
		}
	}
	return mu;
}

InducedResult is_induced_by(const PredicateLifting& mu, const LaxExtension& E) {
	const auto& q = E.quantale();
	FinSet kset = mu.kappa();
	VRel ev = eval_rel(q, kset, E.cap());
	VRel mu_ev = mu.eval(ev);
	VRel mu_one = mu.eval(VRel::identity(q, kset));
	VRel Eev = E.apply(ev);

	const bool via_identity = mu_ev == compose(mu_one, Eev);
	VRel cert = ext(mu_ev, Eev);
	const bool via_fixpoint = mu_ev == compose(cert, Eev);
	if (via_identity != via_fixpoint)
		throw Error("induced-lifting criteria disagree; this is a library bug");
	return InducedResult{via_identity, std::move(cert)};
}

PredicateLifting least_induced(const LaxExtension& E, std::size_t kappa) {
	const auto& q = E.quantale();
	FinSet kset = FinSet::ordinal(kappa, "k" + std::to_string(kappa));
	VRel Eev = E.apply(eval_rel(q, kset, E.cap()));
	VRel r = VRel::bottom(q, E.functor().on_obj(kset), unit_set());
	VRel yoneda = compose(r, Eev);
	std::vector<Value> tab(yoneda.rows(), q->bottom());
	for (std::size_t i = 0; i < tab.size(); ++i) tab[i] = yoneda.at(i, 0);
	return PredicateLifting(E.functor(), kappa, std::move(tab));
}

PredicateLifting greatest_induced(const LaxExtension& E, std::size_t kappa) {
	const auto& q = E.quantale();
	FinSet kset = FinSet::ordinal(kappa, "k" + std::to_string(kappa));
	VRel Eev = E.apply(eval_rel(q, kset, E.cap()));
	VRel r = VRel::top(q, E.functor().on_obj(kset), unit_set());
	VRel yoneda = compose(r, Eev);
	std::vector<Value> tab(yoneda.rows(), q->bottom());
	for (std::size_t i = 0; i < tab.size(); ++i) tab[i] = yoneda.at(i, 0);
	return PredicateLifting(E.functor(), kappa, std::move(tab));
}

bool prop_op_power_factorisation(const LaxExtension& E, const PredicateLifting& mu) {
	const auto& q = E.quantale();
	FinSet kset = mu.kappa();
	VRel lhs = mu.eval(eval_rel(q, kset, E.cap()));
	VRel h = power_vcat_op_structure(q, kset, E.cap());
	VRel Eh = E.apply(h);
	FinMap sharp = curry(VRel::identity(q, kset), E.cap());
	FinMap rebased(kset, mu.power(), sharp.assignment());
	FinMap Fsharp = E.functor().on_map(rebased);
	VRel mu_one = mu.eval(VRel::identity(q, kset));
	VRel rhs = compose(mu_one, compose(converse(graph(q, Fsharp)), Eh));
	return lhs == rhs;
}

} // namespace laxrel
