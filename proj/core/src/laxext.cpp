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

#include "laxrel/laxext.hpp"

#include <algorithm>
#include <atomic>
#include <random>
#include <thread>

namespace laxrel {

struct LaxExtension::Impl {
	Kind kind = Kind::Identity;
	QuantalePtr q;
	FinFunctor F;
	std::size_t cap = kDefaultCap;

	Subquantale w = Subquantale::Two;            // Hausdorff
	std::vector<PredicateLifting> liftings;      // Kantorovich
	std::size_t kappa = 1;                       // NeighExt
	std::shared_ptr<const Impl> inner;           // Dual
	std::vector<LaxExtension> members;           // Meet / Initial
	std::vector<NatTrans> alphas;                // Initial
	std::string name;                            // UserRule
	std::function<VRel(const VRel&)> rule;       // UserRule
};

namespace {

using Impl = LaxExtension::Impl;

bool all_bottom(const VRel& r) {
	const auto& q = r.quantale();
	for (std::size_t x = 0; x < r.rows(); ++x)
		for (std::size_t y = 0; y < r.cols(); ++y)
			if (!(r.at(x, y) == q->bottom())) return false;
	return true;
}

VRel kantorovich_single(const PredicateLifting& mu, const VRel& r, const FinSet& FX,
                        const FinSet& FY, std::size_t cap, int threads) {
	const auto& q = r.quantale();
	RelSpace gs(q, r.tgt(), mu.kappa(), cap);
	auto fold_range = [&](std::size_t lo, std::size_t hi, std::atomic<bool>* stop) {
		VRel acc = VRel::top(q, FX, FY);
		for (std::size_t g = lo; g < hi; ++g) {
			if (stop && stop->load(std::memory_order_relaxed)) break;
			VRel grel = gs.at(g);
			VRel mg = mu.eval(grel);
			VRel mgr = mu.eval(compose(grel, r));
			acc = meet(acc, lift(mg, mgr));
			if (all_bottom(acc)) {
				if (stop) stop->store(true, std::memory_order_relaxed);
				break;
			}
		}
		return acc;
	};
	const std::size_t n = gs.count();
	if (threads <= 1 || n < 64) return fold_range(0, n, nullptr);
	const std::size_t t = std::min<std::size_t>(static_cast<std::size_t>(threads), n);
	std::vector<VRel> parts(t, VRel::top(q, FX, FY));
	std::atomic<bool> stop{false};
	std::vector<std::thread> workers;
	for (std::size_t i = 0; i < t; ++i) {
		const std::size_t lo = n * i / t, hi = n * (i + 1) / t;
		workers.emplace_back([&, i, lo, hi] { parts[i] = fold_range(lo, hi, &stop); });
	}
	for (auto& th : workers) th.join();
	// meets are associative and commutative, so the partition is invisible
	VRel acc = VRel::top(q, FX, FY);
	for (const auto& p : parts) acc = meet(acc, p);
	return acc;
}

VRel apply_impl(const Impl& im, const VRel& r, int threads);

VRel apply_barr(const Impl& im, const VRel& r) {
	const auto& q = im.q;
	std::vector<std::string> pairs;
	std::vector<std::uint32_t> p1v, p2v;
	for (std::size_t x = 0; x < r.rows(); ++x)
		for (std::size_t y = 0; y < r.cols(); ++y)
			if (r.at(x, y) == q->top()) {
				pairs.push_back("(" + r.src().element(x) + "," + r.tgt().element(y) + ")");
				p1v.push_back(static_cast<std::uint32_t>(x));
				p2v.push_back(static_cast<std::uint32_t>(y));
			}
	FinSet R("R", std::move(pairs));
	FinMap p1(R, r.src(), std::move(p1v));
	FinMap p2(R, r.tgt(), std::move(p2v));
	FinMap Fp1 = im.F.on_map(p1);
	FinMap Fp2 = im.F.on_map(p2);
	const FinSet& FX = Fp1.tgt();
	const FinSet& FY = Fp2.tgt();
	std::vector<Value> e(FX.size() * FY.size(), q->bottom());
	for (std::size_t z = 0; z < Fp1.src().size(); ++z)
		e[Fp1(z) * FY.size() + Fp2(z)] = q->top();
	return VRel(q, FX, FY, std::move(e));
}

VRel apply_hausdorff(const Impl& im, const VRel& r) {
	const auto& q = im.q;
	FinSet FX = im.F.on_obj(r.src());
	FinSet FY = im.F.on_obj(r.tgt());
	std::vector<Value> e(FX.size() * FY.size(), q->top());
	if (im.w == LaxExtension::Subquantale::Two) {
		for (std::size_t A = 0; A < FX.size(); ++A)
			for (std::size_t B = 0; B < FY.size(); ++B) {
				Value acc = q->top();
				for (std::size_t b = 0; b < r.cols(); ++b) {
					if (!(B & (std::size_t{1} << b))) continue;
					Value best = q->bottom();
					for (std::size_t a = 0; a < r.rows(); ++a)
						if (A & (std::size_t{1} << a)) best = q->join(best, r.at(a, b));
					acc = q->meet(acc, best);
				}
				e[A * FY.size() + B] = acc;
			}
	} else {
		const std::size_t nx = r.rows(), ny = r.cols();
		for (std::size_t P = 0; P < FX.size(); ++P)
			for (std::size_t S = 0; S < FY.size(); ++S) {
				Value acc = q->top();
				for (std::size_t b = 0; b < ny; ++b) {
					Value best = q->bottom();
					for (std::size_t a = 0; a < nx; ++a)
						best = q->join(best, q->tensor(r.at(a, b), power_coord(q, P, a, nx)));
					acc = q->meet(acc, q->hom(power_coord(q, S, b, ny), best));
				}
				e[P * FY.size() + S] = acc;
			}
	}
	return VRel(q, FX, FY, std::move(e));
}

VRel apply_neigh(const Impl& im, const VRel& r) {
	const auto& q = im.q;
	NeighSpace NX = neigh_space(q, im.kappa, r.src(), im.cap);
	NeighSpace NY = neigh_space(q, im.kappa, r.tgt(), im.cap);
	std::vector<Value> e(NX.set.size() * NY.set.size(), q->top());
	std::vector<std::size_t> gr_idx(NY.domain.count());
	for (std::size_t g = 0; g < NY.domain.count(); ++g)
		gr_idx[g] = NX.domain.index_of(compose(NY.domain.at(g), r));
	for (std::size_t p = 0; p < NX.set.size(); ++p)
		for (std::size_t s = 0; s < NY.set.size(); ++s) {
			Value acc = q->top();
			for (std::size_t g = 0; g < NY.domain.count(); ++g)
				acc = q->meet(acc, q->hom(NY.tables[s][g], NX.tables[p][gr_idx[g]]));
			e[p * NY.set.size() + s] = acc;
		}
	return VRel(q, NX.set, NY.set, std::move(e));
}

VRel apply_impl(const Impl& im, const VRel& r, int threads) {
	if (!r.quantale()->same_as(*im.q))
		throw InputError("relation quantale does not match the extension");
	switch (im.kind) {
	case LaxExtension::Kind::Identity: return r;
	case LaxExtension::Kind::Barr: return apply_barr(im, r);
	case LaxExtension::Kind::Hausdorff: return apply_hausdorff(im, r);
	case LaxExtension::Kind::Kantorovich: {
		FinSet FX = im.F.on_obj(r.src());
		FinSet FY = im.F.on_obj(r.tgt());
		VRel acc = VRel::top(im.q, FX, FY);
		for (const auto& mu : im.liftings) {
			acc = meet(acc, kantorovich_single(mu, r, FX, FY, im.cap, threads));
			if (all_bottom(acc)) break;
		}
		return acc;
	}
	case LaxExtension::Kind::NeighExt: return apply_neigh(im, r);
	case LaxExtension::Kind::Dual: return converse(apply_impl(*im.inner, converse(r), threads));
	case LaxExtension::Kind::Meet: {
		VRel acc = im.members.front().apply(r, threads);
		for (std::size_t i = 1; i < im.members.size(); ++i)
			acc = meet(acc, im.members[i].apply(r, threads));
		return acc;
	}
	case LaxExtension::Kind::Initial: {
		FinSet GX = im.F.on_obj(r.src());
		FinSet GY = im.F.on_obj(r.tgt());
		VRel acc = VRel::top(im.q, GX, GY);
		for (std::size_t i = 0; i < im.members.size(); ++i) {
			VRel Er = im.members[i].apply(r, threads);
			FinMap ax = im.alphas[i].at(r.src());
			FinMap ay = im.alphas[i].at(r.tgt());
			std::vector<Value> e(GX.size() * GY.size(), im.q->bottom());
			for (std::size_t u = 0; u < GX.size(); ++u)
				for (std::size_t v = 0; v < GY.size(); ++v) e[u * GY.size() + v] = Er.at(ax(u), ay(v));
			acc = meet(acc, VRel(im.q, GX, GY, std::move(e)));
		}
		return acc;
	}
	case LaxExtension::Kind::UserRule: {
		VRel out = im.rule(r);
		if (out.src() != im.F.on_obj(r.src()) || out.tgt() != im.F.on_obj(r.tgt()))
			throw InputError("user rule returned a relation of the wrong shape");
		return out;
	}
	}
	throw InputError("unknown extension kind");
}

std::shared_ptr<Impl> base_impl(LaxExtension::Kind kind, QuantalePtr q, FinFunctor F,
                                std::size_t cap) {
	auto im = std::make_shared<Impl>();
	im->kind = kind;
	im->q = std::move(q);
	im->F = std::move(F);
	im->cap = cap;
	return im;
}

LaxExtension wrap(std::shared_ptr<const Impl> im) { return LaxExtension(std::move(im)); }

} // namespace

LaxExtension LaxExtension::identity(QuantalePtr q, std::size_t cap) {
	FinFunctor Id(q, FunctorTerm::identity(), cap);
	return wrap(base_impl(Kind::Identity, std::move(q), std::move(Id), cap));
}

LaxExtension LaxExtension::barr(FinFunctor F) {
	if (F.quantale()->kind() != QuantaleKind::Boolean)
		throw InputError("the Barr extension is implemented for the boolean quantale only");
	auto q = F.quantale();
	const std::size_t cap = F.cap();
	return wrap(base_impl(Kind::Barr, std::move(q), std::move(F), cap));
}

LaxExtension LaxExtension::hausdorff(QuantalePtr q, Subquantale w, std::size_t cap) {
	if (w == Subquantale::FullCarrier && !q->finite())
		throw InputError("the full-carrier Hausdorff extension needs a finite carrier");
	FinFunctor F(q, w == Subquantale::Two ? FunctorTerm::pow() : FunctorTerm::vpow(), cap);
	auto im = base_impl(Kind::Hausdorff, std::move(q), std::move(F), cap);
	im->w = w;
	return wrap(std::move(im));
}

LaxExtension LaxExtension::kantorovich(FinFunctor F, std::vector<PredicateLifting> M) {
	auto q = F.quantale();
	if (!q->finite())
		throw InputError("the Kantorovich extension enumerates V-relations and needs a finite "
		                 "carrier");
	for (const auto& mu : M) {
		if (!(mu.functor() == F))
			throw InputError("Kantorovich lifting does not belong to the stated functor");
		if (!is_monotone(mu).all_pass())
			throw InputError("Kantorovich extension requires monotone liftings");
	}
	auto im = base_impl(Kind::Kantorovich, std::move(q), F, F.cap());
	im->liftings = std::move(M);
	return wrap(std::move(im));
}

LaxExtension LaxExtension::neigh_ext(QuantalePtr q, std::size_t kappa, std::size_t cap) {
	if (!q->finite()) throw InputError("the neighbourhood extension needs a finite carrier");
	FinFunctor F(q, FunctorTerm::neigh(kappa), cap);
	auto im = base_impl(Kind::NeighExt, std::move(q), std::move(F), cap);
	im->kappa = kappa;
	return wrap(std::move(im));
}

LaxExtension LaxExtension::dual_of(LaxExtension e) {
	auto im = base_impl(Kind::Dual, e.quantale(), e.functor(), e.cap());
	im->inner = e.impl_;
	return wrap(std::move(im));
}

LaxExtension LaxExtension::meet_of(std::vector<LaxExtension> es) {
	if (es.empty()) throw InputError("meet of extensions needs at least one member");
	for (std::size_t i = 1; i < es.size(); ++i) {
		if (!(es[i].functor() == es[0].functor()))
			throw InputError("meet of extensions of different functors");
		if (!es[i].quantale()->same_as(*es[0].quantale()))
			throw InputError("meet of extensions over different quantales");
	}
	auto im = base_impl(Kind::Meet, es[0].quantale(), es[0].functor(), es[0].cap());
	im->members = std::move(es);
	return wrap(std::move(im));
}

LaxExtension LaxExtension::symmetrise(const LaxExtension& e) {
	return meet_of({e, dual_of(e)});
}

LaxExtension LaxExtension::initial(std::vector<NatTrans> alphas,
                                   std::vector<LaxExtension> inner) {
	if (alphas.empty() || alphas.size() != inner.size())
		throw InputError("initial extension needs matching transformations and extensions");
	for (std::size_t i = 0; i < alphas.size(); ++i) {
		if (!(alphas[i].src == alphas[0].src))
			throw InputError("initial extension: transformations start at different functors");
		if (!(alphas[i].tgt == inner[i].functor()))
			throw InputError("initial extension: transformation does not land in the extension's "
			                 "functor");
	}
	auto im =
	    base_impl(Kind::Initial, inner[0].quantale(), alphas[0].src, inner[0].cap());
	im->alphas = std::move(alphas);
	im->members = std::move(inner);
	return wrap(std::move(im));
}

LaxExtension LaxExtension::user_rule(FinFunctor F, std::string name,
                                     std::function<VRel(const VRel&)> rule) {
	auto im = base_impl(Kind::UserRule, F.quantale(), F, F.cap());
	im->name = std::move(name);
	im->rule = std::move(rule);
	return wrap(std::move(im));
}

VRel LaxExtension::apply(const VRel& r, int threads) const {
	return apply_impl(*impl_, r, threads);
}

LaxExtension::Kind LaxExtension::kind() const { return impl_->kind; }
const FinFunctor& LaxExtension::functor() const { return impl_->F; }
const QuantalePtr& LaxExtension::quantale() const { return impl_->q; }
std::size_t LaxExtension::cap() const { return impl_->cap; }

std::span<const PredicateLifting> LaxExtension::liftings() const {
	if (impl_->kind != Kind::Kantorovich) return {};
	return impl_->liftings;
}

std::string LaxExtension::describe() const {
	switch (impl_->kind) {
	case Kind::Identity: return "identity";
	case Kind::Barr: return "barr(" + impl_->F.str() + ")";
	case Kind::Hausdorff:
		return impl_->w == Subquantale::Two ? "hausdorff[two]" : "hausdorff[full]";
	case Kind::Kantorovich:
		return "kantorovich(" + impl_->F.str() + "," + std::to_string(impl_->liftings.size()) +
		       " liftings)";
	case Kind::NeighExt: return "neigh-ext[" + std::to_string(impl_->kappa) + "]";
	case Kind::Dual: return "dual(" + wrap(impl_->inner).describe() + ")";
	case Kind::Meet: {
		std::string out = "meet(";
		for (std::size_t i = 0; i < impl_->members.size(); ++i) {
			if (i) out += ",";
			out += impl_->members[i].describe();
		}
		return out + ")";
	}
	case Kind::Initial: return "initial(" + std::to_string(impl_->members.size()) + " legs)";
	case Kind::UserRule: return "user:" + impl_->name;
	}
	return "?";
}

// -- sampling plans -----------------------------------------------------------

SamplePlan SamplePlan::standard() {
	SamplePlan plan;
	plan.sets = {FinSet("O", {}), FinSet("U", {"u"}), FinSet("W", {"w0", "w1"})};
	return plan;
}

std::vector<VRel> plan_relations(const QuantalePtr& q, const FinSet& X, const FinSet& Y,
                                 const SamplePlan& plan) {
	std::vector<VRel> out;
	if (q->finite()) {
		bool small = true;
		std::size_t count = 1;
		for (std::size_t i = 0; i < X.size() * Y.size(); ++i) {
			count *= q->size();
			if (count > plan.exhaustive_limit) {
				small = false;
				break;
			}
		}
		if (small) {
			RelSpace space(q, X, Y, plan.exhaustive_limit);
			out.reserve(space.count());
			for (std::size_t i = 0; i < space.count(); ++i) out.push_back(space.at(i));
			return out;
		}
	}
	std::mt19937_64 rng(plan.seed + 1315423911u * (X.size() * 31 + Y.size()));
	static const char* pool_fracs[] = {"0", "1", "1/2", "1/3", "2/3", "1/4", "3/4"};
	for (std::size_t k = 0; k < plan.samples_per_homset; ++k) {
		std::vector<Value> e(X.size() * Y.size(), q->bottom());
		for (auto& v : e) {
			if (q->finite())
				v = q->element(rng() % q->size());
			else
				v = q->parse(pool_fracs[rng() % 7]);
		}
		out.push_back(VRel(q, X, Y, std::move(e)));
	}
	return out;
}

// -- law checking -------------------------------------------------------------

LawReport check_lax_laws(const LaxExtension& E, const SamplePlan& plan) {
	LawReport rep;
	rep.subject = "lax laws of " + E.describe();
	const auto& q = E.quantale();
	const auto& F = E.functor();

	bool l1 = true, l2 = true, l3g = true, l3c = true, sp = true, spre = true, idp = true;
	std::string w1, w2, w3g, w3c, wsp, wspre, widp;

	for (const auto& X : plan.sets) {
		for (const auto& Y : plan.sets) {
			auto rels = plan_relations(q, X, Y, plan);
			std::vector<VRel> apps;
			apps.reserve(rels.size());
			for (const auto& r : rels) apps.push_back(E.apply(r));
			// L1
			for (std::size_t i = 0; i < rels.size() && l1; ++i)
				for (std::size_t j = 0; j < rels.size() && l1; ++j)
					if (leq(rels[i], rels[j]) && !leq(apps[i], apps[j])) {
						l1 = false;
						w1 = "X=" + X.name() + " Y=" + Y.name();
					}
			// L3 and strictness over maps
			for (const auto& f : all_maps(X, Y, plan.map_limit, plan.seed)) {
				VRel gf = graph(q, f);
				VRel Egf = E.apply(gf);
				VRel Fgf = graph(q, F.on_map(f));
				if (l3g && !leq(Fgf, Egf)) {
					l3g = false;
					w3g = "f:" + X.name() + "->" + Y.name();
				}
				VRel Ecogf = E.apply(cograph(q, f));
				if (l3c && !leq(converse(Fgf), Ecogf)) {
					l3c = false;
					w3c = "f:" + X.name() + "->" + Y.name();
				}
			}
			// L2 over composable pairs, plus strict composites with maps
			for (const auto& Z : plan.sets) {
				auto ss = plan_relations(q, Y, Z, plan);
				std::vector<VRel> sapps;
				sapps.reserve(ss.size());
				for (const auto& s : ss) sapps.push_back(E.apply(s));
				if (l2) {
					for (std::size_t i = 0; i < rels.size() && l2; ++i)
						for (std::size_t j = 0; j < ss.size() && l2; ++j) {
							if (!leq(compose(sapps[j], apps[i]), E.apply(compose(ss[j], rels[i])))) {
								l2 = false;
								w2 = "X=" + X.name() + " Y=" + Y.name() + " Z=" + Z.name();
							}
						}
				}
				if (sp) {
					for (const auto& f : all_maps(X, Y, plan.map_limit, plan.seed)) {
						VRel Ff = graph(q, F.on_map(f));
						for (std::size_t j = 0; j < ss.size() && sp; ++j) {
							VRel lhs = E.apply(compose(ss[j], graph(q, f)));
							if (!(lhs == compose(sapps[j], Ff))) {
								sp = false;
								wsp = "E(s.f) != E(s).F(f) at X=" + X.name() + " Y=" + Y.name() +
								      " Z=" + Z.name();
							}
						}
					}
				}
				if (spre) {
					// W ranges over the same family; g : W -> Z
					for (const auto& Wset : plan.sets) {
						for (const auto& g : all_maps(Wset, Z, plan.map_limit, plan.seed + 3)) {
							VRel Fgc = cograph(q, F.on_map(g));
							for (std::size_t j = 0; j < ss.size() && spre; ++j) {
								VRel lhs = E.apply(compose(cograph(q, g), ss[j]));
								if (!(lhs == compose(Fgc, sapps[j]))) {
									spre = false;
									wspre = "E(g°.s) != (Fg)°.E(s) at Y=" + Y.name() + " Z=" + Z.name() +
									        " W=" + Wset.name();
								}
							}
						}
						if (!spre) break;
					}
				}
			}
		}
		// identity preservation (informational)
		VRel idX = VRel::identity(q, X);
		if (idp && !(E.apply(idX) == VRel::identity(q, F.on_obj(X)))) {
			idp = false;
			widp = "X=" + X.name();
		}
	}

	rep.add("L1-monotone", l1, w1);
	rep.add("L2-lax-composition", l2, w2);
	rep.add("L3-graphs", l3g, w3g);
	rep.add("L3-cographs", l3c, w3c);
	rep.add("strict-post-composite", sp, wsp);
	rep.add("strict-pre-composite", spre, wspre);
	rep.checks.push_back(LawCheck{"identity-preserving", idp, widp, false});
	return rep;
}

LawReport check_enrichment(const LaxExtension& E, const SamplePlan& plan) {
	LawReport rep;
	rep.subject = "enrichment of " + E.describe();
	const auto& q = E.quantale();
	const auto& F = E.functor();

	std::vector<Value> us;
	if (q->finite()) {
		for (std::size_t i = 0; i < q->size(); ++i) us.push_back(q->element(i));
	} else {
		for (const char* s : {"0", "1", "1/2", "1/3", "2/3", "3/4"}) us.push_back(q->parse(s));
	}

	bool v1 = true, v3 = true, v4 = true;
	std::string w1, w3, w4;
	for (const auto& X : plan.sets) {
		VRel idX = VRel::identity(q, X);
		VRel idFX = VRel::identity(q, F.on_obj(X));
		for (const auto& u : us) {
			if (!leq(scalar_tensor(u, idFX), E.apply(scalar_tensor(u, idX)))) {
				if (v3) w3 = "X=" + X.name() + " u=" + q->name(u);
				v3 = false;
			}
		}
		for (const auto& Y : plan.sets) {
			auto rels = plan_relations(q, X, Y, plan);
			std::vector<VRel> apps;
			apps.reserve(rels.size());
			for (const auto& r : rels) apps.push_back(E.apply(r));
			for (std::size_t i = 0; i < rels.size() && v1; ++i)
				for (std::size_t j = 0; j < rels.size() && v1; ++j)
					if (!q->leq(rel_dist(rels[i], rels[j]), rel_dist(apps[i], apps[j]))) {
						v1 = false;
						w1 = "X=" + X.name() + " Y=" + Y.name();
					}
			for (std::size_t i = 0; i < rels.size() && v4; ++i)
				for (const auto& u : us)
					if (!leq(scalar_tensor(u, apps[i]), E.apply(scalar_tensor(u, rels[i])))) {
						v4 = false;
						w4 = "X=" + X.name() + " Y=" + Y.name() + " u=" + q->name(u);
						break;
					}
		}
	}
	rep.checks.push_back(LawCheck{"enriched-via-distances", v1, w1, false});
	rep.checks.push_back(LawCheck{"enriched-via-tensored-identities", v3, w3, false});
	rep.checks.push_back(LawCheck{"enriched-via-tensored-relations", v4, w4, false});
	const bool agree = (v1 == v3) && (v3 == v4);
	rep.add("verdict-agreement", agree,
	        agree ? "" : "the three enrichment criteria disagree; this is a library bug");
	return rep;
}

VCat lift_to_vcat(const LaxExtension& E, const VCat& A) {
	if (A.a.src() != A.obj || A.a.tgt() != A.obj)
		throw InputError("lift_to_vcat needs an endo-structure");
	return VCat{E.functor().on_obj(A.obj), E.apply(A.a)};
}

SimResult sim_distance(const LaxExtension& E, const FinMap& coalgebra, bool keep_trace,
                       std::size_t max_iter, int threads) {
	const auto& q = E.quantale();
	const FinSet& X = coalgebra.src();
	FinSet FX = E.functor().on_obj(X);
	if (coalgebra.tgt() != FX)
		throw InputError("coalgebra does not land in F(" + X.name() + ")");

	std::size_t bound = max_iter;
	if (q->finite()) {
		// strict descent drops at least one entry per step, and each entry can
		// only descend |V|-1 times
		bound = (q->size() - 1) * X.size() * X.size() + 2;
	}

	SimResult res;
	VRel r = VRel::top(q, X, X);
	if (keep_trace) res.trace.push_back(r);
	for (std::size_t it = 0; it < bound; ++it) {
		VRel Er = E.apply(r, threads);
		std::vector<Value> e(X.size() * X.size(), q->bottom());
		for (std::size_t x = 0; x < X.size(); ++x)
			for (std::size_t y = 0; y < X.size(); ++y)
				e[x * X.size() + y] = Er.at(coalgebra(x), coalgebra(y));
		VRel next(q, X, X, std::move(e));
		if (!leq(next, r))
			throw Error("simulation-distance iteration is not descending; the rule is not "
			            "monotone below top");
		res.iterations = it + 1;
		if (next == r) {
			res.dist = std::move(next);
			res.reflexive = leq(VRel::identity(q, X), res.dist);
			res.transitive = leq(compose(res.dist, res.dist), res.dist);
			return res;
		}
		r = std::move(next);
		if (keep_trace) res.trace.push_back(r);
	}
	throw CapError("simulation-distance iteration bound exceeded");
}

} // namespace laxrel
