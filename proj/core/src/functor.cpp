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

#include "laxrel/functor.hpp"

#include <algorithm>
#include <map>
#include <mutex>

namespace laxrel {
namespace {

FunctorTermPtr mk(FunctorTerm t) { return std::make_shared<const FunctorTerm>(std::move(t)); }

std::string pow_elem_name(std::uint64_t mask, const FinSet& X) {
	std::string out = "{";
	bool first = true;
	for (std::size_t i = 0; i < X.size(); ++i) {
		if (mask & (std::uint64_t{1} << i)) {
			if (!first) out += ",";
			out += X.element(i);
			first = false;
		}
	}
	out += "}";
	return out;
}

} // namespace

FunctorTermPtr FunctorTerm::identity() { return mk(FunctorTerm{}); }

FunctorTermPtr FunctorTerm::constant_set(FinSet C) {
	FunctorTerm t;
	t.op = Op::Constant;
	t.constant = std::move(C);
	return mk(std::move(t));
}

FunctorTermPtr FunctorTerm::pow() {
	FunctorTerm t;
	t.op = Op::Pow;
	return mk(std::move(t));
}

FunctorTermPtr FunctorTerm::vpow() {
	FunctorTerm t;
	t.op = Op::VPow;
	return mk(std::move(t));
}

FunctorTermPtr FunctorTerm::product(FunctorTermPtr a, FunctorTermPtr b) {
	FunctorTerm t;
	t.op = Op::Product;
	t.args = {std::move(a), std::move(b)};
	return mk(std::move(t));
}

FunctorTermPtr FunctorTerm::coproduct(FunctorTermPtr a, FunctorTermPtr b) {
	FunctorTerm t;
	t.op = Op::Coproduct;
	t.args = {std::move(a), std::move(b)};
	return mk(std::move(t));
}

FunctorTermPtr FunctorTerm::compose(FunctorTermPtr outer, FunctorTermPtr inner) {
	FunctorTerm t;
	t.op = Op::Compose;
	t.args = {std::move(outer), std::move(inner)};
	return mk(std::move(t));
}

FunctorTermPtr FunctorTerm::neigh(std::size_t kappa) {
	FunctorTerm t;
	t.op = Op::Neigh;
	t.kappa = kappa;
	return mk(std::move(t));
}

std::string FunctorTerm::str() const {
	switch (op) {
	case Op::Identity: return "id";
	case Op::Constant: return "const[" + constant.name() + "]";
	case Op::Pow: return "pow";
	case Op::VPow: return "vpow";
	case Op::Product: return "(" + args[0]->str() + "*" + args[1]->str() + ")";
	case Op::Coproduct: return "(" + args[0]->str() + "+" + args[1]->str() + ")";
	case Op::Compose: return "(" + args[0]->str() + "." + args[1]->str() + ")";
	case Op::Neigh: return "neigh[" + std::to_string(kappa) + "]";
	}
	return "?";
}

nlohmann::json FunctorTerm::to_json() const {
	switch (op) {
	case Op::Identity: return {{"op", "id"}};
	case Op::Constant:
		return {{"op", "const"},
		        {"set", {{"name", constant.name()}, {"elements", constant.elements()}}}};
	case Op::Pow: return {{"op", "pow"}};
	case Op::VPow: return {{"op", "vpow"}};
	case Op::Product: return {{"op", "prod"}, {"args", {args[0]->to_json(), args[1]->to_json()}}};
	case Op::Coproduct:
		return {{"op", "coprod"}, {"args", {args[0]->to_json(), args[1]->to_json()}}};
	case Op::Compose:
		return {{"op", "compose"}, {"args", {args[0]->to_json(), args[1]->to_json()}}};
	case Op::Neigh: return {{"op", "neigh"}, {"kappa", kappa}};
	}
	throw InputError("unknown functor op");
}

FunctorTermPtr FunctorTerm::from_json(const nlohmann::json& j) {
	const std::string op = j.at("op").get<std::string>();
	if (op == "id") return identity();
	if (op == "pow") return pow();
	if (op == "vpow") return vpow();
	if (op == "neigh") return neigh(j.at("kappa").get<std::size_t>());
	if (op == "const") {
		const auto& s = j.at("set");
		return constant_set(FinSet(s.at("name").get<std::string>(),
		                           s.at("elements").get<std::vector<std::string>>()));
	}
	if (op == "prod" || op == "coprod" || op == "compose") {
		const auto& a = j.at("args");
		if (!a.is_array() || a.size() != 2)
			throw InputError("functor op '" + op + "' needs exactly two arguments");
		auto lhs = from_json(a[0]);
		auto rhs = from_json(a[1]);
		if (op == "prod") return product(std::move(lhs), std::move(rhs));
		if (op == "coprod") return coproduct(std::move(lhs), std::move(rhs));
		return compose(std::move(lhs), std::move(rhs));
	}
	throw InputError("unknown functor op: " + op);
}

struct FinFunctor::ObjCache {
	std::mutex mu;
	std::map<std::vector<std::string>, FinSet> memo;  // keyed by element lists
};

FinFunctor::FinFunctor(QuantalePtr q, FunctorTermPtr term, std::size_t cap)
    : q_(std::move(q)), term_(std::move(term)), cap_(cap),
      cache_(std::make_shared<ObjCache>()) {
	if (!term_) throw InputError("empty functor term");
}

bool operator==(const FinFunctor& a, const FinFunctor& b) {
	if (!a.term_ || !b.term_) return a.term_ == b.term_;
	return a.term_->to_json() == b.term_->to_json();
}

FinSet FinFunctor::on_obj(const FinSet& X) const {
	{
		std::lock_guard<std::mutex> lock(cache_->mu);
		auto it = cache_->memo.find(X.elements());
		if (it != cache_->memo.end()) return it->second;
	}
	FinSet out = on_obj_uncached(X);
	std::lock_guard<std::mutex> lock(cache_->mu);
	cache_->memo.emplace(X.elements(), out);
	return out;
}

FinSet FinFunctor::on_obj_uncached(const FinSet& X) const {
	switch (term_->op) {
	case FunctorTerm::Op::Identity: return X;
	case FunctorTerm::Op::Constant: return term_->constant;
	case FunctorTerm::Op::Pow: {
		if (X.size() >= 63 || (std::size_t{1} << X.size()) > cap_)
			throw CapError("P(" + X.name() + "): enumeration too large");
		const std::size_t n = std::size_t{1} << X.size();
		std::vector<std::string> names(n);
		for (std::size_t mask = 0; mask < n; ++mask) names[mask] = pow_elem_name(mask, X);
		return FinSet("P(" + X.name() + ")", std::move(names));
	}
	case FunctorTerm::Op::VPow: return power_set(q_, X, cap_);
	case FunctorTerm::Op::Product: {
		FinSet A = FinFunctor(q_, term_->args[0], cap_).on_obj(X);
		FinSet B = FinFunctor(q_, term_->args[1], cap_).on_obj(X);
		if (B.size() != 0 && A.size() > cap_ / std::max<std::size_t>(B.size(), 1))
			throw CapError("product: enumeration too large");
		std::vector<std::string> names;
		names.reserve(A.size() * B.size());
		for (std::size_t i = 0; i < A.size(); ++i)
			for (std::size_t j = 0; j < B.size(); ++j)
				names.push_back("(" + A.element(i) + "," + B.element(j) + ")");
		return FinSet(term_->str() + "(" + X.name() + ")", std::move(names));
	}
	case FunctorTerm::Op::Coproduct: {
		FinSet A = FinFunctor(q_, term_->args[0], cap_).on_obj(X);
		FinSet B = FinFunctor(q_, term_->args[1], cap_).on_obj(X);
		if (A.size() + B.size() > cap_) throw CapError("coproduct: enumeration too large");
		std::vector<std::string> names;
		names.reserve(A.size() + B.size());
		for (std::size_t i = 0; i < A.size(); ++i) names.push_back("in0(" + A.element(i) + ")");
		for (std::size_t j = 0; j < B.size(); ++j) names.push_back("in1(" + B.element(j) + ")");
		return FinSet(term_->str() + "(" + X.name() + ")", std::move(names));
	}
	case FunctorTerm::Op::Compose:
		return FinFunctor(q_, term_->args[0], cap_)
		    .on_obj(FinFunctor(q_, term_->args[1], cap_).on_obj(X));
	case FunctorTerm::Op::Neigh: return neigh_space(q_, term_->kappa, X, cap_).set;
	}
	throw InputError("unknown functor op");
}

FinMap FinFunctor::on_map(const FinMap& f) const {
	switch (term_->op) {
	case FunctorTerm::Op::Identity: return f;
	case FunctorTerm::Op::Constant: return FinMap::identity(term_->constant);
	case FunctorTerm::Op::Pow: {
		FinSet PX = on_obj(f.src());
		FinSet PY = on_obj(f.tgt());
		std::vector<std::uint32_t> img(PX.size());
		for (std::size_t mask = 0; mask < PX.size(); ++mask) {
			std::size_t out = 0;
			for (std::size_t x = 0; x < f.src().size(); ++x)
				if (mask & (std::size_t{1} << x)) out |= std::size_t{1} << f(x);
			img[mask] = static_cast<std::uint32_t>(out);
		}
		return FinMap(PX, PY, std::move(img));
	}
	case FunctorTerm::Op::VPow: {
		// direct image of a V-valued predicate: phi |-> (y |-> \/_{f(x)=y} phi(x))
		FinSet VX = on_obj(f.src());
		FinSet VY = on_obj(f.tgt());
		std::vector<std::uint32_t> img(VX.size());
		std::vector<Value> out(f.tgt().size());
		for (std::size_t p = 0; p < VX.size(); ++p) {
			for (auto& v : out) v = q_->bottom();
			for (std::size_t x = 0; x < f.src().size(); ++x)
				out[f(x)] = q_->join(out[f(x)], power_coord(q_, p, x, f.src().size()));
			img[p] = static_cast<std::uint32_t>(power_index(q_, out));
		}
		return FinMap(VX, VY, std::move(img));
	}
	case FunctorTerm::Op::Product: {
		FinMap a = FinFunctor(q_, term_->args[0], cap_).on_map(f);
		FinMap b = FinFunctor(q_, term_->args[1], cap_).on_map(f);
		FinSet PX = on_obj(f.src());
		FinSet PY = on_obj(f.tgt());
		const std::size_t bn = b.src().size(), bm = b.tgt().size();
		std::vector<std::uint32_t> img(PX.size());
		for (std::size_t i = 0; i < a.src().size(); ++i)
			for (std::size_t j = 0; j < bn; ++j)
				img[i * bn + j] = static_cast<std::uint32_t>(a(i) * bm + b(j));
		return FinMap(PX, PY, std::move(img));
	}
	case FunctorTerm::Op::Coproduct: {
		FinMap a = FinFunctor(q_, term_->args[0], cap_).on_map(f);
		FinMap b = FinFunctor(q_, term_->args[1], cap_).on_map(f);
		FinSet PX = on_obj(f.src());
		FinSet PY = on_obj(f.tgt());
		std::vector<std::uint32_t> img(PX.size());
		for (std::size_t i = 0; i < a.src().size(); ++i) img[i] = a(i);
		for (std::size_t j = 0; j < b.src().size(); ++j)
			img[a.src().size() + j] = static_cast<std::uint32_t>(a.tgt().size() + b(j));
		return FinMap(PX, PY, std::move(img));
	}
	case FunctorTerm::Op::Compose: {
		FinFunctor outer(q_, term_->args[0], cap_);
		FinFunctor inner(q_, term_->args[1], cap_);
		return outer.on_map(inner.on_map(f));
	}
	case FunctorTerm::Op::Neigh: {
		NeighSpace NX = neigh_space(q_, term_->kappa, f.src(), cap_);
		NeighSpace NY = neigh_space(q_, term_->kappa, f.tgt(), cap_);
		// Phi |-> (g |-> Phi(g.f)); the index of g.f in Rel(X,kappa) is read
		// off digit by digit, entry (x,j) of g.f being g(f(x), j).
		const std::size_t m = q_->size();
		const std::size_t nx = f.src().size(), k = term_->kappa;
		std::vector<std::uint32_t> img(NX.set.size());
		std::vector<std::size_t> precomp(NY.domain.count());
		for (std::size_t g = 0; g < NY.domain.count(); ++g) {
			VRel rel = NY.domain.at(g);
			std::size_t idx = 0;
			for (std::size_t x = 0; x < nx; ++x)
				for (std::size_t j = 0; j < k; ++j) idx = idx * m + rel.at(f(x), j).index();
			precomp[g] = idx;
		}
		std::vector<Value> table(NY.domain.count());
		for (std::size_t p = 0; p < NX.set.size(); ++p) {
			for (std::size_t g = 0; g < NY.domain.count(); ++g)
				table[g] = NX.tables[p][precomp[g]];
			img[p] = static_cast<std::uint32_t>(NY.index_of_table(table));
		}
		return FinMap(NX.set, NY.set, std::move(img));
	}
	}
	throw InputError("unknown functor op");
}

std::size_t NeighSpace::index_of_table(std::span<const Value> table) const {
	// tables are enumerated in lexicographic order, so binary search works
	auto less = [](const std::vector<Value>& a, std::span<const Value> b) {
		for (std::size_t i = 0; i < a.size(); ++i) {
			if (a[i].index() < b[i].index()) return true;
			if (a[i].index() > b[i].index()) return false;
		}
		return false;
	};
	std::size_t lo = 0, hi = tables.size();
	while (lo < hi) {
		std::size_t mid = (lo + hi) / 2;
		if (less(tables[mid], table))
			lo = mid + 1;
		else
			hi = mid;
	}
	if (lo < tables.size()) {
		bool eq = true;
		for (std::size_t i = 0; i < table.size() && eq; ++i) eq = tables[lo][i] == table[i];
		if (eq) return lo;
	}
	throw InputError("value table is not monotone (not a Neigh element)");
}

NeighSpace neigh_space(const QuantalePtr& q, std::size_t kappa, const FinSet& X,
                       std::size_t cap) {
	RelSpace domain(q, X, FinSet::ordinal(kappa, "k" + std::to_string(kappa)), cap);
	const std::size_t d = domain.count();
	const std::size_t m = q->size();

	// pointwise order between domain relations
	std::vector<std::vector<std::size_t>> below(d), above(d);
	for (std::size_t i = 0; i < d; ++i) {
		VRel ri = domain.at(i);
		for (std::size_t j = 0; j < d; ++j) {
			if (i == j) continue;
			if (leq(ri, domain.at(j)))
				above[i].push_back(j);
			else if (leq(domain.at(j), ri))
				below[i].push_back(j);
		}
	}

	// depth-first enumeration of monotone tables in lexicographic order
	std::vector<std::vector<Value>> tables;
	std::vector<Value> cur(d, q->bottom());
	std::vector<std::size_t> digits(d, 0);
	std::function<void(std::size_t)> rec = [&](std::size_t t) {
		if (t == d) {
			if (tables.size() >= cap) throw CapError("Neigh(" + X.name() + "): enumeration too large");
			tables.push_back(cur);
			return;
		}
		for (std::size_t v = 0; v < m; ++v) {
			Value val = q->element(v);
			bool ok = true;
			for (std::size_t s : below[t])
				if (s < t && !q->leq(cur[s], val)) {
					ok = false;
					break;
				}
			if (ok)
				for (std::size_t s : above[t])
					if (s < t && !q->leq(val, cur[s])) {
						ok = false;
						break;
					}
			if (!ok) continue;
			cur[t] = val;
			digits[t] = v;
			rec(t + 1);
		}
	};
	rec(0);

	std::vector<std::string> names(tables.size());
	for (std::size_t i = 0; i < tables.size(); ++i) {
		std::string nm = "[";
		for (std::size_t g = 0; g < d; ++g) {
			if (g > 0) nm += ",";
			nm += q->name(tables[i][g]);
		}
		nm += "]";
		names[i] = std::move(nm);
	}
	NeighSpace out{FinSet("N" + std::to_string(kappa) + "(" + X.name() + ")", std::move(names)),
	               std::move(domain), std::move(tables)};
	return out;
}

FinSet neigh_obj(const QuantalePtr& q, std::size_t kappa, const FinSet& X, std::size_t cap) {
	return neigh_space(q, kappa, X, cap).set;
}

std::vector<FinMap> all_maps(const FinSet& X, const FinSet& Y, std::size_t limit,
                             std::uint64_t seed) {
	std::vector<FinMap> out;
	if (X.empty()) {
		out.push_back(FinMap(X, Y, {}));
		return out;
	}
	if (Y.empty()) return out; // no maps into the empty set
	std::size_t total = 1;
	bool overflow = false;
	for (std::size_t i = 0; i < X.size(); ++i) {
		if (total > limit / Y.size() + 1) {
			overflow = true;
			break;
		}
		total *= Y.size();
	}
	if (!overflow && total <= limit) {
		for (std::size_t code = 0; code < total; ++code) {
			std::vector<std::uint32_t> v(X.size());
			std::size_t c = code;
			for (std::size_t i = X.size(); i-- > 0;) {
				v[i] = static_cast<std::uint32_t>(c % Y.size());
				c /= Y.size();
			}
			out.push_back(FinMap(X, Y, std::move(v)));
		}
		return out;
	}
	std::mt19937_64 rng(seed);
	std::uniform_int_distribution<std::uint32_t> dist(0, static_cast<std::uint32_t>(Y.size() - 1));
	for (std::size_t n = 0; n < limit; ++n) {
		std::vector<std::uint32_t> v(X.size());
		for (auto& t : v) t = dist(rng);
		out.push_back(FinMap(X, Y, std::move(v)));
	}
	return out;
}

LawReport check_functoriality(const std::function<FinSet(const FinSet&)>& on_obj,
                              const std::function<FinMap(const FinMap&)>& on_map,
                              std::span<const FinSet> samples, std::uint64_t seed) {
	LawReport rep;
	rep.subject = "functoriality";
	{
		bool ok = true;
		std::string w;
		for (const auto& X : samples) {
			if (!(on_map(FinMap::identity(X)) == FinMap::identity(on_obj(X)))) {
				ok = false;
				w = "X=" + X.name();
				break;
			}
		}
		rep.add("preserves-identities", ok, w);
	}
	{
		bool ok = true;
		std::string w;
		for (const auto& X : samples)
			for (const auto& Y : samples)
				for (const auto& Z : samples) {
					for (const auto& f : all_maps(X, Y, 16, seed))
						for (const auto& g : all_maps(Y, Z, 16, seed + 1)) {
							if (!(on_map(g.after(f)) == on_map(g).after(on_map(f)))) {
								ok = false;
								w = "X=" + X.name() + " Y=" + Y.name() + " Z=" + Z.name();
								goto done;
							}
						}
				}
	done:
		rep.add("preserves-composition", ok, w);
	}
	return rep;
}

LawReport check_functoriality(const FinFunctor& F, std::span<const FinSet> samples,
                              std::uint64_t seed) {
	LawReport rep = check_functoriality([&](const FinSet& X) { return F.on_obj(X); },
	                                    [&](const FinMap& f) { return F.on_map(f); }, samples,
	                                    seed);
	rep.subject = "functoriality of " + F.str();
	return rep;
}

LawReport check_naturality(const NatTrans& alpha, std::span<const FinSet> samples,
                           std::uint64_t seed) {
	LawReport rep;
	rep.subject = "naturality " + alpha.src.str() + " => " + alpha.tgt.str();
	bool ok = true;
	std::string w;
	for (const auto& X : samples) {
		FinMap ax = alpha.at(X);
		if (ax.src() != alpha.src.on_obj(X) || ax.tgt() != alpha.tgt.on_obj(X)) {
			rep.add("component-typing", false, "X=" + X.name());
			return rep;
		}
	}
	rep.add("component-typing", true);
	for (const auto& X : samples) {
		for (const auto& Y : samples) {
			for (const auto& f : all_maps(X, Y, 16, seed)) {
				FinMap lhs = alpha.at(Y).after(alpha.src.on_map(f));
				FinMap rhs = alpha.tgt.on_map(f).after(alpha.at(X));
				if (!(lhs == rhs)) {
					ok = false;
					w = "X=" + X.name() + " Y=" + Y.name();
					goto done;
				}
			}
		}
	}
done:
	rep.add("squares-commute", ok, w);
	return rep;
}

} // namespace laxrel
