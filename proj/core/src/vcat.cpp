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

#include "laxrel/vcat.hpp"

#include <algorithm>

namespace laxrel {

LawReport check_vcat(const FinSet& X, const VRel& a) {
	LawReport rep;
	rep.subject = "vcat " + X.name();
	if (a.src() != X || a.tgt() != X) {
		rep.add("endo-relation", false, "structure is not a relation on " + X.name());
		return rep;
	}
	const auto& q = a.quantale();
	{
		bool ok = true;
		std::string w;
		for (std::size_t x = 0; x < X.size(); ++x)
			if (!q->leq(q->unit(), a.at(x, x))) {
				ok = false;
				w = "x=" + X.element(x);
				break;
			}
		rep.add("reflexive", ok, w);
	}
	{
		bool ok = true;
		std::string w;
		for (std::size_t x = 0; x < X.size() && ok; ++x)
			for (std::size_t y = 0; y < X.size() && ok; ++y)
				for (std::size_t z = 0; z < X.size() && ok; ++z)
					if (!q->leq(q->tensor(a.at(x, y), a.at(y, z)), a.at(x, z))) {
						ok = false;
						w = "x=" + X.element(x) + " y=" + X.element(y) + " z=" + X.element(z);
					}
		rep.add("transitive", ok, w);
	}
	return rep;
}

LawReport check_vfunctor(const FinMap& f, const VCat& A, const VCat& B) {
	LawReport rep;
	rep.subject = "vfunctor " + A.obj.name() + " -> " + B.obj.name();
	if (f.src() != A.obj || f.tgt() != B.obj) {
		rep.add("typing", false, "map does not match the categories");
		return rep;
	}
	const auto& q = A.quantale();
	bool ok = true;
	std::string w;
	for (std::size_t x = 0; x < A.obj.size() && ok; ++x)
		for (std::size_t y = 0; y < A.obj.size() && ok; ++y)
			if (!q->leq(A.a.at(x, y), B.a.at(f(x), f(y)))) {
				ok = false;
				w = "x=" + A.obj.element(x) + " y=" + A.obj.element(y);
			}
	rep.add("hom-inequality", ok, w);
	return rep;
}

std::vector<std::vector<bool>> natural_order(const VCat& A) {
	const auto& q = A.quantale();
	std::vector<std::vector<bool>> ord(A.obj.size(), std::vector<bool>(A.obj.size(), false));
	for (std::size_t x = 0; x < A.obj.size(); ++x)
		for (std::size_t y = 0; y < A.obj.size(); ++y)
			ord[x][y] = q->leq(q->unit(), A.a.at(x, y));
	return ord;
}

bool is_separated(const VCat& A) {
	auto ord = natural_order(A);
	for (std::size_t x = 0; x < ord.size(); ++x)
		for (std::size_t y = 0; y < ord.size(); ++y)
			if (x != y && ord[x][y] && ord[y][x]) return false;
	return true;
}

VCat dual(const VCat& A) { return VCat{A.obj, converse(A.a)}; }

VCat quantale_vcat(const QuantalePtr& q) {
	const std::size_t m = q->size();
	std::vector<std::string> names(m);
	for (std::size_t i = 0; i < m; ++i) names[i] = q->name(q->element(i));
	FinSet V("V", std::move(names));
	std::vector<Value> e(m * m, q->bottom());
	for (std::size_t u = 0; u < m; ++u)
		for (std::size_t v = 0; v < m; ++v) e[u * m + v] = q->hom(q->element(u), q->element(v));
	return VCat{V, VRel(q, V, V, std::move(e))};
}

VCat power_vcat(const QuantalePtr& q, const FinSet& S, std::size_t cap) {
	FinSet P = power_set(q, S, cap);
	const std::size_t n = P.size(), arity = S.size();
	std::vector<Value> e(n * n, q->top());
	for (std::size_t h = 0; h < n; ++h)
		for (std::size_t l = 0; l < n; ++l) {
			Value acc = q->top();
			for (std::size_t s = 0; s < arity; ++s)
				acc = q->meet(acc, q->hom(power_coord(q, h, s, arity), power_coord(q, l, s, arity)));
			e[h * n + l] = acc;
		}
	return VCat{P, VRel(q, P, P, std::move(e))};
}

VRel power_vcat_op_structure(const QuantalePtr& q, const FinSet& S, std::size_t cap) {
	return converse(power_vcat(q, S, cap).a);
}

std::vector<std::uint32_t> closure(const VCat& A, std::span<const std::uint32_t> M) {
	const auto& q = A.quantale();
	std::vector<std::uint32_t> out;
	for (std::size_t x = 0; x < A.obj.size(); ++x) {
		Value acc = q->bottom();
		for (auto z : M) acc = q->join(acc, q->tensor(A.a.at(x, z), A.a.at(z, x)));
		if (q->leq(q->unit(), acc)) out.push_back(static_cast<std::uint32_t>(x));
	}
	return out;
}

bool is_dense_map(const FinMap& i, const VCat& A) {
	if (i.tgt() != A.obj) throw InputError("dense-map candidate does not land in the category");
	const auto& q = A.quantale();
	VRel gi = graph(q, i);
	VRel rhs = compose(A.a, compose(gi, compose(converse(gi), A.a)));
	return rhs == A.a;
}

VFunctor extend_along_embedding(const VFunctor& i, const VFunctor& phi) {
	const VCat& A = i.dom;
	const VCat& X = i.cod;
	if (phi.dom.obj != A.obj) throw InputError("phi is not defined on the embedding's domain");
	const auto& q = A.quantale();

	// fully faithful: a = i°.b.i, i.e. a(z,z') = b(i z, i z')
	for (std::size_t z = 0; z < A.obj.size(); ++z)
		for (std::size_t z2 = 0; z2 < A.obj.size(); ++z2)
			if (!(A.a.at(z, z2) == X.a.at(i.map(z), i.map(z2))))
				throw InputError("embedding not fully faithful at (" + A.obj.element(z) + "," +
				                 A.obj.element(z2) + ")");
	if (!check_vfunctor(phi.map, A, phi.cod).all_pass())
		throw InputError("phi is not a V-functor into (V,hom)");

	// psi = i_* . phi with i_* = b.i: psi(x) = \/_z phi(z) (x) b(i z, x)
	const FinSet& carrier = phi.cod.obj;
	std::vector<std::uint32_t> img(X.obj.size(), 0);
	for (std::size_t x = 0; x < X.obj.size(); ++x) {
		Value acc = q->bottom();
		for (std::size_t z = 0; z < A.obj.size(); ++z)
			acc = q->join(acc, q->tensor(q->element(phi.map(z)), X.a.at(i.map(z), x)));
		img[x] = acc.index();
	}
	return VFunctor{X, phi.cod, FinMap(X.obj, carrier, std::move(img))};
}

} // namespace laxrel
