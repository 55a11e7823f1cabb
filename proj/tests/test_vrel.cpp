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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "laxrel/vrel.hpp"

using namespace laxrel;

namespace {

QuantalePtr boolean() {
	static QuantalePtr q = Quantale::make(QuantaleSpec::boolean());
	return q;
}

QuantalePtr godel2() {
	static QuantalePtr q = Quantale::make(QuantaleSpec::godel_grid(2));
	return q;
}

VRel random_rel(const QuantalePtr& q, const FinSet& X, const FinSet& Y, std::mt19937_64& rng) {
	std::vector<Value> e(X.size() * Y.size());
	for (auto& v : e) v = q->element(rng() % q->size());
	return VRel(q, X, Y, std::move(e));
}

// greatest t with r.t <= s, by enumeration; the independent oracle for lift
VRel brute_lift(const VRel& r, const VRel& s) {
	const auto& q = r.quantale();
	RelSpace ts(q, s.src(), r.src());
	VRel best = VRel::bottom(q, s.src(), r.src());
	for (std::size_t i = 0; i < ts.count(); ++i) {
		VRel t = ts.at(i);
		if (leq(compose(r, t), s)) best = join(best, t);
	}
	return best;
}

// greatest t with t.r <= s, by enumeration; the independent oracle for ext
VRel brute_ext(const VRel& s, const VRel& r) {
	const auto& q = r.quantale();
	RelSpace ts(q, r.tgt(), s.tgt());
	VRel best = VRel::bottom(q, r.tgt(), s.tgt());
	for (std::size_t i = 0; i < ts.count(); ++i) {
		VRel t = ts.at(i);
		if (leq(compose(t, r), s)) best = join(best, t);
	}
	return best;
}

const FinSet X2("X", {"x0", "x1"});
const FinSet Y2("Y", {"y0", "y1"});
const FinSet Z2("Z", {"z0", "z1"});
const FinSet W2("W", {"w0", "w1"});
const FinSet E0("E", {});

} // namespace

TEST_CASE("composition is matrix multiplication over the quantale") {
	auto q = Quantale::make(QuantaleSpec::lukasiewicz_grid(10));
	FinSet X("X", {"x"}), Y("Y", {"y"}), Z("Z", {"z"});
	VRel r(q, X, Y, {q->parse("7/10")});
	VRel s(q, Y, Z, {q->parse("3/5")});
	CHECK(compose(s, r).at(0, 0) == q->parse("3/10"));
}

TEST_CASE("graphs compose functorially and identities are units") {
	auto q = boolean();
	std::mt19937_64 rng(7);
	FinMap f = FinMap::of_names(X2, Y2, {"y1", "y1"});
	FinMap g = FinMap::of_names(Y2, Z2, {"z1", "z0"});
	CHECK(compose(graph(q, g), graph(q, f)) == graph(q, g.after(f)));
	for (int i = 0; i < 10; ++i) {
		VRel r = random_rel(q, X2, Y2, rng);
		CHECK(compose(VRel::identity(q, Y2), r) == r);
		CHECK(compose(r, VRel::identity(q, X2)) == r);
	}
	CHECK(VRel::identity(godel2(), FinSet("P", {"p"})).at(0, 0) == godel2()->top());
}

TEST_CASE("converse is an involution and reverses composition") {
	auto q = boolean();
	std::mt19937_64 rng(11);
	for (int i = 0; i < 20; ++i) {
		VRel r = random_rel(q, X2, Y2, rng);
		VRel s = random_rel(q, Y2, Z2, rng);
		CHECK(converse(converse(r)) == r);
		CHECK(converse(compose(s, r)) == compose(converse(r), converse(s)));
	}
	CHECK(converse(VRel::identity(q, X2)) == VRel::identity(q, X2));
	// converse of the graph of a non-injective map is not a graph
	FinMap c = FinMap::of_names(X2, Y2, {"y0", "y0"});
	VRel cc = converse(graph(q, c));
	CHECK(cc.at(0, 0) == q->top());
	CHECK(cc.at(0, 1) == q->top());
}

TEST_CASE("graphs: identity, constants, adjunction, free quantale") {
	auto q = boolean();
	CHECK(graph(q, FinMap::identity(X2)) == VRel::identity(q, X2));

	FinSet One("1", {"*"});
	VRel col = graph(q, FinMap::constant(X2, One, 0));
	CHECK(col.at(0, 0) == q->top());
	CHECK(col.at(1, 0) == q->top());

	for (auto spec : {QuantaleSpec::boolean(), QuantaleSpec::godel_grid(2)}) {
		auto qi = Quantale::make(spec);
		FinMap f = FinMap::of_names(X2, Y2, {"y0", "y0"});
		VRel gf = graph(qi, f);
		CHECK(leq(compose(gf, converse(gf)), VRel::identity(qi, Y2)));
		CHECK(leq(VRel::identity(qi, X2), compose(converse(gf), gf)));
	}

	auto fr = Quantale::make(
	    QuantaleSpec::free_on_monoid(MonoidSpec{{"e", "a"}, {{"e", "a"}, {"a", "e"}}, "e"}));
	VRel gfree = graph(fr, FinMap::of_names(X2, Y2, {"y0", "y1"}));
	CHECK(gfree.at(0, 0) == fr->parse("{e}"));
	CHECK(gfree.at(0, 1) == fr->parse("{}"));
}

TEST_CASE("lift and ext against the brute-force maximal-solution oracle") {
	auto q = boolean();
	std::vector<FinSet> sizes = {E0, FinSet("U", {"u"}), X2};
	for (const auto& X : sizes)
		for (const auto& Y : sizes)
			for (const auto& Z : sizes) {
				RelSpace rs(q, X, Y), ss(q, Z, Y);
				for (std::size_t i = 0; i < rs.count(); ++i)
					for (std::size_t j = 0; j < ss.count(); ++j) {
						VRel r = rs.at(i), s = ss.at(j);
						CHECK(lift(r, s) == brute_lift(r, s));
						// the maximum itself solves the inequality
						CHECK(leq(compose(r, lift(r, s)), s));
					}
				RelSpace s2(q, Y, Z);
				for (std::size_t i = 0; i < rs.count(); ++i) {
					VRel rr = converse(rs.at(i));  // Y -|-> X
					for (std::size_t j = 0; j < s2.count(); ++j) {
						VRel s = s2.at(j);  // Y -|-> Z
						CHECK(ext(s, rr) == brute_ext(s, rr));
						CHECK(leq(compose(ext(s, rr), rr), s));
					}
				}
			}
}

TEST_CASE("residual units and top absorption") {
	auto q = godel2();
	std::mt19937_64 rng(3);
	for (int i = 0; i < 20; ++i) {
		VRel s = random_rel(q, Z2, Y2, rng);
		CHECK(lift(VRel::identity(q, Y2), s) == s);
		CHECK(lift(random_rel(q, X2, Y2, rng), VRel::top(q, Z2, Y2)) == VRel::top(q, Z2, X2));
		VRel s2 = random_rel(q, Y2, Z2, rng);
		CHECK(ext(s2, VRel::identity(q, Y2)) == s2);
	}
}

TEST_CASE("lift and ext are exchanged by converse") {
	// (s -o r)° = r° o- s° for r : X -|-> Z and s : Y -|-> Z
	for (auto qp : {boolean(), godel2()}) {
		std::mt19937_64 rng(23);
		for (int i = 0; i < 25; ++i) {
			VRel r = random_rel(qp, X2, Z2, rng);
			VRel s = random_rel(qp, Y2, Z2, rng);
			CHECK(converse(lift(s, r)) == ext(converse(r), converse(s)));
		}
	}
}

TEST_CASE("residual monotonicity, composition and whiskering") {
	auto q = boolean();
	FinSet V("V", {"v"});
	FinSet W("W", {"w"});
	RelSpace ps(q, W, Y2), qs(q, V, Y2), rs(q, X2, Y2), ss(q, Y2, Z2);
	for (std::size_t i = 0; i < rs.count(); ++i)
		for (std::size_t j = 0; j < rs.count(); ++j) {
			if (!leq(rs.at(i), rs.at(j))) continue;
			for (std::size_t k = 0; k < qs.count(); ++k) {
				CHECK(leq(lift(qs.at(k), rs.at(i)), lift(qs.at(k), rs.at(j))));
				CHECK(leq(lift(rs.at(j), qs.at(k)), lift(rs.at(i), qs.at(k))));
			}
		}
	// (p -o q).(q -o r) <= p -o r and whiskering by post-composition
	for (std::size_t a = 0; a < ps.count(); ++a)
		for (std::size_t b = 0; b < qs.count(); ++b)
			for (std::size_t c = 0; c < rs.count(); ++c) {
				VRel p = ps.at(a), qq = qs.at(b), r = rs.at(c);
				CHECK(leq(compose(lift(p, qq), lift(qq, r)), lift(p, r)));
				for (std::size_t d = 0; d < ss.count(); d += 7) {
					VRel s = ss.at(d);
					CHECK(leq(lift(qq, r), lift(compose(s, qq), compose(s, r))));
				}
			}
}

TEST_CASE("residuals interact with maps as adjoints") {
	// g°.(s -o r) = (s.g) -o r and (s -o r).f = s -o (r.f)
	for (auto qp : {boolean(), godel2()}) {
		std::mt19937_64 rng(31);
		FinSet A("A", {"a0", "a1"}), B("B", {"b0", "b1"});
		for (int i = 0; i < 15; ++i) {
			VRel r = random_rel(qp, X2, Z2, rng);
			VRel s = random_rel(qp, Y2, Z2, rng);
			FinMap g(B, Y2, {static_cast<std::uint32_t>(rng() % 2),
			                 static_cast<std::uint32_t>(rng() % 2)});
			FinMap f(A, X2, {static_cast<std::uint32_t>(rng() % 2),
			                 static_cast<std::uint32_t>(rng() % 2)});
			CHECK(compose(cograph(qp, g), lift(s, r)) == lift(compose(s, graph(qp, g)), r));
			CHECK(compose(lift(s, r), graph(qp, f)) == lift(s, compose(r, graph(qp, f))));
		}
	}
}

TEST_CASE("pointwise decomposition of lifts over the shared target") {
	for (auto qp : {boolean(), godel2()}) {
		std::mt19937_64 rng(41);
		FinSet A("A", {"a0", "a1", "a2"});
		FinSet One("1", {"*"});
		for (int i = 0; i < 15; ++i) {
			VRel r = random_rel(qp, X2, A, rng);
			VRel s = random_rel(qp, Y2, A, rng);
			VRel acc = VRel::top(qp, X2, Y2);
			for (std::size_t a = 0; a < A.size(); ++a) {
				VRel ac = cograph(qp, FinMap::constant(One, A, a));  // a° : A -|-> 1
				acc = meet(acc, lift(compose(ac, s), compose(ac, r)));
			}
			CHECK(lift(s, r) == acc);
		}
	}
}

TEST_CASE("square rule: g.r <= s.f implies r.f° <= g°.s") {
	auto q = boolean();
	RelSpace rs(q, X2, Y2), ss(q, W2, Z2);
	for (std::size_t i = 0; i < rs.count(); ++i)
		for (std::size_t j = 0; j < ss.count(); ++j)
			for (std::uint32_t fc = 0; fc < 4; ++fc)
				for (std::uint32_t gc = 0; gc < 4; ++gc) {
					FinMap f(X2, W2, {fc & 1, (fc >> 1) & 1});
					FinMap g(Y2, Z2, {gc & 1, (gc >> 1) & 1});
					VRel r = rs.at(i), s = ss.at(j);
					if (leq(compose(graph(q, g), r), compose(s, graph(q, f))))
						CHECK(leq(compose(r, cograph(q, f)), compose(cograph(q, g), s)));
				}
}

TEST_CASE("relation distance") {
	auto q = godel2();
	std::mt19937_64 rng(5);
	for (int i = 0; i < 20; ++i) {
		VRel r = random_rel(q, X2, Y2, rng);
		CHECK(q->leq(q->unit(), rel_dist(r, r)));
	}
	auto b = boolean();
	RelSpace rs(b, X2, Y2);
	for (std::size_t i = 0; i < rs.count(); ++i)
		for (std::size_t j = 0; j < rs.count(); ++j)
			CHECK((rel_dist(rs.at(i), rs.at(j)) == b->top()) == leq(rs.at(i), rs.at(j)));
}

TEST_CASE("relation distance matches the order-dual sup formula") {
	// over the Lukasiewicz grid, 1 - [r,s] = sup max(s'(x,y) - r'(x,y), 0)
	// where r' = 1 - r and s' = 1 - s read the relations in the dual order
	auto q = Quantale::make(QuantaleSpec::lukasiewicz_grid(10));
	std::mt19937_64 rng(13);
	for (int i = 0; i < 30; ++i) {
		VRel r = random_rel(q, X2, Y2, rng);
		VRel s = random_rel(q, X2, Y2, rng);
		const long n = 10;
		long sup = 0;
		for (std::size_t x = 0; x < 2; ++x)
			for (std::size_t y = 0; y < 2; ++y) {
				long rp = n - static_cast<long>(r.at(x, y).index());
				long sp = n - static_cast<long>(s.at(x, y).index());
				sup = std::max(sup, std::max(sp - rp, 0L));
			}
		CHECK(static_cast<long>(n) - static_cast<long>(rel_dist(r, s).index()) == sup);
	}
}

TEST_CASE("scalar tensor") {
	auto q = Quantale::make(QuantaleSpec::lukasiewicz_grid(10));
	VRel id = VRel::identity(q, X2);
	VRel half = scalar_tensor(q->parse("1/2"), id);
	CHECK(half.at(0, 0) == q->parse("1/2"));
	CHECK(half.at(0, 1) == q->bottom());
	CHECK(scalar_tensor(q->unit(), half) == half);
	std::mt19937_64 rng(17);
	VRel r = random_rel(q, X2, Y2, rng);
	CHECK(scalar_tensor(q->bottom(), r) == VRel::bottom(q, X2, Y2));
}

TEST_CASE("lattice of parallel relations and empty conventions") {
	auto q = boolean();
	CHECK(meet_all(q, X2, Y2, {}) == VRel::top(q, X2, Y2));
	CHECK(join_all(q, X2, Y2, {}) == VRel::bottom(q, X2, Y2));
	std::mt19937_64 rng(19);
	VRel r = random_rel(q, X2, Y2, rng);
	std::vector<VRel> one = {r};
	CHECK(meet_all(q, X2, Y2, one) == r);
	VRel s = random_rel(q, X2, Y2, rng);
	VRel m = meet(r, s);
	for (std::size_t x = 0; x < 2; ++x)
		for (std::size_t y = 0; y < 2; ++y)
			CHECK((m.at(x, y) == q->top()) ==
			      ((r.at(x, y) == q->top()) && (s.at(x, y) == q->top())));
	CHECK_THROWS_AS(meet(r, random_rel(q, X2, Z2, rng)), InputError);
}

TEST_CASE("currying round-trips and the evaluation relation") {
	auto q = boolean();
	FinSet k1 = FinSet::ordinal(1, "k1");
	VRel ev1 = eval_rel(q, k1);
	CHECK(ev1.rows() == 2);
	CHECK(ev1.at(0, 0) == q->bottom());
	CHECK(ev1.at(1, 0) == q->top());

	std::mt19937_64 rng(29);
	FinSet k2 = FinSet::ordinal(2, "k2");
	for (int i = 0; i < 20; ++i) {
		VRel r = random_rel(q, X2, k2, rng);
		FinMap sharp = curry(r);
		CHECK(uncurry(q, sharp, k2) == r);
		// r = ev . (r^sharp)_o
		CHECK(compose(eval_rel(q, k2), graph(q, sharp)) == r);
	}
	// curry(uncurry(f)) = f
	FinSet P = power_set(q, k2);
	for (int i = 0; i < 10; ++i) {
		FinMap f(X2, P, {static_cast<std::uint32_t>(rng() % P.size()),
		                 static_cast<std::uint32_t>(rng() % P.size())});
		FinMap back = curry(uncurry(q, f, k2));
		CHECK(back.assignment() == f.assignment());
	}

	auto g1 = Quantale::make(QuantaleSpec::godel_grid(1));
	CHECK(power_set(g1, k2).size() == 4);

	auto pr = Quantale::make(QuantaleSpec::product_rational());
	CHECK_THROWS_AS(power_set(pr, k1), InputError);
}

TEST_CASE("flattening a composite of maps into the power") {
	auto q = godel2();
	std::mt19937_64 rng(37);
	FinSet I = FinSet::ordinal(2, "I");
	FinSet P = power_set(q, I);
	for (int i = 0; i < 15; ++i) {
		FinMap f(X2, Y2, {static_cast<std::uint32_t>(rng() % 2),
		                  static_cast<std::uint32_t>(rng() % 2)});
		FinMap g(Y2, P, {static_cast<std::uint32_t>(rng() % P.size()),
		                 static_cast<std::uint32_t>(rng() % P.size())});
		CHECK(uncurry(q, g.after(f), I) == compose(uncurry(q, g, I), graph(q, f)));
	}
}

TEST_CASE("relation spaces enumerate in lexicographic matrix order") {
	auto q = godel2();
	RelSpace rs(q, X2, Y2);
	CHECK(rs.count() == 81);
	CHECK(rs.at(0) == VRel::bottom(q, X2, Y2));
	CHECK(rs.at(80) == VRel::top(q, X2, Y2));
	for (std::size_t i = 0; i < rs.count(); i += 5) CHECK(rs.index_of(rs.at(i)) == i);
	CHECK_THROWS_AS(RelSpace(q, power_set(q, FinSet::ordinal(2, "k")), X2, 64), CapError);
}

TEST_CASE("relation JSON round-trips") {
	for (auto spec : {QuantaleSpec::boolean(), QuantaleSpec::godel_grid(2),
	                  QuantaleSpec::lukasiewicz_grid(10)}) {
		auto q = Quantale::make(spec);
		std::mt19937_64 rng(43);
		for (int i = 0; i < 10; ++i) {
			VRel r = random_rel(q, X2, Y2, rng);
			CHECK(VRel::from_json(q, X2, Y2, r.to_json()) == r);
		}
	}
	auto pr = Quantale::make(QuantaleSpec::product_rational());
	VRel r(pr, X2, Y2,
	       {pr->parse("1/3"), pr->parse("0"), pr->parse("1"), pr->parse("22/7000")});
	CHECK(VRel::from_json(pr, X2, Y2, r.to_json()) == r);
}

TEST_CASE("empty sets are legal everywhere") {
	auto q = boolean();
	VRel r(q, E0, Y2, {});
	CHECK(compose(VRel::top(q, Y2, Z2), r).rows() == 0);
	CHECK(converse(r).cols() == 0);
	VRel into_empty(q, X2, E0, {});
	// composing through the empty set yields the bottom relation
	CHECK(compose(r, into_empty) == VRel::bottom(q, X2, Y2));
	CHECK(rel_dist(into_empty, into_empty) == q->top());
	// lifting along a relation out of the empty set gives all of top
	CHECK(lift(into_empty, into_empty) == VRel::top(q, X2, X2));
}
