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

#include "laxrel/quantale.hpp"

using namespace laxrel;

namespace {

MonoidSpec z2() {
	return MonoidSpec{{"e", "a"}, {{"e", "a"}, {"a", "e"}}, "e"};
}

MonoidSpec idem2() {
	return MonoidSpec{{"e", "a"}, {{"e", "a"}, {"a", "a"}}, "e"};
}

} // namespace

TEST_CASE("boolean quantale is the two-element frame") {
	auto q = Quantale::make(QuantaleSpec::boolean());
	CHECK(q->size() == 2);
	CHECK(q->unit() == q->top());
	CHECK(q->tensor(q->top(), q->top()) == q->top());
	CHECK(q->tensor(q->top(), q->bottom()) == q->bottom());
	CHECK(q->integral());
	CHECK(q->nontrivial());
	CHECK(check_quantale_laws(*q).all_pass());
}

TEST_CASE("grid residuals match the t-norm formulas") {
	auto luk = Quantale::make(QuantaleSpec::lukasiewicz_grid(10));
	// hom(0.7, 0.4) = min(1, 1 - 0.7 + 0.4) = 0.7
	CHECK(luk->hom(luk->parse("7/10"), luk->parse("4/10")) == luk->parse("7/10"));
	// tensor(0.7, 0.6) = max(0, 0.3)
	CHECK(luk->tensor(luk->parse("7/10"), luk->parse("6/10")) == luk->parse("3/10"));

	auto godel = Quantale::make(QuantaleSpec::godel_grid(2));
	CHECK(godel->hom(godel->parse("1/2"), godel->parse("1")) == godel->parse("1"));
	CHECK(godel->hom(godel->parse("1"), godel->parse("1/2")) == godel->parse("1/2"));
	CHECK(godel->tensor(godel->parse("1/2"), godel->parse("1")) == godel->parse("1/2"));
}

TEST_CASE("law suites pass exhaustively on the built-in finite kinds") {
	for (auto spec : {QuantaleSpec::boolean(), QuantaleSpec::godel_grid(4),
	                  QuantaleSpec::lukasiewicz_grid(4), QuantaleSpec::free_on_monoid(z2()),
	                  QuantaleSpec::free_on_monoid(idem2()), QuantaleSpec::godel_grid(1)}) {
		auto q = Quantale::make(spec);
		LawReport rep = check_quantale_laws(*q);
		INFO(rep.text());
		CHECK(rep.all_pass());
	}
}

TEST_CASE("integrality flags") {
	CHECK(Quantale::make(QuantaleSpec::godel_grid(3))->integral());
	CHECK(Quantale::make(QuantaleSpec::lukasiewicz_grid(3))->integral());
	CHECK(Quantale::make(QuantaleSpec::product_rational())->integral());
	// the free quantale on Z2 has unit {e} but top {e,a}
	CHECK_FALSE(Quantale::make(QuantaleSpec::free_on_monoid(z2()))->integral());
}

TEST_CASE("free quantale tensor is the elementwise product") {
	auto q = Quantale::make(QuantaleSpec::free_on_monoid(z2()));
	CHECK(q->size() == 4);
	Value a = q->parse("{a}");
	CHECK(q->tensor(a, a) == q->parse("{e}"));
	CHECK(q->tensor(q->parse("{e,a}"), a) == q->parse("{e,a}"));
	CHECK(q->tensor(q->parse("{}"), a) == q->parse("{}"));
	CHECK(q->unit() == q->parse("{e}"));
	// adjoint: hom({a}, {e}) = largest B with {a}B <= {e}
	CHECK(q->hom(a, q->parse("{e}")) == q->parse("{a}"));
}

TEST_CASE("invalid monoid tables are construction errors") {
	MonoidSpec bad = z2();
	bad.unit = "b";
	CHECK_THROWS_AS(Quantale::make(QuantaleSpec::free_on_monoid(bad)), InputError);
	// non-associative: a.a = a but table says (a.a).a = e.a mismatch
	MonoidSpec nonassoc{{"e", "a", "b"},
	                    {{"e", "a", "b"}, {"a", "e", "e"}, {"b", "e", "e"}},
	                    "e"};
	CHECK_THROWS_AS(Quantale::make(QuantaleSpec::free_on_monoid(nonassoc)), InputError);
	MonoidSpec noncomm{{"e", "a", "b"},
	                   {{"e", "a", "b"}, {"a", "a", "a"}, {"b", "b", "b"}},
	                   "e"};
	CHECK_THROWS_AS(Quantale::make(QuantaleSpec::free_on_monoid(noncomm)), InputError);
}

TEST_CASE("corrupted tensor table fails with a witness") {
	auto q = Quantale::make(QuantaleSpec::lukasiewicz_grid(4));
	auto bad = q->with_tensor_override(4, 4, 0);  // 1 (x) 1 := 0 breaks the unit law
	LawReport rep = check_quantale_laws(*bad);
	CHECK_FALSE(rep.all_pass());
	bool witnessed = false;
	for (const auto& c : rep.checks) witnessed = witnessed || (!c.pass && !c.witness.empty());
	CHECK(witnessed);
}

TEST_CASE("adjunction and derived identities on finite carriers") {
	for (auto spec : {QuantaleSpec::godel_grid(3), QuantaleSpec::lukasiewicz_grid(3),
	                  QuantaleSpec::free_on_monoid(idem2())}) {
		auto q = Quantale::make(spec);
		for (std::size_t i = 0; i < q->size(); ++i) {
			for (std::size_t j = 0; j < q->size(); ++j) {
				Value u = q->element(i), v = q->element(j);
				// hom(k, v) = v and u (x) hom(u, v) <= v
				CHECK(q->hom(q->unit(), v) == v);
				CHECK(q->leq(q->tensor(u, q->hom(u, v)), v));
			}
		}
	}
}

TEST_CASE("product-rational quantale: exact residuals, sampled law report") {
	auto q = Quantale::make(QuantaleSpec::product_rational());
	CHECK_FALSE(q->finite());
	Value u = q->parse("2/3"), v = q->parse("1/2");
	CHECK(q->tensor(u, v) == q->parse("1/3"));
	CHECK(q->hom(u, v) == q->parse("3/4"));
	CHECK(q->hom(q->parse("0"), v) == q->parse("1"));
	CHECK(q->hom(v, u) == q->parse("1"));
	LawReport rep = check_quantale_laws(*q);
	CHECK(rep.all_pass());
	CHECK(rep.find("sampling") != nullptr);
	CHECK_THROWS_AS(q->size(), InputError);
	CHECK_THROWS_AS(q->element(0), InputError);
}

TEST_CASE("element names parse back exactly") {
	for (auto spec : {QuantaleSpec::boolean(), QuantaleSpec::godel_grid(4),
	                  QuantaleSpec::lukasiewicz_grid(10), QuantaleSpec::free_on_monoid(z2())}) {
		auto q = Quantale::make(spec);
		for (std::size_t i = 0; i < q->size(); ++i) {
			Value v = q->element(i);
			CHECK(q->parse(q->name(v)) == v);
			CHECK(q->value_from_json(q->value_to_json(v)) == v);
		}
	}
	auto grid = Quantale::make(QuantaleSpec::godel_grid(10));
	CHECK(grid->parse("1/2") == grid->element(5));
	CHECK(grid->parse("3/10") == grid->element(3));
	CHECK_THROWS_AS(grid->parse("1/3"), InputError);
	CHECK_THROWS_AS(grid->parse("7/5"), InputError);
}

TEST_CASE("quantale spec JSON round-trips") {
	for (auto spec : {QuantaleSpec::boolean(), QuantaleSpec::godel_grid(4),
	                  QuantaleSpec::lukasiewicz_grid(10), QuantaleSpec::product_rational(),
	                  QuantaleSpec::free_on_monoid(z2())}) {
		CHECK(QuantaleSpec::from_json(spec.to_json()) == spec);
	}
}

TEST_CASE("grid quantales need n >= 1") {
	CHECK_THROWS_AS(Quantale::make(QuantaleSpec::godel_grid(0)), InputError);
	CHECK_THROWS_AS(Quantale::make(QuantaleSpec::lukasiewicz_grid(-2)), InputError);
}
