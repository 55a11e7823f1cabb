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

#include <benchmark/benchmark.h>

#include "laxrel/laxext.hpp"

using namespace laxrel;

namespace {

VRel sample_relation(const QuantalePtr& q, const FinSet& X, const FinSet& Y) {
	std::vector<Value> e;
	e.reserve(X.size() * Y.size());
	for (std::size_t i = 0; i < X.size() * Y.size(); ++i)
		e.push_back(q->element((i * 7 + 3) % q->size()));
	return VRel(q, X, Y, std::move(e));
}

void BM_KantorovichDiamond(benchmark::State& state) {
	auto q = Quantale::make(QuantaleSpec::godel_grid(2));
	FinFunctor P(q, FunctorTerm::pow());
	LaxExtension E = LaxExtension::kantorovich(P, {builtin_diamond(P)});
	FinSet X("X", {"x0", "x1"}), Y("Y", {"y0", "y1"});
	VRel r = sample_relation(q, X, Y);
	const int threads = static_cast<int>(state.range(0));
	for (auto _ : state) benchmark::DoNotOptimize(E.apply(r, threads));
}
BENCHMARK(BM_KantorovichDiamond)->Arg(1)->Arg(2)->Arg(4);

void BM_HausdorffClosedForm(benchmark::State& state) {
	auto q = Quantale::make(QuantaleSpec::lukasiewicz_grid(10));
	LaxExtension E = LaxExtension::hausdorff(q, LaxExtension::Subquantale::Two);
	const auto n = static_cast<std::size_t>(state.range(0));
	std::vector<std::string> xs, ys;
	for (std::size_t i = 0; i < n; ++i) {
		xs.push_back("x" + std::to_string(i));
		ys.push_back("y" + std::to_string(i));
	}
	FinSet X("X", xs), Y("Y", ys);
	VRel r = sample_relation(q, X, Y);
	for (auto _ : state) benchmark::DoNotOptimize(E.apply(r));
}
BENCHMARK(BM_HausdorffClosedForm)->Arg(4)->Arg(8);

void BM_SimDistance(benchmark::State& state) {
	auto q = Quantale::make(QuantaleSpec::boolean());
	FinFunctor P(q, FunctorTerm::pow());
	LaxExtension E = LaxExtension::hausdorff(q, LaxExtension::Subquantale::Two);
	FinSet X("X", {"s0", "s1", "s2", "s3"});
	FinSet PX = P.on_obj(X);
	FinMap c = FinMap::of_names(X, PX, {"{s1}", "{s2}", "{s3,s0}", "{}"});
	for (auto _ : state) benchmark::DoNotOptimize(sim_distance(E, c));
}
BENCHMARK(BM_SimDistance);

void BM_MossExtraction(benchmark::State& state) {
	auto q = Quantale::make(QuantaleSpec::boolean());
	FinFunctor P(q, FunctorTerm::pow());
	LaxExtension E = LaxExtension::hausdorff(q, LaxExtension::Subquantale::Two);
	for (auto _ : state) benchmark::DoNotOptimize(moss_lifting(E, 1, 1));
}
BENCHMARK(BM_MossExtraction);

} // namespace

BENCHMARK_MAIN();
