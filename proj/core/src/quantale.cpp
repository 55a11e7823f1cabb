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

#include "laxrel/quantale.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace laxrel {
namespace {

std::string fraction_name(long num, long den) {
	long g = std::gcd(num, den);
	num /= g;
	den /= g;
	if (den == 1) return std::to_string(num);
	return std::to_string(num) + "/" + std::to_string(den);
}

// Canonical name of a subset of the monoid, in element-list order.
std::string subset_name(std::uint32_t mask, const std::vector<std::string>& elems) {
	std::string out = "{";
	bool first = true;
	for (std::size_t i = 0; i < elems.size(); ++i) {
		if (mask & (1u << i)) {
			if (!first) out += ",";
			out += elems[i];
			first = false;
		}
	}
	out += "}";
	return out;
}

} // namespace

QuantaleSpec QuantaleSpec::boolean() {
	QuantaleSpec s;
	s.kind = QuantaleKind::Boolean;
	return s;
}

QuantaleSpec QuantaleSpec::godel_grid(int n) {
	QuantaleSpec s;
	s.kind = QuantaleKind::GodelGrid;
	s.n = n;
	return s;
}

QuantaleSpec QuantaleSpec::lukasiewicz_grid(int n) {
	QuantaleSpec s;
	s.kind = QuantaleKind::LukasiewiczGrid;
	s.n = n;
	return s;
}

QuantaleSpec QuantaleSpec::product_rational() {
	QuantaleSpec s;
	s.kind = QuantaleKind::ProductRational;
	return s;
}

QuantaleSpec QuantaleSpec::free_on_monoid(MonoidSpec m) {
	QuantaleSpec s;
	s.kind = QuantaleKind::FreeOnMonoid;
	s.monoid = std::move(m);
	return s;
}

nlohmann::json QuantaleSpec::to_json() const {
	switch (kind) {
	case QuantaleKind::Boolean:
		return {{"kind", "boolean"}};
	case QuantaleKind::GodelGrid:
		return {{"kind", "godel-grid"}, {"n", n}};
	case QuantaleKind::LukasiewiczGrid:
		return {{"kind", "lukasiewicz-grid"}, {"n", n}};
	case QuantaleKind::ProductRational:
		return {{"kind", "product-rational"}};
	case QuantaleKind::FreeOnMonoid:
		return {{"kind", "free-on-monoid"},
		        {"elements", monoid.elements},
		        {"table", monoid.table},
		        {"unit", monoid.unit}};
	}
	throw InputError("unknown quantale kind");
}

QuantaleSpec QuantaleSpec::from_json(const nlohmann::json& j) {
	const std::string kind = j.at("kind").get<std::string>();
	if (kind == "boolean") return boolean();
	if (kind == "godel-grid") return godel_grid(j.at("n").get<int>());
	if (kind == "lukasiewicz-grid") return lukasiewicz_grid(j.at("n").get<int>());
	if (kind == "product-rational") return product_rational();
	if (kind == "free-on-monoid") {
		MonoidSpec m;
		m.elements = j.at("elements").get<std::vector<std::string>>();
		m.table = j.at("table").get<std::vector<std::vector<std::string>>>();
		m.unit = j.at("unit").get<std::string>();
		return free_on_monoid(std::move(m));
	}
	throw InputError("unknown quantale kind: " + kind);
}

std::string QuantaleSpec::description() const {
	switch (kind) {
	case QuantaleKind::Boolean: return "boolean";
	case QuantaleKind::GodelGrid: return "godel-grid(" + std::to_string(n) + ")";
	case QuantaleKind::LukasiewiczGrid: return "lukasiewicz-grid(" + std::to_string(n) + ")";
	case QuantaleKind::ProductRational: return "product-rational";
	case QuantaleKind::FreeOnMonoid: return "free-on-monoid";
	}
	return "?";
}

QuantalePtr Quantale::make(const QuantaleSpec& spec) {
	auto q = std::shared_ptr<Quantale>(new Quantale());
	q->spec_ = spec;

	switch (spec.kind) {
	case QuantaleKind::Boolean:
	case QuantaleKind::GodelGrid:
	case QuantaleKind::LukasiewiczGrid: {
		const long n = spec.kind == QuantaleKind::Boolean ? 1 : spec.n;
		if (n < 1) throw InputError("grid quantale needs n >= 1");
		const std::size_t m = static_cast<std::size_t>(n) + 1;
		q->m_ = m;
		q->names_.resize(m);
		for (std::size_t i = 0; i < m; ++i)
			q->names_[i] = fraction_name(static_cast<long>(i), n);
		q->leq_.assign(m * m, 0);
		q->join_.assign(m * m, 0);
		q->meet_.assign(m * m, 0);
		q->tensor_.assign(m * m, 0);
		q->hom_.assign(m * m, 0);
		for (std::size_t i = 0; i < m; ++i) {
			for (std::size_t j = 0; j < m; ++j) {
				const long a = static_cast<long>(i), b = static_cast<long>(j);
				q->leq_[i * m + j] = a <= b;
				q->join_[i * m + j] = static_cast<std::uint32_t>(std::max(a, b));
				q->meet_[i * m + j] = static_cast<std::uint32_t>(std::min(a, b));
				if (spec.kind == QuantaleKind::LukasiewiczGrid) {
					q->tensor_[i * m + j] = static_cast<std::uint32_t>(std::max(0L, a + b - n));
					q->hom_[i * m + j] = static_cast<std::uint32_t>(std::min(n, n - a + b));
				} else {
					// boolean is the two-element frame: tensor = meet
					q->tensor_[i * m + j] = static_cast<std::uint32_t>(std::min(a, b));
					q->hom_[i * m + j] = a <= b ? static_cast<std::uint32_t>(n)
					                            : static_cast<std::uint32_t>(b);
				}
			}
		}
		q->bottom_ = Value::index(0);
		q->top_ = Value::index(static_cast<std::uint32_t>(n));
		q->unit_ = q->top_;
		break;
	}
	case QuantaleKind::ProductRational: {
		q->bottom_ = Value::rational(Rational(0));
		q->top_ = Value::rational(Rational(1));
		q->unit_ = q->top_;
		break;
	}
	case QuantaleKind::FreeOnMonoid: {
		const auto& mo = spec.monoid;
		const std::size_t k = mo.elements.size();
		if (k == 0) throw InputError("monoid needs at least one element");
		if (k > 16) throw InputError("monoid too large (max 16 elements)");
		auto idx_of = [&](const std::string& s) -> std::size_t {
			for (std::size_t i = 0; i < k; ++i)
				if (mo.elements[i] == s) return i;
			throw InputError("monoid table mentions unknown element: " + s);
		};
		for (std::size_t i = 0; i < k; ++i)
			for (std::size_t j = i + 1; j < k; ++j)
				if (mo.elements[i] == mo.elements[j])
					throw InputError("monoid elements not distinct: " + mo.elements[i]);
		if (mo.table.size() != k) throw InputError("monoid table has wrong shape");
		std::vector<std::size_t> prod(k * k);
		for (std::size_t i = 0; i < k; ++i) {
			if (mo.table[i].size() != k) throw InputError("monoid table has wrong shape");
			for (std::size_t j = 0; j < k; ++j) prod[i * k + j] = idx_of(mo.table[i][j]);
		}
		const std::size_t e = idx_of(mo.unit);
		for (std::size_t i = 0; i < k; ++i) {
			if (prod[e * k + i] != i || prod[i * k + e] != i)
				throw InputError("monoid unit law fails at element " + mo.elements[i]);
			for (std::size_t j = 0; j < k; ++j) {
				if (prod[i * k + j] != prod[j * k + i])
					throw InputError("monoid not commutative at (" + mo.elements[i] + "," +
					                 mo.elements[j] + ")");
				for (std::size_t l = 0; l < k; ++l) {
					if (prod[prod[i * k + j] * k + l] != prod[i * k + prod[j * k + l]])
						throw InputError("monoid not associative at (" + mo.elements[i] + "," +
						                 mo.elements[j] + "," + mo.elements[l] + ")");
				}
			}
		}
		const std::size_t m = std::size_t{1} << k;
		q->m_ = m;
		q->names_.resize(m);
		for (std::size_t a = 0; a < m; ++a)
			q->names_[a] = subset_name(static_cast<std::uint32_t>(a), mo.elements);
		q->leq_.assign(m * m, 0);
		q->join_.assign(m * m, 0);
		q->meet_.assign(m * m, 0);
		q->tensor_.assign(m * m, 0);
		q->hom_.assign(m * m, 0);
		for (std::size_t a = 0; a < m; ++a) {
			for (std::size_t b = 0; b < m; ++b) {
				q->leq_[a * m + b] = (a & ~b) == 0;
				q->join_[a * m + b] = static_cast<std::uint32_t>(a | b);
				q->meet_[a * m + b] = static_cast<std::uint32_t>(a & b);
				std::size_t t = 0;
				for (std::size_t i = 0; i < k; ++i)
					if (a & (std::size_t{1} << i))
						for (std::size_t j = 0; j < k; ++j)
							if (b & (std::size_t{1} << j)) t |= std::size_t{1} << prod[i * k + j];
				q->tensor_[a * m + b] = static_cast<std::uint32_t>(t);
			}
		}
		// hom(A,C) = { b | forall a in A, a.b in C }: the largest B with
		// A (x) B <= C, since tensor is computed elementwise.
		for (std::size_t a = 0; a < m; ++a) {
			for (std::size_t c = 0; c < m; ++c) {
				std::size_t h = 0;
				for (std::size_t j = 0; j < k; ++j) {
					bool ok = true;
					for (std::size_t i = 0; i < k && ok; ++i)
						if (a & (std::size_t{1} << i))
							ok = (c & (std::size_t{1} << prod[i * k + j])) != 0;
					if (ok) h |= std::size_t{1} << j;
				}
				q->hom_[a * m + c] = static_cast<std::uint32_t>(h);
			}
		}
		q->bottom_ = Value::index(0);
		q->top_ = Value::index(static_cast<std::uint32_t>(m - 1));
		q->unit_ = Value::index(std::uint32_t{1} << e);
		break;
	}
	}
	return q;
}

std::size_t Quantale::size() const {
	if (!finite()) throw InputError("product-rational quantale has an infinite carrier");
	return m_;
}

bool Quantale::integral() const { return unit_ == top_; }

bool Quantale::nontrivial() const { return !(bottom_ == top_); }

Value Quantale::element(std::size_t i) const {
	if (!finite()) throw InputError("product-rational quantale has an infinite carrier");
	if (i >= m_) throw InputError("carrier index out of range");
	return Value::index(static_cast<std::uint32_t>(i));
}

bool Quantale::leq(const Value& u, const Value& v) const {
	if (!finite()) return u.rational() <= v.rational();
	return leq_[static_cast<std::size_t>(u.index()) * m_ + v.index()] != 0;
}

Value Quantale::join(const Value& u, const Value& v) const {
	if (!finite()) return Value::rational(max(u.rational(), v.rational()));
	return Value::index(tab(join_, u.index(), v.index()));
}

Value Quantale::meet(const Value& u, const Value& v) const {
	if (!finite()) return Value::rational(min(u.rational(), v.rational()));
	return Value::index(tab(meet_, u.index(), v.index()));
}

Value Quantale::tensor(const Value& u, const Value& v) const {
	if (!finite()) return Value::rational(u.rational() * v.rational());
	return Value::index(tab(tensor_, u.index(), v.index()));
}

Value Quantale::hom(const Value& u, const Value& v) const {
	if (!finite()) {
		// product t-norm residual: hom(u,v) = min(v/u, 1), with hom(0,-) = 1
		if (u.rational() == Rational(0)) return Value::rational(Rational(1));
		return Value::rational(min(v.rational() / u.rational(), Rational(1)));
	}
	return Value::index(tab(hom_, u.index(), v.index()));
}

Value Quantale::join_all(std::span<const Value> vs) const {
	Value acc = bottom();
	for (const auto& v : vs) acc = join(acc, v);
	return acc;
}

Value Quantale::meet_all(std::span<const Value> vs) const {
	Value acc = top();
	for (const auto& v : vs) acc = meet(acc, v);
	return acc;
}

std::string Quantale::name(const Value& v) const {
	if (!finite()) return v.rational().str();
	return names_[v.index()];
}

Value Quantale::parse(const std::string& s) const {
	if (!finite()) {
		Rational r = Rational::parse(s);
		if (r < Rational(0) || r > Rational(1))
			throw InputError("rational element out of [0,1]: " + s);
		return Value::rational(std::move(r));
	}
	for (std::size_t i = 0; i < m_; ++i)
		if (names_[i] == s) return Value::index(static_cast<std::uint32_t>(i));
	// grid kinds: accept any fraction p/q that lands exactly on the grid
	if (spec_.kind != QuantaleKind::FreeOnMonoid) {
		const long n = spec_.kind == QuantaleKind::Boolean ? 1 : spec_.n;
		std::size_t slash = s.find('/');
		try {
			long p = std::stol(s.substr(0, slash));
			long d = slash == std::string::npos ? 1 : std::stol(s.substr(slash + 1));
			if (d > 0 && p >= 0 && (p * n) % d == 0 && p * n <= d * n * 1 && p <= d) {
				long i = (p * n) / d;
				if (i >= 0 && i <= n) return Value::index(static_cast<std::uint32_t>(i));
			}
		} catch (const std::exception&) {
			// fall through to the error below
		}
	}
	throw InputError("not a carrier element of " + spec_.description() + ": " + s);
}

nlohmann::json Quantale::value_to_json(const Value& v) const { return name(v); }

Value Quantale::value_from_json(const nlohmann::json& j) const {
	if (j.is_number_integer()) {
		long i = j.get<long>();
		if (!finite()) throw InputError("rational quantale elements must be strings");
		if (i < 0 || static_cast<std::size_t>(i) >= m_)
			throw InputError("carrier index out of range: " + std::to_string(i));
		return Value::index(static_cast<std::uint32_t>(i));
	}
	if (j.is_string()) return parse(j.get<std::string>());
	if (j.is_boolean() && spec_.kind == QuantaleKind::Boolean)
		return j.get<bool>() ? top() : bottom();
	throw InputError("cannot read quantale element from JSON: " + j.dump());
}

QuantalePtr Quantale::with_tensor_override(std::size_t i, std::size_t j, std::size_t result) const {
	if (!finite()) throw InputError("tensor override needs a finite carrier");
	if (i >= m_ || j >= m_ || result >= m_) throw InputError("tensor override out of range");
	auto q = std::shared_ptr<Quantale>(new Quantale(*this));
	q->tensor_[i * m_ + j] = static_cast<std::uint32_t>(result);
	return q;
}

namespace {

LawReport check_finite_quantale(const Quantale& q) {
	LawReport rep;
	rep.subject = "quantale " + q.spec().description();
	const std::size_t m = q.size();
	auto nm = [&](std::size_t i) { return q.name(q.element(i)); };

	{
		bool ok = true;
		std::string w;
		for (std::size_t i = 0; i < m && ok; ++i)
			if (!q.leq(q.element(i), q.element(i))) {
				ok = false;
				w = "u=" + nm(i);
			}
		rep.add("order-reflexive", ok, w);
	}
	{
		bool ok = true;
		std::string w;
		for (std::size_t i = 0; i < m && ok; ++i)
			for (std::size_t j = 0; j < m && ok; ++j)
				if (i != j && q.leq(q.element(i), q.element(j)) && q.leq(q.element(j), q.element(i))) {
					ok = false;
					w = "u=" + nm(i) + " v=" + nm(j);
				}
		rep.add("order-antisymmetric", ok, w);
	}
	{
		bool ok = true;
		std::string w;
		for (std::size_t i = 0; i < m && ok; ++i)
			for (std::size_t j = 0; j < m && ok; ++j)
				for (std::size_t l = 0; l < m && ok; ++l)
					if (q.leq(q.element(i), q.element(j)) && q.leq(q.element(j), q.element(l)) &&
					    !q.leq(q.element(i), q.element(l))) {
						ok = false;
						w = "u=" + nm(i) + " v=" + nm(j) + " w=" + nm(l);
					}
		rep.add("order-transitive", ok, w);
	}
	// binary join/meet against brute-force lub/glb; with bottom and top this
	// certifies the finite carrier is a complete lattice
	{
		bool ok = true;
		std::string w;
		for (std::size_t i = 0; i < m && ok; ++i) {
			for (std::size_t j = 0; j < m && ok; ++j) {
				const Value u = q.element(i), v = q.element(j);
				const Value s = q.join(u, v);
				if (!q.leq(u, s) || !q.leq(v, s)) {
					ok = false;
					w = "join(" + nm(i) + "," + nm(j) + ") not an upper bound";
					break;
				}
				for (std::size_t l = 0; l < m; ++l) {
					const Value c = q.element(l);
					if (q.leq(u, c) && q.leq(v, c) && !q.leq(s, c)) {
						ok = false;
						w = "join(" + nm(i) + "," + nm(j) + ") above candidate " + nm(l);
						break;
					}
				}
			}
		}
		rep.add("join-is-lub", ok, w);
	}
	{
		bool ok = true;
		std::string w;
		for (std::size_t i = 0; i < m && ok; ++i) {
			for (std::size_t j = 0; j < m && ok; ++j) {
				const Value u = q.element(i), v = q.element(j);
				const Value s = q.meet(u, v);
				if (!q.leq(s, u) || !q.leq(s, v)) {
					ok = false;
					w = "meet(" + nm(i) + "," + nm(j) + ") not a lower bound";
					break;
				}
				for (std::size_t l = 0; l < m; ++l) {
					const Value c = q.element(l);
					if (q.leq(c, u) && q.leq(c, v) && !q.leq(c, s)) {
						ok = false;
						w = "meet(" + nm(i) + "," + nm(j) + ") below candidate " + nm(l);
						break;
					}
				}
			}
		}
		rep.add("meet-is-glb", ok, w);
	}
	{
		bool ok = true;
		std::string w;
		for (std::size_t i = 0; i < m; ++i) {
			if (!q.leq(q.bottom(), q.element(i)) || !q.leq(q.element(i), q.top())) {
				ok = false;
				w = "u=" + nm(i);
				break;
			}
		}
		rep.add("bottom-least-top-greatest", ok, w);
	}
	{
		bool ok = true;
		std::string w;
		for (std::size_t i = 0; i < m && ok; ++i)
			for (std::size_t j = 0; j < m && ok; ++j)
				for (std::size_t l = 0; l < m && ok; ++l) {
					const Value a = q.element(i), b = q.element(j), c = q.element(l);
					if (!(q.tensor(q.tensor(a, b), c) == q.tensor(a, q.tensor(b, c)))) {
						ok = false;
						w = "u=" + nm(i) + " v=" + nm(j) + " w=" + nm(l);
					}
				}
		rep.add("tensor-associative", ok, w);
	}
	{
		bool ok = true;
		std::string w;
		for (std::size_t i = 0; i < m && ok; ++i)
			for (std::size_t j = 0; j < m && ok; ++j)
				if (!(q.tensor(q.element(i), q.element(j)) == q.tensor(q.element(j), q.element(i)))) {
					ok = false;
					w = "u=" + nm(i) + " v=" + nm(j);
				}
		rep.add("tensor-commutative", ok, w);
	}
	{
		bool ok = true;
		std::string w;
		for (std::size_t i = 0; i < m && ok; ++i)
			if (!(q.tensor(q.unit(), q.element(i)) == q.element(i))) {
				ok = false;
				w = "u=" + nm(i);
			}
		rep.add("tensor-unit", ok, w);
	}
	{
		bool ok = true;
		std::string w;
		for (std::size_t i = 0; i < m && ok; ++i) {
			const Value u = q.element(i);
			if (!(q.tensor(u, q.bottom()) == q.bottom())) {
				ok = false;
				w = "u=" + nm(i) + " (empty join)";
				break;
			}
			for (std::size_t j = 0; j < m && ok; ++j)
				for (std::size_t l = 0; l < m && ok; ++l) {
					const Value v = q.element(j), x = q.element(l);
					if (!(q.tensor(u, q.join(v, x)) == q.join(q.tensor(u, v), q.tensor(u, x)))) {
						ok = false;
						w = "u=" + nm(i) + " v=" + nm(j) + " w=" + nm(l);
					}
				}
		}
		rep.add("tensor-preserves-joins", ok, w);
	}
	{
		bool ok = true;
		std::string w;
		for (std::size_t i = 0; i < m && ok; ++i)
			for (std::size_t j = 0; j < m && ok; ++j)
				for (std::size_t l = 0; l < m && ok; ++l) {
					const Value u = q.element(i), v = q.element(j), x = q.element(l);
					const bool lhs = q.leq(q.tensor(u, v), x);
					const bool rhs = q.leq(v, q.hom(u, x));
					if (lhs != rhs) {
						ok = false;
						w = "u=" + nm(i) + " v=" + nm(j) + " w=" + nm(l);
					}
				}
		rep.add("adjunction", ok, w);
	}
	rep.add("nontrivial", q.nontrivial(), q.nontrivial() ? "" : "bottom = top");
	rep.note("integral-flag", q.integral() ? "k = top" : "k != top");
	return rep;
}

LawReport check_rational_quantale(const Quantale& q) {
	LawReport rep;
	rep.subject = "quantale " + q.spec().description();
	std::vector<Value> samples;
	for (long d = 1; d <= 6; ++d)
		for (long p = 0; p <= d; ++p) samples.push_back(Value::rational(Rational(p, d)));
	samples.push_back(Value::rational(Rational(2, 3)));
	samples.push_back(Value::rational(Rational(3, 4)));
	samples.push_back(Value::rational(Rational(7, 10)));
	rep.note("sampling", "checked on " + std::to_string(samples.size()) + " sampled rationals");

	bool assoc = true, comm = true, unital = true, dist = true, adj = true;
	std::string wa, wc, wu, wd, wj;
	for (const auto& u : samples)
		for (const auto& v : samples) {
			if (!(q.tensor(u, v) == q.tensor(v, u)) && comm) {
				comm = false;
				wc = "u=" + q.name(u) + " v=" + q.name(v);
			}
			for (const auto& w : samples) {
				if (!(q.tensor(q.tensor(u, v), w) == q.tensor(u, q.tensor(v, w))) && assoc) {
					assoc = false;
					wa = "u=" + q.name(u) + " v=" + q.name(v) + " w=" + q.name(w);
				}
				if (!(q.tensor(u, q.join(v, w)) == q.join(q.tensor(u, v), q.tensor(u, w))) && dist) {
					dist = false;
					wd = "u=" + q.name(u) + " v=" + q.name(v) + " w=" + q.name(w);
				}
				if ((q.leq(q.tensor(u, v), w) != q.leq(v, q.hom(u, w))) && adj) {
					adj = false;
					wj = "u=" + q.name(u) + " v=" + q.name(v) + " w=" + q.name(w);
				}
			}
		}
	for (const auto& u : samples)
		if (!(q.tensor(q.unit(), u) == u) && unital) {
			unital = false;
			wu = "u=" + q.name(u);
		}
	rep.add("tensor-associative", assoc, wa);
	rep.add("tensor-commutative", comm, wc);
	rep.add("tensor-unit", unital, wu);
	rep.add("tensor-preserves-joins", dist, wd);
	rep.add("adjunction", adj, wj);
	rep.add("nontrivial", q.nontrivial());
	rep.note("integral-flag", "k = top");
	return rep;
}

} // namespace

LawReport check_quantale_laws(const Quantale& q) {
	if (q.finite()) return check_finite_quantale(q);
	return check_rational_quantale(q);
}

} // namespace laxrel
