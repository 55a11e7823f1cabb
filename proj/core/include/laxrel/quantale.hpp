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

/**
 * @file
 *
 * Commutative unital quantales with computable joins, meets, tensor and
 * residual. A quantale is a complete lattice carrying a commutative monoid
 * (V, tensor, k) such that u (x) - preserves suprema; hom(u,-) is the right
 * adjoint of u (x) -, characterised by
 *
 *     u (x) v <= w   iff   v <= hom(u, w).
 *
 * Built-in families:
 *   - boolean: the two-element frame, tensor = meet, k = top;
 *   - godel-grid(n): {0, 1/n, ..., 1} with tensor = min and the branching
 *     residual hom(u,v) = 1 if u <= v else v;
 *   - lukasiewicz-grid(n): same carrier with u (x) v = max(0, u+v-1) and
 *     hom(u,v) = min(1, 1-u+v);
 *   - product-rational: exact rationals in [0,1] under multiplication,
 *     hom(u,v) = min(v/u, 1) for u != 0 and 1 otherwise. Infinite carrier:
 *     every enumeration-dependent operation rejects it.
 *   - free-on-monoid(M): all subsets of a finite commutative monoid M with
 *     elementwise product and unit {e}.
 *
 * Grid carriers are exact fractions with denominator n. No floating point is
 * used anywhere, so every equality test is exact.
 */

#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "laxrel/errors.hpp"
#include "laxrel/law_report.hpp"
#include "laxrel/rational.hpp"

namespace laxrel {

/// One quantale element. Finite kinds identify elements by carrier index;
/// the exact-rational kind stores the rational itself.
class Value {
public:
	Value() : v_(std::uint32_t{0}) {}

	static Value index(std::uint32_t i) { return Value(i); }
	static Value rational(Rational r) { return Value(std::move(r)); }

	bool is_index() const { return std::holds_alternative<std::uint32_t>(v_); }
	std::uint32_t index() const { return std::get<std::uint32_t>(v_); }
	const Rational& rational() const { return std::get<Rational>(v_); }

	friend bool operator==(const Value& a, const Value& b) { return a.v_ == b.v_; }
	friend bool operator!=(const Value& a, const Value& b) { return !(a == b); }

private:
	explicit Value(std::uint32_t i) : v_(i) {}
	explicit Value(Rational r) : v_(std::move(r)) {}
	std::variant<std::uint32_t, Rational> v_;
};

enum class QuantaleKind {
	Boolean,
	GodelGrid,
	LukasiewiczGrid,
	ProductRational,
	FreeOnMonoid,
};

/// Multiplication table of a finite commutative monoid, by element name.
struct MonoidSpec {
	std::vector<std::string> elements;
	std::vector<std::vector<std::string>> table;
	std::string unit;

	friend bool operator==(const MonoidSpec&, const MonoidSpec&) = default;
};

struct QuantaleSpec {
	QuantaleKind kind = QuantaleKind::Boolean;
	int n = 1;           // grid denominator
	MonoidSpec monoid;   // free-on-monoid only

	static QuantaleSpec boolean();
	static QuantaleSpec godel_grid(int n);
	static QuantaleSpec lukasiewicz_grid(int n);
	static QuantaleSpec product_rational();
	static QuantaleSpec free_on_monoid(MonoidSpec m);

	nlohmann::json to_json() const;
	static QuantaleSpec from_json(const nlohmann::json& j);
	std::string description() const;

	friend bool operator==(const QuantaleSpec&, const QuantaleSpec&) = default;
};

class Quantale;
using QuantalePtr = std::shared_ptr<const Quantale>;

/// Immutable value algebra. All operations are pure and safe to call from
/// multiple threads.
class Quantale {
public:
	static QuantalePtr make(const QuantaleSpec& spec);

	const QuantaleSpec& spec() const { return spec_; }
	QuantaleKind kind() const { return spec_.kind; }

	/// False exactly for the product-rational kind.
	bool finite() const { return spec_.kind != QuantaleKind::ProductRational; }
	std::size_t size() const;
	bool integral() const;   // k = top
	bool nontrivial() const; // bottom != top

	Value bottom() const { return bottom_; }
	Value top() const { return top_; }
	Value unit() const { return unit_; }
	Value element(std::size_t i) const;

	bool leq(const Value& u, const Value& v) const;
	Value join(const Value& u, const Value& v) const;
	Value meet(const Value& u, const Value& v) const;
	Value tensor(const Value& u, const Value& v) const;
	Value hom(const Value& u, const Value& v) const;

	/// Empty joins are bottom, empty meets are top.
	Value join_all(std::span<const Value> vs) const;
	Value meet_all(std::span<const Value> vs) const;

	std::string name(const Value& v) const;
	/// Accepts canonical element names; grid kinds also accept any fraction
	/// that lands exactly on the grid.
	Value parse(const std::string& s) const;

	/// JSON form of an element: canonical name string, or an integer carrier
	/// index on input.
	nlohmann::json value_to_json(const Value& v) const;
	Value value_from_json(const nlohmann::json& j) const;

	/// Returns a copy with one tensor-table entry replaced. Deliberately
	/// breaks the laws; negative-control hook for the law checker.
	QuantalePtr with_tensor_override(std::size_t i, std::size_t j, std::size_t result) const;

	bool same_as(const Quantale& other) const { return spec_ == other.spec_; }

private:
	Quantale() = default;

	std::uint32_t tab(const std::vector<std::uint32_t>& t, std::uint32_t i, std::uint32_t j) const {
		return t[static_cast<std::size_t>(i) * m_ + j];
	}

	QuantaleSpec spec_;
	std::size_t m_ = 0; // carrier size (finite kinds)
	std::vector<std::string> names_;
	std::vector<std::uint8_t> leq_;      // m x m order matrix
	std::vector<std::uint32_t> join_;    // binary tables
	std::vector<std::uint32_t> meet_;
	std::vector<std::uint32_t> tensor_;
	std::vector<std::uint32_t> hom_;
	Value bottom_, top_, unit_;
};

/// Exhaustively certifies the lattice, monoid and adjunction laws of a finite
/// quantale; the exact-rational kind is checked on a sampled grid instead and
/// the report says so. Failures are reported with a witnessing tuple.
LawReport check_quantale_laws(const Quantale& q);

} // namespace laxrel
