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

#include "laxrel/vrel.hpp"

#include <algorithm>
#include <sstream>

namespace laxrel {
namespace {

void require_same_quantale(const VRel& a, const VRel& b) {
	if (!a.quantale() || !b.quantale() || !a.quantale()->same_as(*b.quantale()))
		throw InputError("relations live over different quantales");
}

void require_parallel(const VRel& a, const VRel& b) {
	require_same_quantale(a, b);
	if (a.src() != b.src() || a.tgt() != b.tgt())
		throw InputError("relations are not parallel");
}

// |V|^cells with a cap guard.
std::size_t checked_pow(std::size_t base, std::size_t cells, std::size_t cap, const char* what) {
	std::size_t n = 1;
	for (std::size_t i = 0; i < cells; ++i) {
		if (base != 0 && n > cap / base) throw CapError(std::string(what) + ": enumeration too large");
		n *= base;
	}
	if (n > cap) throw CapError(std::string(what) + ": enumeration too large");
	return n;
}

} // namespace

VRel::VRel(QuantalePtr q, FinSet src, FinSet tgt, std::vector<Value> entries)
    : q_(std::move(q)), src_(std::move(src)), tgt_(std::move(tgt)), cols_(tgt_.size()),
      e_(std::move(entries)) {
	if (e_.size() != src_.size() * tgt_.size())
		throw InputError("relation entries do not match set sizes");
}

VRel VRel::constant(QuantalePtr q, FinSet src, FinSet tgt, const Value& v) {
	std::vector<Value> e(src.size() * tgt.size(), v);
	return VRel(std::move(q), std::move(src), std::move(tgt), std::move(e));
}

VRel VRel::bottom(QuantalePtr q, FinSet src, FinSet tgt) {
	Value b = q->bottom();
	return constant(std::move(q), std::move(src), std::move(tgt), b);
}

VRel VRel::top(QuantalePtr q, FinSet src, FinSet tgt) {
	Value t = q->top();
	return constant(std::move(q), std::move(src), std::move(tgt), t);
}

VRel VRel::identity(QuantalePtr q, const FinSet& X) {
	const std::size_t n = X.size();
	std::vector<Value> e(n * n, q->bottom());
	for (std::size_t i = 0; i < n; ++i) e[i * n + i] = q->unit();
	return VRel(std::move(q), X, X, std::move(e));
}

VRel VRel::with(std::size_t x, std::size_t y, const Value& v) const {
	VRel r = *this;
	r.e_[x * cols_ + y] = v;
	return r;
}

bool operator==(const VRel& a, const VRel& b) {
	return a.src_ == b.src_ && a.tgt_ == b.tgt_ && a.e_ == b.e_;
}

nlohmann::json VRel::to_json() const {
	nlohmann::json rows = nlohmann::json::array();
	for (std::size_t x = 0; x < src_.size(); ++x) {
		nlohmann::json row = nlohmann::json::array();
		for (std::size_t y = 0; y < cols_; ++y) row.push_back(q_->value_to_json(at(x, y)));
		rows.push_back(std::move(row));
	}
	return {{"src", src_.name()}, {"tgt", tgt_.name()}, {"entries", rows}};
}

VRel VRel::from_json(QuantalePtr q, const FinSet& src, const FinSet& tgt,
                     const nlohmann::json& j) {
	const auto& rows = j.is_object() ? j.at("entries") : j;
	if (!rows.is_array() || rows.size() != src.size())
		throw InputError("relation entries have wrong row count");
	std::vector<Value> e;
	e.reserve(src.size() * tgt.size());
	for (const auto& row : rows) {
		if (!row.is_array() || row.size() != tgt.size())
			throw InputError("relation entries have wrong column count");
		for (const auto& cell : row) e.push_back(q->value_from_json(cell));
	}
	return VRel(std::move(q), src, tgt, std::move(e));
}

std::string VRel::pretty() const {
	std::vector<std::size_t> width(cols_ + 1, 0);
	for (std::size_t x = 0; x < rows(); ++x)
		width[0] = std::max(width[0], src_.element(x).size());
	std::vector<std::vector<std::string>> cells(rows(), std::vector<std::string>(cols_));
	for (std::size_t y = 0; y < cols_; ++y) {
		width[y + 1] = tgt_.element(y).size();
		for (std::size_t x = 0; x < rows(); ++x) {
			cells[x][y] = q_->name(at(x, y));
			width[y + 1] = std::max(width[y + 1], cells[x][y].size());
		}
	}
	std::ostringstream out;
	auto pad = [&](const std::string& s, std::size_t w) {
		for (std::size_t i = s.size(); i < w; ++i) out << ' ';
		out << s;
	};
	pad("", width[0]);
	for (std::size_t y = 0; y < cols_; ++y) {
		out << "  ";
		pad(tgt_.element(y), width[y + 1]);
	}
	out << '\n';
	for (std::size_t x = 0; x < rows(); ++x) {
		pad(src_.element(x), width[0]);
		for (std::size_t y = 0; y < cols_; ++y) {
			out << "  ";
			pad(cells[x][y], width[y + 1]);
		}
		out << '\n';
	}
	return out.str();
}

VRel compose(const VRel& s, const VRel& r) {
	require_same_quantale(s, r);
	if (r.tgt() != s.src()) throw InputError("composition mismatch: r.tgt != s.src");
	const auto& q = r.quantale();
	std::vector<Value> e(r.rows() * s.cols(), q->bottom());
	for (std::size_t x = 0; x < r.rows(); ++x)
		for (std::size_t z = 0; z < s.cols(); ++z) {
			Value acc = q->bottom();
			for (std::size_t y = 0; y < r.cols(); ++y)
				acc = q->join(acc, q->tensor(r.at(x, y), s.at(y, z)));
			e[x * s.cols() + z] = acc;
		}
	return VRel(q, r.src(), s.tgt(), std::move(e));
}

VRel converse(const VRel& r) {
	std::vector<Value> e(r.rows() * r.cols(), r.quantale()->bottom());
	for (std::size_t x = 0; x < r.rows(); ++x)
		for (std::size_t y = 0; y < r.cols(); ++y) e[y * r.rows() + x] = r.at(x, y);
	return VRel(r.quantale(), r.tgt(), r.src(), std::move(e));
}

VRel graph(const QuantalePtr& q, const FinMap& f) {
	std::vector<Value> e(f.src().size() * f.tgt().size(), q->bottom());
	for (std::size_t x = 0; x < f.src().size(); ++x) e[x * f.tgt().size() + f(x)] = q->unit();
	return VRel(q, f.src(), f.tgt(), std::move(e));
}

VRel cograph(const QuantalePtr& q, const FinMap& f) { return converse(graph(q, f)); }

bool leq(const VRel& r, const VRel& s) {
	require_parallel(r, s);
	const auto& q = r.quantale();
	for (std::size_t x = 0; x < r.rows(); ++x)
		for (std::size_t y = 0; y < r.cols(); ++y)
			if (!q->leq(r.at(x, y), s.at(x, y))) return false;
	return true;
}

VRel join(const VRel& r, const VRel& s) {
	require_parallel(r, s);
	const auto& q = r.quantale();
	std::vector<Value> e(r.rows() * r.cols(), q->bottom());
	for (std::size_t x = 0; x < r.rows(); ++x)
		for (std::size_t y = 0; y < r.cols(); ++y)
			e[x * r.cols() + y] = q->join(r.at(x, y), s.at(x, y));
	return VRel(q, r.src(), r.tgt(), std::move(e));
}

VRel meet(const VRel& r, const VRel& s) {
	require_parallel(r, s);
	const auto& q = r.quantale();
	std::vector<Value> e(r.rows() * r.cols(), q->bottom());
	for (std::size_t x = 0; x < r.rows(); ++x)
		for (std::size_t y = 0; y < r.cols(); ++y)
			e[x * r.cols() + y] = q->meet(r.at(x, y), s.at(x, y));
	return VRel(q, r.src(), r.tgt(), std::move(e));
}

VRel meet_all(const QuantalePtr& q, const FinSet& src, const FinSet& tgt,
              std::span<const VRel> rs) {
	VRel acc = VRel::top(q, src, tgt);
	for (const auto& r : rs) acc = meet(acc, r);
	return acc;
}

VRel join_all(const QuantalePtr& q, const FinSet& src, const FinSet& tgt,
              std::span<const VRel> rs) {
	VRel acc = VRel::bottom(q, src, tgt);
	for (const auto& r : rs) acc = join(acc, r);
	return acc;
}

VRel lift(const VRel& r, const VRel& s) {
	require_same_quantale(r, s);
	if (r.tgt() != s.tgt()) throw InputError("lift mismatch: relations must share their target");
	const auto& q = r.quantale();
	std::vector<Value> e(s.rows() * r.rows(), q->top());
	for (std::size_t z = 0; z < s.rows(); ++z)
		for (std::size_t x = 0; x < r.rows(); ++x) {
			Value acc = q->top();
			for (std::size_t y = 0; y < r.cols(); ++y)
				acc = q->meet(acc, q->hom(r.at(x, y), s.at(z, y)));
			e[z * r.rows() + x] = acc;
		}
	return VRel(q, s.src(), r.src(), std::move(e));
}

VRel ext(const VRel& s, const VRel& r) {
	require_same_quantale(s, r);
	if (r.src() != s.src()) throw InputError("ext mismatch: relations must share their source");
	const auto& q = r.quantale();
	std::vector<Value> e(r.cols() * s.cols(), q->top());
	for (std::size_t x = 0; x < r.cols(); ++x)
		for (std::size_t z = 0; z < s.cols(); ++z) {
			Value acc = q->top();
			for (std::size_t y = 0; y < r.rows(); ++y)
				acc = q->meet(acc, q->hom(r.at(y, x), s.at(y, z)));
			e[x * s.cols() + z] = acc;
		}
	return VRel(q, r.tgt(), s.tgt(), std::move(e));
}

Value rel_dist(const VRel& r, const VRel& s) {
	require_parallel(r, s);
	const auto& q = r.quantale();
	Value acc = q->top();
	for (std::size_t x = 0; x < r.rows(); ++x)
		for (std::size_t y = 0; y < r.cols(); ++y)
			acc = q->meet(acc, q->hom(r.at(x, y), s.at(x, y)));
	return acc;
}

VRel scalar_tensor(const Value& u, const VRel& r) {
	const auto& q = r.quantale();
	std::vector<Value> e(r.rows() * r.cols(), q->bottom());
	for (std::size_t x = 0; x < r.rows(); ++x)
		for (std::size_t y = 0; y < r.cols(); ++y) e[x * r.cols() + y] = q->tensor(u, r.at(x, y));
	return VRel(q, r.src(), r.tgt(), std::move(e));
}

FinSet power_set(const QuantalePtr& q, const FinSet& S, std::size_t cap) {
	if (!q->finite()) throw InputError("V^S needs a finite carrier");
	const std::size_t m = q->size();
	const std::size_t n = checked_pow(m, S.size(), cap, "V^S");
	std::vector<std::string> names(n);
	for (std::size_t i = 0; i < n; ++i) {
		std::string nm = "[";
		for (std::size_t pos = 0; pos < S.size(); ++pos) {
			if (pos > 0) nm += ",";
			nm += q->name(power_coord(q, i, pos, S.size()));
		}
		nm += "]";
		names[i] = std::move(nm);
	}
	return FinSet("V^" + S.name(), std::move(names));
}

Value power_coord(const QuantalePtr& q, std::size_t idx, std::size_t pos, std::size_t arity) {
	const std::size_t m = q->size();
	// first coordinate most significant
	std::size_t div = 1;
	for (std::size_t i = pos + 1; i < arity; ++i) div *= m;
	return q->element((idx / div) % m);
}

std::size_t power_index(const QuantalePtr& q, std::span<const Value> coords) {
	const std::size_t m = q->size();
	std::size_t idx = 0;
	for (const auto& v : coords) idx = idx * m + v.index();
	return idx;
}

FinMap curry(const VRel& r, std::size_t cap) {
	const auto& q = r.quantale();
	FinSet power = power_set(q, r.tgt(), cap);
	std::vector<std::uint32_t> img(r.rows());
	std::vector<Value> coords(r.cols());
	for (std::size_t x = 0; x < r.rows(); ++x) {
		for (std::size_t y = 0; y < r.cols(); ++y) coords[y] = r.at(x, y);
		img[x] = static_cast<std::uint32_t>(power_index(q, coords));
	}
	return FinMap(r.src(), power, std::move(img));
}

VRel uncurry(const QuantalePtr& q, const FinMap& f, const FinSet& kappa) {
	std::vector<Value> e(f.src().size() * kappa.size(), q->bottom());
	for (std::size_t x = 0; x < f.src().size(); ++x)
		for (std::size_t i = 0; i < kappa.size(); ++i)
			e[x * kappa.size() + i] = power_coord(q, f(x), i, kappa.size());
	return VRel(q, f.src(), kappa, std::move(e));
}

VRel eval_rel(const QuantalePtr& q, const FinSet& kappa, std::size_t cap) {
	FinSet power = power_set(q, kappa, cap);
	std::vector<Value> e(power.size() * kappa.size(), q->bottom());
	for (std::size_t h = 0; h < power.size(); ++h)
		for (std::size_t i = 0; i < kappa.size(); ++i)
			e[h * kappa.size() + i] = power_coord(q, h, i, kappa.size());
	return VRel(q, power, kappa, std::move(e));
}

RelSpace::RelSpace(QuantalePtr q, FinSet src, FinSet tgt, std::size_t cap)
    : q_(std::move(q)), src_(std::move(src)), tgt_(std::move(tgt)) {
	if (!q_->finite()) throw InputError("relation-space enumeration needs a finite carrier");
	cells_ = src_.size() * tgt_.size();
	count_ = checked_pow(q_->size(), cells_, cap, "Rel(X,Y)");
}

VRel RelSpace::at(std::size_t i) const {
	const std::size_t m = q_->size();
	std::vector<Value> e(cells_);
	for (std::size_t c = cells_; c-- > 0;) {
		e[c] = q_->element(i % m);
		i /= m;
	}
	return VRel(q_, src_, tgt_, std::move(e));
}

std::size_t RelSpace::index_of(const VRel& r) const {
	if (r.src() != src_ || r.tgt() != tgt_) throw InputError("relation not in this hom-set");
	const std::size_t m = q_->size();
	std::size_t idx = 0;
	for (std::size_t x = 0; x < src_.size(); ++x)
		for (std::size_t y = 0; y < tgt_.size(); ++y) idx = idx * m + r.at(x, y).index();
	return idx;
}

} // namespace laxrel
