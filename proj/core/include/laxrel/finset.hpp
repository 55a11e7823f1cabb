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

#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "laxrel/errors.hpp"

namespace laxrel {

/// A named finite set with a fixed element order. Immutable; copies share
/// storage. Two sets are equal when their element lists are equal (the
/// display name is a label and does not participate in equality).
class FinSet {
public:
	FinSet() : d_(empty_data()) {}
	FinSet(std::string name, std::vector<std::string> elements)
	    : d_(std::make_shared<const Data>(make_data(std::move(name), std::move(elements)))) {}

	/// The set {0, 1, ..., n-1}; used for arities.
	static FinSet ordinal(std::size_t n, const std::string& name = "") {
		std::vector<std::string> elems(n);
		for (std::size_t i = 0; i < n; ++i) elems[i] = std::to_string(i);
		return FinSet(name.empty() ? std::to_string(n) : name, std::move(elems));
	}

	std::size_t size() const { return d_->elements.size(); }
	bool empty() const { return d_->elements.empty(); }
	const std::string& name() const { return d_->name; }
	const std::string& element(std::size_t i) const { return d_->elements[i]; }
	const std::vector<std::string>& elements() const { return d_->elements; }

	std::optional<std::size_t> find(const std::string& e) const {
		auto it = d_->index.find(e);
		if (it == d_->index.end()) return std::nullopt;
		return it->second;
	}
	std::size_t index_of(const std::string& e) const {
		auto i = find(e);
		if (!i) throw InputError("no element '" + e + "' in set " + d_->name);
		return *i;
	}

	friend bool operator==(const FinSet& a, const FinSet& b) {
		return a.d_ == b.d_ || a.d_->elements == b.d_->elements;
	}
	friend bool operator!=(const FinSet& a, const FinSet& b) { return !(a == b); }

private:
	struct Data {
		std::string name;
		std::vector<std::string> elements;
		std::unordered_map<std::string, std::size_t> index;
	};
	static Data make_data(std::string name, std::vector<std::string> elements) {
		Data d;
		d.name = std::move(name);
		d.elements = std::move(elements);
		for (std::size_t i = 0; i < d.elements.size(); ++i) {
			if (!d.index.emplace(d.elements[i], i).second)
				throw InputError("duplicate element '" + d.elements[i] + "' in set " + d.name);
		}
		return d;
	}
	static std::shared_ptr<const Data> empty_data() {
		static const auto d = std::make_shared<const Data>();
		return d;
	}
	std::shared_ptr<const Data> d_;
};

/// A total function between finite sets, stored as target indices in source
/// order.
class FinMap {
public:
	FinMap() = default;
	FinMap(FinSet src, FinSet tgt, std::vector<std::uint32_t> assignment)
	    : src_(std::move(src)), tgt_(std::move(tgt)), map_(std::move(assignment)) {
		if (map_.size() != src_.size()) throw InputError("map assignment has wrong length");
		for (auto t : map_)
			if (t >= tgt_.size()) throw InputError("map image out of range");
	}

	static FinMap identity(const FinSet& X) {
		std::vector<std::uint32_t> v(X.size());
		for (std::size_t i = 0; i < v.size(); ++i) v[i] = static_cast<std::uint32_t>(i);
		return FinMap(X, X, std::move(v));
	}
	static FinMap constant(const FinSet& X, const FinSet& Y, std::size_t y) {
		return FinMap(X, Y, std::vector<std::uint32_t>(X.size(), static_cast<std::uint32_t>(y)));
	}
	/// By element names.
	static FinMap of_names(const FinSet& X, const FinSet& Y,
	                       const std::vector<std::string>& images) {
		if (images.size() != X.size()) throw InputError("map assignment has wrong length");
		std::vector<std::uint32_t> v(images.size());
		for (std::size_t i = 0; i < images.size(); ++i)
			v[i] = static_cast<std::uint32_t>(Y.index_of(images[i]));
		return FinMap(X, Y, std::move(v));
	}

	const FinSet& src() const { return src_; }
	const FinSet& tgt() const { return tgt_; }
	std::uint32_t operator()(std::size_t i) const { return map_[i]; }
	const std::vector<std::uint32_t>& assignment() const { return map_; }

	bool injective() const {
		std::vector<bool> seen(tgt_.size(), false);
		for (auto t : map_) {
			if (seen[t]) return false;
			seen[t] = true;
		}
		return true;
	}

	/// g.after(f) = g o f.
	FinMap after(const FinMap& f) const {
		if (f.tgt() != src_) throw InputError("map composition mismatch");
		std::vector<std::uint32_t> v(f.src().size());
		for (std::size_t i = 0; i < v.size(); ++i) v[i] = map_[f(i)];
		return FinMap(f.src(), tgt_, std::move(v));
	}

	friend bool operator==(const FinMap& a, const FinMap& b) {
		return a.src_ == b.src_ && a.tgt_ == b.tgt_ && a.map_ == b.map_;
	}
	friend bool operator!=(const FinMap& a, const FinMap& b) { return !(a == b); }

private:
	FinSet src_, tgt_;
	std::vector<std::uint32_t> map_;
};

} // namespace laxrel
