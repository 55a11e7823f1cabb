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

#include <gmpxx.h>

#include <string>

#include "laxrel/errors.hpp"

namespace laxrel {

/// Exact arbitrary-precision rational. Thin wrapper around mpq_class so the
/// rest of the library never touches GMP directly.
class Rational {
public:
	Rational() : v_(0) {}
	Rational(long num, long den) {
		if (den == 0) throw InputError("rational with zero denominator");
		v_ = mpq_class(num, den);
		v_.canonicalize();
	}
	explicit Rational(long num) : v_(num) {}

	/// Parses "p/q" or a plain integer "p".
	static Rational parse(const std::string& s) {
		mpq_class q;
		if (q.set_str(s, 10) != 0) throw InputError("cannot parse rational: " + s);
		if (q.get_den() == 0) throw InputError("rational with zero denominator: " + s);
		q.canonicalize();
		Rational r;
		r.v_ = q;
		return r;
	}

	std::string str() const { return v_.get_str(); }

	friend Rational operator+(const Rational& a, const Rational& b) { return wrap(a.v_ + b.v_); }
	friend Rational operator-(const Rational& a, const Rational& b) { return wrap(a.v_ - b.v_); }
	friend Rational operator*(const Rational& a, const Rational& b) { return wrap(a.v_ * b.v_); }
	friend Rational operator/(const Rational& a, const Rational& b) {
		if (b.v_ == 0) throw InputError("rational division by zero");
		return wrap(a.v_ / b.v_);
	}

	friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
	friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
	friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
	friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
	friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
	friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

private:
	static Rational wrap(mpq_class q) {
		Rational r;
		r.v_ = std::move(q);
		return r;
	}
	mpq_class v_;
};

inline Rational min(const Rational& a, const Rational& b) { return a <= b ? a : b; }
inline Rational max(const Rational& a, const Rational& b) { return a >= b ? a : b; }

} // namespace laxrel
