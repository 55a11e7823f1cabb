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

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace laxrel {

/// Outcome of one law check. Failures carry a witness string; they are data,
/// not errors. Informational lines (required == false) never fail a report.
struct LawCheck {
	std::string law;
	bool pass = true;
	std::string witness;
	bool required = true;
};

/// A batch of law checks for one subject (a quantale, an extension, ...).
struct LawReport {
	std::string subject;
	std::vector<LawCheck> checks;

	void add(std::string law, bool pass, std::string witness = "", bool required = true) {
		checks.push_back(LawCheck{std::move(law), pass, std::move(witness), required});
	}
	void note(std::string law, std::string witness) {
		checks.push_back(LawCheck{std::move(law), true, std::move(witness), false});
	}

	bool all_pass() const {
		for (const auto& c : checks)
			if (c.required && !c.pass) return false;
		return true;
	}

	const LawCheck* find(const std::string& law) const {
		for (const auto& c : checks)
			if (c.law == law) return &c;
		return nullptr;
	}

	nlohmann::json to_json() const {
		nlohmann::json arr = nlohmann::json::array();
		for (const auto& c : checks) {
			arr.push_back({{"law", c.law},
			               {"pass", c.pass},
			               {"witness", c.witness},
			               {"required", c.required}});
		}
		return {{"subject", subject}, {"pass", all_pass()}, {"checks", arr}};
	}

	std::string text() const {
		std::string out = subject + ":\n";
		for (const auto& c : checks) {
			out += "  [";
			out += c.pass ? "pass" : "FAIL";
			out += "] ";
			out += c.law;
			if (!c.required) out += " (info)";
			if (!c.witness.empty()) out += "  -- " + c.witness;
			out += "\n";
		}
		return out;
	}
};

} // namespace laxrel
