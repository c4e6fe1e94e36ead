#pragma once

// Verification reports: one entry per identity check.

#include <algorithm>
#include <cstddef>
#include <map>
#include <string>
#include <vector>

namespace twophoton {

struct CheckEntry
{
	std::string name;
	std::map<std::string, std::string> parameters;
	std::string residual = "0"; // canonical text, "0" when the identity holds
	bool pass = false;
	double wall_ms = 0; // excluded from report comparisons

	std::string parameter_string() const
	{
		std::string out;
		for (auto const &[k, v] : parameters)
			out += (out.empty() ? "" : ",") + k + "=" + v;
		return out;
	}
};

/// Entry for an identity whose residual must vanish.
template <class T, class Render>
CheckEntry residual_entry(std::string name, std::map<std::string, std::string> params, T const &residual,
                          Render &&render)
{
	CheckEntry e;
	e.name = std::move(name);
	e.parameters = std::move(params);
	e.pass = residual.is_zero();
	e.residual = e.pass ? "0" : render(residual);
	return e;
}

class VerificationReport
{
	std::vector<CheckEntry> entries_;

  public:
	void add(CheckEntry e) { entries_.push_back(std::move(e)); }
	void merge(VerificationReport const &o)
	{
		entries_.insert(entries_.end(), o.entries_.begin(), o.entries_.end());
	}

	std::vector<CheckEntry> const &entries() const { return entries_; }

	/// Entries keyed by (name, parameters), independent of insertion order.
	std::vector<CheckEntry> sorted() const
	{
		auto out = entries_;
		std::stable_sort(out.begin(), out.end(), [](CheckEntry const &a, CheckEntry const &b) {
			if (a.name != b.name)
				return a.name < b.name;
			return a.parameter_string() < b.parameter_string();
		});
		return out;
	}

	std::size_t total() const { return entries_.size(); }
	std::size_t passed() const
	{
		return static_cast<std::size_t>(std::count_if(entries_.begin(), entries_.end(), [](auto const &e) { return e.pass; }));
	}
	std::size_t failed() const { return total() - passed(); }
	bool all_passed() const { return failed() == 0; }

	CheckEntry const *find(std::string const &name) const
	{
		for (auto const &e : entries_)
			if (e.name == name)
				return &e;
		return nullptr;
	}
};

} // namespace twophoton
