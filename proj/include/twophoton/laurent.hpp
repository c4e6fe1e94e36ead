#pragma once

// Laurent polynomials sum_j c_j alpha^j (j may be negative) over an exact
// scalar ring. Used as the coefficient ring of z-series when expanding the
// closed-form boson representation, where 1/alpha factors appear and must
// cancel order by order.

#include "twophoton/rational.hpp"

#include <map>
#include <stdexcept>
#include <string>

namespace twophoton {

template <class S> class LaurentPoly
{
	std::map<int, S> terms_; // exponent -> nonzero coefficient

	void prune(int e)
	{
		auto it = terms_.find(e);
		if (it != terms_.end() && it->second == S(0))
			terms_.erase(it);
	}

  public:
	LaurentPoly() = default;
	LaurentPoly(int c) : LaurentPoly(S(c)) {}
	LaurentPoly(S c)
	{
		if (!(c == S(0)))
			terms_.emplace(0, std::move(c));
	}

	static LaurentPoly monomial(S c, int exponent)
	{
		LaurentPoly p;
		if (!(c == S(0)))
			p.terms_.emplace(exponent, std::move(c));
		return p;
	}

	std::map<int, S> const &terms() const { return terms_; }
	bool is_zero() const { return terms_.empty(); }
	int min_exponent() const { return terms_.empty() ? 0 : terms_.begin()->first; }

	S coefficient(int e) const
	{
		auto it = terms_.find(e);
		return it == terms_.end() ? S(0) : it->second;
	}

	LaurentPoly &operator+=(LaurentPoly const &o)
	{
		for (auto const &[e, c] : o.terms_)
		{
			terms_[e] += c;
			prune(e);
		}
		return *this;
	}
	LaurentPoly &operator-=(LaurentPoly const &o)
	{
		for (auto const &[e, c] : o.terms_)
		{
			terms_[e] -= c;
			prune(e);
		}
		return *this;
	}
	friend LaurentPoly operator+(LaurentPoly a, LaurentPoly const &b) { return a += b; }
	friend LaurentPoly operator-(LaurentPoly a, LaurentPoly const &b) { return a -= b; }

	friend LaurentPoly operator*(LaurentPoly const &a, LaurentPoly const &b)
	{
		LaurentPoly r;
		for (auto const &[ea, ca] : a.terms_)
			for (auto const &[eb, cb] : b.terms_)
				r.terms_[ea + eb] += ca * cb;
		std::erase_if(r.terms_, [](auto const &kv) { return kv.second == S(0); });
		return r;
	}
	friend LaurentPoly operator*(LaurentPoly a, Rational const &s)
	{
		if (s == 0)
			return {};
		for (auto &[e, c] : a.terms_)
			c = c * s;
		return a;
	}
	friend bool operator==(LaurentPoly const &a, LaurentPoly const &b) { return a.terms_ == b.terms_; }

	/// Only monomials are units.
	friend LaurentPoly inverse(LaurentPoly const &p)
	{
		if (p.terms_.size() != 1)
			throw std::domain_error("only Laurent monomials are invertible");
		auto const &[e, c] = *p.terms_.begin();
		return monomial(S(1) * inverse(c), -e);
	}
};

template <class S> std::string to_string(LaurentPoly<S> const &p)
{
	if (p.is_zero())
		return "0";
	std::string out;
	for (auto const &[e, c] : p.terms())
	{
		if (!out.empty())
			out += " + ";
		out += to_string(c);
		if (e != 0)
			out += "*a^" + std::to_string(e);
	}
	return "(" + out + ")";
}

} // namespace twophoton
