#pragma once

// Formal power series in the deformation parameter z, truncated at a fixed
// order k (all terms z^{k+1} and higher are dropped).
//
// The coefficient ring R must be constructible from int, support +, -, *,
// equality, and multiplication by a Rational. series_inv additionally needs
// an `inverse(R)` for the constant term.

#include "twophoton/rational.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace twophoton {

class SeriesError : public std::domain_error
{
  public:
	using std::domain_error::domain_error;
};

template <class R> class TruncatedSeries
{
	std::vector<R> coeffs_;

	void check_same_order(TruncatedSeries const &other) const
	{
		if (other.order() != order())
			throw SeriesError("series order mismatch: " + std::to_string(order()) + " vs " +
			                  std::to_string(other.order()));
	}

  public:
	using coefficient_type = R;

	explicit TruncatedSeries(int order = 0) : coeffs_(check_order(order) + 1, R(0)) {}

	TruncatedSeries(int order, std::vector<R> coeffs) : coeffs_(std::move(coeffs))
	{
		check_order(order);
		coeffs_.resize(order + 1, R(0));
	}

	static TruncatedSeries constant(R c, int order)
	{
		TruncatedSeries s(order);
		s.coeffs_[0] = std::move(c);
		return s;
	}

	/// c * z^power; vanishes when power > order.
	static TruncatedSeries monomial(R c, int power, int order)
	{
		TruncatedSeries s(order);
		if (power <= order)
			s.coeffs_[power] = std::move(c);
		return s;
	}

	int order() const { return static_cast<int>(coeffs_.size()) - 1; }
	R const &operator[](int i) const { return coeffs_[i]; }
	R &operator[](int i) { return coeffs_[i]; }
	std::vector<R> const &coeffs() const { return coeffs_; }

	bool is_zero() const
	{
		for (auto const &c : coeffs_)
			if (!(c == R(0)))
				return false;
		return true;
	}

	/// Lowest power with a nonzero coefficient, or order()+1 for zero.
	int valuation() const
	{
		for (int i = 0; i <= order(); ++i)
			if (!(coeffs_[i] == R(0)))
				return i;
		return order() + 1;
	}

	TruncatedSeries &operator+=(TruncatedSeries const &o)
	{
		check_same_order(o);
		for (std::size_t i = 0; i < coeffs_.size(); ++i)
			coeffs_[i] += o.coeffs_[i];
		return *this;
	}
	TruncatedSeries &operator-=(TruncatedSeries const &o)
	{
		check_same_order(o);
		for (std::size_t i = 0; i < coeffs_.size(); ++i)
			coeffs_[i] -= o.coeffs_[i];
		return *this;
	}
	TruncatedSeries &operator*=(Rational const &s)
	{
		for (auto &c : coeffs_)
			c = c * s;
		return *this;
	}

	friend TruncatedSeries operator+(TruncatedSeries a, TruncatedSeries const &b) { return a += b; }
	friend TruncatedSeries operator-(TruncatedSeries a, TruncatedSeries const &b) { return a -= b; }
	friend TruncatedSeries operator-(TruncatedSeries a)
	{
		for (auto &c : a.coeffs_)
			c = R(0) - c;
		return a;
	}
	friend TruncatedSeries operator*(TruncatedSeries a, Rational const &s) { return a *= s; }
	friend TruncatedSeries operator*(Rational const &s, TruncatedSeries a) { return a *= s; }

	/// Cauchy product mod z^{k+1}.
	friend TruncatedSeries operator*(TruncatedSeries const &a, TruncatedSeries const &b)
	{
		a.check_same_order(b);
		int k = a.order();
		TruncatedSeries r(k);
		int va = a.valuation(), vb = b.valuation();
		for (int i = va; i <= k; ++i)
		{
			if (a.coeffs_[i] == R(0))
				continue;
			for (int j = vb; i + j <= k; ++j)
				if (!(b.coeffs_[j] == R(0)))
					r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
		}
		return r;
	}
	TruncatedSeries &operator*=(TruncatedSeries const &o) { return *this = *this * o; }

	friend bool operator==(TruncatedSeries const &a, TruncatedSeries const &b)
	{
		return a.order() == b.order() && a.coeffs_ == b.coeffs_;
	}

	/// Drops every term above z^new_order.
	TruncatedSeries truncate(int new_order) const
	{
		if (new_order > order())
			throw SeriesError("cannot truncate to a higher order");
		return TruncatedSeries(new_order, std::vector<R>(coeffs_.begin(), coeffs_.begin() + new_order + 1));
	}

	/// Same coefficients viewed at a higher order (exact: the missing terms are zero).
	TruncatedSeries extend(int new_order) const
	{
		if (new_order < order())
			throw SeriesError("cannot extend to a lower order");
		return TruncatedSeries(new_order, coeffs_);
	}

	/// Exact division by z^n: requires the n lowest coefficients to vanish;
	/// the result has order order()-n.
	TruncatedSeries divide_by_z(int n = 1) const
	{
		if (n > order())
			throw SeriesError("division by z^" + std::to_string(n) + " exceeds order");
		for (int i = 0; i < n; ++i)
			if (!(coeffs_[i] == R(0)))
				throw SeriesError("series is not divisible by z^" + std::to_string(n));
		return TruncatedSeries(order() - n, std::vector<R>(coeffs_.begin() + n, coeffs_.end()));
	}

	/// Substitutes z := value (coefficient ring must absorb Rationals).
	R evaluate(Rational const &value) const
	{
		R acc(0);
		for (int i = order(); i >= 0; --i)
			acc = acc * value + coeffs_[i];
		return acc;
	}

	template <class F> auto map(F &&f) const
	{
		using S = decltype(f(coeffs_[0]));
		std::vector<S> out;
		out.reserve(coeffs_.size());
		for (auto const &c : coeffs_)
			out.push_back(f(c));
		return TruncatedSeries<S>(order(), std::move(out));
	}

  private:
	static int check_order(int order)
	{
		if (order < 0)
			throw SeriesError("negative truncation order");
		return order;
	}
};

template <class R> TruncatedSeries<R> series_add(TruncatedSeries<R> const &a, TruncatedSeries<R> const &b)
{
	return a + b;
}

template <class R> TruncatedSeries<R> series_mul(TruncatedSeries<R> const &a, TruncatedSeries<R> const &b)
{
	return a * b;
}

/// exp(a) for a with vanishing constant term, via n e_n = sum_j j a_j e_{n-j}.
template <class R> TruncatedSeries<R> series_exp(TruncatedSeries<R> const &a)
{
	if (!(a[0] == R(0)))
		throw SeriesError("series_exp needs a zero constant term");
	int k = a.order();
	TruncatedSeries<R> e(k);
	e[0] = R(1);
	for (int n = 1; n <= k; ++n)
	{
		R acc(0);
		for (int j = 1; j <= n; ++j)
			if (!(a[j] == R(0)))
				acc += (a[j] * e[n - j]) * Rational(j);
		e[n] = acc * Rational(1, n);
	}
	return e;
}

/// Square root with s_0 = 1 of a series with constant term 1.
template <class R> TruncatedSeries<R> series_sqrt(TruncatedSeries<R> const &a)
{
	if (!(a[0] == R(1)))
		throw SeriesError("series_sqrt needs constant term 1");
	int k = a.order();
	TruncatedSeries<R> s(k);
	s[0] = R(1);
	for (int n = 1; n <= k; ++n)
	{
		R acc = a[n];
		for (int i = 1; i < n; ++i)
			acc -= s[i] * s[n - i];
		s[n] = acc * Rational(1, 2);
	}
	return s;
}

/// Multiplicative inverse; the constant term must be invertible.
template <class R> TruncatedSeries<R> series_inv(TruncatedSeries<R> const &a)
{
	if (a[0] == R(0))
		throw SeriesError("series_inv needs a nonzero constant term");
	int k = a.order();
	TruncatedSeries<R> b(k);
	R head = inverse(a[0]);
	b[0] = head;
	for (int n = 1; n <= k; ++n)
	{
		R acc(0);
		for (int i = 1; i <= n; ++i)
			acc += a[i] * b[n - i];
		b[n] = R(0) - head * acc;
	}
	return b;
}

/// "c0 + c1*z + c2*z^2" with zero terms omitted; "0" for the zero series.
template <class R> std::string to_string(TruncatedSeries<R> const &s)
{
	std::string out;
	for (int i = 0; i <= s.order(); ++i)
	{
		if (s[i] == R(0))
			continue;
		std::string c = to_string(s[i]);
		if (!out.empty())
			out += " + ";
		if (i == 0)
			out += c;
		else
		{
			if (c != "1")
				out += (c == "-1" ? std::string("-") : c + "*");
			out += i == 1 ? "z" : "z^" + std::to_string(i);
		}
	}
	return out.empty() ? "0" : out;
}

using Series = TruncatedSeries<Rational>;

} // namespace twophoton
