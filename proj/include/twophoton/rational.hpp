#pragma once

// Exact scalars: arbitrary-precision rationals and complex rationals.

#include <gmpxx.h>

#include <compare>
#include <stdexcept>
#include <string>
#include <string_view>

namespace twophoton {

using Rational = mpq_class;

/// Parses "p/q", "p" or "-p/q". Rejects anything else, including q = 0.
inline Rational parse_rational(std::string_view text)
{
	auto valid_int = [](std::string_view s, bool allow_sign) {
		if (allow_sign && !s.empty() && (s[0] == '-' || s[0] == '+'))
			s.remove_prefix(1);
		if (s.empty())
			return false;
		for (char c : s)
			if (c < '0' || c > '9')
				return false;
		return true;
	};
	auto slash = text.find('/');
	std::string_view num = text.substr(0, slash);
	std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
	if (!valid_int(num, true) || !valid_int(den, false))
		throw std::invalid_argument("invalid fraction '" + std::string(text) + "'");
	std::string n(num);
	if (!n.empty() && n[0] == '+')
		n.erase(0, 1);
	mpz_class p(n), q{std::string(den)};
	if (q == 0)
		throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
	Rational r(p, q);
	r.canonicalize();
	return r;
}

/// p/q in lowest terms; mpq_class(p, q) alone does not reduce.
inline Rational frac(long p, long q)
{
	if (q == 0)
		throw std::invalid_argument("zero denominator");
	Rational r(p, q);
	r.canonicalize();
	return r;
}

inline std::string to_string(Rational const &r) { return r.get_str(); }

inline Rational inverse(Rational const &r)
{
	if (r == 0)
		throw std::domain_error("inverse of zero");
	return 1 / r;
}

/// Gaussian rational re + i*im.
struct ComplexRational
{
	Rational re, im;

	ComplexRational() = default;
	ComplexRational(int v) : re(v) {}
	ComplexRational(Rational r) : re(std::move(r)) {}
	ComplexRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

	ComplexRational &operator+=(ComplexRational const &o)
	{
		re += o.re;
		im += o.im;
		return *this;
	}
	ComplexRational &operator-=(ComplexRational const &o)
	{
		re -= o.re;
		im -= o.im;
		return *this;
	}
	ComplexRational &operator*=(ComplexRational const &o)
	{
		Rational r = re * o.re - im * o.im;
		im = re * o.im + im * o.re;
		re = std::move(r);
		return *this;
	}
	ComplexRational &operator*=(Rational const &s)
	{
		re *= s;
		im *= s;
		return *this;
	}

	friend ComplexRational operator+(ComplexRational a, ComplexRational const &b) { return a += b; }
	friend ComplexRational operator-(ComplexRational a, ComplexRational const &b) { return a -= b; }
	friend ComplexRational operator*(ComplexRational a, ComplexRational const &b) { return a *= b; }
	friend ComplexRational operator*(ComplexRational a, Rational const &s) { return a *= s; }
	friend ComplexRational operator-(ComplexRational const &a) { return {-a.re, -a.im}; }
	friend bool operator==(ComplexRational const &a, ComplexRational const &b)
	{
		return a.re == b.re && a.im == b.im;
	}
	friend ComplexRational operator/(ComplexRational const &a, ComplexRational const &b)
	{
		return a * inverse(b);
	}

	friend ComplexRational inverse(ComplexRational const &c)
	{
		Rational n = c.re * c.re + c.im * c.im;
		if (n == 0)
			throw std::domain_error("inverse of zero");
		return {c.re / n, -c.im / n};
	}
};

inline std::string to_string(ComplexRational const &c)
{
	if (c.im == 0)
		return to_string(c.re);
	if (c.re == 0)
		return to_string(c.im) + "*i";
	return "(" + to_string(c.re) + (c.im < 0 ? " - " : " + ") + to_string(Rational(abs(c.im))) + "*i)";
}

/// Complex values are written "re" or "re:im".
inline ComplexRational parse_complex(std::string_view text)
{
	auto colon = text.find(':');
	if (colon == std::string_view::npos)
		return ComplexRational(parse_rational(text));
	return {parse_rational(text.substr(0, colon)), parse_rational(text.substr(colon + 1))};
}

} // namespace twophoton
