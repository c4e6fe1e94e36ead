#pragma once

// Noncommutative algebras presented by generators in a fixed PBW order and
// commutation relations [X,Y] (X > Y) whose right-hand sides are already in
// normal form. Elements are sums of PBW words with z-series coefficients.
//
// The rewriting rule is X Y -> Y X + [X,Y] for every adjacent out-of-order
// pair. Products of normal words are computed by inserting letters from the
// right and are memoized per engine.

#include "twophoton/series.hpp"

#include <algorithm>
#include <array>
#include <cstddef>
#include <initializer_list>
#include <map>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace twophoton {

/// A word is a sequence of generator indices (one char per letter).
using Word = std::string;

class NormalOrderError : public std::runtime_error
{
  public:
	using std::runtime_error::runtime_error;
};

/// Finite sum of words with truncated-series coefficients. Zero coefficients
/// are never stored.
class NCElement
{
	int order_ = 0;
	std::map<Word, Series> terms_;

  public:
	explicit NCElement(int order = 0) : order_(order) {}

	static NCElement scalar(Series const &c)
	{
		NCElement e(c.order());
		e.add(Word{}, c);
		return e;
	}
	static NCElement scalar(Rational const &c, int order) { return scalar(Series::constant(c, order)); }
	static NCElement word(Word w, Series const &c)
	{
		NCElement e(c.order());
		e.add(std::move(w), c);
		return e;
	}
	static NCElement word(Word w, int order, Rational const &c = 1)
	{
		return word(std::move(w), Series::constant(c, order));
	}
	static NCElement generator(int g, int order, Rational const &c = 1)
	{
		return word(Word(1, static_cast<char>(g)), order, c);
	}

	int order() const { return order_; }
	std::map<Word, Series> const &terms() const { return terms_; }
	bool is_zero() const { return terms_.empty(); }
	std::size_t size() const { return terms_.size(); }

	Series coefficient(Word const &w) const
	{
		auto it = terms_.find(w);
		return it == terms_.end() ? Series(order_) : it->second;
	}

	void add(Word const &w, Series const &c)
	{
		if (c.order() != order_)
			throw SeriesError("element/coefficient order mismatch");
		if (c.is_zero())
			return;
		auto [it, inserted] = terms_.try_emplace(w, c);
		if (!inserted)
		{
			it->second += c;
			if (it->second.is_zero())
				terms_.erase(it);
		}
	}

	/// this += c * other
	void add_scaled(NCElement const &other, Series const &c)
	{
		int k = order_;
		int vc = c.valuation();
		if (vc > k)
			return;
		for (auto const &[w, s] : other.terms_)
			if (vc + s.valuation() <= k)
				add(w, c * s);
	}

	NCElement &operator+=(NCElement const &o)
	{
		for (auto const &[w, c] : o.terms_)
			add(w, c);
		return *this;
	}
	NCElement &operator-=(NCElement const &o)
	{
		for (auto const &[w, c] : o.terms_)
			add(w, -c);
		return *this;
	}
	friend NCElement operator+(NCElement a, NCElement const &b) { return a += b; }
	friend NCElement operator-(NCElement a, NCElement const &b) { return a -= b; }
	friend NCElement operator-(NCElement const &a)
	{
		NCElement r(a.order_);
		return r -= a;
	}
	friend NCElement operator*(Series const &c, NCElement const &a)
	{
		NCElement r(a.order_);
		r.add_scaled(a, c);
		return r;
	}
	friend NCElement operator*(Rational const &c, NCElement const &a)
	{
		return Series::constant(c, a.order_) * a;
	}
	friend bool operator==(NCElement const &a, NCElement const &b)
	{
		return a.order_ == b.order_ && a.terms_ == b.terms_;
	}

	NCElement truncate(int new_order) const
	{
		NCElement r(new_order);
		for (auto const &[w, c] : terms_)
			r.add(w, c.truncate(new_order));
		return r;
	}
};

/// Element of the N-fold tensor power; each leg is a normal word.
template <std::size_t N> class Tensor
{
	int order_ = 0;
	std::map<std::array<Word, N>, Series> terms_;

  public:
	using Key = std::array<Word, N>;
	static constexpr std::size_t rank = N;

	explicit Tensor(int order = 0) : order_(order) {}

	static Tensor one(int order)
	{
		Tensor t(order);
		t.add(Key{}, Series::constant(1, order));
		return t;
	}

	int order() const { return order_; }
	std::map<Key, Series> const &terms() const { return terms_; }
	bool is_zero() const { return terms_.empty(); }
	std::size_t size() const { return terms_.size(); }

	void add(Key const &k, Series const &c)
	{
		if (c.order() != order_)
			throw SeriesError("tensor/coefficient order mismatch");
		if (c.is_zero())
			return;
		auto [it, inserted] = terms_.try_emplace(k, c);
		if (!inserted)
		{
			it->second += c;
			if (it->second.is_zero())
				terms_.erase(it);
		}
	}

	Tensor &operator+=(Tensor const &o)
	{
		for (auto const &[k, c] : o.terms_)
			add(k, c);
		return *this;
	}
	Tensor &operator-=(Tensor const &o)
	{
		for (auto const &[k, c] : o.terms_)
			add(k, -c);
		return *this;
	}
	friend Tensor operator+(Tensor a, Tensor const &b) { return a += b; }
	friend Tensor operator-(Tensor a, Tensor const &b) { return a -= b; }
	friend Tensor operator*(Series const &c, Tensor const &a)
	{
		Tensor r(a.order_);
		for (auto const &[k, s] : a.terms_)
			r.add(k, c * s);
		return r;
	}
	friend Tensor operator*(Rational const &c, Tensor const &a) { return Series::constant(c, a.order_) * a; }
	friend bool operator==(Tensor const &a, Tensor const &b)
	{
		return a.order_ == b.order_ && a.terms_ == b.terms_;
	}

	Tensor truncate(int new_order) const
	{
		Tensor r(new_order);
		for (auto const &[k, c] : terms_)
			r.add(k, c.truncate(new_order));
		return r;
	}
};

/// a ⊗ b
inline Tensor<2> tensor(NCElement const &a, NCElement const &b)
{
	if (a.order() != b.order())
		throw SeriesError("tensor legs of different order");
	Tensor<2> t(a.order());
	for (auto const &[wa, ca] : a.terms())
		for (auto const &[wb, cb] : b.terms())
			t.add({wa, wb}, ca * cb);
	return t;
}

/// The swap a⊗b -> b⊗a.
inline Tensor<2> flip(Tensor<2> const &t)
{
	Tensor<2> r(t.order());
	for (auto const &[k, c] : t.terms())
		r.add({k[1], k[0]}, c);
	return r;
}

/// Places a rank-2 tensor on legs (i, j) of a rank-3 tensor, unit elsewhere.
inline Tensor<3> embed(Tensor<2> const &t, std::size_t i, std::size_t j)
{
	Tensor<3> r(t.order());
	for (auto const &[k, c] : t.terms())
	{
		Tensor<3>::Key key;
		key[i] = k[0];
		key[j] = k[1];
		r.add(key, c);
	}
	return r;
}

/// Presentation data of a deformed enveloping algebra together with its Hopf
/// structure tables. The tables are filled by the builders in
/// builtin_specs.hpp and by transport.
struct AlgebraSpec
{
	std::string name;
	std::vector<std::string> generators; // PBW order: index 0 is smallest
	int order = 0;
	std::vector<bool> central;
	std::map<std::pair<int, int>, NCElement> relations; // key (x, y), x > y
	std::vector<Tensor<2>> coproduct;                   // per generator
	std::vector<NCElement> antipode;
	std::vector<Series> counit;
	std::vector<Tensor<2>> r_factors; // R = exp(f_0) exp(f_1) ...

	int dimension() const { return static_cast<int>(generators.size()); }

	int index_of(std::string const &g) const
	{
		for (int i = 0; i < dimension(); ++i)
			if (generators[i] == g)
				return i;
		throw std::invalid_argument("unknown generator '" + g + "' in " + name);
	}

	NCElement gen(std::string const &g, Rational const &c = 1) const
	{
		return NCElement::generator(index_of(g), order, c);
	}
	NCElement one() const { return NCElement::scalar(1, order); }

	bool is_central(int g) const { return g < static_cast<int>(central.size()) && central[g]; }

	/// [x, y] for any pair, using antisymmetry and centrality.
	NCElement bracket(int x, int y) const
	{
		if (x == y || is_central(x) || is_central(y))
			return NCElement(order);
		if (x < y)
			return -bracket(y, x);
		auto it = relations.find({x, y});
		if (it == relations.end())
			throw NormalOrderError("no relation for [" + generators[x] + "," + generators[y] + "] in " + name);
		return it->second;
	}

	bool has_hopf_tables() const
	{
		auto n = static_cast<std::size_t>(dimension());
		return coproduct.size() == n && antipode.size() == n && counit.size() == n;
	}
};

inline std::string render_word(Word const &w, std::vector<std::string> const &names)
{
	if (w.empty())
		return "1";
	std::string out;
	for (std::size_t i = 0; i < w.size();)
	{
		std::size_t j = i;
		while (j < w.size() && w[j] == w[i])
			++j;
		if (!out.empty())
			out += " ";
		out += names.at(static_cast<unsigned char>(w[i]));
		if (j - i > 1)
			out += "^" + std::to_string(j - i);
		i = j;
	}
	return out;
}

inline std::string render_coefficient(Series const &c)
{
	std::string s = to_string(c);
	if (s.find(' ') != std::string::npos)
		return "(" + s + ")";
	return s;
}

inline std::string to_string(NCElement const &e, std::vector<std::string> const &names)
{
	if (e.is_zero())
		return "0";
	std::string out;
	for (auto const &[w, c] : e.terms())
	{
		if (!out.empty())
			out += " + ";
		out += render_coefficient(c);
		if (!w.empty())
			out += "*" + render_word(w, names);
	}
	return out;
}

template <std::size_t N> std::string to_string(Tensor<N> const &t, std::vector<std::string> const &names)
{
	if (t.is_zero())
		return "0";
	std::string out;
	for (auto const &[k, c] : t.terms())
	{
		if (!out.empty())
			out += " + ";
		out += render_coefficient(c) + "*[";
		for (std::size_t i = 0; i < N; ++i)
			out += (i ? " | " : "") + render_word(k[i], names);
		out += "]";
	}
	return out;
}

/// Normal-ordering engine for one AlgebraSpec at a fixed truncation order.
/// Caches word products; an instance is not meant to be shared between
/// threads.
class NCAlgebra
{
	AlgebraSpec spec_;
	std::size_t fuel_limit_;
	std::size_t fuel_used_ = 0;
	int depth_ = 0;
	std::unordered_map<std::string, NCElement> gen_cache_;
	std::unordered_map<std::string, NCElement> word_cache_;
	std::vector<NCElement> relation_cache_; // dense [x * dim + y], x > y
	std::vector<bool> missing_;             // pairs with no stored relation

	struct Scope
	{
		NCAlgebra &a;
		explicit Scope(NCAlgebra &alg) : a(alg)
		{
			if (a.depth_++ == 0)
				a.fuel_used_ = 0;
		}
		~Scope() { --a.depth_; }
	};

	void burn_fuel(Word const &offending)
	{
		if (++fuel_used_ > fuel_limit_)
			throw NormalOrderError("normal ordering exceeded " + std::to_string(fuel_limit_) +
			                       " rewrite steps at word '" + render_word(offending, spec_.generators) + "'");
	}

	NCElement const &relation(int x, int y)
	{
		auto idx = static_cast<std::size_t>(x * spec_.dimension() + y);
		if (missing_[idx])
			throw NormalOrderError("no relation for [" + spec_.generators[x] + "," + spec_.generators[y] + "] in " +
			                       spec_.name);
		return relation_cache_[idx];
	}

	Series one_series() const { return Series::constant(1, spec_.order); }

	/// u * g for a normal word u and generator g.
	NCElement const &word_times_gen(Word const &u, int g)
	{
		Word key = u;
		key.push_back(static_cast<char>(g));
		if (auto it = gen_cache_.find(key); it != gen_cache_.end())
			return it->second;
		NCElement result(spec_.order);
		if (u.empty() || static_cast<unsigned char>(u.back()) <= g)
			result.add(key, one_series());
		else
		{
			burn_fuel(key);
			int x = static_cast<unsigned char>(u.back());
			Word head = u.substr(0, u.size() - 1);
			// head x g = (head g) x + head [x, g]
			NCElement const &left = word_times_gen(head, g);
			for (auto const &[w, c] : left.terms())
				result.add_scaled(word_times_gen(w, x), c);
			for (auto const &[w, c] : relation(x, g).terms())
				result.add_scaled(words_impl(head, w), c);
		}
		return gen_cache_.emplace(std::move(key), std::move(result)).first->second;
	}

	NCElement const &words_impl(Word const &u, Word const &v)
	{
		std::string key = u;
		key.push_back('\x7f');
		key += v;
		if (auto it = word_cache_.find(key); it != word_cache_.end())
			return it->second;
		NCElement result(spec_.order);
		if (v.empty() || u.empty() || static_cast<unsigned char>(u.back()) <= static_cast<unsigned char>(v.front()))
			result.add(u + v, one_series());
		else
		{
			NCElement cur = NCElement::word(u, spec_.order);
			for (char letter : v)
			{
				NCElement next(spec_.order);
				for (auto const &[w, c] : cur.terms())
					next.add_scaled(word_times_gen(w, static_cast<unsigned char>(letter)), c);
				cur = std::move(next);
			}
			result = std::move(cur);
		}
		return word_cache_.emplace(std::move(key), std::move(result)).first->second;
	}

  public:
	static constexpr std::size_t default_fuel = 1'000'000;

	explicit NCAlgebra(AlgebraSpec spec, std::size_t fuel_limit = default_fuel)
	    : spec_(std::move(spec)), fuel_limit_(fuel_limit)
	{
		int n = spec_.dimension();
		spec_.central.resize(n, false);
		relation_cache_.assign(static_cast<std::size_t>(n * n), NCElement(spec_.order));
		for (int x = 0; x < n; ++x)
			for (int y = 0; y < x; ++y)
			{
				if (spec_.is_central(x) || spec_.is_central(y))
					continue;
				auto it = spec_.relations.find({x, y});
				if (it == spec_.relations.end())
					continue; // reported lazily if a product needs it
				if (it->second.order() != spec_.order)
					throw SeriesError("relation order differs from algebra order");
				relation_cache_[static_cast<std::size_t>(x * n + y)] = it->second;
			}
		missing_.assign(static_cast<std::size_t>(n * n), false);
		for (int x = 0; x < n; ++x)
			for (int y = 0; y < x; ++y)
				missing_[static_cast<std::size_t>(x * n + y)] =
				    !spec_.is_central(x) && !spec_.is_central(y) && !spec_.relations.contains({x, y});
	}

	AlgebraSpec const &spec() const { return spec_; }
	int order() const { return spec_.order; }
	std::vector<std::string> const &names() const { return spec_.generators; }

	/// Product of two normal words, as a normal-ordered element.
	NCElement const &multiply_words(Word const &u, Word const &v)
	{
		Scope s(*this);
		check_letters(u);
		check_letters(v);
		return words_impl(u, v);
	}

	NCElement multiply(NCElement const &a, NCElement const &b)
	{
		Scope s(*this);
		NCElement r(spec_.order);
		for (auto const &[wa, ca] : a.terms())
			for (auto const &[wb, cb] : b.terms())
			{
				if (ca.valuation() + cb.valuation() > spec_.order)
					continue;
				r.add_scaled(multiply_words(wa, wb), ca * cb);
			}
		return r;
	}

	NCElement multiply(std::initializer_list<NCElement> factors)
	{
		NCElement r = NCElement::scalar(1, spec_.order);
		for (auto const &f : factors)
			r = multiply(r, f);
		return r;
	}

	/// Normal form of a sum of arbitrary (unordered) words.
	NCElement normal_order(std::vector<std::pair<Word, Series>> const &raw)
	{
		Scope s(*this);
		NCElement r(spec_.order);
		for (auto const &[w, c] : raw)
		{
			check_letters(w);
			NCElement cur = NCElement::scalar(c);
			for (char letter : w)
			{
				NCElement next(spec_.order);
				for (auto const &[u, cu] : cur.terms())
					next.add_scaled(word_times_gen(u, static_cast<unsigned char>(letter)), cu);
				cur = std::move(next);
			}
			r += cur;
		}
		return r;
	}

	/// Re-normalizes an element whose words may be out of order.
	NCElement normal_order(NCElement const &e)
	{
		std::vector<std::pair<Word, Series>> raw(e.terms().begin(), e.terms().end());
		return normal_order(raw);
	}

	NCElement commutator(NCElement const &a, NCElement const &b) { return multiply(a, b) - multiply(b, a); }

	NCElement power(NCElement const &a, int n)
	{
		NCElement r = NCElement::scalar(1, spec_.order);
		for (int i = 0; i < n; ++i)
			r = multiply(r, a);
		return r;
	}

	/// exp(a) = sum a^n / n!, for a with strictly positive z-valuation.
	NCElement exp(NCElement const &a)
	{
		for (auto const &[w, c] : a.terms())
			if (c.valuation() == 0)
				throw SeriesError("exp of an element with a z^0 term");
		NCElement r = NCElement::scalar(1, spec_.order);
		NCElement p = r;
		for (int n = 1; n <= spec_.order; ++n)
		{
			p = Rational(1, n) * multiply(p, a);
			if (p.is_zero())
				break;
			r += p;
		}
		return r;
	}

	/// Legwise product of tensors.
	template <std::size_t N> Tensor<N> multiply(Tensor<N> const &a, Tensor<N> const &b)
	{
		Scope s(*this);
		Tensor<N> r(spec_.order);
		std::array<NCElement const *, N> legs{};
		for (auto const &[ka, ca] : a.terms())
			for (auto const &[kb, cb] : b.terms())
			{
				if (ca.valuation() + cb.valuation() > spec_.order)
					continue;
				Series c = ca * cb;
				bool zero = false;
				for (std::size_t i = 0; i < N; ++i)
				{
					legs[i] = &words_impl(ka[i], kb[i]);
					zero = zero || legs[i]->is_zero();
				}
				if (zero)
					continue;
				typename Tensor<N>::Key key;
				accumulate_outer<N>(r, legs, 0, key, c);
			}
		return r;
	}

	template <std::size_t N> Tensor<N> commutator(Tensor<N> const &a, Tensor<N> const &b)
	{
		return multiply(a, b) - multiply(b, a);
	}

	template <std::size_t N> Tensor<N> exp(Tensor<N> const &a)
	{
		for (auto const &[k, c] : a.terms())
			if (c.valuation() == 0)
				throw SeriesError("exp of a tensor with a z^0 term");
		Tensor<N> r = Tensor<N>::one(spec_.order);
		Tensor<N> p = r;
		for (int n = 1; n <= spec_.order; ++n)
		{
			p = Rational(1, n) * multiply(p, a);
			if (p.is_zero())
				break;
			r += p;
		}
		return r;
	}

	std::size_t cache_size() const { return gen_cache_.size() + word_cache_.size(); }

  private:
	void check_letters(Word const &w) const
	{
		for (char c : w)
			if (static_cast<unsigned char>(c) >= spec_.generators.size())
				throw std::invalid_argument("word uses a letter outside " + spec_.name);
	}

	template <std::size_t N>
	void accumulate_outer(Tensor<N> &out, std::array<NCElement const *, N> const &legs, std::size_t i,
	                      typename Tensor<N>::Key &key, Series const &c)
	{
		if (i == N)
		{
			out.add(key, c);
			return;
		}
		for (auto const &[w, s] : legs[i]->terms())
		{
			if (c.valuation() + s.valuation() > spec_.order)
				continue;
			key[i] = w;
			accumulate_outer<N>(out, legs, i + 1, key, c * s);
		}
	}
};

} // namespace twophoton
