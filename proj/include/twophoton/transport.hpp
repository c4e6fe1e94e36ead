#pragma once

// Transport of a deformed algebra's structure tables along a linear change of
// generators, and comparison of two specs entry by entry.

#include "twophoton/builtin_specs.hpp"
#include "twophoton/hopf.hpp"
#include "twophoton/report.hpp"

#include <map>
#include <string>
#include <vector>

namespace twophoton {

/// A generator is a rational combination of generators of another algebra.
using LinearImage = std::vector<std::pair<std::string, Rational>>;

struct BasisMap
{
	std::string target_name;
	std::vector<std::string> target_generators; // PBW order of the target
	std::vector<bool> target_central;
	std::map<std::string, LinearImage> source_to_target; // old generator -> new combination
	std::map<std::string, LinearImage> target_to_source; // new generator -> old combination
};

/// D = -N - M/2, P = A+, K = A-, H = B+/2, C = B-/2 and its inverse.
inline BasisMap twophoton_to_schrodinger()
{
	BasisMap m;
	m.target_name = "schrodinger11";
	m.target_generators = {"H", "D", "M", "P", "K", "C"};
	m.target_central = {false, false, true, false, false, false};
	m.target_to_source = {
	    {"H", {{"B+", Rational(1, 2)}}},
	    {"D", {{"N", -1}, {"M", Rational(-1, 2)}}},
	    {"M", {{"M", 1}}},
	    {"P", {{"A+", 1}}},
	    {"K", {{"A-", 1}}},
	    {"C", {{"B-", Rational(1, 2)}}},
	};
	m.source_to_target = {
	    {"B+", {{"H", 2}}},
	    {"N", {{"D", -1}, {"M", Rational(-1, 2)}}},
	    {"M", {{"M", 1}}},
	    {"A+", {{"P", 1}}},
	    {"A-", {{"K", 1}}},
	    {"B-", {{"C", 2}}},
	};
	return m;
}

namespace detail {

inline NCElement linear(AlgebraSpec const &spec, LinearImage const &img)
{
	NCElement r(spec.order);
	for (auto const &[g, c] : img)
		r += spec.gen(g, c);
	return r;
}

/// Maps source-algebra elements into the target algebra. Products of images
/// are formed in a skeleton of the target that knows only its central
/// generators, so any use of a genuine target relation raises an error: the
/// transported tables never depend on what they are compared against.
class Transporter
{
	AlgebraSpec const &source_;
	AlgebraSpec skeleton_;
	NCAlgebra target_;
	std::vector<NCElement> letter_images_;

  public:
	Transporter(AlgebraSpec const &source, BasisMap const &map)
	    : source_(source), skeleton_(make_skeleton(source, map)), target_(skeleton_)
	{
		for (auto const &g : source.generators)
			letter_images_.push_back(linear(skeleton_, map.source_to_target.at(g)));
	}

	NCElement operator()(NCElement const &x)
	{
		NCElement r(source_.order);
		for (auto const &[w, c] : x.terms())
		{
			NCElement img = NCElement::scalar(c);
			for (char l : w)
				img = target_.multiply(img, letter_images_[static_cast<unsigned char>(l)]);
			r += img;
		}
		return r;
	}

	Tensor<2> operator()(Tensor<2> const &t)
	{
		Tensor<2> r(source_.order);
		for (auto const &[k, c] : t.terms())
			r += c * tensor((*this)(NCElement::word(k[0], source_.order)), (*this)(NCElement::word(k[1], source_.order)));
		return r;
	}

  private:
	static AlgebraSpec make_skeleton(AlgebraSpec const &source, BasisMap const &map)
	{
		AlgebraSpec s;
		s.name = map.target_name + "-skeleton";
		s.generators = map.target_generators;
		s.central = map.target_central;
		s.order = source.order;
		return s;
	}
};

} // namespace detail

/// Builds the target algebra's relations, coproduct, antipode, counit and
/// R-matrix factors from the source algebra through the basis map.
inline AlgebraSpec transport_structure(HopfAlgebra &source, BasisMap const &map)
{
	AlgebraSpec const &src = source.spec();
	detail::Transporter phi(src, map);
	auto &alg = source.algebra();

	AlgebraSpec out;
	out.name = map.target_name;
	out.generators = map.target_generators;
	out.central = map.target_central;
	out.order = src.order;

	std::vector<NCElement> preimage;
	for (auto const &g : map.target_generators)
		preimage.push_back(detail::linear(src, map.target_to_source.at(g)));

	int n = out.dimension();
	for (int x = 0; x < n; ++x)
		for (int y = 0; y < x; ++y)
		{
			if (out.is_central(x) || out.is_central(y))
				continue;
			out.relations[{x, y}] = phi(alg.commutator(preimage[x], preimage[y]));
		}
	for (int i = 0; i < n; ++i)
	{
		out.coproduct.push_back(phi(source.coproduct(preimage[i])));
		out.antipode.push_back(phi(source.antipode(preimage[i])));
		out.counit.push_back(source.counit(preimage[i]));
	}
	for (auto const &f : src.r_factors)
		out.r_factors.push_back(phi(f));
	return out;
}

/// Entry-by-entry comparison of two specs over the same generators.
/// R-matrices are compared as assembled products, since a factorization
/// into commuting exponentials is not unique.
inline VerificationReport verify_spec_equality(AlgebraSpec const &transported, AlgebraSpec const &reference)
{
	VerificationReport rep;
	if (transported.generators != reference.generators || transported.order != reference.order)
		throw std::invalid_argument("specs are over different generators or orders");
	auto const &names = reference.generators;
	std::string tag = "transport." + reference.name;
	std::map<std::string, std::string> params{{"order", std::to_string(reference.order)}};
	auto render1 = [&](NCElement const &e) { return to_string(e, names); };
	auto render2 = [&](Tensor<2> const &t) { return to_string(t, names); };

	int n = reference.dimension();
	for (int x = 0; x < n; ++x)
		for (int y = 0; y < x; ++y)
			rep.add(residual_entry(tag + ".relation[" + names[x] + "," + names[y] + "]", params,
			                       transported.bracket(x, y) - reference.bracket(x, y), render1));
	for (int i = 0; i < n; ++i)
	{
		rep.add(residual_entry(tag + ".coproduct[" + names[i] + "]", params,
		                       transported.coproduct[i] - reference.coproduct[i], render2));
		rep.add(residual_entry(tag + ".antipode[" + names[i] + "]", params,
		                       transported.antipode[i] - reference.antipode[i], render1));
		rep.add(residual_entry(tag + ".counit[" + names[i] + "]", params,
		                       NCElement::scalar(transported.counit[i] - reference.counit[i]), render1));
	}
	HopfAlgebra a(transported), b(reference);
	rep.add(residual_entry(tag + ".rmatrix", params, a.r_matrix() - b.r_matrix(), render2));
	return rep;
}

} // namespace twophoton
