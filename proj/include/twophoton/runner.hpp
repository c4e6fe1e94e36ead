#pragma once

// The verification matrix behind the command-line tool.

#include "twophoton/boson_rep.hpp"
#include "twophoton/builtin_specs.hpp"
#include "twophoton/hopf.hpp"
#include "twophoton/json_io.hpp"
#include "twophoton/lie_bialgebra.hpp"
#include "twophoton/schrodinger.hpp"
#include "twophoton/transport.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <future>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace twophoton {

inline std::vector<std::string> const &all_checks()
{
	static std::vector<std::string> const c{"bialgebra", "hopf", "rmatrix", "rep", "eigen", "discrete-se"};
	return c;
}

struct RunConfig
{
	std::string algebra = "both"; // h6 | sch | both
	int order = 3;
	std::optional<Rational> z;     // unset: the default matrix {1/10, 1/4}
	std::optional<Rational> mass;  // unset: {1, 2}
	std::optional<Rational> rep_param; // unset: {-1/2, 0}, with a = 0 as a negative control
	std::set<std::string> checks{all_checks().begin(), all_checks().end()};
	EigenProblem eigen{{ComplexRational(1), ComplexRational(1), ComplexRational(1), ComplexRational(1), ComplexRational(1)},
	                   ComplexRational(1)};
	int degree = 30;
	int workers = 1;

	void validate() const
	{
		if (algebra != "h6" && algebra != "sch" && algebra != "both")
			throw std::invalid_argument("algebra must be h6, sch or both");
		if (order < 0 || order > 8)
			throw std::invalid_argument("order must be in 0..8");
		if (z && *z <= 0)
			throw std::invalid_argument("z must be positive");
		if (degree < 2)
			throw std::invalid_argument("degree must be at least 2");
		if (workers < 1)
			throw std::invalid_argument("workers must be positive");
		for (auto const &c : checks)
			if (std::find(all_checks().begin(), all_checks().end(), c) == all_checks().end())
				throw std::invalid_argument("unknown check '" + c + "'");
		eigen.validate();
	}

	bool wants(std::string const &c) const { return checks.count(c) != 0; }
	bool h6() const { return algebra != "sch"; }
	bool sch() const { return algebra != "h6"; }
	Rational eigen_z() const { return z.value_or(Rational(1, 10)); }

	Json to_json() const
	{
		Json c;
		c["algebra"] = algebra;
		c["order"] = order;
		c["z"] = z ? twophoton::to_string(*z) : "default";
		c["mass"] = mass ? twophoton::to_string(*mass) : "default";
		c["rep_param"] = rep_param ? twophoton::to_string(*rep_param) : "default";
		c["checks"] = std::vector<std::string>(checks.begin(), checks.end());
		c["eigen"] = twophoton::to_json(eigen);
		c["degree"] = degree;
		return c;
	}
};

namespace detail {

/// z^1 part of Δ - σΔ as a wedge tensor; nullopt when a leg is not a single generator.
inline std::optional<WedgeElement> first_order_wedge(HopfAlgebra &h, int g)
{
	WedgeElement w(static_cast<std::size_t>(h.spec().dimension()));
	Tensor<2> diff = first_order_antisymmetric_coproduct(h, g);
	for (auto const &[k, c] : diff.terms())
	{
		if (k[0].size() != 1 || k[1].size() != 1)
			return std::nullopt;
		w(static_cast<unsigned char>(k[0][0]), static_cast<unsigned char>(k[1][0])) += c[1];
	}
	return w;
}

inline VerificationReport bialgebra_checks(LieAlgebraSpec const &lie, WedgeElement const &r,
                                           std::vector<WedgeElement> const &reference, AlgebraSpec const &deformed)
{
	VerificationReport rep;
	auto const &basis = lie.basis();
	rep.add(verify_cybe(lie, r, lie.name()));

	auto jac = jacobi_residuals(lie);
	bool jacobi_ok = std::all_of(jac.begin(), jac.end(), [](Vector const &v) {
		return std::all_of(v.begin(), v.end(), [](Rational const &c) { return c == 0; });
	});
	CheckEntry j;
	j.name = "bialgebra.jacobi[" + lie.name() + "]";
	j.parameters = {{"algebra", lie.name()}};
	j.pass = jacobi_ok;
	j.residual = jacobi_ok ? "0" : "nonzero Jacobiator";
	rep.add(j);

	auto generated = cocommutator_table(lie, r);
	HopfAlgebra h(deformed);
	for (std::size_t i = 0; i < lie.dim(); ++i)
	{
		std::map<std::string, std::string> params{{"algebra", lie.name()}};
		CheckEntry e;
		e.name = "bialgebra.cocommutator[" + lie.name() + "][" + basis[i] + "]";
		e.parameters = params;
		std::string got = generated[i].render(basis), want = reference[i].render(basis);
		e.pass = generated[i] == reference[i] && got == want;
		e.residual = e.pass ? "0" : got + " vs " + want;
		rep.add(e);

		CheckEntry f;
		f.name = "bialgebra.first-order-coproduct[" + lie.name() + "][" + basis[i] + "]";
		f.parameters = params;
		auto w = first_order_wedge(h, static_cast<int>(i));
		f.pass = w && *w == reference[i];
		f.residual = f.pass ? "0" : (w ? (*w - reference[i]).render(basis) : "non-linear first-order term");
		rep.add(f);
	}
	rep.merge(verify_cocycle(lie, reference, lie.name()));
	return rep;
}

/// Classical table transported through the basis change, compared with the Schrödinger table.
inline VerificationReport lie_transport_checks()
{
	VerificationReport rep;
	auto h6 = h6_lie_algebra();
	auto sch = schrodinger_lie_algebra();
	auto bc = twophoton_to_schrodinger_basis(h6);
	auto mapped = basis_change(h6, bc, sch.name());
	for (std::size_t i = 0; i < sch.dim(); ++i)
		for (std::size_t j = i + 1; j < sch.dim(); ++j)
		{
			Vector got = mapped.bracket(i, j), want = sch.bracket(i, j);
			CheckEntry e;
			e.name = "bialgebra.basis-change[" + sch.basis()[i] + "," + sch.basis()[j] + "]";
			e.parameters = {{"algebra", sch.name()}};
			e.pass = got == want;
			e.residual = e.pass ? "0" : sch.render(got) + " vs " + sch.render(want);
			rep.add(e);
		}
	CheckEntry r;
	r.name = "bialgebra.basis-change[r]";
	r.parameters = {{"algebra", sch.name()}};
	auto tr = transform_tensor(twophoton_r(h6), bc);
	r.pass = tr == schrodinger_r(sch);
	r.residual = r.pass ? "0" : tr.render(sch.basis());
	rep.add(r);
	return rep;
}

/// E_z = P^2 - 2M(1 - e^{-4zH})/(4z) commutes with K, H, P, M, satisfies
/// [E_z, D] = 2E_z, and {K, H, P, M, D} closes.
inline VerificationReport galilei_checks(HopfAlgebra &h)
{
	VerificationReport rep;
	auto const &spec = h.spec();
	auto &alg = h.algebra();
	int k = h.order();
	auto const &names = spec.generators;
	std::map<std::string, std::string> params{{"algebra", spec.name}, {"order", std::to_string(k)}};
	auto render = [&](NCElement const &e) { return to_string(e, names); };

	NCElement p = spec.gen("P");
	NCElement back = exp_like(spec.index_of("H"), -4, Rational(-1, 4), 1, 1, k); // (1 - e^{-4zH})/(4z)
	NCElement E = alg.multiply(p, p) - Rational(2) * alg.multiply(spec.gen("M"), back);
	for (std::string g : {"K", "H", "P", "M"})
		rep.add(residual_entry(spec.name + ".galilei.casimir[" + g + "]", params, alg.commutator(E, spec.gen(g)), render));
	rep.add(residual_entry(spec.name + ".galilei.dilation", params,
	                       alg.commutator(E, spec.gen("D")) - Rational(2) * E, render));

	std::vector<std::string> sub{"K", "H", "P", "M", "D"};
	for (std::size_t a = 0; a < sub.size(); ++a)
		for (std::size_t b = a + 1; b < sub.size(); ++b)
		{
			NCElement v = spec.bracket(spec.index_of(sub[a]), spec.index_of(sub[b]));
			CheckEntry e;
			e.name = spec.name + ".galilei.closure[" + sub[a] + "," + sub[b] + "]";
			e.parameters = params;
			e.pass = true;
			char c = static_cast<char>(spec.index_of("C"));
			for (auto const &[w, s] : v.terms())
				if (w.find(c) != Word::npos)
					e.pass = false;
			e.residual = e.pass ? "0" : to_string(v, names);
			rep.add(e);
		}
	return rep;
}

inline CheckEntry bool_entry(std::string name, std::map<std::string, std::string> params, bool ok,
                             std::string const &detail)
{
	CheckEntry e;
	e.name = std::move(name);
	e.parameters = std::move(params);
	e.pass = ok;
	e.residual = ok ? "0" : detail;
	return e;
}

template <class S> std::string render_residual(std::map<int, S> const &r)
{
	std::string out;
	for (auto const &[d, v] : r)
		out += (out.empty() ? "" : " + ") + to_string(v) + "*a^" + std::to_string(d);
	return out.empty() ? "0" : out;
}

inline VerificationReport eigen_checks(RunConfig const &cfg)
{
	using C = ComplexRational;
	VerificationReport rep;
	// number operator: alpha d - n annihilates alpha^n
	for (int n = 0; n <= 5; ++n)
	{
		EigenProblem p{{C(1), C(0), C(0), C(0), C(0)}, C(n)};
		auto op = evaluate_at(eigen_operator(p, 0, EigenMode::classical), Rational(0));
		auto sol = series_solve(op, n + 4);
		bool ok = sol.residual.empty();
		for (int i = 0; i <= n + 4; ++i)
			ok = ok && sol.coeffs[i] == C(i == n ? 1 : 0);
		rep.add(bool_entry("eigen.number-operator", {{"n", std::to_string(n)}}, ok, render_residual(sol.residual)));
	}
	// beta2 only: c_{n+2} = lambda c_n / ((n+1)(n+2))
	for (C lambda : {C(1), C(-4), C(Rational(1, 3), Rational(2))})
	{
		EigenProblem p{{C(0), C(1), C(0), C(0), C(0)}, lambda};
		auto op = evaluate_at(eigen_operator(p, 0, EigenMode::classical), Rational(0));
		auto sol = series_solve(op, cfg.degree);
		bool ok = true;
		for (int n = 0; n + 2 <= cfg.degree; ++n)
			ok = ok && sol.coeffs[n + 2] == lambda * sol.coeffs[n] * inverse(Rational((n + 1) * (n + 2)));
		rep.add(bool_entry("eigen.classical-recurrence", {{"lambda", to_string(lambda)}}, ok, "recurrence violated"));
	}
	// deformed operators with the configured parameters
	Rational z = cfg.eigen_z();
	std::map<std::string, std::string> params{{"z", to_string(z)}, {"degree", std::to_string(cfg.degree)}};
	auto check_solution = [&](std::string const &name, ComplexDiffOperator const &op, std::map<std::string, std::string> pr) {
		auto sol = series_solve(evaluate_at(op, z), cfg.degree);
		std::map<int, C> below;
		for (auto const &[d, v] : sol.residual)
			if (d <= cfg.degree - sol.shift)
				below[d] = v;
		rep.add(bool_entry(name, std::move(pr), below.empty(), render_residual(below)));
	};
	check_solution("eigen.first-order-series", eigen_operator(cfg.eigen, 1, EigenMode::first_order), params);
	for (int k = 0; k <= cfg.order; ++k)
	{
		auto pr = params;
		pr["order"] = std::to_string(k);
		check_solution("eigen.full-series", eigen_operator(cfg.eigen, k, EigenMode::full), pr);
	}
	auto full1 = eigen_operator(cfg.eigen, 1, EigenMode::full);
	auto first = eigen_operator(cfg.eigen, 1, EigenMode::first_order);
	rep.add(residual_entry("eigen.first-order-matches-full", {}, full1 - first,
	                       [](ComplexDiffOperator const &d) { return to_string(d); }));
	return rep;
}

inline VerificationReport rep_checks(int k)
{
	VerificationReport rep = verify_rep(k);
	std::map<std::string, std::string> params{{"order", std::to_string(k)}};
	auto render = [](RealDiffOperator const &d) { return to_string(d); };
	for (auto const &g : twophoton_generators())
	{
		rep.add(residual_entry("rep.classical-limit[" + g + "]", params,
		                       deformed_rep(g, k).truncate(0) - classical_rep(g, 0), render));
		if (k >= 1)
			rep.add(residual_entry("rep.first-order[" + g + "]", params,
			                       deformed_rep(g, k).truncate(1) - first_order_rep(g), render));
	}
	return rep;
}

inline std::vector<SchrodingerParams> discrete_matrix(RunConfig const &cfg)
{
	std::vector<Rational> zs = cfg.z ? std::vector<Rational>{*cfg.z} : std::vector<Rational>{Rational(1, 10), Rational(1, 4)};
	std::vector<Rational> ms = cfg.mass ? std::vector<Rational>{*cfg.mass} : std::vector<Rational>{1, 2};
	std::vector<Rational> as =
	    cfg.rep_param ? std::vector<Rational>{*cfg.rep_param} : std::vector<Rational>{Rational(-1, 2), 0};
	std::vector<SchrodingerParams> out;
	for (auto const &z : zs)
		for (auto const &m : ms)
			for (auto const &a : as)
				out.push_back({z, m, a, false});
	for (auto const &m : ms)
		for (auto const &a : as)
			out.push_back({0, m, a, true});
	return out;
}

/// An explicitly requested representation parameter is taken at its word:
/// C must then be a symmetry, so a != -1/2 fails.
inline VerificationReport discrete_checks(SchrodingerParams const &p, bool explicit_a)
{
	VerificationReport rep = verify_realization(p);
	if (explicit_a)
	{
		VerificationReport sym = verify_symmetries(p);
		for (auto const &e : sym.entries())
			if (e.name != "discrete-se.symmetry-negative-control[C]")
				rep.add(e);
		if (p.a != Rational(-1, 2))
			rep.add(strict_conformal_symmetry(p));
	}
	else
		rep.merge(verify_symmetries(p));
	rep.merge(verify_solutions(p));
	return rep;
}

} // namespace detail

struct Task
{
	std::string label;
	std::function<VerificationReport()> run;
};

inline std::vector<Task> plan(RunConfig const &cfg)
{
	std::vector<Task> tasks;
	int K = cfg.order;
	if (cfg.wants("bialgebra"))
	{
		if (cfg.h6())
			tasks.push_back({"bialgebra.h6", [] {
				                 auto l = h6_lie_algebra();
				                 return detail::bialgebra_checks(l, twophoton_r(l), twophoton_cocommutators(l),
				                                                 make_h6_spec(1));
			                 }});
		if (cfg.sch())
		{
			tasks.push_back({"bialgebra.sch", [] {
				                 auto l = schrodinger_lie_algebra();
				                 return detail::bialgebra_checks(l, schrodinger_r(l), schrodinger_cocommutators(l),
				                                                 make_schrodinger_spec(1));
			                 }});
			tasks.push_back({"bialgebra.basis-change", [] { return detail::lie_transport_checks(); }});
		}
	}
	for (int k = 0; k <= K; ++k)
	{
		if (cfg.wants("hopf"))
		{
			if (cfg.h6())
				tasks.push_back({"hopf.h6." + std::to_string(k), [k] {
					                 HopfAlgebra h(make_h6_spec(k));
					                 return verify_hopf(h);
				                 }});
			if (cfg.sch())
				tasks.push_back({"hopf.sch." + std::to_string(k), [k] {
					                 HopfAlgebra h(make_schrodinger_spec(k));
					                 VerificationReport r = verify_hopf(h);
					                 r.merge(detail::galilei_checks(h));
					                 HopfAlgebra source(make_h6_spec(k));
					                 r.merge(verify_spec_equality(transport_structure(source, twophoton_to_schrodinger()),
					                                              make_schrodinger_spec(k)));
					                 return r;
				                 }});
		}
		if (cfg.wants("rmatrix"))
		{
			if (cfg.h6())
				tasks.push_back({"rmatrix.h6." + std::to_string(k), [k] {
					                 HopfAlgebra h(make_h6_spec(k));
					                 return verify_rmatrix(h);
				                 }});
			if (cfg.sch())
				tasks.push_back({"rmatrix.sch." + std::to_string(k), [k] {
					                 HopfAlgebra h(make_schrodinger_spec(k));
					                 return verify_rmatrix(h);
				                 }});
		}
		if (cfg.wants("rep") && cfg.h6())
			tasks.push_back({"rep." + std::to_string(k), [k] { return detail::rep_checks(k); }});
	}
	if (cfg.wants("eigen") && cfg.h6())
		tasks.push_back({"eigen", [cfg] { return detail::eigen_checks(cfg); }});
	if (cfg.wants("discrete-se") && cfg.sch())
		for (auto const &p : detail::discrete_matrix(cfg))
		{
			bool explicit_a = cfg.rep_param.has_value();
			std::string label = "discrete-se." + p.describe().begin()->second;
			for (auto const &[key, v] : p.describe())
				label += "," + key + "=" + v;
			tasks.push_back({label, [p, explicit_a] { return detail::discrete_checks(p, explicit_a); }});
		}
	return tasks;
}

struct RunResult
{
	VerificationReport report;
	std::vector<std::pair<std::string, double>> timings; // per task, milliseconds
};

/// Runs every task, at most `workers` at a time; the merged report is in plan order.
inline RunResult run(RunConfig const &cfg)
{
	cfg.validate();
	auto tasks = plan(cfg);
	std::vector<VerificationReport> reports(tasks.size());
	std::vector<double> ms(tasks.size());
	auto exec = [&](std::size_t i) {
		auto t0 = std::chrono::steady_clock::now();
		reports[i] = tasks[i].run();
		ms[i] = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
	};
	if (cfg.workers <= 1)
		for (std::size_t i = 0; i < tasks.size(); ++i)
			exec(i);
	else
	{
		std::atomic<std::size_t> next{0};
		std::vector<std::future<void>> pool;
		for (int w = 0; w < cfg.workers; ++w)
			pool.push_back(std::async(std::launch::async, [&] {
				for (std::size_t i = next++; i < tasks.size(); i = next++)
					exec(i);
			}));
		for (auto &f : pool)
			f.get();
	}
	RunResult out;
	for (std::size_t i = 0; i < tasks.size(); ++i)
	{
		out.report.merge(reports[i]);
		out.timings.emplace_back(tasks[i].label, ms[i]);
	}
	return out;
}

/// One line per entry, sorted, grouped by the leading name component.
inline std::string render_report(VerificationReport const &r)
{
	std::ostringstream os;
	std::string group;
	for (auto const &e : r.sorted())
	{
		std::string g = e.name.substr(0, e.name.find_first_of(".["));
		if (g != group)
		{
			os << "== " << g << "\n";
			group = g;
		}
		os << (e.pass ? "PASS " : "FAIL ") << e.name;
		if (!e.parameters.empty())
			os << " {" << e.parameter_string() << "}";
		if (!e.pass)
			os << "\n     residual: " << e.residual;
		os << "\n";
	}
	os << "summary: " << r.total() << " checks, " << r.passed() << " passed, " << r.failed() << " failed\n";
	return os.str();
}

} // namespace twophoton
