// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include "twophoton/boson_rep.hpp"
#include "twophoton/builtin_specs.hpp"
#include "twophoton/hopf.hpp"
#include "twophoton/lie_bialgebra.hpp"
#include "twophoton/schrodinger.hpp"
#include "twophoton/transport.hpp"

#include <json.hpp>

#include <sys/wait.h>
#include <unistd.h>

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

using namespace twophoton;

namespace {

struct Outcome
{
	bool pass = true;
	std::string detail;

	void require(bool ok, std::string const &what)
	{
		if (!ok)
		{
			if (pass)
				detail = what;
			pass = false;
		}
	}
	void require(VerificationReport const &r, std::string const &what)
	{
		for (auto const &e : r.entries())
			if (!e.pass)
			{
				require(false, what + ": " + e.name + " {" + e.parameter_string() + "} residual " + e.residual);
				return;
			}
	}
};

Outcome hopf_suite()
{
	Outcome o;
	std::size_t checks = 0;
	double slowest = 0;
	for (int k = 0; k <= 3; ++k)
	{
		auto start = std::chrono::steady_clock::now();
		HopfAlgebra h(make_h6_spec(k));
		auto r = verify_hopf(h);
		double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
		slowest = std::max(slowest, secs);
		o.require(r.total() == 6 * 5 + 15, "unexpected number of Hopf checks at order " + std::to_string(k));
		o.require(r, "order " + std::to_string(k));
		checks += r.total();
	}
	o.require(slowest < 60, "order 3 exceeded 60 s");
	if (o.pass)
	{
		std::ostringstream s;
		s << checks << " residuals zero for h6 at k=0..3, slowest order " << slowest << " s";
		o.detail = s.str();
	}
	return o;
}

Outcome rmatrix_suite()
{
	Outcome o;
	std::size_t checks = 0;
	for (int k = 0; k <= 3; ++k)
		for (auto const &spec : {make_h6_spec(k), make_schrodinger_spec(k)})
		{
			HopfAlgebra h(spec);
			auto r = verify_rmatrix(h);
			o.require(r.find(spec.name + ".rmatrix.qybe") != nullptr, "missing QYBE entry");
			o.require(r.total() == 8, "unexpected number of R-matrix checks");
			o.require(r, spec.name + " order " + std::to_string(k));
			checks += r.total();
		}
	if (o.pass)
		o.detail = std::to_string(checks) + " QYBE/intertwining/inverse residuals zero for both algebras at k=0..3";
	return o;
}

Outcome bialgebra_layer()
{
	Outcome o;
	auto h6 = h6_lie_algebra();
	auto sch = schrodinger_lie_algebra();
	o.require(verify_cybe(h6, twophoton_r(h6), "h6").pass, "CYBE fails for zN^B+");
	o.require(verify_cybe(sch, schrodinger_r(sch), "sch").pass, "CYBE fails for 2zH^D + zH^M");

	auto gh = cocommutator_table(h6, twophoton_r(h6)), gs = cocommutator_table(sch, schrodinger_r(sch));
	auto th = twophoton_cocommutators(h6), ts = schrodinger_cocommutators(sch);
	for (std::size_t i = 0; i < 6; ++i)
	{
		o.require(gh[i].render(h6.basis()) == th[i].render(h6.basis()), "h6 cocommutator of " + h6.basis()[i]);
		o.require(gs[i].render(sch.basis()) == ts[i].render(sch.basis()), "sch cocommutator of " + sch.basis()[i]);
	}

	for (int k = 1; k <= 3; ++k)
		for (auto const &[spec, table] : {std::pair{make_h6_spec(k), th}, std::pair{make_schrodinger_spec(k), ts}})
		{
			HopfAlgebra h(spec);
			for (int g = 0; g < 6; ++g)
			{
				WedgeElement w(6);
				bool linear = true;
				Tensor<2> diff = first_order_antisymmetric_coproduct(h, g);
				for (auto const &[key, c] : diff.terms())
				{
					if (key[0].size() != 1 || key[1].size() != 1)
						linear = false;
					else
						w(static_cast<unsigned char>(key[0][0]), static_cast<unsigned char>(key[1][0])) += c[1];
				}
				o.require(linear && w == table[g],
				          spec.name + " first order of the coproduct differs from delta(" + spec.generators[g] + ")");
			}
		}
	if (o.pass)
		o.detail = "both r-matrices solve CYBE; 12 cocommutators match; first order of coproduct equals delta at k=1..3";
	return o;
}

Outcome transport()
{
	Outcome o;
	auto h6 = h6_lie_algebra();
	auto sch = schrodinger_lie_algebra();
	o.require(basis_change(h6, twophoton_to_schrodinger_basis(h6), sch.name()) == sch,
	          "basis change does not give the Schrodinger table");
	std::size_t checks = 0;
	for (int k = 0; k <= 3; ++k)
	{
		HopfAlgebra source(make_h6_spec(k));
		auto r = verify_spec_equality(transport_structure(source, twophoton_to_schrodinger()), make_schrodinger_spec(k));
		o.require(r, "order " + std::to_string(k));
		checks += r.total();
	}
	if (o.pass)
		o.detail = "classical table maps exactly; " + std::to_string(checks) + " transported Hopf entries match at k=0..3";
	return o;
}

Outcome representation()
{
	Outcome o;
	for (int k = 0; k <= 4; ++k)
	{
		auto r = verify_rep(k);
		o.require(r.total() == 15, "expected 15 relations");
		o.require(r, "order " + std::to_string(k));
	}
	for (auto const &g : twophoton_generators())
	{
		o.require(deformed_rep(g, 4).truncate(1) == first_order_rep(g), "first-order table differs for " + g);
		o.require(deformed_rep(g, 0) == classical_rep(g, 0), "classical limit differs for " + g);
	}
	o.require(classical_rep("N") == RealDiffOperator::term(1, 1, 1, 0) && classical_rep("B-") == RealDiffOperator::term(1, 0, 2, 0) &&
	              classical_rep("A+") == RealDiffOperator::alpha(0) && classical_rep("A-") == RealDiffOperator::d_alpha(0) &&
	              classical_rep("M") == RealDiffOperator::constant(1, 0) && classical_rep("B+") == RealDiffOperator::term(1, 2, 0, 0),
	          "classical table");
	if (o.pass)
		o.detail = "15 relations exact at k=0..4; first-order table and classical limit agree for all 6 generators";
	return o;
}

Outcome eigenstates()
{
	using C = ComplexRational;
	Outcome o;
	for (int n = 0; n <= 10; ++n)
	{
		EigenProblem p{{C(1), C(0), C(0), C(0), C(0)}, C(n)};
		auto sol = series_solve(evaluate_at(eigen_operator(p, 0, EigenMode::classical), 0), 20);
		for (int i = 0; i <= 20; ++i)
			o.require(sol.coeffs[i] == (i == n ? C(1) : C(0)), "number operator at n = " + std::to_string(n));
		o.require(sol.residual.empty(), "number operator residual");
	}

	for (C lambda : {C(1), C(Rational(-3, 7), 2)})
	{
		EigenProblem p{{C(0), C(1), C(0), C(0), C(0)}, lambda};
		auto sol = series_solve(evaluate_at(eigen_operator(p, 0, EigenMode::classical), 0), 24, {{0, C(1)}, {1, C(1)}});
		for (int n = 0; n + 2 <= 24; ++n)
			o.require(sol.coeffs[n + 2] * C((n + 1) * (n + 2)) == lambda * sol.coeffs[n], "beta2 recurrence");
	}

	EigenProblem p{{C(1), C(1, 1), C(Rational(1, 2)), C(-2), C(Rational(1, 3), -1)}, C(Rational(5, 2))};
	auto op = evaluate_at(eigen_operator(p, 1, EigenMode::first_order), Rational(1, 10));
	auto sol = series_solve(op, 30);
	int lowest = 1000;
	for (auto const &[deg, v] : sol.residual)
		lowest = std::min(lowest, deg);
	o.require(lowest > 28, "first-order residual below the truncation degree at " + std::to_string(lowest));
	if (o.pass)
		o.detail = "alpha^n recovered for n=0..10; two-step recurrence holds; degree-30 residual starts at degree " +
		           std::to_string(lowest);
	return o;
}

Outcome discrete_se()
{
	Outcome o;
	int runs = 0;
	for (Rational z : {Rational(1, 10), Rational(1, 4)})
		for (Rational m : {Rational(1), Rational(2)})
			for (Rational a : {Rational(-1, 2), Rational(0)})
			{
				SchrodingerParams p{z, m, a, false};
				std::string tag = "z=" + to_string(z) + " m=" + to_string(m) + " a=" + to_string(a);
				auto real = verify_realization(p);
				o.require(real.total() == 15, "expected 15 brackets");
				o.require(real, tag);

				using Op = SchrodingerOperator;
				Op E = casimir_deformed(p);
				o.require(commutator(E, realize("D", p)) == Rational(2) * E, tag + ": [E,D] != 2E");
				for (auto g : {"K", "H", "P", "M"})
					o.require(commutator(E, realize(g, p)).is_zero(), tag + ": [E," + g + "] != 0");
				Op lambda = Rational(2) * (Op::t(z) + Op::scalar(z * (1 - m), z) - (2 * z) * (Op::x(z) * Op::dx(z)));
				Op rem = commutator(E, realize("C", p)) - lambda * E;
				if (a == Rational(-1, 2))
					o.require(rem.is_zero(), tag + ": [E,C] remainder " + to_string(rem));
				else
					o.require(!rem.is_zero(), tag + ": negative control vanished");
				++runs;
			}
	if (o.pass)
		o.detail = std::to_string(runs) + " parameter points: 15 brackets, [E,D]=2E, [E,S]=0 for K,H,P,M, C exact at a=-1/2, "
		                                   "nonzero remainder at a=0";
	return o;
}

Outcome solutions()
{
	Outcome o;
	SchrodingerParams p{Rational(1, 10), 1, Rational(-1, 2), false};
	auto heat = exact_solutions(p, SolutionFamily::polynomial, {Rational(5)});
	auto expo = exact_solutions(p, SolutionFamily::exponential, {Rational(1), Rational(1, 2), Rational(-2, 3)});
	o.require(heat.size() >= 5, "fewer than 5 heat polynomials");
	o.require(expo.size() >= 3, "fewer than 3 exponential solutions");
	int images = 0;
	for (auto const *family : {&heat, &expo})
		for (auto const &s : *family)
		{
			o.require(s.residual.is_zero(), s.label + " is not a solution");
			for (auto const &g : schrodinger_generators())
			{
				auto e = apply_and_recheck(g, s, p);
				o.require(e.pass, e.name + " on " + s.label + ": " + e.residual);
				++images;
			}
		}

	SchrodingerParams cl{0, 1, Rational(-1, 2), true};
	auto ch = exact_solutions(cl, SolutionFamily::polynomial, {Rational(5)});
	auto ce = exact_solutions(cl, SolutionFamily::exponential, {Rational(1), Rational(1, 2), Rational(-2, 3)});
	for (auto const *family : {&ch, &ce})
		for (auto const &s : *family)
		{
			o.require(s.residual.is_zero(), "classical " + s.label);
			for (auto const &g : schrodinger_generators())
				o.require(apply_and_recheck(g, s, cl).pass, "classical image of " + s.label + " under " + g);
		}
	if (o.pass)
		o.detail = std::to_string(heat.size()) + " heat polynomials and " + std::to_string(expo.size()) +
		           " exponentials certified; " + std::to_string(images) + " images re-certified; classical limit certified";
	return o;
}

std::string slurp(std::filesystem::path const &p)
{
	std::ifstream in(p, std::ios::binary);
	std::stringstream ss;
	ss << in.rdbuf();
	return ss.str();
}

int run_cli(std::string const &args)
{
	std::string cmd = std::string("\"") + TWOPHOTON_CLI_PATH + "\" " + args + " > /dev/null 2>&1";
	int status = std::system(cmd.c_str());
	return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

Outcome determinism()
{
	Outcome o;
	namespace fs = std::filesystem;
	fs::path dir = fs::temp_directory_path() / ("twophoton-acceptance-" + std::to_string(::getpid()));
	fs::create_directories(dir);
	auto file = [&](std::string const &n) { return (dir / n).string(); };

	o.require(run_cli("verify --quiet --out " + file("a.json")) == 0, "first full run did not pass");
	o.require(run_cli("verify --quiet --out " + file("b.json")) == 0, "second full run did not pass");
	std::string a = slurp(file("a.json")), b = slurp(file("b.json"));
	o.require(!a.empty() && a == b, "full reports differ");

	o.require(run_cli("verify --quiet --workers 4 --timings --out " + file("c.json")) == 0, "timed run did not pass");
	auto timed = nlohmann::ordered_json::parse(slurp(file("c.json")));
	o.require(timed.contains("timings"), "timed report lacks timings");
	timed.erase("timings");
	o.require(timed == nlohmann::ordered_json::parse(a), "report with timings removed differs");

	auto parsed = nlohmann::json::parse(a);
	std::size_t total = parsed["summary"]["total"];
	fs::remove_all(dir);
	if (o.pass)
		o.detail = "two full runs byte-identical (" + std::to_string(a.size()) + " bytes, " + std::to_string(total) +
		           " checks); timed 4-worker run equal after dropping timings";
	return o;
}

} // namespace

int main()
{
	std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
	    {"Hopf axioms", hopf_suite},
	    {"R-matrix", rmatrix_suite},
	    {"bialgebra layer", bialgebra_layer},
	    {"transport", transport},
	    {"representation", representation},
	    {"eigenstates", eigenstates},
	    {"discrete Schrodinger equation", discrete_se},
	    {"solutions", solutions},
	    {"determinism", determinism},
	};
	int failed = 0;
	for (std::size_t i = 0; i < criteria.size(); ++i)
	{
		Outcome o;
		try
		{
			o = criteria[i].second();
		}
		catch (std::exception const &e)
		{
			o.pass = false;
			o.detail = std::string("exception: ") + e.what();
		}
		failed += o.pass ? 0 : 1;
		std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << i + 1 << ": " << criteria[i].first << " -- "
		          << o.detail << std::endl;
	}
	return failed == 0 ? 0 : 1;
}
