#include <catch_amalgamated.hpp>

#include <rwf/decide.hpp>

#include "helpers.hpp"

using namespace rwf;
using rwf::test::W;
using rwf::test::load;
using rwf::test::words_upto;

namespace {

Nft two_output_machine()
{
	Nft t;
	t.in = Alphabet{"a"};
	t.out = Alphabet{"a", "b"};
	t.states = 2;
	t.names = {"q0", "q1"};
	t.initial = {{0, {}}};
	t.final = {{1, {}}};
	t.trans = {{0, 0, {0}, 1}, {0, 0, {1}, 1}};
	normalize(t);
	return t;
}

Nft empty_function(Letter letters)
{
	Nft t;
	for(Letter x = 0; x < letters; x++)
		t.in.add(std::string(1, char('a' + x)));
	t.out = Alphabet{"a"};
	t.states = 1;
	t.names = {"q0"};
	normalize(t);
	return t;
}

void check_same_function(const Nft& got, const Nft& want, std::size_t len)
{
	for(const Word& u : words_upto(want.in.size(), len)) {
		auto g = eval(got, u);
		auto w = eval(want, u);
		REQUIRE(g.has_value() == w.has_value());
		if(w)
			REQUIRE(*g == *w);
	}
}

} // namespace

TEST_CASE("first order decision accepts the marker function")
{
	Nft t = load<Nft>("f_ends.nft");
	FoDecision d = decide_fo(t);
	REQUIRE(d.yes);
	REQUIRE(d.witness_monoid.empty());
	REQUIRE_FALSE(d.violation.has_value());

	REQUIRE(d.canonical.has_value());
	REQUIRE(d.canonical->left_congruence.classes.states == 3);
	REQUIRE(d.canonical->right_congruence.classes.states == 3);

	REQUIRE(d.bimachine.has_value());
	REQUIRE(is_complete(*d.bimachine));
	REQUIRE(is_v_bimachine(*d.bimachine, *builtin_variety("aperiodic")));

	REQUIRE(d.nft.has_value());
	REQUIRE(is_unambiguous_nft(*d.nft));
	REQUIRE(in_variety(transition_monoid(underlying(*d.nft)), *builtin_variety("aperiodic")));
	check_same_function(*d.nft, t, 5);

	REQUIRE(d.translation.has_value());
	REQUIRE(d.translation->variety == "aperiodic");
	REQUIRE(is_v_translation(*d.translation, *builtin_variety("aperiodic")));
	for(const Word& u : words_upto(2, 4)) {
		auto g = eval(*d.translation, u);
		auto w = eval(t, u);
		REQUIRE(g.has_value() == w.has_value());
		if(w)
			REQUIRE(*g == *w);
	}
}

TEST_CASE("first order decision rejects the parity function")
{
	Nft t = load<Nft>("f_even.nft");
	FoDecision d = decide_fo(t);
	REQUIRE_FALSE(d.yes);
	REQUIRE(d.witness_monoid == "left");
	REQUIRE(d.witness_element == "a");
	REQUIRE(d.violation.has_value());
	REQUIRE(d.violation->equation == "x^w = x^w x");
	REQUIRE(d.violation->assignment == std::vector<std::string>{"x = a"});
	REQUIRE(d.canonical.has_value());
	REQUIRE(d.canonical->left_congruence.classes.states == 2);
	REQUIRE_FALSE(d.bimachine.has_value());
	REQUIRE_FALSE(d.nft.has_value());
	REQUIRE_FALSE(d.translation.has_value());
}

TEST_CASE("first order decision accepts further fixtures")
{
	FoDecision g = decide_fo(load<Nft>("g2.nft"));
	REQUIRE(g.yes);
	REQUIRE(g.nft.has_value());
	check_same_function(*g.nft, load<Nft>("g2.nft"), 5);

	FoDecision i = decide_fo(nft_of(load<Dft>("id.dft")));
	REQUIRE(i.yes);
	REQUIRE(i.canonical->left_congruence.classes.states == 1);
	REQUIRE(i.canonical->right_congruence.classes.states == 1);
	check_same_function(*i.nft, nft_of(load<Dft>("id.dft")), 4);

	FoDecision e = decide_fo(empty_function(2));
	REQUIRE(e.yes);
	for(const Word& u : words_upto(2, 3))
		REQUIRE_FALSE(eval(*e.nft, u).has_value());
}

TEST_CASE("first order decision requires a functional transducer")
{
	REQUIRE_THROWS_MATCHES(decide_fo(two_output_machine()), PreconditionError,
	                       Catch::Matchers::Message("transducer is not functional"));
	REQUIRE_THROWS_MATCHES(decide_variety_unambiguous(two_output_machine(), *builtin_variety("I")),
	                       PreconditionError,
	                       Catch::Matchers::Message("transducer is not functional"));
}

TEST_CASE("variety decision accepts the marker function for idempotent monoids")
{
	Nft t = load<Nft>("f_ends.nft");
	VarietyDecision d = decide_variety_unambiguous(t, *builtin_variety("I"));
	REQUIRE(d.yes);
	REQUIRE(d.candidates == 1);
	REQUIRE(d.warnings.empty());

	REQUIRE(d.left.has_value());
	REQUIRE(d.right.has_value());
	REQUIRE(d.left->classes.states == 3);
	REQUIRE(d.right->classes.states == 3);
	REQUIRE(in_variety(transition_monoid(d.left->classes), *builtin_variety("I")));
	REQUIRE(in_variety(transition_monoid(d.right->classes), *builtin_variety("I")));

	REQUIRE(d.nft.has_value());
	REQUIRE(is_unambiguous_nft(*d.nft));
	REQUIRE(in_variety(transition_monoid(underlying(*d.nft)), *builtin_variety("I")));
	check_same_function(*d.nft, t, 5);

	REQUIRE(d.bimachine.has_value());
	REQUIRE(is_v_bimachine(*d.bimachine, *builtin_variety("I")));
}

TEST_CASE("variety decision rejects on a domain violation")
{
	Nft t = load<Nft>("g2.nft");
	VarietyDecision d = decide_variety_unambiguous(t, *builtin_variety("Com"));
	REQUIRE_FALSE(d.yes);
	REQUIRE(d.witness_monoid == "domain");
	REQUIRE(d.witness_element == "b");
	REQUIRE(d.violation.has_value());
	REQUIRE(d.violation->equation == "xy = yx");
	REQUIRE(d.violation->assignment.size() == 2);
	REQUIRE(d.violation->assignment.front() == "x = b");
	REQUIRE(d.candidates == 0);
	REQUIRE_FALSE(d.nft.has_value());
}

TEST_CASE("variety decision rejects when the lattice has no fit")
{
	Nft t = load<Nft>("f_even.nft");
	VarietyDecision d = decide_variety_unambiguous(t, *builtin_variety("aperiodic"));
	REQUIRE_FALSE(d.yes);
	REQUIRE(d.candidates == 0);
	REQUIRE(d.witness_monoid.empty());
	REQUIRE_FALSE(d.violation.has_value());
	REQUIRE_FALSE(d.nft.has_value());
}

TEST_CASE("variety decision matches the first order decision for aperiodic monoids")
{
	VarietySpec ap = *builtin_variety("aperiodic");
	const char* files[] = {"f_ends.nft", "f_even.nft", "g2.nft"};
	for(const char* file : files) {
		Nft t = load<Nft>(file);
		INFO(file);
		REQUIRE(decide_variety_unambiguous(t, ap).yes == decide_fo(t).yes);
	}
	Nft id = nft_of(load<Dft>("id.dft"));
	REQUIRE(decide_variety_unambiguous(id, ap).yes == decide_fo(id).yes);
}

TEST_CASE("variety decision recovers an idempotent machine")
{
	Nft t = load<Nft>("det1.nft");
	VarietyDecision d = decide_variety_unambiguous(t, *builtin_variety("I"));
	REQUIRE(d.yes);
	REQUIRE(d.candidates >= 1);

	REQUIRE(d.left.has_value());
	REQUIRE(d.right.has_value());
	REQUIRE(in_variety(transition_monoid(d.left->classes), *builtin_variety("I")));
	REQUIRE(in_variety(transition_monoid(d.right->classes), *builtin_variety("I")));

	REQUIRE(d.nft.has_value());
	REQUIRE(is_unambiguous_nft(*d.nft));
	REQUIRE(in_variety(transition_monoid(underlying(*d.nft)), *builtin_variety("I")));
	check_same_function(*d.nft, t, 5);
	REQUIRE(eval(*d.nft, W(t.in, "a")) == W(t.out, "a"));
	REQUIRE(eval(*d.nft, W(t.in, "aa")) == W(t.out, "b"));
	REQUIRE_FALSE(eval(*d.nft, Word{}).has_value());
	REQUIRE_FALSE(eval(*d.nft, W(t.in, "ab")).has_value());
}

TEST_CASE("variety decision recovers a commutative machine")
{
	Nft t = load<Nft>("det2.nft");
	VarietyDecision d = decide_variety_unambiguous(t, *builtin_variety("Com"));
	REQUIRE(d.yes);
	REQUIRE(d.candidates >= 1);
	REQUIRE(d.nft.has_value());
	REQUIRE(is_unambiguous_nft(*d.nft));
	REQUIRE(in_variety(transition_monoid(underlying(*d.nft)), *builtin_variety("Com")));
	check_same_function(*d.nft, t, 4);
	REQUIRE(eval(*d.nft, W(t.in, "aba")) == W(t.out, "ab"));
	REQUIRE(eval(*d.nft, W(t.in, "baa")) == W(t.out, "c"));
}

TEST_CASE("variety decision recovers a piecewise testable machine")
{
	Nft t = load<Nft>("det4.nft");
	VarietyDecision d = decide_variety_unambiguous(t, *builtin_variety("J"));
	REQUIRE(d.yes);
	REQUIRE(d.candidates >= 1);
	REQUIRE(d.nft.has_value());
	REQUIRE(is_unambiguous_nft(*d.nft));
	REQUIRE(in_variety(transition_monoid(underlying(*d.nft)), *builtin_variety("J")));
	check_same_function(*d.nft, t, 3);
	auto abad = eval(*d.nft, W(t.in, "abad"));
	auto want = eval(t, W(t.in, "abad"));
	REQUIRE(abad.has_value() == want.has_value());
	if(want)
		REQUIRE(*abad == *want);
}
