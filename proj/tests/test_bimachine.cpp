#include <catch_amalgamated.hpp>

#include <rwf/bimachine.hpp>
#include <rwf/monoid.hpp>

#include "helpers.hpp"

using namespace rwf;
using rwf::test::W;
using rwf::test::load;
using rwf::test::words_upto;

namespace {

Word block_copy(const Word& u)
{
	if(u.empty() || u.front() != 0 || u.back() != 0)
		return {};
	return Word(u.size(), 0);
}

Nft disjoint_union(const Nft& a, const Nft& b)
{
	Nft t;
	t.orient = a.orient;
	t.in = a.in;
	t.out = a.out;
	t.states = a.states + b.states;
	t.initial = a.initial;
	t.final = a.final;
	t.trans = a.trans;
	for(const auto& [q, w] : b.initial)
		t.initial.push_back({static_cast<State>(q + a.states), w});
	for(const auto& [q, w] : b.final)
		t.final.push_back({static_cast<State>(q + a.states), w});
	for(const NftTransition& tr : b.trans)
		t.trans.push_back({static_cast<State>(tr.from + a.states), tr.letter, tr.out,
		                   static_cast<State>(tr.to + a.states)});
	normalize(t);
	return t;
}

Dfa one_state_complete(const Alphabet& ab, Orientation o)
{
	Dfa d;
	d.orient = o;
	d.alphabet = ab;
	d.states = 1;
	d.initial = 0;
	d.delta.assign(ab.size(), 0);
	return d;
}

} // namespace

TEST_CASE("bimachine evaluation splices the two runs")
{
	Bimachine b = load<Bimachine>("xmp.bim");
	CHECK(eval(b, W(b.left.alphabet, "abaa")) == W(b.out, "aaaa"));
	CHECK(eval(b, W(b.left.alphabet, "baaab")) == Word{});
	CHECK(eval(b, W(b.left.alphabet, "abab")) == Word{});
	CHECK(eval(b, Word{}) == Word{});
	for(const Word& u : words_upto(2, 6))
		CHECK(eval(b, u) == block_copy(u));
}

TEST_CASE("completeness asks for one output entry per state pair and letter")
{
	CHECK(is_complete(load<Bimachine>("xmp.bim")));
	CHECK_FALSE(is_complete(load<Bimachine>("vbim.bim")));
}

TEST_CASE("partial bimachine defines exactly its listed word")
{
	Bimachine b = load<Bimachine>("vbim.bim");
	CHECK(eval(b, W(b.left.alphabet, "ab")) == Word{});
	for(const Word& u : words_upto(2, 4))
		CHECK(eval(b, u).has_value() == (u == W(b.left.alphabet, "ab")));

	Nfa dom = bimachine_domain(b);
	for(const Word& u : words_upto(2, 4))
		CHECK(accepts(dom, u) == (u == W(b.left.alphabet, "ab")));
}

TEST_CASE("bimachine to transducer keeps the function and unambiguity")
{
	Bimachine b = load<Bimachine>("xmp.bim");
	Nft t = bimachine_to_nft(b);
	CHECK(t.states == 9);
	CHECK(is_unambiguous_nft(t));
	for(const Word& u : words_upto(2, 5))
		CHECK(eval(t, u) == eval(b, u));

	Nfa dom = bimachine_domain(b);
	for(const Word& u : words_upto(2, 5))
		CHECK(accepts(dom, u));
}

TEST_CASE("mirrored bimachine computes the reversed function")
{
	Bimachine b = load<Bimachine>("xmp.bim");
	Bimachine m = mirror_bimachine(b);
	for(const Word& u : words_upto(2, 5)) {
		auto direct = eval(b, reversed(u));
		auto via = eval(m, u);
		if(direct)
			CHECK(via == reversed(*direct));
		else
			CHECK_FALSE(via.has_value());
	}
	Bimachine back = mirror_bimachine(m);
	for(const Word& u : words_upto(2, 5))
		CHECK(eval(back, u) == eval(b, u));
}

TEST_CASE("left form reorients a transducer without changing its function")
{
	Nft t = load<Nft>("f_ends.nft");
	CHECK(left_form(t).orient == Orientation::left);

	Nft r = t;
	r.orient = Orientation::right;
	normalize(r);
	Nft lf = left_form(r);
	CHECK(lf.orient == Orientation::left);
	for(const Word& u : words_upto(2, 5))
		CHECK(eval(lf, u) == eval(r, u));
}

TEST_CASE("transducer to bimachine agrees with the source")
{
	for(const char* file : {"f_ends.nft", "g2.nft", "det2.nft"}) {
		Nft t = load<Nft>(file);
		Bimachine b = nft_to_bimachine(t);
		for(const Word& u : words_upto(t.in.size(), 5))
			CHECK(eval(b, u) == eval(t, u));
	}

	Nft even = load<Nft>("f_even.nft");
	Bimachine be = nft_to_bimachine(even);
	for(const Word& u : words_upto(1, 8))
		CHECK(eval(be, u) == eval(even, u));

	Dft id = load<Dft>("id.dft");
	Bimachine bi = nft_to_bimachine(nft_of(id));
	for(const Word& u : words_upto(2, 4))
		CHECK(eval(bi, u) == u);
}

TEST_CASE("transducer to bimachine rejects ambiguous input")
{
	Nft even = load<Nft>("f_even.nft");
	Nft amb = disjoint_union(even, even);
	CHECK_THROWS_MATCHES(nft_to_bimachine(amb), PreconditionError,
	                     Catch::Matchers::Message(
	                         "transducer is not unambiguous; disambiguate it first"));
}

TEST_CASE("empty transducer yields the nowhere defined bimachine")
{
	Nft t;
	t.in.add("a");
	Bimachine b = nft_to_bimachine(t);
	CHECK(b.left.states == 1);
	CHECK(b.right.states == 1);
	CHECK(eval(b, Word{}) == std::nullopt);
	CHECK(eval(b, W(t.in, "a")) == std::nullopt);
}

TEST_CASE("completion totalizes the tables but not the function")
{
	Bimachine b = nft_to_bimachine(load<Nft>("g2.nft"));
	Bimachine c = complete_bimachine(b);
	CHECK(is_complete(c));
	CHECK(is_complete(c.left));
	CHECK(is_complete(c.right));
	for(const Word& u : words_upto(2, 5))
		CHECK(eval(c, u) == eval(b, u));

	Bimachine v = load<Bimachine>("vbim.bim");
	Bimachine cv = complete_bimachine(v);
	CHECK(is_complete(cv));
	for(const Word& u : words_upto(2, 4))
		CHECK(eval(cv, u) == eval(v, u));
}

TEST_CASE("refinement maps recover the coarser run")
{
	Bimachine b = load<Bimachine>("xmp.bim");

	auto id = detail::refinement_map(b.left, b.left, "left");
	CHECK(id == std::vector<std::int64_t>{0, 1, 2});

	Dfa top = one_state_complete(b.left.alphabet, Orientation::left);
	auto all = detail::refinement_map(b.left, top, "left");
	CHECK(all == std::vector<std::int64_t>{0, 0, 0});

	CHECK_THROWS_MATCHES(detail::refinement_map(top, b.left, "left"), PreconditionError,
	                     Catch::Matchers::Message(
	                         "left automaton is not finer than the bimachine's"));
	CHECK_THROWS_MATCHES(detail::refinement_map(b.left, b.right, "left"), PreconditionError,
	                     Catch::Matchers::Message("left automaton does not match the bimachine"));

	Dfa empty;
	empty.orient = Orientation::left;
	empty.alphabet = b.left.alphabet;
	CHECK_THROWS_MATCHES(detail::refinement_map(empty, b.left, "left"), PreconditionError,
	                     Catch::Matchers::Message("left automaton is empty"));

	Bimachine v = load<Bimachine>("vbim.bim");
	Dfa fine = complete(v.left);
	try {
		detail::refinement_map(fine, v.left, "left");
		FAIL("expected the walk to fall off the partial coarse automaton");
	} catch(const PreconditionError& e) {
		CHECK(std::string(e.what()) == "left automaton is not finer than the bimachine's");
		CHECK(e.details().count("state") == 1);
	}
}

TEST_CASE("rebasing onto finer automata preserves the function")
{
	Bimachine b = load<Bimachine>("xmp.bim");

	Bimachine same = rebase_finer(b, b.left, b.right);
	for(const Word& u : words_upto(2, 5))
		CHECK(eval(same, u) == eval(b, u));

	Dfa parity = load<Dfa>("l_even.dfa");
	parity.final.clear();
	Dfa finer_left = product(b.left, parity, BoolOp::and_);
	Dfa finer_right = product(b.right, b.right, BoolOp::and_);
	Bimachine c = rebase_finer(b, finer_left, finer_right);
	CHECK(c.left.states > b.left.states);
	for(const Word& u : words_upto(2, 5))
		CHECK(eval(c, u) == eval(b, u));
}

TEST_CASE("variety membership of a bimachine checks both transition monoids")
{
	VarietySpec com = *builtin_variety("Com");
	VarietySpec ap = *builtin_variety("aperiodic");
	VarietySpec j1 = *builtin_variety("J1");

	Bimachine v = load<Bimachine>("vbim.bim");
	CHECK(is_v_bimachine(v, com));
	CHECK(is_v_bimachine(v, ap));
	CHECK_FALSE(is_v_bimachine(v, j1));

	Bimachine x = load<Bimachine>("xmp.bim");
	CHECK(is_v_bimachine(x, ap));
	CHECK(is_v_bimachine(x, *builtin_variety("I")));
	CHECK_FALSE(is_v_bimachine(x, com));

	Bimachine e = nft_to_bimachine(load<Nft>("f_even.nft"));
	CHECK_FALSE(is_v_bimachine(e, ap));
}

TEST_CASE("bimachine normalization rejects malformed machines")
{
	Bimachine b = load<Bimachine>("xmp.bim");
	Bimachine bad = b;
	bad.left.orient = Orientation::right;
	CHECK_THROWS_MATCHES(normalize(bad), InputError,
	                     Catch::Matchers::Message("bimachine left automaton must be left-oriented"));

	bad = b;
	bad.right.orient = Orientation::left;
	CHECK_THROWS_MATCHES(normalize(bad), InputError,
	                     Catch::Matchers::Message("bimachine right automaton must be right-oriented"));

	bad = b;
	bad.omega[{9, 0, 0}] = Word{};
	CHECK_THROWS_MATCHES(normalize(bad), InputError,
	                     Catch::Matchers::Message("bimachine output entry out of range"));

	bad = b;
	bad.lambda[7] = Word{};
	CHECK_THROWS_MATCHES(normalize(bad), InputError,
	                     Catch::Matchers::Message("bimachine terminal right state out of range"));
}
