#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "automaton.hpp"
#include "error.hpp"
#include "monoid.hpp"
#include "transducer.hpp"
#include "word.hpp"

namespace rwf {

// A bimachine pairs a deterministic left automaton with a deterministic
// right automaton; neither carries final states. The output function omega
// is keyed by (left state, letter, right state) and may be partial, as may
// the terminal functions lambda (on right states) and rho (on left states).
struct Bimachine {
	Dfa left;
	Dfa right;
	Alphabet out;
	std::map<std::tuple<State, Letter, State>, Word> omega;
	std::map<State, Word> lambda;
	std::map<State, Word> rho;
};

inline void normalize(Bimachine& b)
{
	if(b.left.orient != Orientation::left)
		throw InputError("bimachine left automaton must be left-oriented");
	if(b.right.orient != Orientation::right)
		throw InputError("bimachine right automaton must be right-oriented");
	if(!(b.left.alphabet == b.right.alphabet))
		throw InputError("bimachine automata must share one input alphabet");
	if(b.left.states == 0 || b.right.states == 0)
		throw InputError("bimachine automata must be nonempty");
	b.left.final.clear();
	b.right.final.clear();
	for(const auto& [key, w] : b.omega) {
		auto [l, x, r] = key;
		if(l >= b.left.states || r >= b.right.states || x >= b.left.alphabet.size())
			throw InputError("bimachine output entry out of range");
		for(Letter y : w)
			if(y >= b.out.size())
				throw InputError("bimachine output letter out of range");
	}
	for(const auto& [r, w] : b.lambda) {
		if(r >= b.right.states)
			throw InputError("bimachine terminal right state out of range");
		for(Letter y : w)
			if(y >= b.out.size())
				throw InputError("bimachine output letter out of range");
	}
	for(const auto& [l, w] : b.rho) {
		if(l >= b.left.states)
			throw InputError("bimachine terminal left state out of range");
		for(Letter y : w)
			if(y >= b.out.size())
				throw InputError("bimachine output letter out of range");
	}
}

// An undefined value anywhere along the two runs makes the image undefined;
// that is a value, not an error.
inline std::optional<Word> eval(const Bimachine& b, const Word& u)
{
	std::size_t n = u.size();
	std::vector<State> lrun(n + 1), rrun(n + 1);
	lrun[0] = b.left.initial;
	for(std::size_t i = 0; i < n; i++) {
		auto s = b.left.step(lrun[i], u[i]);
		if(!s)
			return std::nullopt;
		lrun[i + 1] = *s;
	}
	rrun[0] = b.right.initial;
	for(std::size_t j = 0; j < n; j++) {
		auto s = b.right.step(rrun[j], u[n - 1 - j]);
		if(!s)
			return std::nullopt;
		rrun[j + 1] = *s;
	}
	auto la = b.lambda.find(rrun[n]);
	if(la == b.lambda.end())
		return std::nullopt;
	Word res = la->second;
	for(std::size_t i = 1; i <= n; i++) {
		auto om = b.omega.find({lrun[i - 1], u[i - 1], rrun[n - i]});
		if(om == b.omega.end())
			return std::nullopt;
		append(res, om->second);
	}
	auto rh = b.rho.find(lrun[n]);
	if(rh == b.rho.end())
		return std::nullopt;
	append(res, rh->second);
	return res;
}

inline bool is_complete(const Bimachine& b)
{
	std::size_t need = static_cast<std::size_t>(b.left.states) * b.left.alphabet.size() * b.right.states;
	return b.omega.size() == need;
}

// L x R product transducer. Backward determinism of the right automaton
// makes the result unambiguous.
inline Nft bimachine_to_nft(const Bimachine& b)
{
	Nft t;
	t.orient = Orientation::left;
	t.in = b.left.alphabet;
	t.out = b.out;
	t.states = b.left.states * b.right.states;
	auto id = [&](State l, State r) { return l * b.right.states + r; };
	for(State l = 0; l < b.left.states; l++)
		for(State r = 0; r < b.right.states; r++)
			t.names.push_back("(" + b.left.state_name(l) + "," + b.right.state_name(r) + ")");
	for(const auto& [r, w] : b.lambda)
		t.initial.push_back({id(b.left.initial, r), w});
	for(const auto& [l, w] : b.rho)
		t.final.push_back({id(l, b.right.initial), w});
	for(State l = 0; l < b.left.states; l++)
		for(Letter x = 0; x < t.in.size(); x++) {
			auto l2 = b.left.step(l, x);
			if(!l2)
				continue;
			for(State r2 = 0; r2 < b.right.states; r2++) {
				auto r1 = b.right.step(r2, x);
				if(!r1)
					continue;
				auto om = b.omega.find({l, x, r2});
				if(om == b.omega.end())
					continue;
				t.trans.push_back({id(l, *r1), x, om->second, id(*l2, r2)});
			}
		}
	normalize(t);
	return trim(t);
}

inline Nfa bimachine_domain(const Bimachine& b)
{
	return underlying(bimachine_to_nft(b));
}

// Structure flip: the mirror bimachine computes, on u, the reversal of the
// original image of reversed u.
inline Bimachine mirror_bimachine(const Bimachine& b)
{
	Bimachine m;
	m.left = b.right;
	m.left.orient = Orientation::left;
	m.right = b.left;
	m.right.orient = Orientation::right;
	m.out = b.out;
	for(const auto& [key, w] : b.omega) {
		auto [l, x, r] = key;
		m.omega[{r, x, l}] = reversed(w);
	}
	for(const auto& [l, w] : b.rho)
		m.lambda[l] = reversed(w);
	for(const auto& [r, w] : b.lambda)
		m.rho[r] = reversed(w);
	return m;
}

// Equivalent left-oriented transducer. A right transducer's stored structure
// read left to right computes the mirror image of its function, so flipping
// the structure again restores the function.
inline Nft left_form(const Nft& t)
{
	if(t.orient == Orientation::left)
		return t;
	Nft s = t;
	s.orient = Orientation::left;
	return mirror(s);
}

namespace detail {

// States reached from the initial states by the word, and states from which
// the word can reach a final state.
inline std::vector<char> reach_on(const Nfa& a, const Word& w)
{
	std::vector<char> cur(a.states, 0), nxt;
	for(State q : a.initial)
		cur[q] = 1;
	for(Letter x : w) {
		nxt.assign(a.states, 0);
		for(const Transition& t : a.trans)
			if(t.letter == x && cur[t.from])
				nxt[t.to] = 1;
		cur.swap(nxt);
	}
	return cur;
}

inline std::vector<char> coreach_on(const Nfa& a, const Word& w)
{
	std::vector<char> cur(a.states, 0), nxt;
	for(State q : a.final)
		cur[q] = 1;
	for(auto it = w.rbegin(); it != w.rend(); ++it) {
		nxt.assign(a.states, 0);
		for(const Transition& t : a.trans)
			if(t.letter == *it && cur[t.to])
				nxt[t.from] = 1;
		cur.swap(nxt);
	}
	return cur;
}

} // namespace detail

// Both automata of the result classify words by the transition congruence
// of the transducer, acting on the right for the left automaton and on the
// left for the right automaton. Outputs are read off the unique runs an
// unambiguous transducer provides.
inline Bimachine nft_to_bimachine(const Nft& input)
{
	if(input.orient == Orientation::right) {
		Nft flipped = input;
		flipped.orient = Orientation::left;
		return mirror_bimachine(nft_to_bimachine(flipped));
	}
	Nft t = trim(input);
	Nfa a = underlying(t);
	AmbiguityResult amb = check_unambiguous(a);
	if(!amb.unambiguous)
		throw PreconditionError("transducer is not unambiguous; disambiguate it first",
		                        {{"witness", amb.witness ? word_text(*amb.witness, t.in) : ""}});

	Bimachine b;
	b.out = t.out;
	if(t.states == 0) {
		// Empty function: one-class congruence on both sides, nothing defined.
		b.left.orient = Orientation::left;
		b.left.alphabet = t.in;
		b.left.states = 1;
		b.left.initial = 0;
		b.left.delta.assign(t.in.size(), 0);
		b.right = b.left;
		b.right.orient = Orientation::right;
		return b;
	}

	FiniteMonoid m = transition_monoid(a);
	b.left.orient = Orientation::left;
	b.left.alphabet = t.in;
	b.left.states = m.size;
	b.left.initial = m.identity;
	b.left.delta.assign(static_cast<std::size_t>(m.size) * t.in.size(), -1);
	b.right = b.left;
	b.right.orient = Orientation::right;
	for(Elem e = 0; e < m.size; e++) {
		b.left.names.push_back(m.elem_name(e));
		for(Letter x = 0; x < t.in.size(); x++) {
			b.left.at(e, x) = m.mult(e, m.letter_elem[x]);
			b.right.at(e, x) = m.mult(m.letter_elem[x], e);
		}
	}
	b.right.names = b.left.names;

	std::vector<std::vector<char>> reach(m.size), coreach(m.size);
	for(Elem e = 0; e < m.size; e++) {
		reach[e] = detail::reach_on(a, m.rep[e]);
		coreach[e] = detail::coreach_on(a, m.rep[e]);
	}
	for(Elem e1 = 0; e1 < m.size; e1++)
		for(const NftTransition& tr : t.trans) {
			if(!reach[e1][tr.from])
				continue;
			for(Elem e2 = 0; e2 < m.size; e2++) {
				if(!coreach[e2][tr.to])
					continue;
				auto [it, inserted] = b.omega.try_emplace({e1, tr.letter, e2}, tr.out);
				if(!inserted && it->second != tr.out)
					throw PreconditionError("ambiguous output despite unambiguous runs",
					                        {{"left", m.elem_name(e1)},
					                         {"letter", t.in.name(tr.letter)},
					                         {"right", m.elem_name(e2)}});
			}
		}
	for(Elem e = 0; e < m.size; e++) {
		// lambda: the unique initial state accepting the class representative.
		std::optional<Word> lam, rho;
		for(const auto& [q, w] : t.initial)
			if(coreach[e][q]) {
				if(lam && *lam != w)
					throw PreconditionError("two initial states accept one class",
					                        {{"class", m.elem_name(e)}});
				lam = w;
			}
		for(const auto& [q, w] : t.final)
			if(reach[e][q]) {
				if(rho && *rho != w)
					throw PreconditionError("two final states end one class",
					                        {{"class", m.elem_name(e)}});
				rho = w;
			}
		if(lam)
			b.lambda[e] = *lam;
		if(rho)
			b.rho[e] = *rho;
	}
	return b;
}

// Totalize omega with empty outputs while cutting the left automaton down to
// the domain: the left side is paired with the minimal complete automaton of
// the domain and terminal-left outputs survive only on accepting pairs. Both
// automata come out complete, so the result is a complete bimachine and the
// construction preserves the transition monoids up to division.
inline Bimachine complete_bimachine(const Bimachine& b)
{
	Nfa dom = bimachine_domain(b);
	Dfa a = minimize(determinize(dom));
	Dfa lc = complete(b.left);
	lc.final.clear();
	Dfa rc = complete(b.right);
	rc.final.clear();

	Bimachine c;
	c.out = b.out;
	c.right = rc;
	c.right.sink.reset();
	c.left.orient = Orientation::left;
	c.left.alphabet = lc.alphabet;

	std::map<std::pair<State, State>, State> ids;
	std::vector<std::pair<State, State>> order;
	auto intern = [&](State l, State q) {
		auto [it, inserted] = ids.try_emplace({l, q}, static_cast<State>(ids.size()));
		if(inserted)
			order.push_back({l, q});
		return it->second;
	};
	intern(lc.initial, a.initial);
	std::vector<std::int64_t> delta;
	for(std::size_t i = 0; i < order.size(); i++) {
		auto [l, q] = order[i];
		for(Letter x = 0; x < lc.alphabet.size(); x++) {
			auto l2 = lc.step(l, x);
			auto q2 = a.step(q, x);
			if(!l2 || !q2)
				throw PreconditionError("complete: automaton completion left a hole");
			delta.push_back(intern(*l2, *q2));
		}
	}
	c.left.states = static_cast<State>(order.size());
	c.left.delta = delta;
	c.left.initial = 0;
	for(auto [l, q] : order)
		c.left.names.push_back("(" + lc.state_name(l) + "," + a.state_name(q) + ")");

	c.lambda = b.lambda;
	for(State i = 0; i < c.left.states; i++) {
		auto [l, q] = order[i];
		if(a.is_final(q)) {
			auto rh = b.rho.find(l);
			if(rh == b.rho.end())
				throw PreconditionError("complete: accepting state misses a terminal output",
				                        {{"state", c.left.state_name(i)}});
			c.rho[i] = rh->second;
		}
		for(Letter x = 0; x < lc.alphabet.size(); x++)
			for(State r = 0; r < rc.states; r++) {
				auto om = b.omega.find({l, x, r});
				c.omega[{i, x, r}] = om == b.omega.end() ? Word{} : om->second;
			}
	}
	return c;
}

namespace detail {

// Morphism from the fine automaton onto the coarse one, paired by parallel
// walks from the initial states.
inline std::vector<std::int64_t> refinement_map(const Dfa& fine, const Dfa& coarse, const char* side)
{
	if(!(fine.alphabet == coarse.alphabet) || fine.orient != coarse.orient)
		throw PreconditionError(std::string(side) + " automaton does not match the bimachine");
	std::vector<std::int64_t> map(fine.states, -1);
	std::vector<State> queue;
	if(fine.states == 0)
		throw PreconditionError(std::string(side) + " automaton is empty");
	map[fine.initial] = coarse.initial;
	queue.push_back(fine.initial);
	while(!queue.empty()) {
		State q = queue.back();
		queue.pop_back();
		for(Letter x = 0; x < fine.alphabet.size(); x++) {
			auto n = fine.step(q, x);
			if(!n)
				continue;
			auto c = coarse.step(static_cast<State>(map[q]), x);
			if(!c)
				throw PreconditionError(std::string(side) + " automaton is not finer than the bimachine's",
				                        {{"state", fine.state_name(q)},
				                         {"letter", fine.alphabet.name(x)}});
			if(map[*n] < 0) {
				map[*n] = *c;
				queue.push_back(*n);
			} else if(map[*n] != *c)
				throw PreconditionError(std::string(side) + " automaton is not finer than the bimachine's",
				                        {{"state", fine.state_name(*n)}});
		}
	}
	return map;
}

} // namespace detail

// Rebase a bimachine onto finer automata: outputs are read through the
// refinement morphisms.
inline Bimachine rebase_finer(const Bimachine& b, const Dfa& finer_left, const Dfa& finer_right)
{
	std::vector<std::int64_t> lm = detail::refinement_map(finer_left, b.left, "left");
	std::vector<std::int64_t> rm = detail::refinement_map(finer_right, b.right, "right");
	Bimachine c;
	c.left = finer_left;
	c.left.final.clear();
	c.right = finer_right;
	c.right.final.clear();
	c.out = b.out;
	for(State l = 0; l < c.left.states; l++) {
		if(lm[l] < 0)
			continue;
		auto rh = b.rho.find(static_cast<State>(lm[l]));
		if(rh != b.rho.end())
			c.rho[l] = rh->second;
		for(Letter x = 0; x < c.left.alphabet.size(); x++)
			for(State r = 0; r < c.right.states; r++) {
				if(rm[r] < 0)
					continue;
				auto om = b.omega.find({static_cast<State>(lm[l]), x, static_cast<State>(rm[r])});
				if(om != b.omega.end())
					c.omega[{l, x, r}] = om->second;
			}
	}
	for(State r = 0; r < c.right.states; r++) {
		if(rm[r] < 0)
			continue;
		auto la = b.lambda.find(static_cast<State>(rm[r]));
		if(la != b.lambda.end())
			c.lambda[r] = la->second;
	}
	return c;
}

inline bool is_v_bimachine(const Bimachine& b, const VarietySpec& v)
{
	return in_variety(transition_monoid(b.left), v) && in_variety(transition_monoid(b.right), v);
}

} // namespace rwf
