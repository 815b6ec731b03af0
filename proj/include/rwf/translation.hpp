#pragma once

#include <algorithm>
#include <cstdint>
#include <deque>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "rwf/bimachine.hpp"

namespace rwf {

// A rule contributes its output word at a position when the prefix strictly
// before the position satisfies the left component and the suffix strictly
// after it satisfies the right component.
struct TranslationRule {
	std::uint32_t j = 0;
	Letter letter = 0;
	Word out;
	Dfa left;
	Dfa right;
};

// Logical presentation of a rational function: per-position rules plus
// whole-word initial and terminal output selectors, every component a
// deterministic automaton over the input alphabet.
struct Translation {
	Alphabet in, out;
	std::uint32_t k = 0;
	std::vector<Word> outputs;
	std::vector<TranslationRule> rules;
	std::map<Word, Dfa> initial;
	std::map<Word, Dfa> terminal;
	std::string variety = "all";
};

inline void normalize(Translation& t)
{
	auto component = [&](const Dfa& d, Orientation o, const char* what) {
		if(d.orient != o)
			throw InputError(std::string(what) + " component has the wrong orientation");
		if(!(d.alphabet == t.in))
			throw InputError(std::string(what) +
			                 " component alphabet differs from the input alphabet");
		if(d.states == 0)
			throw InputError(std::string(what) + " component has no states");
	};
	std::set<Word> outs(t.outputs.begin(), t.outputs.end());
	if(outs.size() != t.outputs.size())
		throw InputError("duplicate output words");
	for(const Word& w : t.outputs)
		for(Letter x : w)
			if(x >= t.out.size())
				throw InputError("output word letter out of range");
	for(const TranslationRule& r : t.rules) {
		if(r.j >= t.k)
			throw InputError("rule index out of range",
			                 {{"index", std::to_string(r.j)}});
		if(r.letter >= t.in.size())
			throw InputError("rule letter out of range");
		if(!outs.count(r.out))
			throw InputError("rule output word is not a listed output");
		component(r.left, Orientation::left, "rule left");
		component(r.right, Orientation::right, "rule right");
	}
	for(const auto& [v, d] : t.initial) {
		if(!outs.count(v))
			throw InputError("initial output word is not a listed output");
		component(d, Orientation::right, "initial");
	}
	for(const auto& [v, d] : t.terminal) {
		if(!outs.count(v))
			throw InputError("terminal output word is not a listed output");
		component(d, Orientation::left, "terminal");
	}
}

// Match-set semantics: at every slot the rules that fire must agree on one
// output word; an empty match set makes the whole image undefined.
inline std::optional<Word> eval(const Translation& t, const Word& u)
{
	for(Letter x : u)
		if(x >= t.in.size())
			throw InputError("input letter out of range");
	const std::size_t n = u.size();
	std::vector<std::vector<char>> accl(t.rules.size()), accr(t.rules.size());
	for(std::size_t i = 0; i < t.rules.size(); i++) {
		const Dfa& ld = t.rules[i].left;
		accl[i].assign(n + 1, 0);
		std::optional<State> q = ld.initial;
		accl[i][0] = ld.is_final(*q);
		for(std::size_t p = 0; p < n; p++) {
			if(q)
				q = ld.step(*q, u[p]);
			accl[i][p + 1] = q && ld.is_final(*q);
		}
		const Dfa& rd = t.rules[i].right;
		accr[i].assign(n + 1, 0);
		std::optional<State> r = rd.initial;
		accr[i][n] = rd.is_final(*r);
		for(std::size_t p = n; p > 0; p--) {
			if(r)
				r = rd.step(*r, u[p - 1]);
			accr[i][p - 1] = r && rd.is_final(*r);
		}
	}

	Word result;
	{
		const Word* v = nullptr;
		for(const auto& [w, d] : t.initial)
			if(accepts(d, u)) {
				if(v)
					throw PreconditionError("two initial outputs match one input",
					                        {{"input", word_text(u, t.in)}});
				v = &w;
			}
		if(!v)
			return std::nullopt;
		append(result, *v);
	}
	for(std::size_t p = 0; p < n; p++) {
		const Word* v = nullptr;
		for(std::size_t i = 0; i < t.rules.size(); i++) {
			if(t.rules[i].letter != u[p] || !accl[i][p] || !accr[i][p + 1])
				continue;
			if(v && *v != t.rules[i].out)
				throw PreconditionError(
				    "two rules with different outputs match one position",
				    {{"input", word_text(u, t.in)},
				     {"position", std::to_string(p + 1)}});
			v = &t.rules[i].out;
		}
		if(!v)
			return std::nullopt;
		append(result, *v);
	}
	{
		const Word* v = nullptr;
		for(const auto& [w, d] : t.terminal)
			if(accepts(d, u)) {
				if(v)
					throw PreconditionError("two terminal outputs match one input",
					                        {{"input", word_text(u, t.in)}});
				v = &w;
			}
		if(!v)
			return std::nullopt;
		append(result, *v);
	}
	return result;
}

namespace detail {

inline std::optional<Word> shortest_accepted(const Dfa& d)
{
	if(d.states == 0)
		return std::nullopt;
	std::vector<char> seen(d.states, 0);
	std::vector<Word> path(d.states);
	std::deque<State> queue;
	seen[d.initial] = 1;
	queue.push_back(d.initial);
	while(!queue.empty()) {
		State q = queue.front();
		queue.pop_front();
		if(d.is_final(q))
			return d.orient == Orientation::left ? path[q] : reversed(path[q]);
		for(Letter x = 0; x < d.alphabet.size(); x++)
			if(auto to = d.step(q, x))
				if(!seen[*to]) {
					seen[*to] = 1;
					path[*to] = path[q];
					path[*to].push_back(x);
					queue.push_back(*to);
				}
	}
	return std::nullopt;
}

// Reachable signatures of a component list: which components accept, with a
// shortest witness word per signature. Components are completed first.
inline std::map<std::vector<char>, Word> component_signatures(std::vector<Dfa> comp,
                                                              Orientation orient)
{
	for(Dfa& d : comp)
		d = complete(d);
	std::map<std::vector<State>, Word> seen;
	std::deque<std::vector<State>> queue;
	std::vector<State> init;
	for(const Dfa& d : comp)
		init.push_back(d.initial);
	seen.emplace(init, Word{});
	queue.push_back(std::move(init));
	std::map<std::vector<char>, Word> sigs;
	std::size_t alphabet = comp.empty() ? 0 : comp.front().alphabet.size();
	while(!queue.empty()) {
		std::vector<State> tup = std::move(queue.front());
		queue.pop_front();
		Word w = seen.at(tup);
		std::vector<char> sig(comp.size());
		for(std::size_t i = 0; i < comp.size(); i++)
			sig[i] = comp[i].is_final(tup[i]);
		sigs.try_emplace(std::move(sig),
		                 orient == Orientation::left ? w : reversed(w));
		for(Letter x = 0; x < alphabet; x++) {
			std::vector<State> next(comp.size());
			for(std::size_t i = 0; i < comp.size(); i++)
				next[i] = *comp[i].step(tup[i], x);
			Word nw = w;
			nw.push_back(x);
			if(seen.emplace(next, std::move(nw)).second)
				queue.push_back(std::move(next));
		}
	}
	return sigs;
}

} // namespace detail

struct ExhaustiveWitness {
	Letter letter = 0;
	Word prefix, suffix;
};

// A translation is exhaustive when at every position some rule fires, i.e.
// for each letter the rule rectangles cover all prefix-suffix pairs.
inline std::optional<ExhaustiveWitness> exhaustiveness_gap(const Translation& t)
{
	std::vector<Dfa> lefts, rights;
	for(const TranslationRule& r : t.rules) {
		lefts.push_back(r.left);
		rights.push_back(r.right);
	}
	if(t.in.size() == 0)
		return std::nullopt;
	auto sigl = detail::component_signatures(lefts, Orientation::left);
	auto sigr = detail::component_signatures(rights, Orientation::right);
	for(const auto& [sl, wl] : sigl)
		for(const auto& [sr, wr] : sigr)
			for(Letter x = 0; x < t.in.size(); x++) {
				bool covered = false;
				for(std::size_t i = 0; i < t.rules.size() && !covered; i++)
					covered = t.rules[i].letter == x && sl[i] && sr[i];
				if(!covered)
					return ExhaustiveWitness{x, wl, wr};
			}
	return std::nullopt;
}

inline bool is_exhaustive(const Translation& t)
{
	return !exhaustiveness_gap(t);
}

struct TranslationConflict {
	Word input;
	Word a, b;
};

// Functionality of the presentation itself: no input may select two distinct
// output words at any position or selector.
inline std::optional<TranslationConflict> functionality_conflict(const Translation& t)
{
	for(std::size_t i = 0; i < t.rules.size(); i++)
		for(std::size_t j = i + 1; j < t.rules.size(); j++) {
			if(t.rules[i].letter != t.rules[j].letter || t.rules[i].out == t.rules[j].out)
				continue;
			auto wl = detail::shortest_accepted(
			    product(t.rules[i].left, t.rules[j].left, BoolOp::and_));
			if(!wl)
				continue;
			auto wr = detail::shortest_accepted(
			    product(t.rules[i].right, t.rules[j].right, BoolOp::and_));
			if(!wr)
				continue;
			Word input = *wl;
			input.push_back(t.rules[i].letter);
			append(input, *wr);
			return TranslationConflict{std::move(input), t.rules[i].out, t.rules[j].out};
		}
	auto selector = [&](const std::map<Word, Dfa>& m) -> std::optional<TranslationConflict> {
		for(auto i = m.begin(); i != m.end(); ++i)
			for(auto j = std::next(i); j != m.end(); ++j)
				if(auto w = detail::shortest_accepted(
				       product(i->second, j->second, BoolOp::and_)))
					return TranslationConflict{*w, i->first, j->first};
		return std::nullopt;
	};
	if(auto c = selector(t.initial))
		return c;
	return selector(t.terminal);
}

// Every component language must have its syntactic monoid in the variety.
inline bool is_v_translation(const Translation& t, const VarietySpec& v)
{
	for(const TranslationRule& r : t.rules)
		if(!in_variety(syntactic_monoid(r.left), v) ||
		   !in_variety(syntactic_monoid(r.right), v))
			return false;
	for(const auto& [w, d] : t.initial)
		if(!in_variety(syntactic_monoid(d), v))
			return false;
	for(const auto& [w, d] : t.terminal)
		if(!in_variety(syntactic_monoid(d), v))
			return false;
	return true;
}

// One rule per left state, right state and letter; selectors group the
// initial and terminal outputs by value. Requires a complete bimachine so
// the rules cover every position.
inline Translation bimachine_to_translation(const Bimachine& b)
{
	if(!is_complete(b) || !is_complete(b.left) || !is_complete(b.right))
		throw PreconditionError("bimachine must be complete");

	Translation t;
	t.in = b.left.alphabet;
	t.out = b.out;
	t.k = b.left.states * b.right.states;
	std::set<Word> outs;
	for(const auto& [key, w] : b.omega)
		outs.insert(w);
	for(const auto& [r, w] : b.lambda)
		outs.insert(w);
	for(const auto& [l, w] : b.rho)
		outs.insert(w);
	t.outputs.assign(outs.begin(), outs.end());

	for(State l = 0; l < b.left.states; l++)
		for(State r = 0; r < b.right.states; r++) {
			std::uint32_t j = l * b.right.states + r;
			for(Letter x = 0; x < t.in.size(); x++) {
				TranslationRule rule;
				rule.j = j;
				rule.letter = x;
				rule.out = b.omega.at({l, x, r});
				rule.left = b.left;
				rule.left.final = {l};
				rule.right = b.right;
				rule.right.final = {r};
				t.rules.push_back(std::move(rule));
			}
		}

	std::map<Word, std::vector<State>> ini, ter;
	for(const auto& [r, w] : b.lambda)
		ini[w].push_back(r);
	for(const auto& [l, w] : b.rho)
		ter[w].push_back(l);
	for(auto& [w, states] : ini) {
		Dfa d = b.right;
		sort_unique(states);
		d.final = states;
		t.initial.emplace(w, std::move(d));
	}
	for(auto& [w, states] : ter) {
		Dfa d = b.left;
		sort_unique(states);
		d.final = states;
		t.terminal.emplace(w, std::move(d));
	}
	normalize(t);
	return t;
}

// Product of the minimized components on each side; minimization keeps each
// transition monoid at the component's syntactic monoid, so membership in
// the variety survives the construction.
inline Bimachine translation_to_bimachine(const Translation& input)
{
	if(auto gap = exhaustiveness_gap(input))
		throw PreconditionError("translation is not exhaustive",
		                        {{"letter", input.in.name(gap->letter)},
		                         {"prefix", word_text(gap->prefix, input.in)},
		                         {"suffix", word_text(gap->suffix, input.in)}});
	if(auto c = functionality_conflict(input))
		throw PreconditionError("translation is not functional",
		                        {{"input", word_text(c->input, input.in)},
		                         {"first", word_text(c->a, input.out)},
		                         {"second", word_text(c->b, input.out)}});

	std::vector<Dfa> lefts, rights;
	std::vector<const Word*> lsel, rsel;
	for(const TranslationRule& r : input.rules) {
		lefts.push_back(minimize(r.left));
		rights.push_back(minimize(r.right));
	}
	for(const auto& [w, d] : input.terminal) {
		lefts.push_back(minimize(d));
		lsel.push_back(&w);
	}
	for(const auto& [w, d] : input.initial) {
		rights.push_back(minimize(d));
		rsel.push_back(&w);
	}

	auto build = [&](const std::vector<Dfa>& comp, Orientation orient)
	    -> std::pair<Dfa, std::vector<std::vector<State>>> {
		Dfa d;
		d.orient = orient;
		d.alphabet = input.in;
		std::vector<std::vector<State>> tuples;
		std::map<std::vector<State>, State> ids;
		auto intern = [&](std::vector<State> tup) {
			auto [it, ins] = ids.try_emplace(std::move(tup),
			                                 static_cast<State>(ids.size()));
			if(ins)
				tuples.push_back(it->first);
			return it->second;
		};
		std::vector<State> init;
		for(const Dfa& c : comp)
			init.push_back(c.initial);
		intern(std::move(init));
		std::vector<std::int64_t> delta;
		for(std::size_t i = 0; i < tuples.size(); i++) {
			auto tup = tuples[i];
			for(Letter x = 0; x < input.in.size(); x++) {
				std::vector<State> next(comp.size());
				for(std::size_t ci = 0; ci < comp.size(); ci++) {
					auto to = comp[ci].step(tup[ci], x);
					if(!to)
						throw PreconditionError(
						    "minimized component is not complete");
					next[ci] = *to;
				}
				delta.push_back(intern(std::move(next)));
			}
		}
		d.states = static_cast<State>(tuples.size());
		d.initial = 0;
		d.delta = std::move(delta);
		for(const auto& tup : tuples) {
			std::string n = "(";
			for(std::size_t ci = 0; ci < tup.size(); ci++) {
				if(ci)
					n += ",";
				n += std::to_string(tup[ci]);
			}
			n += ")";
			d.names.push_back(std::move(n));
		}
		return {std::move(d), std::move(tuples)};
	};

	auto [left, ltup] = build(lefts, Orientation::left);
	auto [right, rtup] = build(rights, Orientation::right);

	Bimachine b;
	b.left = std::move(left);
	b.right = std::move(right);
	b.out = input.out;

	const std::size_t nrules = input.rules.size();
	for(State l = 0; l < b.left.states; l++)
		for(Letter x = 0; x < input.in.size(); x++)
			for(State r = 0; r < b.right.states; r++) {
				const Word* v = nullptr;
				for(std::size_t i = 0; i < nrules; i++) {
					if(input.rules[i].letter != x ||
					   !lefts[i].is_final(ltup[l][i]) ||
					   !rights[i].is_final(rtup[r][i]))
						continue;
					if(v && *v != input.rules[i].out)
						throw PreconditionError(
						    "two rules with different outputs cover one position");
					v = &input.rules[i].out;
				}
				if(v)
					b.omega[{l, x, r}] = *v;
			}
	for(State r = 0; r < b.right.states; r++) {
		const Word* v = nullptr;
		for(std::size_t i = 0; i < rsel.size(); i++) {
			if(!rights[nrules + i].is_final(rtup[r][nrules + i]))
				continue;
			if(v)
				throw PreconditionError("two initial outputs cover one state");
			v = rsel[i];
		}
		if(v)
			b.lambda[r] = *v;
	}
	for(State l = 0; l < b.left.states; l++) {
		const Word* v = nullptr;
		for(std::size_t i = 0; i < lsel.size(); i++) {
			if(!lefts[nrules + i].is_final(ltup[l][nrules + i]))
				continue;
			if(v)
				throw PreconditionError("two terminal outputs cover one state");
			v = lsel[i];
		}
		if(v)
			b.rho[l] = *v;
	}
	normalize(b);
	return b;
}

} // namespace rwf
