#pragma once

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <deque>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "error.hpp"
#include "word.hpp"

namespace rwf {

// A right automaton reads its input from the last letter to the first; its
// transitions are stored exactly like a left automaton's, and evaluation
// feeds the reversed word through them. reverse() converts between the two
// presentations without changing the accepted language.
enum class Orientation { left, right };

inline const char* orientation_name(Orientation o)
{
	return o == Orientation::left ? "left" : "right";
}

struct Transition {
	State from;
	Letter letter;
	State to;

	auto operator<=>(const Transition&) const = default;
};

struct Nfa {
	Orientation orient = Orientation::left;
	Alphabet alphabet;
	State states = 0;
	std::vector<std::string> names; // empty: default q<i> names
	std::vector<State> initial;     // sorted, unique
	std::vector<State> final;       // sorted, unique
	std::vector<Transition> trans;  // sorted, unique

	std::string state_name(State q) const
	{
		return q < names.size() && !names[q].empty() ? names[q] : "q" + std::to_string(q);
	}
};

inline void sort_unique(std::vector<State>& v)
{
	std::sort(v.begin(), v.end());
	v.erase(std::unique(v.begin(), v.end()), v.end());
}

inline void normalize(Nfa& a)
{
	sort_unique(a.initial);
	sort_unique(a.final);
	std::sort(a.trans.begin(), a.trans.end());
	a.trans.erase(std::unique(a.trans.begin(), a.trans.end()), a.trans.end());
	for(State q : a.initial)
		if(q >= a.states)
			throw InputError("initial state out of range");
	for(State q : a.final)
		if(q >= a.states)
			throw InputError("final state out of range");
	for(const Transition& t : a.trans)
		if(t.from >= a.states || t.to >= a.states || t.letter >= a.alphabet.size())
			throw InputError("transition out of range");
}

// Deterministic automaton with a dense transition table; -1 marks a missing
// transition. `sink` is set when an operation completed the automaton with a
// throwaway sink that printing should strip again.
struct Dfa {
	Orientation orient = Orientation::left;
	Alphabet alphabet;
	State states = 0;
	std::vector<std::string> names;
	State initial = 0;
	std::vector<State> final;        // sorted, unique
	std::vector<std::int64_t> delta; // states * |alphabet|
	std::optional<State> sink;

	std::int64_t& at(State q, Letter a) { return delta[q * alphabet.size() + a]; }
	std::int64_t at(State q, Letter a) const { return delta[q * alphabet.size() + a]; }
	std::optional<State> step(State q, Letter a) const
	{
		std::int64_t r = at(q, a);
		if(r < 0)
			return std::nullopt;
		return static_cast<State>(r);
	}
	bool is_final(State q) const { return std::binary_search(final.begin(), final.end(), q); }

	std::string state_name(State q) const
	{
		return q < names.size() && !names[q].empty() ? names[q] : "q" + std::to_string(q);
	}
};

inline Nfa nfa_of(const Dfa& d)
{
	Nfa a;
	a.orient = d.orient;
	a.alphabet = d.alphabet;
	a.states = d.states;
	a.names = d.names;
	if(d.states > 0)
		a.initial = {d.initial};
	a.final = d.final;
	for(State q = 0; q < d.states; q++)
		for(Letter x = 0; x < d.alphabet.size(); x++)
			if(auto r = d.step(q, x))
				a.trans.push_back({q, x, *r});
	normalize(a);
	return a;
}

// letters of w in machine reading order
inline Word reading_order(const Word& w, Orientation o)
{
	return o == Orientation::left ? w : reversed(w);
}

inline bool accepts(const Nfa& a, const Word& w)
{
	std::vector<char> cur(a.states, 0), nxt;
	for(State q : a.initial)
		cur[q] = 1;
	for(Letter x : reading_order(w, a.orient)) {
		nxt.assign(a.states, 0);
		bool any = false;
		for(const Transition& t : a.trans)
			if(t.letter == x && cur[t.from]) {
				nxt[t.to] = 1;
				any = true;
			}
		cur.swap(nxt);
		if(!any)
			return false;
	}
	for(State q : a.final)
		if(cur[q])
			return true;
	return false;
}

inline bool accepts(const Dfa& d, const Word& w)
{
	if(d.states == 0)
		return false;
	State q = d.initial;
	for(Letter x : reading_order(w, d.orient)) {
		auto r = d.step(q, x);
		if(!r)
			return false;
		q = *r;
	}
	return d.is_final(q);
}

// Same language, opposite orientation: transitions flipped, initial and
// final swapped. Involutive.
inline Nfa reverse(const Nfa& a)
{
	Nfa r;
	r.orient = a.orient == Orientation::left ? Orientation::right : Orientation::left;
	r.alphabet = a.alphabet;
	r.states = a.states;
	r.names = a.names;
	r.initial = a.final;
	r.final = a.initial;
	for(const Transition& t : a.trans)
		r.trans.push_back({t.to, t.letter, t.from});
	normalize(r);
	return r;
}

inline std::vector<char> reachable_states(const Nfa& a)
{
	std::vector<char> seen(a.states, 0);
	std::deque<State> queue;
	for(State q : a.initial) {
		seen[q] = 1;
		queue.push_back(q);
	}
	while(!queue.empty()) {
		State q = queue.front();
		queue.pop_front();
		for(const Transition& t : a.trans)
			if(t.from == q && !seen[t.to]) {
				seen[t.to] = 1;
				queue.push_back(t.to);
			}
	}
	return seen;
}

inline std::vector<char> coreachable_states(const Nfa& a)
{
	std::vector<char> seen(a.states, 0);
	std::deque<State> queue;
	for(State q : a.final) {
		seen[q] = 1;
		queue.push_back(q);
	}
	while(!queue.empty()) {
		State q = queue.front();
		queue.pop_front();
		for(const Transition& t : a.trans)
			if(t.to == q && !seen[t.from]) {
				seen[t.from] = 1;
				queue.push_back(t.from);
			}
	}
	return seen;
}

// Restrict to states both reachable and coreachable. `map_out`, if given,
// receives old state -> new state (or -1).
inline Nfa trim(const Nfa& a, std::vector<std::int64_t>* map_out = nullptr)
{
	std::vector<char> fwd = reachable_states(a), bwd = coreachable_states(a);
	std::vector<std::int64_t> map(a.states, -1);
	Nfa r;
	r.orient = a.orient;
	r.alphabet = a.alphabet;
	for(State q = 0; q < a.states; q++)
		if(fwd[q] && bwd[q]) {
			map[q] = r.states++;
			if(!a.names.empty())
				r.names.push_back(a.names[q]);
		}
	for(State q : a.initial)
		if(map[q] >= 0)
			r.initial.push_back(static_cast<State>(map[q]));
	for(State q : a.final)
		if(map[q] >= 0)
			r.final.push_back(static_cast<State>(map[q]));
	for(const Transition& t : a.trans)
		if(map[t.from] >= 0 && map[t.to] >= 0)
			r.trans.push_back({static_cast<State>(map[t.from]), t.letter, static_cast<State>(map[t.to])});
	normalize(r);
	if(map_out)
		*map_out = std::move(map);
	return r;
}

inline bool is_empty(const Nfa& a)
{
	std::vector<char> fwd = reachable_states(a);
	for(State q : a.final)
		if(fwd[q])
			return false;
	return true;
}

// Subset construction in the stored reading direction; the orientation is
// preserved, so determinizing a right automaton yields a right-deterministic
// one. Unreachable subsets never materialize and the empty subset is left
// out, so the result may be partial.
inline Dfa determinize(const Nfa& a)
{
	Dfa d;
	d.orient = a.orient;
	d.alphabet = a.alphabet;
	std::map<std::vector<State>, State> ids;
	std::deque<std::vector<State>> queue;
	auto intern = [&](const std::vector<State>& set) {
		auto [it, inserted] = ids.try_emplace(set, static_cast<State>(ids.size()));
		if(inserted)
			queue.push_back(set);
		return it->second;
	};
	std::vector<State> start = a.initial;
	if(start.empty()) {
		d.states = 0;
		return d;
	}
	intern(start);
	std::vector<std::vector<std::int64_t>> rows;
	std::vector<std::vector<State>> subsets;
	while(!queue.empty()) {
		std::vector<State> cur = queue.front();
		queue.pop_front();
		subsets.push_back(cur);
		std::vector<std::int64_t> row(a.alphabet.size(), -1);
		for(Letter x = 0; x < a.alphabet.size(); x++) {
			std::vector<State> next;
			for(const Transition& t : a.trans)
				if(t.letter == x && std::binary_search(cur.begin(), cur.end(), t.from))
					next.push_back(t.to);
			sort_unique(next);
			if(!next.empty())
				row[x] = intern(next);
		}
		rows.push_back(std::move(row));
	}
	d.states = static_cast<State>(rows.size());
	d.initial = 0;
	d.delta.assign(static_cast<std::size_t>(d.states) * a.alphabet.size(), -1);
	for(State q = 0; q < d.states; q++)
		for(Letter x = 0; x < a.alphabet.size(); x++)
			d.at(q, x) = rows[q][x];
	for(State q = 0; q < d.states; q++) {
		std::string nm = "{";
		bool fin = false;
		for(std::size_t i = 0; i < subsets[q].size(); i++) {
			if(i)
				nm += ",";
			nm += a.state_name(subsets[q][i]);
			fin = fin || std::binary_search(a.final.begin(), a.final.end(), subsets[q][i]);
		}
		nm += "}";
		d.names.push_back(nm);
		if(fin)
			d.final.push_back(q);
	}
	return d;
}

inline bool is_complete(const Dfa& d)
{
	if(d.states == 0)
		return false;
	return std::all_of(d.delta.begin(), d.delta.end(), [](std::int64_t r) { return r >= 0; });
}

// Total version of d; a fresh sink is added (and marked) only if needed.
inline Dfa complete(const Dfa& d)
{
	Dfa r = d;
	if(r.states == 0) {
		r.states = 1;
		r.initial = 0;
		r.names = {"sink"};
		r.delta.assign(r.alphabet.size(), 0);
		r.sink = 0;
		return r;
	}
	if(is_complete(r))
		return r;
	State sink = r.states++;
	if(!r.names.empty())
		r.names.push_back("sink");
	r.delta.resize(static_cast<std::size_t>(r.states) * r.alphabet.size(), -1);
	for(State q = 0; q < r.states; q++)
		for(Letter x = 0; x < r.alphabet.size(); x++)
			if(r.at(q, x) < 0)
				r.at(q, x) = sink;
	r.sink = sink;
	return r;
}

// Restriction to the reachable part, states renumbered in BFS order from the
// initial state (letters ascending). Canonical up to the input's language.
inline Dfa reachable_part(const Dfa& d)
{
	Dfa r;
	r.orient = d.orient;
	r.alphabet = d.alphabet;
	if(d.states == 0)
		return r;
	std::vector<std::int64_t> map(d.states, -1);
	std::vector<State> order;
	map[d.initial] = 0;
	order.push_back(d.initial);
	for(std::size_t i = 0; i < order.size(); i++)
		for(Letter x = 0; x < d.alphabet.size(); x++)
			if(auto n = d.step(order[i], x))
				if(map[*n] < 0) {
					map[*n] = static_cast<std::int64_t>(order.size());
					order.push_back(*n);
				}
	r.states = static_cast<State>(order.size());
	r.initial = 0;
	r.delta.assign(static_cast<std::size_t>(r.states) * r.alphabet.size(), -1);
	for(State q = 0; q < r.states; q++) {
		if(!d.names.empty())
			r.names.push_back(d.names[order[q]]);
		for(Letter x = 0; x < r.alphabet.size(); x++)
			if(auto n = d.step(order[q], x))
				r.at(q, x) = map[*n];
	}
	for(State q : d.final)
		if(map[q] >= 0)
			r.final.push_back(static_cast<State>(map[q]));
	sort_unique(r.final);
	if(d.sink && map[*d.sink] >= 0)
		r.sink = static_cast<State>(map[*d.sink]);
	return r;
}

// Moore partition refinement on the completed reachable part. The result is
// the unique minimal complete Dfa of the language, including a dead state
// when the language needs one.
inline Dfa minimize(const Dfa& input)
{
	Dfa d = reachable_part(complete(input));
	std::vector<std::uint32_t> block(d.states);
	for(State q = 0; q < d.states; q++)
		block[q] = d.is_final(q) ? 1 : 0;
	auto block_count = [](const std::vector<std::uint32_t>& v) {
		return std::set<std::uint32_t>(v.begin(), v.end()).size();
	};
	for(;;) {
		std::map<std::vector<std::uint32_t>, std::uint32_t> sig_ids;
		std::vector<std::uint32_t> next(d.states);
		for(State q = 0; q < d.states; q++) {
			std::vector<std::uint32_t> sig;
			sig.push_back(block[q]);
			for(Letter x = 0; x < d.alphabet.size(); x++)
				sig.push_back(block[static_cast<State>(d.at(q, x))]);
			auto [it, ins] = sig_ids.try_emplace(sig, static_cast<std::uint32_t>(sig_ids.size()));
			(void)ins;
			next[q] = it->second;
		}
		// next refines block, so equal block counts mean a fixpoint
		if(block_count(next) == block_count(block))
			break;
		block = std::move(next);
	}
	// quotient, renumbered by BFS from the initial block
	std::uint32_t nblocks = *std::max_element(block.begin(), block.end()) + 1;
	std::vector<State> repr(nblocks, 0);
	for(State q = d.states; q-- > 0;)
		repr[block[q]] = q;
	Dfa m;
	m.orient = d.orient;
	m.alphabet = d.alphabet;
	std::vector<std::int64_t> map(nblocks, -1);
	std::vector<std::uint32_t> order;
	map[block[d.initial]] = 0;
	order.push_back(block[d.initial]);
	for(std::size_t i = 0; i < order.size(); i++)
		for(Letter x = 0; x < d.alphabet.size(); x++) {
			std::uint32_t nb = block[static_cast<State>(d.at(repr[order[i]], x))];
			if(map[nb] < 0) {
				map[nb] = static_cast<std::int64_t>(order.size());
				order.push_back(nb);
			}
		}
	m.states = static_cast<State>(order.size());
	m.initial = 0;
	m.delta.assign(static_cast<std::size_t>(m.states) * m.alphabet.size(), -1);
	for(State q = 0; q < m.states; q++)
		for(Letter x = 0; x < m.alphabet.size(); x++)
			m.at(q, x) = map[block[static_cast<State>(d.at(repr[order[q]], x))]];
	for(State q = 0; q < m.states; q++)
		if(d.is_final(repr[order[q]]))
			m.final.push_back(q);
	return m;
}

inline Dfa complement(const Dfa& d)
{
	Dfa r = complete(d);
	r.sink.reset(); // the sink becomes accepting and meaningful
	std::vector<State> fin;
	for(State q = 0; q < r.states; q++)
		if(!r.is_final(q))
			fin.push_back(q);
	r.final = std::move(fin);
	return r;
}

enum class BoolOp { and_, or_, diff };

// Product automaton over the reachable pairs. Inputs must share alphabet and
// orientation; or_ and diff complete both sides first.
inline Dfa product(const Dfa& lhs, const Dfa& rhs, BoolOp op)
{
	if(!(lhs.alphabet == rhs.alphabet))
		throw PreconditionError("product: alphabets differ");
	if(lhs.orient != rhs.orient)
		throw PreconditionError("product: orientations differ");
	Dfa a = lhs, b = rhs;
	if(op != BoolOp::and_) {
		a = complete(a);
		b = complete(b);
	}
	Dfa r;
	r.orient = a.orient;
	r.alphabet = a.alphabet;
	if(a.states == 0 || b.states == 0)
		return r;
	std::map<std::pair<State, State>, State> ids;
	std::deque<std::pair<State, State>> queue;
	auto intern = [&](State p, State q) {
		auto [it, ins] = ids.try_emplace({p, q}, static_cast<State>(ids.size()));
		if(ins)
			queue.push_back({p, q});
		return it->second;
	};
	intern(a.initial, b.initial);
	std::vector<std::vector<std::int64_t>> rows;
	std::vector<std::pair<State, State>> pairs;
	while(!queue.empty()) {
		auto [p, q] = queue.front();
		queue.pop_front();
		pairs.push_back({p, q});
		std::vector<std::int64_t> row(a.alphabet.size(), -1);
		for(Letter x = 0; x < a.alphabet.size(); x++) {
			auto pn = a.step(p, x), qn = b.step(q, x);
			if(pn && qn)
				row[x] = intern(*pn, *qn);
		}
		rows.push_back(std::move(row));
	}
	r.states = static_cast<State>(rows.size());
	r.initial = 0;
	r.delta.assign(static_cast<std::size_t>(r.states) * r.alphabet.size(), -1);
	for(State q = 0; q < r.states; q++)
		for(Letter x = 0; x < r.alphabet.size(); x++)
			r.at(q, x) = rows[q][x];
	for(State i = 0; i < r.states; i++) {
		bool fa = a.is_final(pairs[i].first), fb = b.is_final(pairs[i].second);
		bool keep = op == BoolOp::and_ ? fa && fb : op == BoolOp::or_ ? fa || fb : fa && !fb;
		if(keep)
			r.final.push_back(i);
		r.names.push_back("(" + a.state_name(pairs[i].first) + "," + b.state_name(pairs[i].second) + ")");
	}
	return r;
}

inline bool is_empty(const Dfa& d)
{
	return is_empty(nfa_of(d));
}

// language equality; on mismatch returns a shortest separating word
inline std::optional<Word> language_difference_witness(const Dfa& lhs, const Dfa& rhs)
{
	Dfa a = complete(lhs), b = complete(rhs);
	if(!(a.alphabet == b.alphabet))
		throw PreconditionError("language comparison: alphabets differ");
	if(a.orient != b.orient)
		throw PreconditionError("language comparison: orientations differ");
	std::map<std::pair<State, State>, Word> seen;
	std::deque<std::pair<State, State>> queue;
	seen[{a.initial, b.initial}] = {};
	queue.push_back({a.initial, b.initial});
	while(!queue.empty()) {
		auto [p, q] = queue.front();
		queue.pop_front();
		Word w = seen[{p, q}];
		if(a.is_final(p) != b.is_final(q))
			return a.orient == Orientation::left ? w : reversed(w);
		for(Letter x = 0; x < a.alphabet.size(); x++) {
			std::pair<State, State> n{static_cast<State>(a.at(p, x)), static_cast<State>(b.at(q, x))};
			if(!seen.count(n)) {
				Word wn = w;
				wn.push_back(x);
				seen[n] = std::move(wn);
				queue.push_back(n);
			}
		}
	}
	return std::nullopt;
}

inline bool same_language(const Dfa& a, const Dfa& b)
{
	return !language_difference_witness(a, b).has_value();
}

inline bool same_language(const Nfa& a, const Nfa& b)
{
	Nfa x = a, y = b;
	if(x.orient != y.orient)
		y = reverse(y);
	return same_language(determinize(x), determinize(y));
}

struct AmbiguityResult {
	bool unambiguous = true;
	std::optional<Word> witness; // a word with two distinct accepting runs
};

// Squaring check: the trimmed product of the automaton with itself stays on
// the diagonal iff every word has at most one accepting run.
inline AmbiguityResult check_unambiguous(const Nfa& a)
{
	Nfa sq;
	sq.orient = a.orient;
	sq.alphabet = a.alphabet;
	auto id = [&](State p, State q) { return p * a.states + q; };
	sq.states = a.states * a.states;
	for(State p : a.initial)
		for(State q : a.initial)
			sq.initial.push_back(id(p, q));
	for(State p : a.final)
		for(State q : a.final)
			sq.final.push_back(id(p, q));
	for(const Transition& s : a.trans)
		for(const Transition& t : a.trans)
			if(s.letter == t.letter)
				sq.trans.push_back({id(s.from, t.from), s.letter, id(s.to, t.to)});
	normalize(sq);
	std::vector<char> fwd = reachable_states(sq), bwd = coreachable_states(sq);
	std::optional<State> bad;
	for(State p = 0; p < a.states && !bad; p++)
		for(State q = 0; q < a.states && !bad; q++)
			if(p != q && fwd[id(p, q)] && bwd[id(p, q)])
				bad = id(p, q);
	if(!bad)
		return {};
	// witness: shortest path into the offending pair, then on to a final pair
	auto bfs_word = [&](const std::vector<State>& from, const std::vector<State>& to,
	                    bool backward) -> Word {
		std::map<State, std::pair<State, Letter>> parent;
		std::deque<State> queue;
		std::set<State> start(from.begin(), from.end()), goal(to.begin(), to.end());
		for(State s : from)
			queue.push_back(s);
		std::set<State> seen(from.begin(), from.end());
		while(!queue.empty()) {
			State s = queue.front();
			queue.pop_front();
			if(goal.count(s)) {
				Word w;
				State cur = s;
				while(!start.count(cur)) {
					auto [prev, x] = parent.at(cur);
					w.push_back(x);
					cur = prev;
				}
				if(!backward)
					std::reverse(w.begin(), w.end());
				return w;
			}
			for(const Transition& t : sq.trans) {
				State nxt = backward ? t.from : t.to;
				State src = backward ? t.to : t.from;
				if(src == s && !seen.count(nxt)) {
					seen.insert(nxt);
					parent[nxt] = {s, t.letter};
					queue.push_back(nxt);
				}
			}
		}
		return {};
	};
	Word head = bfs_word(sq.initial, {*bad}, false);
	Word tail = bfs_word(sq.final, {*bad}, true);
	Word w = cat(head, tail);
	return {false, a.orient == Orientation::left ? w : reversed(w)};
}

inline bool is_unambiguous(const Nfa& a)
{
	return check_unambiguous(a).unambiguous;
}

inline Nfa language_between(const Nfa& a, std::vector<State> new_initial, std::vector<State> new_final)
{
	Nfa r = a;
	r.initial = std::move(new_initial);
	r.final = std::move(new_final);
	normalize(r);
	return r;
}

struct Partition {
	std::uint32_t n = 0;
	std::vector<std::uint32_t> block; // block index per element
	std::uint32_t blocks = 0;

	// renumber blocks in order of first occurrence
	void canonicalize()
	{
		std::map<std::uint32_t, std::uint32_t> remap;
		for(std::uint32_t& b : block) {
			auto [it, ins] = remap.try_emplace(b, static_cast<std::uint32_t>(remap.size()));
			(void)ins;
			b = it->second;
		}
		blocks = static_cast<std::uint32_t>(remap.size());
	}
};

inline bool refines(const Partition& fine, const Partition& coarse)
{
	if(fine.n != coarse.n)
		throw PreconditionError("refines: carriers differ");
	std::map<std::uint32_t, std::uint32_t> image;
	for(std::uint32_t i = 0; i < fine.n; i++) {
		auto [it, ins] = image.try_emplace(fine.block[i], coarse.block[i]);
		if(!ins && it->second != coarse.block[i])
			return false;
	}
	return true;
}

// A finite-index congruence presented by its reachable class automaton
// (complete, no finals) plus a shortest representative word per class.
// Left-oriented automata present right congruences (classes of prefixes);
// right-oriented automata present left congruences (classes of suffixes).
struct Congruence {
	Dfa classes;
	std::vector<Word> rep;

	State class_of(const Word& w) const
	{
		State q = classes.initial;
		for(Letter x : reading_order(w, classes.orient)) {
			auto r = classes.step(q, x);
			if(!r)
				throw PreconditionError("congruence automaton is not complete");
			q = *r;
		}
		return q;
	}
};

// Shortest representative per state, following BFS in letter order. For a
// right automaton the representative is the word as read, i.e. reversed
// relative to the stored path.
inline std::vector<Word> state_representatives(const Dfa& d)
{
	std::vector<Word> rep(d.states);
	std::vector<char> seen(d.states, 0);
	std::deque<State> queue;
	if(d.states == 0)
		return rep;
	seen[d.initial] = 1;
	queue.push_back(d.initial);
	while(!queue.empty()) {
		State q = queue.front();
		queue.pop_front();
		for(Letter x = 0; x < d.alphabet.size(); x++)
			if(auto n = d.step(q, x))
				if(!seen[*n]) {
					seen[*n] = 1;
					rep[*n] = rep[q];
					rep[*n].push_back(x);
					queue.push_back(*n);
				}
	}
	if(d.orient == Orientation::right)
		for(Word& w : rep)
			std::reverse(w.begin(), w.end());
	return rep;
}

// The congruence a deterministic automaton induces on words: two words are
// equivalent iff they reach the same state. Completion makes the missing-run
// class explicit; only reachable states carry classes.
inline Congruence automaton_congruence(const Dfa& d)
{
	Congruence c;
	c.classes = reachable_part(complete(d));
	c.classes.final.clear();
	c.rep = state_representatives(c.classes);
	return c;
}

inline Congruence congruence_from_table(Orientation orient, const Alphabet& ab, State classes,
                                        State initial_class, const std::vector<std::vector<State>>& action)
{
	Dfa d;
	d.orient = orient;
	d.alphabet = ab;
	d.states = classes;
	d.initial = initial_class;
	if(initial_class >= classes)
		throw InputError("congruence: initial class out of range");
	d.delta.assign(static_cast<std::size_t>(classes) * ab.size(), -1);
	if(action.size() != classes)
		throw InputError("congruence: action table must cover every class");
	for(State q = 0; q < classes; q++) {
		if(action[q].size() != ab.size())
			throw InputError("congruence: action table must cover every letter");
		for(Letter x = 0; x < ab.size(); x++) {
			if(action[q][x] >= classes)
				throw InputError("congruence: action target out of range");
			d.at(q, x) = action[q][x];
		}
	}
	Congruence c;
	c.classes = reachable_part(d);
	c.rep = state_representatives(c.classes);
	return c;
}

// Quotient of a congruence automaton by a state partition. The partition
// must be compatible with the action (blocks map into blocks); otherwise the
// offending block is reported.
inline Congruence quotient_congruence(const Congruence& c, const Partition& p)
{
	const Dfa& d = c.classes;
	if(p.n != d.states)
		throw PreconditionError("quotient: partition carrier mismatch");
	std::vector<std::int64_t> target(static_cast<std::size_t>(p.blocks) * d.alphabet.size(), -1);
	for(State q = 0; q < d.states; q++)
		for(Letter x = 0; x < d.alphabet.size(); x++) {
			auto n = d.step(q, x);
			if(!n)
				throw PreconditionError("quotient: congruence automaton is partial");
			std::int64_t& slot = target[p.block[q] * d.alphabet.size() + x];
			if(slot < 0)
				slot = p.block[*n];
			else if(slot != p.block[*n])
				throw PreconditionError("partition is not a congruence of the automaton",
				                        {{"block", std::to_string(p.block[q])},
				                         {"letter", d.alphabet.name(x)}});
		}
	Dfa q;
	q.orient = d.orient;
	q.alphabet = d.alphabet;
	q.states = p.blocks;
	q.initial = p.block[d.initial];
	q.delta = std::move(target);
	Congruence out;
	out.classes = reachable_part(q);
	out.rep = state_representatives(out.classes);
	return out;
}

} // namespace rwf
