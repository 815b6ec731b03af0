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

#include "automaton.hpp"
#include "error.hpp"
#include "word.hpp"

namespace rwf {

struct NftTransition {
	State from;
	Letter letter;
	Word out;
	State to;

	auto operator<=>(const NftTransition&) const = default;
};

// Nondeterministic transducer with one initial output per initial state and
// one terminal output per final state. A right transducer processes the
// reversed input through the stored transitions and the produced output is
// reversed at the end, so flipping the orientation flag alone turns a
// machine for f into a machine for the mirror image of f.
struct Nft {
	Orientation orient = Orientation::left;
	Alphabet in, out;
	State states = 0;
	std::vector<std::string> names;
	std::vector<std::pair<State, Word>> initial; // sorted by state, states unique
	std::vector<std::pair<State, Word>> final;   // sorted by state, states unique
	std::vector<NftTransition> trans;            // sorted, unique

	std::string state_name(State q) const
	{
		return q < names.size() && !names[q].empty() ? names[q] : "q" + std::to_string(q);
	}

	std::optional<Word> initial_out(State q) const
	{
		for(const auto& [p, w] : initial)
			if(p == q)
				return w;
		return std::nullopt;
	}

	std::optional<Word> terminal_out(State q) const
	{
		for(const auto& [p, w] : final)
			if(p == q)
				return w;
		return std::nullopt;
	}
};

inline void normalize_states(std::vector<std::pair<State, Word>>& v, State states, const char* what)
{
	std::sort(v.begin(), v.end());
	v.erase(std::unique(v.begin(), v.end()), v.end());
	for(std::size_t i = 0; i < v.size(); i++) {
		if(v[i].first >= states)
			throw InputError(std::string(what) + " state out of range");
		if(i > 0 && v[i].first == v[i - 1].first)
			throw InputError(std::string(what) + " output must be unique per state",
			                 {{"state", std::to_string(v[i].first)}});
	}
}

inline void normalize(Nft& t)
{
	normalize_states(t.initial, t.states, "initial");
	normalize_states(t.final, t.states, "terminal");
	std::sort(t.trans.begin(), t.trans.end());
	t.trans.erase(std::unique(t.trans.begin(), t.trans.end()), t.trans.end());
	for(const NftTransition& tr : t.trans) {
		if(tr.from >= t.states || tr.to >= t.states || tr.letter >= t.in.size())
			throw InputError("transition out of range");
		for(Letter x : tr.out)
			if(x >= t.out.size())
				throw InputError("transition output letter out of range");
	}
	for(const auto& [q, w] : t.initial)
		for(Letter x : w)
			if(x >= t.out.size())
				throw InputError("initial output letter out of range");
	for(const auto& [q, w] : t.final)
		for(Letter x : w)
			if(x >= t.out.size())
				throw InputError("terminal output letter out of range");
}

// Domain automaton: outputs dropped.
inline Nfa underlying(const Nft& t)
{
	Nfa a;
	a.orient = t.orient;
	a.alphabet = t.in;
	a.states = t.states;
	a.names = t.names;
	for(const auto& [q, w] : t.initial)
		a.initial.push_back(q);
	for(const auto& [q, w] : t.final)
		a.final.push_back(q);
	for(const NftTransition& tr : t.trans)
		a.trans.push_back({tr.from, tr.letter, tr.to});
	normalize(a);
	return a;
}

inline Nft trim(const Nft& t)
{
	std::vector<std::int64_t> map;
	Nfa dom = underlying(t);
	std::vector<char> fwd = reachable_states(dom), bwd = coreachable_states(dom);
	Nft r;
	r.orient = t.orient;
	r.in = t.in;
	r.out = t.out;
	map.assign(t.states, -1);
	for(State q = 0; q < t.states; q++)
		if(fwd[q] && bwd[q]) {
			map[q] = r.states++;
			if(!t.names.empty())
				r.names.push_back(t.names[q]);
		}
	for(const auto& [q, w] : t.initial)
		if(map[q] >= 0)
			r.initial.push_back({static_cast<State>(map[q]), w});
	for(const auto& [q, w] : t.final)
		if(map[q] >= 0)
			r.final.push_back({static_cast<State>(map[q]), w});
	for(const NftTransition& tr : t.trans)
		if(map[tr.from] >= 0 && map[tr.to] >= 0)
			r.trans.push_back({static_cast<State>(map[tr.from]), tr.letter, tr.out,
			                   static_cast<State>(map[tr.to])});
	normalize(r);
	return r;
}

// All outputs over accepting runs. Exponential in the worst case; intended
// for small inputs and as a reference for the efficient procedures.
inline std::set<Word> outputs(const Nft& t, const Word& w)
{
	std::map<State, std::set<Word>> cur;
	for(const auto& [q, iw] : t.initial)
		cur[q].insert(iw);
	for(Letter x : reading_order(w, t.orient)) {
		std::map<State, std::set<Word>> nxt;
		for(const NftTransition& tr : t.trans)
			if(tr.letter == x) {
				auto it = cur.find(tr.from);
				if(it != cur.end())
					for(const Word& u : it->second)
						nxt[tr.to].insert(cat(u, tr.out));
			}
		cur = std::move(nxt);
	}
	std::set<Word> res;
	for(const auto& [q, tw] : t.final) {
		auto it = cur.find(q);
		if(it != cur.end())
			for(const Word& u : it->second) {
				Word full = cat(u, tw);
				res.insert(t.orient == Orientation::left ? full : reversed(full));
			}
	}
	return res;
}

inline std::optional<Word> eval(const Nft& t, const Word& w)
{
	std::set<Word> res = outputs(t, w);
	if(res.empty())
		return std::nullopt;
	if(res.size() > 1)
		throw PreconditionError("transducer is not functional",
		                        {{"input", word_text(w, t.in)}});
	return *res.begin();
}

// Machine for the mirror image u |-> reverse(f(reverse(u))), same
// orientation: transitions flipped, every output word reversed, initial and
// terminal outputs swapped.
inline Nft mirror(const Nft& t)
{
	Nft r;
	r.orient = t.orient;
	r.in = t.in;
	r.out = t.out;
	r.states = t.states;
	r.names = t.names;
	for(const auto& [q, w] : t.final)
		r.initial.push_back({q, reversed(w)});
	for(const auto& [q, w] : t.initial)
		r.final.push_back({q, reversed(w)});
	for(const NftTransition& tr : t.trans)
		r.trans.push_back({tr.to, tr.letter, reversed(tr.out), tr.from});
	normalize(r);
	return r;
}

struct FunctionalityResult {
	bool functional = true;
	std::optional<Word> witness; // input with two distinct outputs
};

namespace detail {

struct PairInfo {
	Delay delay;
	Word access; // in stored reading order
};

} // namespace detail

// Delay invariant on the useful part of the squared machine: two runs over
// the same input can only produce one value iff the residual delay at every
// useful state pair is unique and the terminal outputs absorb it.
inline FunctionalityResult check_functional(const Nft& input)
{
	Nft t = trim(input);
	auto externalize = [&](const Word& w) {
		return t.orient == Orientation::left ? w : reversed(w);
	};
	// reachable pairs
	std::set<std::pair<State, State>> reach;
	{
		std::deque<std::pair<State, State>> queue;
		for(const auto& [p, wp] : t.initial)
			for(const auto& [q, wq] : t.initial)
				if(reach.insert({p, q}).second)
					queue.push_back({p, q});
		while(!queue.empty()) {
			auto [p, q] = queue.front();
			queue.pop_front();
			for(const NftTransition& a : t.trans)
				for(const NftTransition& b : t.trans)
					if(a.from == p && b.from == q && a.letter == b.letter)
						if(reach.insert({a.to, b.to}).second)
							queue.push_back({a.to, b.to});
		}
	}
	// pairs that can still reach a pair of final states on a common word
	std::set<std::pair<State, State>> live;
	{
		std::deque<std::pair<State, State>> queue;
		for(const auto& [p, wp] : t.final)
			for(const auto& [q, wq] : t.final)
				if(reach.count({p, q}) && live.insert({p, q}).second)
					queue.push_back({p, q});
		while(!queue.empty()) {
			auto [p, q] = queue.front();
			queue.pop_front();
			for(const NftTransition& a : t.trans)
				for(const NftTransition& b : t.trans)
					if(a.to == p && b.to == q && a.letter == b.letter)
						if(reach.count({a.from, b.from}) && live.insert({a.from, b.from}).second)
							queue.push_back({a.from, b.from});
		}
	}
	// completion of a pair to final states: input suffix plus both output suffixes
	auto complete_pair = [&](std::pair<State, State> from) {
		struct Suffix {
			Word in, out1, out2;
		};
		std::map<std::pair<State, State>, Suffix> best;
		std::deque<std::pair<State, State>> queue;
		for(const auto& [p, wp] : t.final)
			for(const auto& [q, wq] : t.final)
				if(live.count({p, q}) && best.try_emplace({p, q}, Suffix{{}, wp, wq}).second)
					queue.push_back({p, q});
		while(!queue.empty()) {
			auto [p, q] = queue.front();
			queue.pop_front();
			if(std::pair<State, State>{p, q} == from)
				break;
			const Suffix cur = best.at({p, q});
			for(const NftTransition& a : t.trans)
				for(const NftTransition& b : t.trans)
					if(a.to == p && b.to == q && a.letter == b.letter && live.count({a.from, b.from})) {
						Suffix s;
						s.in = cat(Word{a.letter}, cur.in);
						s.out1 = cat(a.out, cur.out1);
						s.out2 = cat(b.out, cur.out2);
						if(best.try_emplace({a.from, b.from}, std::move(s)).second)
							queue.push_back({a.from, b.from});
					}
		}
		return best.at(from);
	};
	std::map<std::pair<State, State>, detail::PairInfo> info;
	std::deque<std::pair<State, State>> queue;
	auto arrive = [&](std::pair<State, State> pq, Delay d,
	                  Word access) -> std::optional<Word> {
		if(!live.count(pq))
			return std::nullopt;
		d.reduce();
		auto it = info.find(pq);
		if(it == info.end()) {
			info.emplace(pq, detail::PairInfo{d, access});
			queue.push_back(pq);
			return std::nullopt;
		}
		if(it->second.delay == d)
			return std::nullopt;
		// two distinct residuals; at least one completion must break
		auto sfx = complete_pair(pq);
		const Delay& d1 = it->second.delay;
		if(cat(d1.a, sfx.out1) != cat(d1.b, sfx.out2))
			return externalize(cat(it->second.access, sfx.in));
		return externalize(cat(access, sfx.in));
	};
	for(const auto& [p, wp] : t.initial)
		for(const auto& [q, wq] : t.initial)
			if(auto w = arrive({p, q}, Delay{wp, wq}, {}))
				return {false, w};
	while(!queue.empty()) {
		auto pq = queue.front();
		queue.pop_front();
		detail::PairInfo cur = info.at(pq);
		if(auto wp = t.terminal_out(pq.first))
			if(auto wq = t.terminal_out(pq.second))
				if(cat(cur.delay.a, *wp) != cat(cur.delay.b, *wq))
					return {false, externalize(cur.access)};
		for(const NftTransition& a : t.trans)
			for(const NftTransition& b : t.trans)
				if(a.from == pq.first && b.from == pq.second && a.letter == b.letter) {
					Delay d = cur.delay;
					d.push(a.out, b.out);
					Word acc = cur.access;
					acc.push_back(a.letter);
					if(auto w = arrive({a.to, b.to}, std::move(d), std::move(acc)))
						return {false, w};
				}
	}
	return {};
}

inline bool is_functional(const Nft& t)
{
	return check_functional(t).functional;
}

inline bool is_unambiguous_nft(const Nft& t)
{
	return is_unambiguous(underlying(t));
}

// Deterministic (sequential) transducer. Partial: a missing transition or a
// non-final end state puts the input outside the domain.
struct Dft {
	Orientation orient = Orientation::left;
	Alphabet in, out;
	State states = 0;
	std::vector<std::string> names;
	State initial = 0;
	Word initial_out;
	std::vector<std::int64_t> delta;      // states * |in|, target or -1
	std::vector<Word> out_word;           // parallel to delta
	std::vector<std::optional<Word>> terminal; // set iff final

	std::int64_t target(State q, Letter a) const { return delta[q * in.size() + a]; }
	const Word& output(State q, Letter a) const { return out_word[q * in.size() + a]; }
	std::optional<State> step(State q, Letter a) const
	{
		std::int64_t r = target(q, a);
		if(r < 0)
			return std::nullopt;
		return static_cast<State>(r);
	}

	std::string state_name(State q) const
	{
		return q < names.size() && !names[q].empty() ? names[q] : "q" + std::to_string(q);
	}
};

inline std::optional<Word> eval(const Dft& t, const Word& w)
{
	if(t.states == 0)
		return std::nullopt;
	State q = t.initial;
	Word res = t.initial_out;
	for(Letter x : reading_order(w, t.orient)) {
		auto n = t.step(q, x);
		if(!n)
			return std::nullopt;
		append(res, t.output(q, x));
		q = *n;
	}
	if(!t.terminal[q])
		return std::nullopt;
	append(res, *t.terminal[q]);
	return t.orient == Orientation::left ? res : reversed(res);
}

inline Nft nft_of(const Dft& t)
{
	Nft r;
	r.orient = t.orient;
	r.in = t.in;
	r.out = t.out;
	r.states = t.states;
	r.names = t.names;
	if(t.states > 0)
		r.initial.push_back({t.initial, t.initial_out});
	for(State q = 0; q < t.states; q++)
		if(t.terminal[q])
			r.final.push_back({q, *t.terminal[q]});
	for(State q = 0; q < t.states; q++)
		for(Letter x = 0; x < t.in.size(); x++)
			if(auto n = t.step(q, x))
				r.trans.push_back({q, x, t.output(q, x), *n});
	normalize(r);
	return r;
}

inline Nfa underlying(const Dft& t)
{
	return underlying(nft_of(t));
}

// Subset construction with residual outputs: a state is the set of runs
// still alive, each carrying the part of its output that the emitted common
// prefix has not covered yet. Residuals staying bounded is exactly
// sequentiality; the cap is large enough that only genuinely unbounded
// machines hit it.
inline Dft determinize(const Nft& input)
{
	FunctionalityResult fr = check_functional(input);
	if(!fr.functional)
		throw PreconditionError("transducer is not functional",
		                        {{"witness", word_text(*fr.witness, input.in)}});
	Nft t = trim(input);
	Dft d;
	d.orient = t.orient;
	d.in = t.in;
	d.out = t.out;
	if(t.states == 0)
		return d;
	std::size_t cap = 1;
	for(const NftTransition& tr : t.trans)
		cap = std::max(cap, tr.out.size());
	for(const auto& [q, w] : t.initial)
		cap = std::max(cap, w.size());
	for(const auto& [q, w] : t.final)
		cap = std::max(cap, w.size());
	cap *= static_cast<std::size_t>(t.states) * t.states + 1;
	using Subset = std::vector<std::pair<State, Word>>; // sorted by state
	auto check_cap = [&](const Subset& s) {
		for(const auto& [q, w] : s)
			if(w.size() > cap)
				throw NotSequentialisable("transducer admits no deterministic equivalent",
				                          {{"residual_bound", std::to_string(cap)}});
	};
	auto subset_name = [&](const Subset& s) {
		std::string nm = "{";
		for(std::size_t i = 0; i < s.size(); i++) {
			if(i)
				nm += ",";
			nm += "(" + t.state_name(s[i].first) + ","
			    + (s[i].second.empty() ? "ε" : word_text(s[i].second, t.out)) + ")";
		}
		return nm + "}";
	};
	std::map<Subset, State> ids;
	std::deque<Subset> queue;
	std::vector<Subset> subsets;
	auto intern = [&](Subset s) {
		auto [it, ins] = ids.try_emplace(s, static_cast<State>(ids.size()));
		if(ins) {
			queue.push_back(s);
			subsets.push_back(std::move(s));
		}
		return it->second;
	};
	Subset start(t.initial.begin(), t.initial.end());
	Word common = start.front().second;
	for(const auto& [q, w] : start)
		lcp_shrink(common, w);
	for(auto& [q, w] : start)
		w = residual(common, w);
	d.initial_out = common;
	check_cap(start);
	intern(std::move(start));
	struct Row {
		std::vector<std::int64_t> target;
		std::vector<Word> out;
		std::optional<Word> terminal;
	};
	std::vector<Row> rows;
	while(!queue.empty()) {
		Subset cur = queue.front();
		queue.pop_front();
		Row row;
		row.target.assign(t.in.size(), -1);
		row.out.resize(t.in.size());
		for(Letter x = 0; x < t.in.size(); x++) {
			std::map<State, Word> nxt;
			for(const auto& [q, w] : cur)
				for(const NftTransition& tr : t.trans)
					if(tr.from == q && tr.letter == x) {
						Word v = cat(w, tr.out);
						auto [it, ins] = nxt.try_emplace(tr.to, v);
						if(!ins && it->second != v)
							throw PreconditionError("transducer is not functional");
					}
			if(nxt.empty())
				continue;
			Word o = nxt.begin()->second;
			for(const auto& [q, w] : nxt)
				lcp_shrink(o, w);
			Subset s;
			for(const auto& [q, w] : nxt)
				s.push_back({q, residual(o, w)});
			check_cap(s);
			row.target[x] = intern(std::move(s));
			row.out[x] = std::move(o);
		}
		for(const auto& [q, w] : cur)
			if(auto tw = t.terminal_out(q)) {
				Word full = cat(w, *tw);
				if(row.terminal && *row.terminal != full)
					throw PreconditionError("transducer is not functional");
				row.terminal = std::move(full);
			}
		rows.push_back(std::move(row));
	}
	d.states = static_cast<State>(rows.size());
	d.initial = 0;
	d.delta.assign(static_cast<std::size_t>(d.states) * d.in.size(), -1);
	d.out_word.assign(static_cast<std::size_t>(d.states) * d.in.size(), {});
	d.terminal.resize(d.states);
	for(State q = 0; q < d.states; q++) {
		d.names.push_back(subset_name(subsets[q]));
		d.terminal[q] = rows[q].terminal;
		for(Letter x = 0; x < d.in.size(); x++) {
			d.delta[q * d.in.size() + x] = rows[q].target[x];
			d.out_word[q * d.in.size() + x] = std::move(rows[q].out[x]);
		}
	}
	return d;
}

// Restriction of a Dft to states on some accepting path, BFS renumbered.
inline Dft trim(const Dft& t)
{
	Nfa dom = underlying(t);
	std::vector<char> fwd(t.states, 0), bwd(t.states, 0);
	if(t.states > 0) {
		std::vector<char> f = reachable_states(dom), b = coreachable_states(dom);
		fwd = f;
		bwd = b;
	}
	Dft r;
	r.orient = t.orient;
	r.in = t.in;
	r.out = t.out;
	if(t.states == 0 || !fwd[t.initial] || !bwd[t.initial])
		return r;
	std::vector<std::int64_t> map(t.states, -1);
	std::vector<State> order;
	map[t.initial] = 0;
	order.push_back(t.initial);
	for(std::size_t i = 0; i < order.size(); i++)
		for(Letter x = 0; x < t.in.size(); x++)
			if(auto n = t.step(order[i], x))
				if(fwd[*n] && bwd[*n] && map[*n] < 0) {
					map[*n] = static_cast<std::int64_t>(order.size());
					order.push_back(*n);
				}
	r.states = static_cast<State>(order.size());
	r.initial = 0;
	r.initial_out = t.initial_out;
	r.delta.assign(static_cast<std::size_t>(r.states) * r.in.size(), -1);
	r.out_word.assign(static_cast<std::size_t>(r.states) * r.in.size(), {});
	r.terminal.resize(r.states);
	for(State q = 0; q < r.states; q++) {
		if(!t.names.empty())
			r.names.push_back(t.names[order[q]]);
		r.terminal[q] = t.terminal[order[q]];
		for(Letter x = 0; x < r.in.size(); x++)
			if(auto n = t.step(order[q], x))
				if(map[*n] >= 0) {
					r.delta[q * r.in.size() + x] = map[*n];
					r.out_word[q * r.in.size() + x] = t.output(order[q], x);
				}
	}
	return r;
}

// Canonical minimal sequential transducer: outputs are pushed as early as
// the function allows, then equivalent states are merged.
inline Dft minimize(const Dft& input)
{
	Dft t = trim(input);
	if(t.states == 0)
		return t;
	// longest common prefix of all outputs produced from each state
	std::vector<std::optional<Word>> adv(t.states);
	for(;;) {
		bool changed = false;
		for(State q = 0; q < t.states; q++) {
			std::optional<Word> acc;
			auto feed = [&](const Word& w) {
				if(!acc)
					acc = w;
				else
					lcp_shrink(*acc, w);
			};
			if(t.terminal[q])
				feed(*t.terminal[q]);
			for(Letter x = 0; x < t.in.size(); x++)
				if(auto n = t.step(q, x))
					if(adv[*n])
						feed(cat(t.output(q, x), *adv[*n]));
			if(acc && (!adv[q] || *adv[q] != *acc)) {
				adv[q] = std::move(acc);
				changed = true;
			}
		}
		if(!changed)
			break;
	}
	Dft p = t;
	p.initial_out = cat(t.initial_out, *adv[t.initial]);
	for(State q = 0; q < t.states; q++) {
		if(t.terminal[q])
			p.terminal[q] = residual(*adv[q], *t.terminal[q]);
		for(Letter x = 0; x < t.in.size(); x++)
			if(auto n = t.step(q, x))
				p.out_word[q * t.in.size() + x] = residual(*adv[q], cat(t.output(q, x), *adv[*n]));
	}
	// Moore refinement on the pushed machine
	std::vector<std::uint32_t> block(p.states);
	{
		std::map<std::optional<Word>, std::uint32_t> ter_ids;
		for(State q = 0; q < p.states; q++) {
			auto [it, ins] = ter_ids.try_emplace(p.terminal[q], static_cast<std::uint32_t>(ter_ids.size()));
			(void)ins;
			block[q] = it->second;
		}
	}
	auto block_count = [](const std::vector<std::uint32_t>& v) {
		return std::set<std::uint32_t>(v.begin(), v.end()).size();
	};
	for(;;) {
		using Sig = std::vector<std::pair<std::int64_t, Word>>;
		std::map<std::pair<std::uint32_t, Sig>, std::uint32_t> sig_ids;
		std::vector<std::uint32_t> next(p.states);
		for(State q = 0; q < p.states; q++) {
			Sig sig;
			for(Letter x = 0; x < p.in.size(); x++) {
				auto n = p.step(q, x);
				sig.push_back({n ? static_cast<std::int64_t>(block[*n]) : -1,
				               n ? p.output(q, x) : Word{}});
			}
			auto [it, ins] = sig_ids.try_emplace({block[q], sig}, static_cast<std::uint32_t>(sig_ids.size()));
			(void)ins;
			next[q] = it->second;
		}
		if(block_count(next) == block_count(block))
			break;
		block = std::move(next);
	}
	// quotient, BFS order from the initial block
	std::uint32_t nblocks = static_cast<std::uint32_t>(block_count(block));
	(void)nblocks;
	std::map<std::uint32_t, State> repr;
	for(State q = 0; q < p.states; q++)
		repr.try_emplace(block[q], q);
	std::map<std::uint32_t, std::int64_t> bmap;
	std::vector<std::uint32_t> order;
	bmap[block[p.initial]] = 0;
	order.push_back(block[p.initial]);
	for(std::size_t i = 0; i < order.size(); i++) {
		State q = repr.at(order[i]);
		for(Letter x = 0; x < p.in.size(); x++)
			if(auto n = p.step(q, x)) {
				auto [it, ins] = bmap.try_emplace(block[*n], static_cast<std::int64_t>(order.size()));
				if(ins)
					order.push_back(block[*n]);
			}
	}
	Dft m;
	m.orient = p.orient;
	m.in = p.in;
	m.out = p.out;
	m.states = static_cast<State>(order.size());
	m.initial = 0;
	m.initial_out = p.initial_out;
	m.delta.assign(static_cast<std::size_t>(m.states) * m.in.size(), -1);
	m.out_word.assign(static_cast<std::size_t>(m.states) * m.in.size(), {});
	m.terminal.resize(m.states);
	for(State b = 0; b < m.states; b++) {
		State q = repr.at(order[b]);
		m.terminal[b] = p.terminal[q];
		for(Letter x = 0; x < m.in.size(); x++)
			if(auto n = p.step(q, x)) {
				m.delta[b * m.in.size() + x] = bmap.at(block[*n]);
				m.out_word[b * m.in.size() + x] = p.output(q, x);
			}
	}
	return m;
}

// Unambiguous machine for the same function: of all accepting runs of an
// input, exactly the least one survives, comparing runs position by
// position through the chosen successor (state index, then output word).
// The second component tracks where strictly smaller run prefixes are.
inline Nft disambiguate(const Nft& input)
{
	Nft t = trim(input);
	Nft r;
	r.orient = t.orient;
	r.in = t.in;
	r.out = t.out;
	if(t.states == 0)
		return r;
	auto final_of = [&](State q) { return t.terminal_out(q); };
	using Key = std::pair<State, std::vector<State>>;
	std::map<Key, State> ids;
	std::deque<Key> queue;
	auto intern = [&](const Key& k) {
		auto [it, ins] = ids.try_emplace(k, static_cast<State>(ids.size()));
		if(ins) {
			queue.push_back(k);
			std::string nm = "(" + t.state_name(k.first) + ",{";
			for(std::size_t i = 0; i < k.second.size(); i++) {
				if(i)
					nm += ",";
				nm += t.state_name(k.second[i]);
			}
			r.names.push_back(nm + "})");
			r.states++;
		}
		return it->second;
	};
	for(std::size_t i = 0; i < t.initial.size(); i++) {
		std::vector<State> smaller;
		for(std::size_t j = 0; j < i; j++)
			smaller.push_back(t.initial[j].first);
		sort_unique(smaller);
		if(std::binary_search(smaller.begin(), smaller.end(), t.initial[i].first))
			continue;
		r.initial.push_back({intern({t.initial[i].first, smaller}), t.initial[i].second});
	}
	while(!queue.empty()) {
		Key cur = queue.front();
		queue.pop_front();
		State id = ids.at(cur);
		const auto& [q, B] = cur;
		if(auto tw = final_of(q)) {
			bool blocked = false;
			for(State p : B)
				if(final_of(p))
					blocked = true;
			if(!blocked)
				r.final.push_back({id, *tw});
		}
		for(Letter x = 0; x < t.in.size(); x++) {
			std::vector<State> bstep;
			for(State p : B)
				for(const NftTransition& tr : t.trans)
					if(tr.from == p && tr.letter == x)
						bstep.push_back(tr.to);
			sort_unique(bstep);
			std::vector<std::pair<State, Word>> succ;
			for(const NftTransition& tr : t.trans)
				if(tr.from == q && tr.letter == x)
					succ.push_back({tr.to, tr.out});
			std::sort(succ.begin(), succ.end());
			succ.erase(std::unique(succ.begin(), succ.end()), succ.end());
			for(std::size_t i = 0; i < succ.size(); i++) {
				std::vector<State> b2 = bstep;
				for(std::size_t j = 0; j < i; j++)
					b2.push_back(succ[j].first);
				sort_unique(b2);
				if(std::binary_search(b2.begin(), b2.end(), succ[i].first))
					continue;
				State nid = intern({succ[i].first, b2});
				r.trans.push_back({id, x, succ[i].second, nid});
			}
		}
	}
	normalize(r);
	return trim(r);
}

} // namespace rwf
