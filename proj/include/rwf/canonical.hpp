#pragma once

#include <algorithm>
#include <cstdint>
#include <deque>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "rwf/bimachine.hpp"

namespace rwf {

// Structure flip: the mirrored congruence classifies reversed words, so the
// classifier keeps its transition table and flips its reading direction.
inline Congruence mirror_congruence(const Congruence& c)
{
	Congruence m = c;
	m.classes.orient =
	    c.classes.orient == Orientation::left ? Orientation::right : Orientation::left;
	for(Word& w : m.rep)
		std::reverse(w.begin(), w.end());
	return m;
}

namespace detail {

// The function w -> f(wv) on f's own state graph: terminal outputs are
// replaced by the unique completion output on v from each state. Uniqueness
// holds on a trim functional transducer.
inline Nft with_context(const Nft& t, const Word& v)
{
	std::vector<std::optional<Word>> d(t.states);
	for(const auto& [q, w] : t.final)
		d[q] = w;
	for(auto it = v.rbegin(); it != v.rend(); ++it) {
		std::vector<std::optional<Word>> n(t.states);
		for(const NftTransition& tr : t.trans) {
			if(tr.letter != *it || !d[tr.to])
				continue;
			Word out = cat(tr.out, *d[tr.to]);
			if(n[tr.from] && *n[tr.from] != out)
				throw PreconditionError(
				    "conflicting completion outputs on a functional transducer",
				    {{"state", t.state_name(tr.from)}});
			n[tr.from] = std::move(out);
		}
		d = std::move(n);
	}
	Nft r = t;
	r.final.clear();
	for(State q = 0; q < t.states; q++)
		if(d[q])
			r.final.push_back({q, *d[q]});
	return r;
}

// Reduced-delay exploration of the product. The supremum of the prefix
// distance between the two outputs is finite iff every live state pair keeps
// its reduced delay below the pumping bound.
inline bool bounded_left_distance(const Nft& a, const Nft& b, std::size_t cap)
{
	if(a.states == 0 || b.states == 0)
		return true;
	auto id = [&](State p, State q) { return static_cast<std::size_t>(p) * b.states + q; };

	std::vector<std::vector<const NftTransition*>> into_a(a.states), into_b(b.states);
	std::vector<std::vector<const NftTransition*>> out_a(a.states), out_b(b.states);
	for(const NftTransition& tr : a.trans) {
		into_a[tr.to].push_back(&tr);
		out_a[tr.from].push_back(&tr);
	}
	for(const NftTransition& tr : b.trans) {
		into_b[tr.to].push_back(&tr);
		out_b[tr.from].push_back(&tr);
	}

	std::vector<char> live(static_cast<std::size_t>(a.states) * b.states, 0);
	std::deque<std::pair<State, State>> bq;
	for(const auto& [p, wa] : a.final)
		for(const auto& [q, wb] : b.final)
			if(!live[id(p, q)]) {
				live[id(p, q)] = 1;
				bq.push_back({p, q});
			}
	while(!bq.empty()) {
		auto [p, q] = bq.front();
		bq.pop_front();
		for(const NftTransition* ta : into_a[p])
			for(const NftTransition* tb : into_b[q]) {
				if(tb->letter != ta->letter || live[id(ta->from, tb->from)])
					continue;
				live[id(ta->from, tb->from)] = 1;
				bq.push_back({ta->from, tb->from});
			}
	}

	// Depth-first walk over (pair, delay) nodes. Meeting a pair again along the
	// current path with a changed delay exhibits a cycle that rewrites its own
	// delay; pumping such a cycle grows the reduced delay beyond every bound, so
	// the walk can stop early. Every node on the path is distinct and a repeated
	// pair must carry an equal delay, which caps the path length by the number
	// of live pairs.
	struct Frame {
		State p, q;
		Delay d;
		std::size_t ia, ib;
	};
	std::set<std::tuple<State, State, Delay>> seen;
	std::map<std::pair<State, State>, Delay> active;
	std::vector<Frame> stack;
	auto enter = [&](State p, State q, Delay d) -> bool {
		if(!live[id(p, q)])
			return true;
		if(d.size() > cap)
			return false;
		auto it = active.find({p, q});
		if(it != active.end() && it->second != d)
			return false;
		if(!seen.insert({p, q, d}).second)
			return true;
		active.insert({{p, q}, d});
		stack.push_back({p, q, std::move(d), 0, 0});
		return true;
	};
	for(const auto& [ip, wa] : a.initial)
		for(const auto& [iq, wb] : b.initial) {
			Delay root{wa, wb};
			root.reduce();
			if(!enter(ip, iq, std::move(root)))
				return false;
			while(!stack.empty()) {
				Frame& f = stack.back();
				const NftTransition* ta = nullptr;
				const NftTransition* tb = nullptr;
				while(f.ia < out_a[f.p].size()) {
					if(f.ib >= out_b[f.q].size()) {
						f.ia++;
						f.ib = 0;
						continue;
					}
					const NftTransition* ca = out_a[f.p][f.ia];
					const NftTransition* cb = out_b[f.q][f.ib++];
					if(ca->letter == cb->letter) {
						ta = ca;
						tb = cb;
						break;
					}
				}
				if(!ta) {
					active.erase({f.p, f.q});
					stack.pop_back();
					continue;
				}
				Delay nd = f.d;
				nd.push(ta->out, tb->out);
				if(!enter(ta->to, tb->to, std::move(nd)))
					return false;
			}
		}
	return true;
}

inline std::vector<char> accepting_elements(const FiniteMonoid& m, const Nfa& a)
{
	std::vector<char> acc(m.size, 0);
	for(Elem e = 0; e < m.size; e++)
		acc[e] = accepts(a, m.rep[e]) ? 1 : 0;
	return acc;
}

inline std::size_t max_output_length(const Nft& t)
{
	std::size_t c = 1;
	for(const NftTransition& tr : t.trans)
		c = std::max(c, tr.out.size());
	for(const auto& [q, w] : t.initial)
		c = std::max(c, w.size());
	for(const auto& [q, w] : t.final)
		c = std::max(c, w.size());
	return c;
}

} // namespace detail

// One pairwise boundedness test performed while merging; the trace of these
// is the audit record of how the congruence classes were formed.
struct DistanceVerdict {
	Word u, v;
	bool bounded = false;
};

// Coarsest left congruence refining the transition congruence that relates
// u and v exactly when wu and wv stay in the domain together and the prefix
// distance between f(wu) and f(wv) stays bounded over all w. Classes become
// the states of a right automaton.
inline Congruence left_syntactic_congruence(const Nft& input,
                                            std::vector<DistanceVerdict>* trace = nullptr)
{
	Nft t = trim(left_form(input));
	FunctionalityResult fr = check_functional(t);
	if(!fr.functional)
		throw PreconditionError("transducer is not functional",
		                        {{"witness", word_text(*fr.witness, t.in)}});
	if(t.states == 0) {
		std::vector<std::vector<State>> action(1, std::vector<State>(input.in.size(), 0));
		return congruence_from_table(Orientation::right, input.in, 1, 0, action);
	}

	Nfa dom = underlying(t);
	FiniteMonoid m = transition_monoid(dom);
	std::vector<char> acc = detail::accepting_elements(m, dom);

	std::vector<std::vector<char>> sig(m.size, std::vector<char>(m.size));
	for(Elem e = 0; e < m.size; e++)
		for(Elem x = 0; x < m.size; x++)
			sig[e][x] = acc[m.mult(x, e)];

	// A cycle of the pair product either preserves a reduced delay or pumps it
	// beyond every bound, so in the bounded case each reachable delay is
	// realized by a simple path: at most states^2 steps, two output words per
	// step, plus the initial outputs.
	std::size_t n = static_cast<std::size_t>(t.states) * t.states;
	std::size_t cap = 2 * detail::max_output_length(t) * (n + 1);

	std::vector<Elem> parent(m.size);
	for(Elem e = 0; e < m.size; e++)
		parent[e] = e;
	std::function<Elem(Elem)> find = [&](Elem e) {
		while(parent[e] != e)
			e = parent[e] = parent[parent[e]];
		return e;
	};

	std::map<std::vector<char>, std::vector<Elem>> groups;
	for(Elem e = 0; e < m.size; e++)
		groups[sig[e]].push_back(e);

	std::vector<std::optional<Nft>> ctx(m.size);
	auto context = [&](Elem e) -> const Nft& {
		if(!ctx[e])
			ctx[e] = detail::with_context(t, m.rep[e]);
		return *ctx[e];
	};

	// Bounded distance is an equivalence: prefix distance obeys the triangle
	// inequality, so testing each member against one representative per class
	// settles it. Every pair of surviving representatives carries an explicit
	// unbounded verdict.
	for(const auto& [key, members] : groups) {
		std::vector<Elem> reps;
		for(Elem e : members) {
			bool merged = false;
			for(Elem r : reps) {
				bool ok = detail::bounded_left_distance(context(r), context(e), cap);
				if(trace)
					trace->push_back({m.rep[r], m.rep[e], ok});
				if(ok) {
					parent[find(e)] = find(r);
					merged = true;
					break;
				}
			}
			if(!merged)
				reps.push_back(e);
		}
	}

	std::map<Elem, State> cls;
	for(Elem e = 0; e < m.size; e++)
		cls.try_emplace(find(e), static_cast<State>(cls.size()));
	std::vector<std::vector<State>> action(cls.size(), std::vector<State>(t.in.size(), 0));
	std::vector<char> seen(cls.size(), 0);
	for(Elem e = 0; e < m.size; e++) {
		State c = cls[find(e)];
		for(Letter x = 0; x < t.in.size(); x++) {
			State to = cls[find(m.mult(m.letter_elem[x], e))];
			if(!seen[c])
				action[c][x] = to;
			else if(action[c][x] != to)
				throw PreconditionError(
				    "merged classes are not closed under letter extension",
				    {{"class", word_text(m.rep[e], t.in)},
				     {"letter", t.in.name(x)}});
		}
		seen[c] = 1;
	}
	return congruence_from_table(Orientation::right, t.in, static_cast<State>(cls.size()),
	                             cls[find(m.identity)], action);
}

inline Congruence right_syntactic_congruence(const Nft& input)
{
	return mirror_congruence(left_syntactic_congruence(mirror(left_form(input))));
}

// The guessing family: one thread per class of the right quotient. A thread
// state couples the set of live runs, each carrying its delay against the
// emitted output, with the guessed class of the remaining input.
struct TRFamily {
	Nft t;
	Congruence right;
	State eps_class = 0;
	std::vector<std::vector<std::pair<State, Word>>> subsets;
	std::vector<State> cls;
	std::vector<Word> term;
	std::vector<std::optional<Word>> final_out;
	std::vector<NftTransition> trans;
	std::vector<std::int64_t> start;
	std::vector<Word> init_out;
};

inline TRFamily build_T_family(const Nft& input, const Congruence& right)
{
	if(right.classes.orient != Orientation::right)
		throw InputError("guess quotient must be a right automaton");
	TRFamily fam;
	fam.t = trim(left_form(input));
	fam.right = right;
	if(!(right.classes.alphabet == fam.t.in))
		throw InputError("guess quotient alphabet differs from the transducer input");
	const Nft& t = fam.t;
	const Dfa& R = right.classes;
	const State K = R.states;
	fam.eps_class = R.initial;
	fam.start.assign(K, -1);
	fam.init_out.resize(K);

	auto lv = [&](State q, State s) { return static_cast<std::size_t>(q) * K + s; };
	std::vector<std::vector<const NftTransition*>> into(t.states), out_of(t.states);
	for(const NftTransition& tr : t.trans) {
		into[tr.to].push_back(&tr);
		out_of[tr.from].push_back(&tr);
	}
	std::vector<std::vector<std::vector<State>>> pre(
	    K, std::vector<std::vector<State>>(t.in.size()));
	for(State s = 0; s < K; s++)
		for(Letter x = 0; x < t.in.size(); x++) {
			auto to = R.step(s, x);
			if(!to)
				throw PreconditionError("guess quotient automaton is not complete");
			pre[*to][x].push_back(s);
		}

	std::vector<char> live(static_cast<std::size_t>(t.states) * K, 0);
	{
		std::deque<std::pair<State, State>> queue;
		for(const auto& [q, w] : t.final)
			if(!live[lv(q, fam.eps_class)]) {
				live[lv(q, fam.eps_class)] = 1;
				queue.push_back({q, fam.eps_class});
			}
		while(!queue.empty()) {
			auto [q2, s2] = queue.front();
			queue.pop_front();
			for(const NftTransition* tr : into[q2]) {
				State s = *R.step(s2, tr->letter);
				if(live[lv(tr->from, s)])
					continue;
				live[lv(tr->from, s)] = 1;
				queue.push_back({tr->from, s});
			}
		}
	}

	// Greatest fixpoint of the completion meet: hh(q, s) is the longest
	// common prefix of the outputs of all accepting continuations from q
	// whose input lies in class s.
	std::vector<std::optional<Word>> hh(static_cast<std::size_t>(t.states) * K);
	for(bool changed = true; changed;) {
		changed = false;
		for(State q = 0; q < t.states; q++)
			for(State s = 0; s < K; s++) {
				if(!live[lv(q, s)])
					continue;
				std::optional<Word> v;
				auto meet = [&](Word w) {
					if(!v)
						v = std::move(w);
					else
						lcp_shrink(*v, w);
				};
				if(s == fam.eps_class)
					if(auto w = t.terminal_out(q))
						meet(*w);
				for(const NftTransition* tr : out_of[q])
					for(State s2 : pre[s][tr->letter])
						if(live[lv(tr->to, s2)] && hh[lv(tr->to, s2)])
							meet(cat(tr->out, *hh[lv(tr->to, s2)]));
				if(v != hh[lv(q, s)]) {
					hh[lv(q, s)] = std::move(v);
					changed = true;
				}
			}
	}
	for(State q = 0; q < t.states; q++)
		for(State s = 0; s < K; s++)
			if(live[lv(q, s)] && !hh[lv(q, s)])
				throw PreconditionError("live thread state has no completion meet");

	std::size_t nk = static_cast<std::size_t>(t.states) * std::max<State>(K, 1);
	std::size_t cap = detail::max_output_length(t) * (nk * nk + 1);

	std::map<std::pair<std::vector<std::pair<State, Word>>, State>, State> index;
	auto intern = [&](std::vector<std::pair<State, Word>> subset, State s) {
		std::sort(subset.begin(), subset.end());
		for(std::size_t i = 0; i < subset.size(); i++) {
			if(i > 0 && subset[i].first == subset[i - 1].first &&
			   subset[i].second != subset[i - 1].second)
				throw PreconditionError("diverging delays on one state within a thread",
				                        {{"state", t.state_name(subset[i].first)},
				                         {"class", word_text(right.rep[s], t.in)}});
			if(subset[i].second.size() > cap)
				throw PreconditionError(
				    "right automaton is not finer than the left syntactic congruence",
				    {{"class", word_text(right.rep[s], t.in)},
				     {"state", t.state_name(subset[i].first)},
				     {"partner", t.state_name(subset.front().first)}});
		}
		subset.erase(std::unique(subset.begin(), subset.end()), subset.end());
		auto [it, inserted] = index.try_emplace({subset, s}, static_cast<State>(index.size()));
		if(inserted) {
			Word tm;
			bool first = true;
			std::optional<Word> fo;
			for(const auto& [q, w] : subset) {
				Word full = cat(w, *hh[lv(q, s)]);
				if(first) {
					tm = std::move(full);
					first = false;
				} else
					lcp_shrink(tm, full);
				if(s == fam.eps_class)
					if(auto tw = t.terminal_out(q)) {
						Word val = cat(w, *tw);
						if(fo && *fo != val)
							throw PreconditionError(
							    "conflicting terminal values within a thread state",
							    {{"state", t.state_name(q)}});
						fo = std::move(val);
					}
			}
			fam.subsets.push_back(std::move(subset));
			fam.cls.push_back(s);
			fam.term.push_back(std::move(tm));
			fam.final_out.push_back(std::move(fo));
		}
		return it->second;
	};

	Word ir;
	bool first = true;
	for(const auto& [q, w] : t.initial) {
		if(first) {
			ir = w;
			first = false;
		} else
			lcp_shrink(ir, w);
	}
	for(State s = 0; s < K; s++) {
		std::vector<std::pair<State, Word>> entries;
		for(const auto& [q, w] : t.initial)
			if(live[lv(q, s)])
				entries.push_back({q, residual(ir, w)});
		if(entries.empty())
			continue;
		Word is = entries.front().second;
		for(const auto& [q, w] : entries)
			lcp_shrink(is, w);
		for(auto& [q, w] : entries)
			w = residual(is, w);
		fam.init_out[s] = cat(ir, is);
		fam.start[s] = intern(std::move(entries), s);
	}

	for(std::size_t i = 0; i < fam.subsets.size(); i++) {
		auto P = fam.subsets[i];
		State s = fam.cls[i];
		for(Letter x = 0; x < t.in.size(); x++)
			for(State s2 : pre[s][x]) {
				std::vector<std::pair<State, Word>> next;
				for(const auto& [q, w] : P)
					for(const NftTransition* tr : out_of[q]) {
						if(tr->letter != x || !live[lv(tr->to, s2)])
							continue;
						next.push_back({tr->to, cat(w, tr->out)});
					}
				if(next.empty())
					continue;
				Word v = next.front().second;
				for(const auto& [q, w] : next)
					lcp_shrink(v, w);
				for(auto& [q, w] : next)
					w = residual(v, w);
				State to = intern(std::move(next), s2);
				fam.trans.push_back({static_cast<State>(i), x, std::move(v), to});
			}
	}
	return fam;
}

// Underlying guessing automaton. No finals: consumers look at the transition
// structure, so the monoid is taken over the reachable restriction.
inline Nfa family_automaton(const TRFamily& fam)
{
	Nfa a;
	a.orient = Orientation::left;
	a.alphabet = fam.t.in;
	a.states = static_cast<State>(fam.subsets.size());
	for(std::size_t i = 0; i < fam.subsets.size(); i++) {
		std::string n = "{";
		for(std::size_t j = 0; j < fam.subsets[i].size(); j++) {
			if(j)
				n += ",";
			n += fam.t.state_name(fam.subsets[i][j].first);
			if(!fam.subsets[i][j].second.empty())
				n += ":" + word_text(fam.subsets[i][j].second, fam.t.out);
		}
		n += "|" + word_text(fam.right.rep[fam.cls[i]], fam.t.in) + "}";
		a.names.push_back(std::move(n));
	}
	for(std::size_t i = 0; i < fam.start.size(); i++)
		if(fam.start[i] >= 0)
			a.initial.push_back(static_cast<State>(fam.start[i]));
	for(const NftTransition& tr : fam.trans)
		a.trans.push_back({tr.from, tr.letter, tr.to});
	normalize(a);
	return a;
}

// Meet of f over all completions of u whose remaining input lies in class r.
inline std::optional<Word> fhat(const TRFamily& fam, State r, const Word& u)
{
	const Dfa& R = fam.right.classes;
	std::vector<State> seq(u.size() + 1);
	seq[u.size()] = r;
	for(std::size_t i = u.size(); i > 0; i--)
		seq[i - 1] = *R.step(seq[i], u[i - 1]);
	if(fam.start[seq[0]] < 0)
		return std::nullopt;
	State cur = static_cast<State>(fam.start[seq[0]]);
	Word out = fam.init_out[seq[0]];
	for(std::size_t i = 0; i < u.size(); i++) {
		bool found = false;
		for(const NftTransition& tr : fam.trans)
			if(tr.from == cur && tr.letter == u[i] && fam.cls[tr.to] == seq[i + 1]) {
				append(out, tr.out);
				cur = tr.to;
				found = true;
				break;
			}
		if(!found)
			return std::nullopt;
	}
	append(out, fam.term[cur]);
	return out;
}

namespace detail {

// Deterministic tuple automaton: one thread per guess class, advanced in
// lockstep, with the output increments and final residuals as labels.
struct ProfileAutomaton {
	std::vector<std::vector<std::int64_t>> profiles;
	std::vector<std::vector<State>> succ;
	State initial = 0;
	std::vector<std::optional<Word>> rho;
	std::vector<std::vector<std::optional<Word>>> inc;
	std::vector<State> block;
	State blocks = 0;
};

inline ProfileAutomaton profile_partition(const TRFamily& fam)
{
	const Dfa& R = fam.right.classes;
	const State K = R.states;
	const std::size_t A = fam.t.in.size();

	std::map<std::tuple<State, Letter, State>, std::pair<State, const Word*>> step;
	for(const NftTransition& tr : fam.trans)
		step[{tr.from, tr.letter, fam.cls[tr.to]}] = {tr.to, &tr.out};

	ProfileAutomaton pa;
	std::map<std::vector<std::int64_t>, State> id;
	auto intern = [&](std::vector<std::int64_t> p) {
		auto [it, inserted] = id.try_emplace(p, static_cast<State>(id.size()));
		if(inserted)
			pa.profiles.push_back(std::move(p));
		return it->second;
	};
	pa.initial = intern(std::vector<std::int64_t>(fam.start));
	for(std::size_t i = 0; i < pa.profiles.size(); i++) {
		pa.succ.push_back(std::vector<State>(A));
		for(Letter x = 0; x < A; x++) {
			std::vector<std::int64_t> n(K, -1);
			for(State r = 0; r < K; r++) {
				std::int64_t src = pa.profiles[i][*R.step(r, x)];
				if(src < 0)
					continue;
				auto it = step.find({static_cast<State>(src), x, r});
				if(it != step.end())
					n[r] = it->second.first;
			}
			pa.succ[i][x] = intern(std::move(n));
		}
	}

	const std::size_t P = pa.profiles.size();
	pa.rho.resize(P);
	pa.inc.assign(P, std::vector<std::optional<Word>>(A * K));
	for(std::size_t i = 0; i < P; i++) {
		std::int64_t qe = pa.profiles[i][fam.eps_class];
		if(qe >= 0 && fam.final_out[static_cast<std::size_t>(qe)])
			pa.rho[i] = residual(fam.term[static_cast<std::size_t>(qe)],
			                     *fam.final_out[static_cast<std::size_t>(qe)]);
		for(Letter x = 0; x < A; x++)
			for(State r = 0; r < K; r++) {
				std::int64_t src = pa.profiles[i][*R.step(r, x)];
				if(src < 0)
					continue;
				auto it = step.find({static_cast<State>(src), x, r});
				if(it == step.end())
					continue;
				auto [to, out] = it->second;
				pa.inc[i][static_cast<std::size_t>(x) * K + r] = residual(
				    fam.term[static_cast<std::size_t>(src)], cat(*out, fam.term[to]));
			}
	}

	std::map<std::pair<std::optional<Word>, std::vector<std::optional<Word>>>, State> lbl;
	pa.block.resize(P);
	for(std::size_t i = 0; i < P; i++)
		pa.block[i] =
		    lbl.try_emplace({pa.rho[i], pa.inc[i]}, static_cast<State>(lbl.size()))
		        .first->second;
	pa.blocks = static_cast<State>(lbl.size());
	for(;;) {
		std::map<std::pair<State, std::vector<State>>, State> next;
		std::vector<State> nb(P);
		for(std::size_t i = 0; i < P; i++) {
			std::vector<State> sb(A);
			for(Letter x = 0; x < A; x++)
				sb[x] = pa.block[pa.succ[i][x]];
			nb[i] = next.try_emplace({pa.block[i], std::move(sb)},
			                         static_cast<State>(next.size()))
			            .first->second;
		}
		if(next.size() == pa.blocks)
			break;
		pa.block = std::move(nb);
		pa.blocks = static_cast<State>(next.size());
	}
	return pa;
}

inline Congruence block_congruence(const TRFamily& fam, const ProfileAutomaton& pa)
{
	const std::size_t A = fam.t.in.size();
	Dfa d;
	d.orient = Orientation::left;
	d.alphabet = fam.t.in;
	d.states = pa.blocks;
	d.initial = pa.block[pa.initial];
	d.delta.assign(static_cast<std::size_t>(pa.blocks) * A, -1);
	for(std::size_t i = 0; i < pa.profiles.size(); i++)
		for(Letter x = 0; x < A; x++) {
			std::int64_t& cell = d.at(pa.block[i], x);
			State to = pa.block[pa.succ[i][x]];
			if(cell >= 0 && cell != to)
				throw PreconditionError("partition is not closed under the letter action");
			cell = to;
		}
	Congruence c;
	c.classes = std::move(d);
	c.rep = state_representatives(c.classes);
	for(State b = 0; b < c.classes.states; b++)
		c.classes.names.push_back("[" + word_text(c.rep[b], fam.t.in) + "]");
	return c;
}

} // namespace detail

// Coarsest left automaton fitting the guess quotient: two prefixes are
// identified when every extension produces the same output increments and
// the same final residuals across all threads.
inline Congruence canonical_left_congruence(const TRFamily& fam)
{
	return detail::block_congruence(fam, detail::profile_partition(fam));
}

struct CanonicalBimachine {
	Bimachine machine;
	Congruence left_congruence;
	Congruence right_congruence;
};

// Bimachine over the canonical left congruence for the given right quotient;
// with the quotient defaulted, both sides are the syntactic congruences of
// the function.
inline CanonicalBimachine canonical_bimachine(const Nft& input,
                                              const std::optional<Congruence>& right = std::nullopt)
{
	Nft t = trim(left_form(input));
	FunctionalityResult fr = check_functional(t);
	if(!fr.functional)
		throw PreconditionError("transducer is not functional",
		                        {{"witness", word_text(*fr.witness, t.in)}});

	CanonicalBimachine out;
	out.right_congruence = right ? *right : left_syntactic_congruence(t);
	TRFamily fam = build_T_family(t, out.right_congruence);
	detail::ProfileAutomaton pa = detail::profile_partition(fam);
	out.left_congruence = detail::block_congruence(fam, pa);

	const State K = out.right_congruence.classes.states;
	Bimachine& b = out.machine;
	b.left = out.left_congruence.classes;
	b.right = out.right_congruence.classes;
	b.out = fam.t.out;
	for(State r = 0; r < K; r++)
		if(fam.start[r] >= 0)
			b.lambda[r] =
			    cat(fam.init_out[r], fam.term[static_cast<std::size_t>(fam.start[r])]);
	std::vector<std::int64_t> member(pa.blocks, -1);
	for(std::size_t i = 0; i < pa.profiles.size(); i++)
		if(member[pa.block[i]] < 0)
			member[pa.block[i]] = static_cast<std::int64_t>(i);
	for(State bl = 0; bl < pa.blocks; bl++) {
		std::size_t p = static_cast<std::size_t>(member[bl]);
		if(pa.rho[p])
			b.rho[bl] = *pa.rho[p];
		for(Letter x = 0; x < fam.t.in.size(); x++)
			for(State r = 0; r < K; r++)
				if(const auto& w = pa.inc[p][static_cast<std::size_t>(x) * K + r])
					b.omega[{bl, x, r}] = *w;
	}
	normalize(b);
	return out;
}

// Totalization over an extended output alphabet: words outside the domain
// map to a fresh bottom letter.
inline Nft complete_function(const Nft& input)
{
	Nft t = trim(left_form(input));
	FunctionalityResult fr = check_functional(t);
	if(!fr.functional)
		throw PreconditionError("transducer is not functional",
		                        {{"witness", word_text(*fr.witness, t.in)}});

	std::string bot = "⊥";
	for(int k = 1; t.out.find(bot); k++)
		bot = "⊥" + std::to_string(k);
	Nft r = t;
	Letter bl = r.out.add(bot);

	Dfa comp;
	if(t.states == 0) {
		comp.orient = Orientation::left;
		comp.alphabet = t.in;
		comp.states = 1;
		comp.initial = 0;
		comp.final = {0};
		comp.names = {"all"};
		comp.delta.assign(t.in.size(), 0);
	} else
		comp = complement(minimize(determinize(underlying(t))));

	State off = r.states;
	r.states += comp.states;
	for(State q = 0; q < comp.states; q++) {
		r.names.push_back("~" + comp.state_name(q));
		for(Letter x = 0; x < t.in.size(); x++)
			if(auto to = comp.step(q, x))
				r.trans.push_back({off + q, x, {}, off + *to});
	}
	r.initial.push_back({off + comp.initial, {}});
	for(State q : comp.final)
		r.final.push_back({off + q, Word{bl}});
	normalize(r);
	return r;
}

} // namespace rwf
