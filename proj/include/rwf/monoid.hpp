#pragma once

#include <algorithm>
#include <cstdint>
#include <deque>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "automaton.hpp"
#include "error.hpp"
#include "word.hpp"

namespace rwf {

using Elem = std::uint32_t;

// Finite monoid with an explicit multiplication table. When the monoid was
// built from a machine, letter_elem maps each input letter to its image and
// rep holds a shortest representative word per element.
struct FiniteMonoid {
	Elem size = 0;
	Elem identity = 0;
	std::vector<Elem> table; // size*size, row-major: table[a*size+b] = a*b
	Alphabet alphabet;
	std::vector<Elem> letter_elem;
	std::vector<Word> rep;
	std::vector<std::string> names;

	Elem mult(Elem a, Elem b) const { return table[a * size + b]; }

	Elem eval(const Word& w) const
	{
		Elem m = identity;
		for(Letter x : w)
			m = mult(m, letter_elem[x]);
		return m;
	}

	bool is_idempotent(Elem a) const { return mult(a, a) == a; }

	// The unique idempotent in the subsemigroup generated by a.
	Elem omega(Elem a) const
	{
		Elem p = a;
		for(Elem i = 0; i <= 2 * size + 2; i++) {
			if(is_idempotent(p))
				return p;
			p = mult(p, a);
		}
		throw PreconditionError("omega power: multiplication table is not associative");
	}

	std::string elem_name(Elem a) const
	{
		if(a < names.size() && !names[a].empty())
			return names[a];
		if(a < rep.size()) {
			if(rep[a].empty())
				return "1";
			std::string s;
			for(Letter x : rep[a])
				s += alphabet.name(x);
			return s;
		}
		return "m" + std::to_string(a);
	}

	void validate() const
	{
		if(size == 0)
			throw InputError("monoid must be nonempty");
		if(table.size() != static_cast<std::size_t>(size) * size)
			throw InputError("monoid table size mismatch");
		for(Elem v : table)
			if(v >= size)
				throw InputError("monoid table entry out of range");
		if(identity >= size)
			throw InputError("monoid identity out of range");
		for(Elem a = 0; a < size; a++)
			if(mult(identity, a) != a || mult(a, identity) != a)
				throw InputError("monoid identity does not act as identity",
				                 {{"element", std::to_string(a)}});
		for(Elem a = 0; a < size; a++)
			for(Elem b = 0; b < size; b++)
				for(Elem c = 0; c < size; c++)
					if(mult(mult(a, b), c) != mult(a, mult(b, c)))
						throw InputError("monoid multiplication is not associative",
						                 {{"a", std::to_string(a)},
						                  {"b", std::to_string(b)},
						                  {"c", std::to_string(c)}});
		for(Elem e : letter_elem)
			if(e >= size)
				throw InputError("letter image out of range");
	}
};

namespace detail {

// boolean relation on s states, flattened row-major
using BoolMat = std::vector<char>;

inline BoolMat bool_mult(const BoolMat& a, const BoolMat& b, std::size_t s)
{
	BoolMat r(s * s, 0);
	for(std::size_t i = 0; i < s; i++)
		for(std::size_t k = 0; k < s; k++)
			if(a[i * s + k])
				for(std::size_t j = 0; j < s; j++)
					if(b[k * s + j])
						r[i * s + j] = 1;
	return r;
}

inline FiniteMonoid generate_matrix_monoid(const std::vector<BoolMat>& gen, std::size_t s,
                                           const Alphabet& ab)
{
	BoolMat id(s * s, 0);
	for(std::size_t i = 0; i < s; i++)
		id[i * s + i] = 1;
	std::map<BoolMat, Elem> ids;
	std::vector<BoolMat> elems;
	std::vector<Word> reps;
	std::deque<Elem> queue;
	auto intern = [&](const BoolMat& m, const Word& rep) {
		auto [it, ins] = ids.try_emplace(m, static_cast<Elem>(elems.size()));
		if(ins) {
			elems.push_back(m);
			reps.push_back(rep);
			queue.push_back(it->second);
		}
		return it->second;
	};
	FiniteMonoid mon;
	mon.alphabet = ab;
	mon.identity = intern(id, {});
	mon.letter_elem.resize(ab.size());
	for(Letter x = 0; x < ab.size(); x++)
		mon.letter_elem[x] = intern(gen[x], {x});
	while(!queue.empty()) {
		Elem e = queue.front();
		queue.pop_front();
		for(Letter x = 0; x < ab.size(); x++) {
			Word rep = reps[e];
			rep.push_back(x);
			intern(bool_mult(elems[e], gen[x], s), rep);
		}
	}
	mon.size = static_cast<Elem>(elems.size());
	mon.rep = std::move(reps);
	mon.table.assign(static_cast<std::size_t>(mon.size) * mon.size, 0);
	for(Elem a = 0; a < mon.size; a++)
		for(Elem b = 0; b < mon.size; b++) {
			BoolMat prod = bool_mult(elems[a], elems[b], s);
			auto it = ids.find(prod);
			if(it == ids.end())
				throw PreconditionError("matrix monoid generation is not closed");
			mon.table[a * mon.size + b] = it->second;
		}
	return mon;
}

} // namespace detail

// Monoid of transition relations, one generator per letter. The map from
// words to elements is a homomorphism in word order for both orientations;
// for a right automaton the stored letter relations are transposed to make
// that so. Machines with final states are trimmed first; machines without
// finals (classifiers) are restricted to their reachable part only.
inline FiniteMonoid transition_monoid(const Nfa& input)
{
	Nfa a = input;
	if(!a.final.empty()) {
		a = trim(a);
	} else {
		std::vector<char> fwd = reachable_states(a);
		Nfa r;
		r.orient = a.orient;
		r.alphabet = a.alphabet;
		std::vector<std::int64_t> map(a.states, -1);
		for(State q = 0; q < a.states; q++)
			if(fwd[q])
				map[q] = r.states++;
		for(State q : a.initial)
			if(map[q] >= 0)
				r.initial.push_back(static_cast<State>(map[q]));
		for(const Transition& t : a.trans)
			if(map[t.from] >= 0 && map[t.to] >= 0)
				r.trans.push_back({static_cast<State>(map[t.from]), t.letter, static_cast<State>(map[t.to])});
		normalize(r);
		a = std::move(r);
	}
	std::size_t s = a.states;
	std::vector<detail::BoolMat> gen(a.alphabet.size(), detail::BoolMat(s * s, 0));
	for(const Transition& t : a.trans) {
		if(a.orient == Orientation::left)
			gen[t.letter][t.from * s + t.to] = 1;
		else
			gen[t.letter][t.to * s + t.from] = 1;
	}
	return detail::generate_matrix_monoid(gen, s, a.alphabet);
}

inline FiniteMonoid transition_monoid(const Dfa& d)
{
	return transition_monoid(nfa_of(d));
}

// Minimal complete automaton of the language, reading left to right.
inline Dfa minimal_left_dfa(const Nfa& a)
{
	if(a.orient == Orientation::left)
		return minimize(determinize(a));
	return minimize(determinize(reverse(a)));
}

inline FiniteMonoid syntactic_monoid(const Nfa& a)
{
	return transition_monoid(minimal_left_dfa(a));
}

inline FiniteMonoid syntactic_monoid(const Dfa& d)
{
	return syntactic_monoid(nfa_of(d));
}

// One factor of a profinite term: a product of variables, the whole factor
// optionally raised to the omega power.
struct EqFactor {
	std::vector<std::uint32_t> vars;
	bool omega = false;
};

struct ProfiniteEq {
	std::vector<EqFactor> lhs, rhs;
	std::uint32_t var_count = 0;
	std::vector<std::string> var_names;
	std::string text;
};

struct VarietySpec {
	std::string name;
	std::vector<ProfiniteEq> eqs;
};

// Grammar: side "=" side; side is a sequence of factors; a factor is a
// variable letter or a parenthesized variable word, optionally followed by
// "^w". Example: "y(xy)^w = (xy)^w".
inline ProfiniteEq parse_profinite_eq(const std::string& text)
{
	ProfiniteEq eq;
	eq.text = text;
	std::map<char, std::uint32_t> var_ids;
	auto var_of = [&](char c) {
		auto [it, ins] = var_ids.try_emplace(c, static_cast<std::uint32_t>(var_ids.size()));
		if(ins)
			eq.var_names.push_back(std::string(1, c));
		return it->second;
	};
	std::size_t i = 0;
	auto skip_ws = [&] {
		while(i < text.size() && (text[i] == ' ' || text[i] == '\t'))
			i++;
	};
	auto parse_side = [&](std::vector<EqFactor>& side, bool lhs) {
		for(;;) {
			skip_ws();
			if(i >= text.size() || text[i] == '=')
				break;
			EqFactor f;
			if(text[i] == '(') {
				i++;
				skip_ws();
				while(i < text.size() && text[i] != ')') {
					if(text[i] < 'a' || text[i] > 'z' || text[i] == 'w')
						throw InputError("equation: expected variable letter", {{"text", text}});
					f.vars.push_back(var_of(text[i]));
					i++;
					skip_ws();
				}
				if(i >= text.size())
					throw InputError("equation: missing ')'", {{"text", text}});
				i++;
				if(f.vars.empty())
					throw InputError("equation: empty group", {{"text", text}});
			} else if(text[i] >= 'a' && text[i] <= 'z' && text[i] != 'w') {
				// w is reserved for the omega power
				f.vars.push_back(var_of(text[i]));
				i++;
			} else {
				throw InputError("equation: unexpected character",
				                 {{"text", text}, {"at", std::to_string(i)}});
			}
			if(i + 1 < text.size() && text[i] == '^' && text[i + 1] == 'w') {
				f.omega = true;
				i += 2;
			} else if(i < text.size() && text[i] == '^') {
				throw InputError("equation: only ^w powers are supported", {{"text", text}});
			}
			side.push_back(std::move(f));
		}
		if(side.empty())
			throw InputError("equation: empty side", {{"text", text}});
		if(lhs) {
			if(i >= text.size() || text[i] != '=')
				throw InputError("equation: missing '='", {{"text", text}});
			i++;
		} else {
			skip_ws();
			if(i != text.size())
				throw InputError("equation: trailing input", {{"text", text}});
		}
	};
	parse_side(eq.lhs, true);
	parse_side(eq.rhs, false);
	eq.var_count = static_cast<std::uint32_t>(var_ids.size());
	return eq;
}

inline VarietySpec parse_variety(const std::string& name, const std::vector<std::string>& eq_texts)
{
	VarietySpec v;
	v.name = name;
	for(const std::string& t : eq_texts)
		v.eqs.push_back(parse_profinite_eq(t));
	return v;
}

// Built-in variety names. "all" places no constraint.
inline std::optional<VarietySpec> builtin_variety(const std::string& name)
{
	if(name == "all")
		return parse_variety("all", {});
	if(name == "A" || name == "aperiodic")
		return parse_variety(name, {"x^w = x^w x"});
	if(name == "Com")
		return parse_variety("Com", {"xy = yx"});
	if(name == "I")
		return parse_variety("I", {"x = xx"});
	if(name == "J1")
		return parse_variety("J1", {"x = xx", "xy = yx"});
	if(name == "J")
		return parse_variety("J", {"y(xy)^w = (xy)^w", "(xy)^w = (xy)^w x"});
	if(name == "DA")
		return parse_variety("DA", {"(xyz)^w y (xyz)^w = (xyz)^w"});
	return std::nullopt;
}

struct VarietyViolation {
	std::string equation;
	std::vector<std::string> assignment; // "x = <element>" per variable
};

inline Elem eval_factor(const FiniteMonoid& m, const EqFactor& f, const std::vector<Elem>& sub)
{
	Elem r = m.identity;
	for(std::uint32_t v : f.vars)
		r = m.mult(r, sub[v]);
	return f.omega ? m.omega(r) : r;
}

inline Elem eval_side(const FiniteMonoid& m, const std::vector<EqFactor>& side,
                      const std::vector<Elem>& sub)
{
	Elem r = m.identity;
	for(const EqFactor& f : side)
		r = m.mult(r, eval_factor(m, f, sub));
	return r;
}

// Checks every substitution of monoid elements for the variables.
inline std::optional<VarietyViolation> variety_violation(const FiniteMonoid& m, const VarietySpec& v)
{
	for(const ProfiniteEq& eq : v.eqs) {
		std::vector<Elem> sub(eq.var_count, 0);
		for(;;) {
			if(eval_side(m, eq.lhs, sub) != eval_side(m, eq.rhs, sub)) {
				VarietyViolation viol;
				viol.equation = eq.text;
				for(std::uint32_t i = 0; i < eq.var_count; i++)
					viol.assignment.push_back(eq.var_names[i] + " = " + m.elem_name(sub[i]));
				return viol;
			}
			std::uint32_t k = 0;
			while(k < eq.var_count && ++sub[k] == m.size) {
				sub[k] = 0;
				k++;
			}
			if(k == eq.var_count)
				break;
		}
	}
	return std::nullopt;
}

inline bool in_variety(const FiniteMonoid& m, const VarietySpec& v)
{
	return !variety_violation(m, v).has_value();
}

inline bool is_aperiodic(const FiniteMonoid& m)
{
	return in_variety(m, *builtin_variety("A"));
}

// A complete deterministic automaton is counter-free iff its transition
// monoid is aperiodic.
inline bool counter_free(const Dfa& d)
{
	return is_aperiodic(transition_monoid(d));
}

} // namespace rwf
