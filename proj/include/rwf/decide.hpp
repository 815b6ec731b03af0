#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rwf/canonical.hpp"
#include "rwf/translation.hpp"

namespace rwf {

namespace detail {

inline std::string violating_element(const VarietyViolation& v)
{
	if(v.assignment.empty())
		return "";
	const std::string& a = v.assignment.front();
	auto pos = a.find(" = ");
	return pos == std::string::npos ? a : a.substr(pos + 3);
}

} // namespace detail

struct FoDecision {
	bool yes = false;
	std::string witness_monoid;
	std::string witness_element;
	std::optional<VarietyViolation> violation;
	std::optional<CanonicalBimachine> canonical;
	std::optional<Bimachine> bimachine;
	std::optional<Nft> nft;
	std::optional<Translation> translation;
};

// First-order definability: the domain and both sides of the canonical
// bimachine must be aperiodic. On yes the complete bimachine, the
// unambiguous transducer and the translation are all emitted.
inline FoDecision decide_fo(const Nft& input)
{
	Nft t = trim(left_form(input));
	FunctionalityResult fr = check_functional(t);
	if(!fr.functional)
		throw PreconditionError("transducer is not functional",
		                        {{"witness", word_text(*fr.witness, t.in)}});
	VarietySpec ap = *builtin_variety("aperiodic");

	FoDecision d;
	FiniteMonoid dm = syntactic_monoid(underlying(t));
	if(auto viol = variety_violation(dm, ap)) {
		d.witness_monoid = "domain";
		d.witness_element = detail::violating_element(*viol);
		d.violation = std::move(viol);
		return d;
	}
	CanonicalBimachine cb = canonical_bimachine(t);
	FiniteMonoid lm = transition_monoid(cb.machine.left);
	if(auto viol = variety_violation(lm, ap)) {
		d.witness_monoid = "left";
		d.witness_element = detail::violating_element(*viol);
		d.violation = std::move(viol);
		d.canonical = std::move(cb);
		return d;
	}
	FiniteMonoid rm = transition_monoid(cb.machine.right);
	if(auto viol = variety_violation(rm, ap)) {
		d.witness_monoid = "right";
		d.witness_element = detail::violating_element(*viol);
		d.violation = std::move(viol);
		d.canonical = std::move(cb);
		return d;
	}
	d.yes = true;
	Bimachine full = complete_bimachine(cb.machine);
	d.nft = bimachine_to_nft(full);
	Translation tr = bimachine_to_translation(full);
	tr.variety = "aperiodic";
	d.translation = std::move(tr);
	d.bimachine = std::move(full);
	d.canonical = std::move(cb);
	return d;
}

struct VarietyDecision {
	bool yes = false;
	std::string witness_monoid;
	std::string witness_element;
	std::optional<VarietyViolation> violation;
	std::size_t candidates = 0;
	std::vector<std::string> warnings;
	std::optional<Bimachine> bimachine;
	std::optional<Nft> nft;
	std::optional<Congruence> left;
	std::optional<Congruence> right;
};

namespace detail {

// Enumerates the partitions of the fine congruence classes that stay inside
// the coarse classes, in restricted-growth order, pruning assignments whose
// already-known successors separate a block.
struct LatticeSearch {
	const Dfa& fine;
	const std::vector<std::int64_t>& img;
	std::function<bool(const Partition&)> try_candidate;
	std::vector<std::uint32_t> block;
	std::uint32_t used = 0;

	bool compatible(State i, std::uint32_t b) const
	{
		auto known = [&](State s, std::uint32_t& out) {
			if(s < i)
				out = block[s];
			else if(s == i)
				out = b;
			else
				return false;
			return true;
		};
		for(State j = 0; j < i; j++) {
			if(block[j] != b)
				continue;
			if(img[i] != img[j])
				return false;
			for(Letter x = 0; x < fine.alphabet.size(); x++) {
				std::int64_t si = fine.at(i, x);
				std::int64_t sj = fine.at(j, x);
				if(si < 0 || sj < 0)
					continue;
				std::uint32_t bi, bj;
				if(known(static_cast<State>(si), bi) &&
				   known(static_cast<State>(sj), bj) && bi != bj)
					return false;
			}
		}
		return true;
	}

	bool run(State i)
	{
		if(i == fine.states) {
			Partition p;
			p.n = fine.states;
			p.block = block;
			p.blocks = used;
			return try_candidate(p);
		}
		for(std::uint32_t b = 0; b <= used; b++) {
			if(b < used && !compatible(i, b))
				continue;
			block[i] = b;
			std::uint32_t old = used;
			if(b == used)
				used++;
			if(run(i + 1))
				return true;
			used = old;
		}
		return false;
	}
};

} // namespace detail

// Definability by an unambiguous transducer whose underlying automaton lies
// in the variety: the domain must be a variety language, and some coarsening
// of the canonical left congruence of the totalized function, still finer
// than its right syntactic congruence, must put both bimachine sides into
// the variety. On yes the bottom outputs are stripped and the machine is
// emitted.
inline VarietyDecision decide_variety_unambiguous(const Nft& input, const VarietySpec& v)
{
	Nft t = trim(left_form(input));
	FunctionalityResult fr = check_functional(t);
	if(!fr.functional)
		throw PreconditionError("transducer is not functional",
		                        {{"witness", word_text(*fr.witness, t.in)}});

	VarietyDecision d;
	FiniteMonoid dm = syntactic_monoid(underlying(t));
	if(auto viol = variety_violation(dm, v)) {
		d.witness_monoid = "domain";
		d.witness_element = detail::violating_element(*viol);
		d.violation = std::move(viol);
		return d;
	}

	Nft fbar = complete_function(t);
	const Letter bottom = static_cast<Letter>(t.out.size());
	Congruence r0 = left_syntactic_congruence(fbar);
	TRFamily fam = build_T_family(fbar, r0);
	Congruence fine = canonical_left_congruence(fam);
	Congruence coarse = right_syntactic_congruence(fbar);
	std::vector<std::int64_t> img =
	    detail::refinement_map(fine.classes, coarse.classes, "left");

	if(fine.classes.states > 12)
		d.warnings.push_back("lattice search over " +
		                     std::to_string(fine.classes.states) +
		                     " classes enumerates all their partitions");

	detail::LatticeSearch search{fine.classes, img, nullptr,
	                             std::vector<std::uint32_t>(fine.classes.states, 0), 0};
	search.try_candidate = [&](const Partition& p) {
		Congruence cand;
		try {
			cand = quotient_congruence(fine, p);
		} catch(const PreconditionError&) {
			return false;
		}
		if(!in_variety(transition_monoid(cand.classes), v))
			return false;
		d.candidates++;
		CanonicalBimachine mcb =
		    canonical_bimachine(mirror(fbar), mirror_congruence(cand));
		Congruence rl = mirror_congruence(mcb.left_congruence);
		if(!in_variety(transition_monoid(rl.classes), v))
			return false;

		Bimachine bm = mirror_bimachine(mcb.machine);
		Bimachine stripped;
		stripped.left = bm.left;
		stripped.right = bm.right;
		stripped.out = t.out;
		auto clean = [&](const Word& w) {
			return std::find(w.begin(), w.end(), bottom) == w.end();
		};
		for(const auto& [key, w] : bm.omega)
			if(clean(w))
				stripped.omega.emplace(key, w);
		for(const auto& [r, w] : bm.lambda)
			if(clean(w))
				stripped.lambda.emplace(r, w);
		for(const auto& [l, w] : bm.rho)
			if(clean(w))
				stripped.rho.emplace(l, w);
		normalize(stripped);

		Bimachine full = complete_bimachine(stripped);
		d.nft = bimachine_to_nft(full);
		d.bimachine = std::move(full);
		d.left = cand;
		d.right = std::move(rl);
		d.yes = true;
		return true;
	};
	search.run(0);
	return d;
}

} // namespace rwf
