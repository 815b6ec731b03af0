#include <rwf/decide.hpp>
#include <rwf/textio.hpp>

#include "generators.hpp"
#include "helpers.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

using namespace rwf;
using namespace rwf::test;

namespace {

int failures = 0;

double run_criterion(const std::string& name, double budget,
                     const std::function<bool(std::string&)>& body)
{
	auto t0 = std::chrono::steady_clock::now();
	std::string why;
	bool ok = false;
	try {
		ok = body(why);
	} catch(const std::exception& e) {
		ok = false;
		why = std::string("exception: ") + e.what();
	}
	double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
	if(ok && budget > 0 && s >= budget) {
		ok = false;
		why = "exceeded the time budget";
	}
	std::printf("%s %s (%.2fs)\n", ok ? "PASS" : "FAIL", name.c_str(), s);
	if(!ok) {
		failures++;
		if(!why.empty())
			std::printf("     %s\n", why.c_str());
	}
	return s;
}

#define NEED(cond)                                                                                 \
	do {                                                                                       \
		if(!(cond)) {                                                                      \
			why = "failed: " #cond;                                                    \
			return false;                                                              \
		}                                                                                  \
	} while(0)

#define NEED_AT(idx, cond)                                                                         \
	do {                                                                                       \
		if(!(cond)) {                                                                      \
			why = "case " + std::to_string(idx) + " failed: " #cond;                   \
			return false;                                                              \
		}                                                                                  \
	} while(0)

std::size_t distance_after_lcp(const Word& a, const Word& b)
{
	std::size_t k = 0;
	while(k < a.size() && k < b.size() && a[k] == b[k])
		k++;
	return (a.size() - k) + (b.size() - k);
}

std::size_t distance_after_lcs(const Word& a, const Word& b)
{
	std::size_t k = 0;
	while(k < a.size() && k < b.size() && a[a.size() - 1 - k] == b[b.size() - 1 - k])
		k++;
	return (a.size() - k) + (b.size() - k);
}

// Bounded-distance verdict from plain context enumeration: words must stay in
// the domain together, and the running maximum distance must already be
// reached two letters before the horizon.
bool brute_same_class(const std::vector<std::optional<Word>>& a,
                      const std::vector<std::optional<Word>>& b, const std::vector<Word>& ctx,
                      std::size_t horizon, bool from_front)
{
	std::size_t max_full = 0, max_window = 0;
	for(std::size_t k = 0; k < ctx.size(); k++) {
		if(a[k].has_value() != b[k].has_value())
			return false;
		if(!a[k])
			continue;
		std::size_t d =
		    from_front ? distance_after_lcp(*a[k], *b[k]) : distance_after_lcs(*a[k], *b[k]);
		max_full = std::max(max_full, d);
		if(ctx[k].size() + 2 <= horizon)
			max_window = std::max(max_window, d);
	}
	return max_full == max_window;
}

bool oracle_fixture(const std::string& file, std::string& why)
{
	Nft t = load<Nft>(file);
	std::size_t a = t.in.size();
	std::size_t ulen = a <= 1 ? 4 : a <= 2 ? 3 : a <= 3 ? 2 : 1;
	std::size_t suffix_horizon = a <= 2 ? 8 : a <= 3 ? 6 : 3;
	std::size_t prefix_horizon = a <= 3 ? 5 : 3;
	auto words = words_upto(a, ulen);
	auto sctx = words_upto(a, suffix_horizon);
	auto pctx = words_upto(a, prefix_horizon);

	Congruence r0 = left_syntactic_congruence(t);
	std::vector<std::vector<std::optional<Word>>> sval(words.size());
	for(std::size_t i = 0; i < words.size(); i++) {
		sval[i].resize(sctx.size());
		for(std::size_t k = 0; k < sctx.size(); k++)
			sval[i][k] = eval(t, cat(sctx[k], words[i]));
	}
	for(std::size_t i = 0; i < words.size(); i++)
		for(std::size_t j = i + 1; j < words.size(); j++) {
			bool impl = r0.class_of(words[i]) == r0.class_of(words[j]);
			bool brute = brute_same_class(sval[i], sval[j], sctx, suffix_horizon, true);
			if(impl != brute) {
				why = "suffix classes disagree with the context oracle on '" +
				      word_text(words[i], t.in) + "' and '" +
				      word_text(words[j], t.in) + "'";
				return false;
			}
		}

	Congruence rs = right_syntactic_congruence(t);
	std::vector<std::vector<std::optional<Word>>> pval(words.size());
	for(std::size_t i = 0; i < words.size(); i++) {
		pval[i].resize(pctx.size());
		for(std::size_t k = 0; k < pctx.size(); k++)
			pval[i][k] = eval(t, cat(words[i], pctx[k]));
	}
	std::vector<char> brute_prefix(words.size() * words.size(), 0);
	for(std::size_t i = 0; i < words.size(); i++)
		for(std::size_t j = i + 1; j < words.size(); j++) {
			bool impl = rs.class_of(words[i]) == rs.class_of(words[j]);
			bool brute = brute_same_class(pval[i], pval[j], pctx, prefix_horizon, false);
			brute_prefix[i * words.size() + j] = brute ? 1 : 0;
			if(impl != brute) {
				why = "prefix classes disagree with the context oracle on '" +
				      word_text(words[i], t.in) + "' and '" +
				      word_text(words[j], t.in) + "'";
				return false;
			}
		}

	Congruence cl = canonical_bimachine(t).left_congruence;
	for(std::size_t i = 0; i < words.size(); i++)
		for(std::size_t j = i + 1; j < words.size(); j++)
			if(cl.class_of(words[i]) == cl.class_of(words[j]) &&
			   !brute_prefix[i * words.size() + j]) {
				why = "canonical left classes merge '" + word_text(words[i], t.in) +
				      "' and '" + word_text(words[j], t.in) +
				      "' against the context oracle";
				return false;
			}
	return true;
}

void worked_examples()
{
	run_criterion("marker function values", 1.0, [](std::string& why) {
		Nft t = load<Nft>("f_ends.nft");
		NEED(eval(t, W(t.in, "abaa")) == W(t.out, "aaaa"));
		NEED(eval(t, W(t.in, "baaab")) == Word{});
		NEED(eval(t, W(t.in, "abab")) == Word{});
		NEED(eval(t, W(t.in, "a")) == W(t.out, "a"));
		NEED(eval(t, Word{}) == Word{});
		return true;
	});

	run_criterion("marker bimachine values", 1.0, [](std::string& why) {
		Bimachine b = load<Bimachine>("xmp.bim");
		Nft t = load<Nft>("f_ends.nft");
		NEED(eval(b, W(b.left.alphabet, "abaa")) == W(b.out, "aaaa"));
		for(const Word& u : words_upto(2, 4))
			NEED(eval(b, u) == eval(t, u));
		return true;
	});

	run_criterion("syntactic monoid multiplication table", 1.0, [](std::string& why) {
		FiniteMonoid m = syntactic_monoid(load<Nfa>("l_ends.nfa"));
		NEED(m.size == 5);
		NEED(m.identity == 0);
		const char* elems[5] = {"1", "a", "b", "ab", "ba"};
		for(Elem i = 0; i < 5; i++)
			NEED(m.elem_name(i) == elems[i]);
		const char* table[5][5] = {{"1", "a", "b", "ab", "ba"},
		                           {"a", "a", "ab", "ab", "a"},
		                           {"b", "ba", "b", "b", "ba"},
		                           {"ab", "a", "ab", "ab", "a"},
		                           {"ba", "ba", "b", "b", "ba"}};
		for(Elem i = 0; i < 5; i++)
			for(Elem j = 0; j < 5; j++)
				NEED(m.elem_name(m.mult(i, j)) == table[i][j]);
		return true;
	});

	run_criterion("sequential transducer minimization", 1.0, [](std::string& why) {
		Dft g = load<Dft>("g.dft");
		Dft m = minimize(g);
		Letter a = *m.in.find("a"), b = *m.in.find("b");
		NEED(m.states == 3);
		NEED(m.initial == 0);
		NEED(m.initial_out == W(m.out, "a"));
		NEED(m.target(0, a) == 1 && m.output(0, a).empty());
		NEED(m.target(0, b) == -1);
		NEED(m.target(1, a) == 1 && m.output(1, a) == W(m.out, "a"));
		NEED(m.target(1, b) == 2 && m.output(1, b) == W(m.out, "aa"));
		NEED(m.target(2, a) == 1 && m.output(2, a).empty());
		NEED(m.target(2, b) == 2 && m.output(2, b) == W(m.out, "a"));
		NEED(!m.terminal[0] && m.terminal[1] == Word{} && !m.terminal[2]);
		Dft viag2 = minimize(determinize(load<Nft>("g2.nft")));
		NEED(same_sequential_fields(viag2, m));
		return true;
	});

	run_criterion("transducer determinization", 1.0, [](std::string& why) {
		Dft d = determinize(load<Nft>("g2.nft"));
		Letter a = *d.in.find("a"), b = *d.in.find("b");
		NEED(d.states == 3);
		NEED(d.initial == 0);
		NEED(d.initial_out == Word{});
		NEED(d.state_name(0) == "{(q0,ε)}");
		NEED(d.state_name(1) == "{(q1,a),(q2,ε)}");
		NEED(d.state_name(2) == "{(q1,ε)}");
		NEED(d.target(0, a) == 1 && d.output(0, a) == W(d.out, "a"));
		NEED(d.target(0, b) == -1);
		NEED(d.target(1, a) == 1 && d.output(1, a) == W(d.out, "a"));
		NEED(d.target(1, b) == 2 && d.output(1, b) == W(d.out, "aa"));
		NEED(d.target(2, a) == 1 && d.output(2, a).empty());
		NEED(d.target(2, b) == 2 && d.output(2, b) == W(d.out, "a"));
		NEED(!d.terminal[0] && d.terminal[1] == Word{} && !d.terminal[2]);
		return true;
	});

	run_criterion("suffix classes of the marker function", 1.0, [](std::string& why) {
		Nft t = load<Nft>("f_ends.nft");
		Congruence r0 = left_syntactic_congruence(t);
		NEED(r0.classes.states == 3);
		auto c = [&](const char* s) { return r0.class_of(W(t.in, s)); };
		NEED(c("") != c("a") && c("") != c("b") && c("a") != c("b"));
		NEED(c("aa") == c("a") && c("ba") == c("a") && c("aba") == c("a"));
		NEED(c("ab") == c("b") && c("bb") == c("b") && c("aab") == c("b"));
		return true;
	});

	run_criterion("completion family of the marker function", 1.0, [](std::string& why) {
		Nft t = load<Nft>("f_ends.nft");
		Congruence r0 = left_syntactic_congruence(t);
		TRFamily fam = build_T_family(t, r0);
		NEED(fam.subsets.size() == 9);
		NEED(fam.trans.size() == 18);
		const Dfa& r = r0.classes;
		NEED(r.states == 3);
		std::size_t marked_terms = 0;
		for(const Word& w : fam.term) {
			if(w == W(fam.t.out, "a"))
				marked_terms++;
			else
				NEED(w.empty());
		}
		NEED(marked_terms == 1);
		for(std::size_t i = 0; i < fam.subsets.size(); i++) {
			NEED(fam.final_out[i].has_value() == (fam.cls[i] == fam.eps_class));
			if(fam.final_out[i])
				NEED(fam.final_out[i]->empty());
		}
		for(State s = 0; s < r.states; s++) {
			NEED(fam.start[s] >= 0);
			NEED(fam.init_out[s].empty());
		}
		std::vector<std::pair<std::size_t, std::size_t>> threads;
		for(State s = 0; s < r.states; s++) {
			std::set<State> seen{static_cast<State>(fam.start[s])};
			std::vector<State> stack{static_cast<State>(fam.start[s])};
			while(!stack.empty()) {
				State q = stack.back();
				stack.pop_back();
				for(const NftTransition& tr : fam.trans)
					if(tr.from == q && seen.insert(tr.to).second)
						stack.push_back(tr.to);
			}
			std::size_t edges = 0;
			for(const NftTransition& tr : fam.trans)
				if(seen.count(tr.from))
					edges++;
			threads.push_back({seen.size(), edges});
			if(s == fam.eps_class)
				NEED(seen.size() == 1 && edges == 0);
			else
				NEED(seen.size() == 5 && edges == 9);
		}
		State ra = r0.class_of(W(t.in, "a"));
		State rb = r0.class_of(W(t.in, "b"));
		State re = r0.class_of(Word{});
		NEED(fhat(fam, ra, W(t.in, "ab")) == W(fam.t.out, "aaa"));
		NEED(fhat(fam, ra, W(t.in, "a")) == W(fam.t.out, "aa"));
		NEED(fhat(fam, re, W(t.in, "ab")) == Word{});
		NEED(fhat(fam, re, W(t.in, "aa")) == W(fam.t.out, "aa"));
		NEED(fhat(fam, rb, W(t.in, "a")) == Word{});
		return true;
	});
}

void decision_verdicts()
{
	run_criterion("first order definability of the marker function", 5.0, [](std::string& why) {
		Nft t = load<Nft>("f_ends.nft");
		FoDecision d = decide_fo(t);
		NEED(d.yes);
		NEED(d.witness_monoid.empty());
		NEED(d.bimachine.has_value() && is_complete(*d.bimachine));
		NEED(d.nft.has_value());
		NEED(is_unambiguous_nft(*d.nft));
		NEED(is_aperiodic(transition_monoid(underlying(*d.nft))));
		NEED(d.translation.has_value() && d.translation->variety == "aperiodic");
		for(const Word& u : words_upto(2, 4))
			NEED(eval(*d.nft, u) == eval(t, u));
		return true;
	});

	run_criterion("first order rejection of the parity function", 5.0, [](std::string& why) {
		FoDecision d = decide_fo(load<Nft>("f_even.nft"));
		NEED(!d.yes);
		NEED(d.witness_monoid == "left");
		NEED(d.violation.has_value());
		NEED(d.violation->equation == "x^w = x^w x");
		NEED(!d.nft.has_value());
		return true;
	});

	run_criterion("first order definability of the identity function", 5.0,
	              [](std::string& why) {
		              Nft t = nft_of(load<Dft>("id.dft"));
		              FoDecision d = decide_fo(t);
		              NEED(d.yes);
		              NEED(d.nft.has_value());
		              for(const Word& u : words_upto(t.in.size(), 3))
			              NEED(eval(*d.nft, u) == eval(t, u));
		              return true;
	              });
}

void counter_examples()
{
	run_criterion("determinization can leave an idempotent variety", 1.0, [](std::string& why) {
		Nft t = load<Nft>("det1.nft");
		VarietySpec idem = *builtin_variety("I");
		NEED(in_variety(transition_monoid(underlying(t)), idem));
		Dft d = determinize(t);
		FiniteMonoid m = transition_monoid(underlying(d));
		auto v = variety_violation(m, idem);
		NEED(v.has_value());
		NEED(v->equation == "x = xx");
		return true;
	});

	run_criterion("determinization can leave a commutative variety", 1.0, [](std::string& why) {
		Nft t = load<Nft>("det2.nft");
		VarietySpec com = *builtin_variety("Com");
		Dft d = determinize(t);
		FiniteMonoid m = transition_monoid(underlying(d));
		auto v = variety_violation(m, com);
		NEED(v.has_value());
		NEED(v->equation == "xy = yx");
		return true;
	});

	run_criterion("commutative bimachine with a noncommutative domain", 1.0,
	              [](std::string& why) {
		              Bimachine b = load<Bimachine>("vbim.bim");
		              VarietySpec com = *builtin_variety("Com");
		              NEED(is_v_bimachine(b, com));
		              Nfa dom = bimachine_domain(b);
		              Word ab = W(b.left.alphabet, "ab");
		              for(const Word& u : words_upto(2, 3))
			              NEED(accepts(dom, u) == (u == ab));
		              FiniteMonoid m = syntactic_monoid(dom);
		              auto v = variety_violation(m, com);
		              NEED(v.has_value());
		              NEED(v->equation == "xy = yx");
		              return true;
	              });
}

double property_suites()
{
	double total = 0;

	total += run_criterion(
	    "determinization preserves the function and aperiodicity", 0, [](std::string& why) {
		    std::mt19937 rng(1001);
		    std::size_t aperiodic_cases = 0;
		    for(int n = 0; n < 200; n++) {
			    Nft t = nft_of(random_dft(rng));
			    Dft d = determinize(t);
			    NEED_AT(n, same_function(d, t, t.in.size(), oracle_len(t.in.size())));
			    if(is_aperiodic(transition_monoid(underlying(t)))) {
				    aperiodic_cases++;
				    NEED_AT(n, is_aperiodic(
				                   transition_monoid(underlying(nft_of(d)))));
			    }
		    }
		    NEED(aperiodic_cases >= 1);
		    return true;
	    });

	total += run_criterion(
	    "sequential minimization is sound, stable, and coarsest", 0, [](std::string& why) {
		    std::mt19937 rng(1002);
		    for(int n = 0; n < 200; n++) {
			    Dft t = random_dft(rng);
			    Dft m = minimize(t);
			    NEED_AT(n, m.states <= std::max<State>(t.states, 1));
			    NEED_AT(n, same_function(m, t, t.in.size(), 6));
			    NEED_AT(n, same_sequential_fields(minimize(m), m));
			    for(State p = 0; p < m.states; p++)
				    for(State q = static_cast<State>(p + 1); q < m.states; q++) {
					    bool split = false;
					    for(const Word& w : words_upto(m.in.size(), 6))
						    if(state_function(m, p, w) !=
						       state_function(m, q, w)) {
							    split = true;
							    break;
						    }
					    NEED_AT(n, split);
				    }
		    }
		    return true;
	    });

	total += run_criterion("acceptor minimization preserves the language", 0,
	                       [](std::string& why) {
		                       std::mt19937 rng(1003);
		                       for(int n = 0; n < 200; n++) {
			                       Dfa d = random_dfa(rng);
			                       Dfa m = minimize(d);
			                       NEED_AT(n, m.states <= std::max<State>(d.states, 1));
			                       NEED_AT(n, same_language_upto(
			                                      m, d, d.alphabet.size(),
			                                      oracle_len(d.alphabet.size())));
			                       NEED_AT(n, minimize(m).states == m.states);
		                       }
		                       return true;
	                       });

	total += run_criterion(
	    "bimachine and transducer conversions preserve the function", 0, [](std::string& why) {
		    std::mt19937 rng(1004);
		    for(int n = 0; n < 200; n++) {
			    Bimachine b = random_complete_bimachine(rng);
			    Nft t = bimachine_to_nft(b);
			    NEED_AT(n, is_unambiguous_nft(t));
			    NEED_AT(n, same_function(t, b, b.left.alphabet.size(), 5));
			    Bimachine b2 = nft_to_bimachine(t);
			    NEED_AT(n, same_function(b2, b, b.left.alphabet.size(), 5));
		    }
		    return true;
	    });

	total += run_criterion(
	    "translation round trips preserve the function", 0, [](std::string& why) {
		    std::mt19937 rng(1005);
		    for(int n = 0; n < 200; n++) {
			    Bimachine b = random_complete_bimachine(rng, 2, 2, 2);
			    Translation tr = bimachine_to_translation(b);
			    NEED_AT(n, is_exhaustive(tr));
			    NEED_AT(n, same_function(tr, b, b.left.alphabet.size(), 4));
			    Bimachine b2 = translation_to_bimachine(tr);
			    NEED_AT(n, same_function(b2, b, b.left.alphabet.size(), 4));
		    }
		    return true;
	    });

	total += run_criterion("completion meets extend along letters", 0, [](std::string& why) {
		std::mt19937 rng(1006);
		for(int n = 0; n < 200; n++) {
			Nft t = bimachine_to_nft(random_complete_bimachine(rng, 2, 2, 2));
			Congruence r0 = left_syntactic_congruence(t);
			TRFamily fam = build_T_family(t, r0);
			const Dfa& r = r0.classes;
			for(const Word& u : words_upto(t.in.size(), 2))
				for(Letter x = 0; x < t.in.size(); x++)
					for(State s = 0; s < r.states; s++) {
						Word ux = u;
						ux.push_back(x);
						auto longer = fhat(fam, s, ux);
						if(!longer)
							continue;
						auto shorter = fhat(fam, *r.step(s, x), u);
						NEED_AT(n, shorter.has_value());
						NEED_AT(n, is_prefix(*shorter, *longer));
					}
		}
		return true;
	});

	total += run_criterion(
	    "suffix distance classes are coarser than transition equivalence", 0,
	    [](std::string& why) {
		    std::mt19937 rng(1007);
		    for(int n = 0; n < 200; n++) {
			    Nft t = bimachine_to_nft(random_complete_bimachine(rng, 2, 2, 2));
			    Congruence r0 = left_syntactic_congruence(t);
			    auto words = words_upto(t.in.size(), 3);
			    for(std::size_t i = 0; i < words.size(); i++)
				    for(std::size_t j = i + 1; j < words.size(); j++) {
					    if(word_relation(t, words[i]) !=
					       word_relation(t, words[j]))
						    continue;
					    NEED_AT(n, r0.class_of(words[i]) ==
					                   r0.class_of(words[j]));
				    }
		    }
		    return true;
	    });

	total += run_criterion("congruence quotients stay inside varieties", 0,
	                       [](std::string& why) {
		                       std::mt19937 rng(1008);
		                       VarietySpec vs[] = {*builtin_variety("aperiodic"),
		                                           *builtin_variety("Com"),
		                                           *builtin_variety("I")};
		                       std::size_t merged_cases = 0;
		                       for(int n = 0; n < 200; n++) {
			                       Nft t = bimachine_to_nft(
			                           random_complete_bimachine(rng, 2, 2, 2));
			                       TRFamily fam =
			                           build_T_family(t, left_syntactic_congruence(t));
			                       Congruence fine = canonical_left_congruence(fam);
			                       std::uniform_int_distribution<State> pick(
			                           0, fine.classes.states - 1);
			                       for(int attempt = 0; attempt < 6; attempt++) {
				                       Partition part;
				                       part.n = fine.classes.states;
				                       part.block.resize(part.n);
				                       State blocks = attempt == 0 ? part.n
				                                                   : pick(rng) + 1;
				                       for(State i = 0; i < part.n; i++)
					                       part.block[i] = attempt == 0
					                                           ? i
					                                           : pick(rng) % blocks;
				                       part.canonicalize();
				                       std::optional<Congruence> cand;
				                       try {
					                       cand = quotient_congruence(fine, part);
				                       } catch(const PreconditionError&) {
					                       continue;
				                       }
				                       if(attempt > 0 &&
				                          cand->classes.states < fine.classes.states)
					                       merged_cases++;
				                       FiniteMonoid mf =
				                           transition_monoid(fine.classes);
				                       FiniteMonoid mc =
				                           transition_monoid(cand->classes);
				                       for(const VarietySpec& v : vs)
					                       if(in_variety(mf, v))
						                       NEED_AT(n, in_variety(mc, v));
			                       }
		                       }
		                       NEED(merged_cases >= 1);
		                       return true;
	                       });

	total += run_criterion(
	    "canonical bimachines compute their function", 0, [](std::string& why) {
		    std::mt19937 rng(1009);
		    for(int n = 0; n < 200; n++) {
			    Nft t = n % 3 == 0
			                ? nft_of(random_dft(rng))
			                : bimachine_to_nft(random_complete_bimachine(rng, 2, 2, 2));
			    CanonicalBimachine cb = canonical_bimachine(t);
			    NEED_AT(n, same_function(cb.machine, t, t.in.size(), 5));
		    }
		    return true;
	    });

	total += run_criterion("disambiguation preserves functional behavior", 0,
	                       [](std::string& why) {
		                       std::mt19937 rng(1010);
		                       for(int n = 0; n < 200; n++) {
			                       Nft base = nft_of(random_dft(rng));
			                       Nft doubled = disjoint_self_union(base);
			                       Nft fixed = disambiguate(doubled);
			                       NEED_AT(n, is_unambiguous_nft(fixed));
			                       NEED_AT(n, same_function(fixed, base, base.in.size(),
			                                                6));
		                       }
		                       return true;
	                       });

	total += run_criterion("function completion marks the complement", 0, [](std::string& why) {
		std::mt19937 rng(1011);
		for(int n = 0; n < 200; n++) {
			Nft t = nft_of(random_dft(rng));
			Nft fbar = complete_function(t);
			NEED_AT(n, fbar.out.size() == t.out.size() + 1);
			Letter bottom = static_cast<Letter>(t.out.size());
			for(const Word& u : words_upto(t.in.size(), 5)) {
				auto orig = eval(t, u);
				auto full = eval(fbar, u);
				NEED_AT(n, full.has_value());
				if(orig)
					NEED_AT(n, *full == *orig);
				else
					NEED_AT(n, *full == Word{bottom});
			}
		}
		return true;
	});

	return total;
}

void oracle_cross_validation()
{
	const char* fixtures[] = {"f_ends.nft", "g2.nft",   "f_even.nft",
	                          "det1.nft",   "det2.nft", "det4.nft"};
	for(const char* f : fixtures)
		run_criterion(std::string("context oracle agreement for ") + f, 0,
		              [&](std::string& why) { return oracle_fixture(f, why); });
}

} // namespace

int main()
{
	worked_examples();
	decision_verdicts();
	counter_examples();
	double prop_total = property_suites();
	run_criterion("randomized suites finish within one minute", 0,
	              [&](std::string& why) {
		              if(prop_total < 60.0)
			              return true;
		              why = "suites took " + std::to_string(prop_total) + "s";
		              return false;
	              });
	oracle_cross_validation();
	return failures == 0 ? 0 : 1;
}
