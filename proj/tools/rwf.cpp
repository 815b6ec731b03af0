#include <iostream>
#include <optional>
#include <string>
#include <variant>

#include "CLI11.hpp"
#include "rwf/decide.hpp"
#include "rwf/textio.hpp"

namespace {

template <class... Ts> struct overloaded : Ts... {
	using Ts::operator()...;
};
template <class... Ts> overloaded(Ts...) -> overloaded<Ts...>;

rwf::Nft transducer_input(const rwf::MachineFile& f)
{
	if(const auto* t = std::get_if<rwf::Nft>(&f.value))
		return *t;
	if(const auto* t = std::get_if<rwf::Dft>(&f.value))
		return rwf::nft_of(*t);
	throw rwf::InputError("expected a transducer file", {{"kind", f.kind}});
}

rwf::VarietySpec variety_argument(const std::string& name, const std::string& spec_path)
{
	if(!spec_path.empty()) {
		rwf::MachineFile f = rwf::parse_machine_file(spec_path);
		if(const auto* v = std::get_if<rwf::VarietySpec>(&f.value))
			return *v;
		throw rwf::InputError("expected a variety file", {{"kind", f.kind}});
	}
	auto v = rwf::builtin_variety(name);
	if(!v)
		throw rwf::InputError("unknown variety", {{"name", name}});
	return *v;
}

rwf::Word word_argument(const std::string& text, const rwf::Alphabet& ab)
{
	auto w = rwf::parse_word(text, ab);
	if(!w)
		throw rwf::InputError("word uses letters outside the input alphabet",
		                      {{"word", text}});
	return *w;
}

int accept_result(bool ok)
{
	std::cout << (ok ? "accept" : "reject") << "\n";
	return ok ? rwf::exit_ok : rwf::exit_no;
}

int output_result(const std::optional<rwf::Word>& r, const rwf::Alphabet& out,
                  const std::string& input)
{
	if(!r) {
		std::cerr << "undefined on this input\n"
		          << "input=" << input << "\n";
		return rwf::exit_no;
	}
	std::cout << rwf::word_text(*r, out) << "\n";
	return rwf::exit_ok;
}

int do_eval(const rwf::MachineFile& f, const std::string& wtext)
{
	return std::visit(
	    overloaded{
	        [&](const rwf::Nfa& a) -> int {
		        return accept_result(accepts(a, word_argument(wtext, a.alphabet)));
	        },
	        [&](const rwf::Dfa& d) -> int {
		        return accept_result(accepts(d, word_argument(wtext, d.alphabet)));
	        },
	        [&](const rwf::Nft& t) -> int {
		        return output_result(eval(t, word_argument(wtext, t.in)), t.out, wtext);
	        },
	        [&](const rwf::Dft& t) -> int {
		        return output_result(eval(t, word_argument(wtext, t.in)), t.out, wtext);
	        },
	        [&](const rwf::Bimachine& b) -> int {
		        return output_result(eval(b, word_argument(wtext, b.left.alphabet)), b.out,
		                             wtext);
	        },
	        [&](const rwf::Translation& t) -> int {
		        return output_result(eval(t, word_argument(wtext, t.in)), t.out, wtext);
	        },
	        [&](const rwf::VarietySpec&) -> int {
		        throw rwf::InputError("cannot evaluate a variety file");
	        },
	    },
	    f.value);
}

rwf::FiniteMonoid monoid_of(const rwf::MachineFile& f)
{
	return std::visit(
	    overloaded{
	        [](const rwf::Nfa& a) { return rwf::syntactic_monoid(a); },
	        [](const rwf::Dfa& d) { return rwf::syntactic_monoid(d); },
	        [](const rwf::Nft& t) { return rwf::transition_monoid(underlying(t)); },
	        [](const rwf::Dft& t) { return rwf::transition_monoid(underlying(t)); },
	        [](const auto&) -> rwf::FiniteMonoid {
		        throw rwf::InputError("expected an automaton or transducer file");
	        },
	    },
	    f.value);
}

int do_monoid(const rwf::MachineFile& f, bool table)
{
	rwf::FiniteMonoid m = monoid_of(f);
	std::cout << "size " << m.size << "\n";
	std::cout << "identity " << m.elem_name(m.identity) << "\n";
	for(rwf::Elem e = 0; e < m.size; e++)
		std::cout << "elem " << e << " " << m.elem_name(e) << "\n";
	if(table) {
		std::cout << "table\n";
		for(rwf::Elem a = 0; a < m.size; a++) {
			for(rwf::Elem b = 0; b < m.size; b++)
				std::cout << (b ? " " : "") << m.elem_name(m.mult(a, b));
			std::cout << "\n";
		}
	}
	return rwf::exit_ok;
}

int violation_result(const std::optional<rwf::VarietyViolation>& viol)
{
	if(!viol) {
		std::cout << "yes\n";
		return rwf::exit_ok;
	}
	std::cout << "no\n";
	std::cerr << "equation=" << viol->equation << "\n";
	for(const std::string& a : viol->assignment) {
		std::string s = a;
		auto p = s.find(" = ");
		if(p != std::string::npos)
			s = s.substr(0, p) + "=" + s.substr(p + 3);
		std::cerr << s << "\n";
	}
	return rwf::exit_no;
}

int do_check(const rwf::MachineFile& f, const rwf::VarietySpec& v)
{
	auto first_violation =
	    [&](std::initializer_list<rwf::FiniteMonoid> ms) -> std::optional<rwf::VarietyViolation> {
		for(const rwf::FiniteMonoid& m : ms)
			if(auto viol = rwf::variety_violation(m, v))
				return viol;
		return std::nullopt;
	};
	return std::visit(
	    overloaded{
	        [&](const rwf::Nfa& a) {
		        return violation_result(rwf::variety_violation(rwf::syntactic_monoid(a), v));
	        },
	        [&](const rwf::Dfa& d) {
		        return violation_result(rwf::variety_violation(rwf::syntactic_monoid(d), v));
	        },
	        [&](const rwf::Nft& t) {
		        return violation_result(
		            rwf::variety_violation(rwf::transition_monoid(underlying(t)), v));
	        },
	        [&](const rwf::Dft& t) {
		        return violation_result(
		            rwf::variety_violation(rwf::transition_monoid(underlying(t)), v));
	        },
	        [&](const rwf::Bimachine& b) {
		        return violation_result(first_violation({rwf::transition_monoid(b.left),
		                                                 rwf::transition_monoid(b.right)}));
	        },
	        [&](const rwf::Translation& t) {
		        for(const rwf::TranslationRule& r : t.rules) {
			        if(auto viol = first_violation({rwf::syntactic_monoid(r.left),
			                                        rwf::syntactic_monoid(r.right)}))
				        return violation_result(viol);
		        }
		        for(const auto& m : {t.initial, t.terminal})
			        for(const auto& [w, d] : m)
				        if(auto viol = rwf::variety_violation(rwf::syntactic_monoid(d), v))
					        return violation_result(viol);
		        return violation_result(std::nullopt);
	        },
	        [&](const rwf::VarietySpec&) -> int {
		        throw rwf::InputError("cannot check a variety file");
	        },
	    },
	    f.value);
}

int do_minimize(const rwf::MachineFile& f)
{
	return std::visit(
	    overloaded{
	        [&](const rwf::Dfa& d) -> int {
		        std::cout << print_dfa(minimize(d), f.name);
		        return rwf::exit_ok;
	        },
	        [&](const rwf::Dft& t) -> int {
		        std::cout << print_dft(minimize(t), f.name);
		        return rwf::exit_ok;
	        },
	        [&](const auto&) -> int {
		        throw rwf::InputError("minimize expects a deterministic machine");
	        },
	    },
	    f.value);
}

int do_determinize(const rwf::MachineFile& f)
{
	return std::visit(
	    overloaded{
	        [&](const rwf::Nfa& a) -> int {
		        std::cout << print_dfa(determinize(a), f.name);
		        return rwf::exit_ok;
	        },
	        [&](const rwf::Dfa& d) -> int {
		        std::cout << print_dfa(d, f.name);
		        return rwf::exit_ok;
	        },
	        [&](const rwf::Nft& t) -> int {
		        std::cout << print_dft(determinize(t), f.name);
		        return rwf::exit_ok;
	        },
	        [&](const rwf::Dft& t) -> int {
		        std::cout << print_dft(t, f.name);
		        return rwf::exit_ok;
	        },
	        [&](const auto&) -> int {
		        throw rwf::InputError("expected an automaton or transducer file");
	        },
	    },
	    f.value);
}

int do_canonical(const rwf::MachineFile& f, const std::string& rfile)
{
	rwf::Nft t = transducer_input(f);
	std::optional<rwf::Congruence> right;
	if(!rfile.empty()) {
		rwf::MachineFile rf = rwf::parse_machine_file(rfile);
		const auto* d = std::get_if<rwf::Dfa>(&rf.value);
		if(!d)
			throw rwf::InputError("expected a deterministic automaton file",
			                      {{"kind", rf.kind}});
		right = rwf::automaton_congruence(*d);
	} else {
		std::vector<rwf::DistanceVerdict> trace;
		right = rwf::left_syntactic_congruence(t, &trace);
		for(const rwf::DistanceVerdict& dv : trace)
			std::cerr << "pair \"" << rwf::word_text(dv.u, t.in) << "\" \""
			          << rwf::word_text(dv.v, t.in) << "\" "
			          << (dv.bounded ? "bounded" : "unbounded") << "\n";
	}
	rwf::CanonicalBimachine cb = rwf::canonical_bimachine(t, right);
	std::cerr << "left_classes=" << cb.left_congruence.classes.states << "\n"
	          << "right_classes=" << cb.right_congruence.classes.states << "\n";
	std::cout << print_bimachine(cb.machine, f.name);
	return rwf::exit_ok;
}

int do_decide_fo(const rwf::MachineFile& f)
{
	rwf::FoDecision d = rwf::decide_fo(transducer_input(f));
	if(d.yes) {
		std::cout << "yes\n\n"
		          << print_bimachine(*d.bimachine, f.name) << "\n"
		          << print_nft(*d.nft, f.name) << "\n"
		          << print_translation(*d.translation, f.name);
		return rwf::exit_ok;
	}
	std::cout << "no\n";
	std::cerr << "witness_monoid=" << d.witness_monoid << "\n"
	          << "witness_element=" << d.witness_element << "\n";
	if(d.violation)
		std::cerr << "equation=" << d.violation->equation << "\n";
	return rwf::exit_no;
}

int do_decide(const rwf::MachineFile& f, const rwf::VarietySpec& v)
{
	rwf::VarietyDecision d = rwf::decide_variety_unambiguous(transducer_input(f), v);
	for(const std::string& w : d.warnings)
		std::cerr << "warning: " << w << "\n";
	std::cerr << "candidates=" << d.candidates << "\n";
	if(d.yes) {
		std::cout << "yes\n\n"
		          << print_bimachine(*d.bimachine, f.name) << "\n"
		          << print_nft(*d.nft, f.name);
		return rwf::exit_ok;
	}
	std::cout << "no\n";
	if(!d.witness_monoid.empty())
		std::cerr << "witness_monoid=" << d.witness_monoid << "\n"
		          << "witness_element=" << d.witness_element << "\n";
	if(d.violation)
		std::cerr << "equation=" << d.violation->equation << "\n";
	return rwf::exit_no;
}

int do_translate(const rwf::MachineFile& f, const rwf::VarietySpec& v)
{
	const auto* b = std::get_if<rwf::Bimachine>(&f.value);
	if(!b)
		throw rwf::InputError("expected a bimachine file", {{"kind", f.kind}});
	if(!rwf::is_v_bimachine(*b, v))
		throw rwf::PreconditionError("bimachine transition monoids are outside the variety",
		                             {{"variety", v.name}});
	rwf::Translation tr = rwf::bimachine_to_translation(*b);
	tr.variety = v.name;
	std::cout << print_translation(tr, f.name);
	return rwf::exit_ok;
}

int do_untranslate(const rwf::MachineFile& f)
{
	const auto* t = std::get_if<rwf::Translation>(&f.value);
	if(!t)
		throw rwf::InputError("expected a translation file", {{"kind", f.kind}});
	std::cout << print_bimachine(rwf::translation_to_bimachine(*t), f.name);
	return rwf::exit_ok;
}

} // namespace

int main(int argc, char** argv)
{
	CLI::App app{"toolkit for rational word functions"};
	app.require_subcommand(1);

	std::string file, word, vname, vspec, rfile;
	bool table = false, unambiguous = false;

	CLI::App* c_eval = app.add_subcommand("eval", "run a machine on a word");
	c_eval->add_option("file", file)->required();
	c_eval->add_option("word", word)->required();

	CLI::App* c_monoid = app.add_subcommand("monoid", "print the monoid of a machine");
	c_monoid->add_option("file", file)->required();
	c_monoid->add_flag("--table", table);

	CLI::App* c_check = app.add_subcommand("check", "test variety membership");
	c_check->add_option("file", file)->required();
	c_check->add_option("--variety", vname);
	c_check->add_option("--spec", vspec);

	CLI::App* c_minimize = app.add_subcommand("minimize", "minimize a deterministic machine");
	c_minimize->add_option("file", file)->required();

	CLI::App* c_determinize = app.add_subcommand("determinize", "determinize a machine");
	c_determinize->add_option("file", file)->required();

	CLI::App* c_tobim = app.add_subcommand("to-bimachine", "bimachine of an unambiguous transducer");
	c_tobim->add_option("file", file)->required();

	CLI::App* c_frombim = app.add_subcommand("from-bimachine", "unambiguous transducer of a bimachine");
	c_frombim->add_option("file", file)->required();

	CLI::App* c_canonical = app.add_subcommand("canonical", "canonical bimachine of a function");
	c_canonical->add_option("file", file)->required();
	c_canonical->add_option("--right", rfile);

	CLI::App* c_fo = app.add_subcommand("decide-fo", "decide first order definability");
	c_fo->add_option("file", file)->required();

	CLI::App* c_decide = app.add_subcommand("decide", "decide variety definability");
	c_decide->add_option("file", file)->required();
	c_decide->add_option("--variety", vname);
	c_decide->add_option("--spec", vspec);
	c_decide->add_flag("--unambiguous", unambiguous);

	CLI::App* c_translate = app.add_subcommand("translate", "translation of a complete bimachine");
	c_translate->add_option("file", file)->required();
	c_translate->add_option("--variety", vname);

	CLI::App* c_untranslate = app.add_subcommand("untranslate", "bimachine of a translation");
	c_untranslate->add_option("file", file)->required();

	try {
		app.parse(argc, argv);
	} catch(const CLI::ParseError& e) {
		int rc = app.exit(e);
		return rc == 0 ? rwf::exit_ok : rwf::exit_input;
	}

	try {
		if(*c_eval)
			return do_eval(rwf::parse_machine_file(file), word);
		if(*c_monoid)
			return do_monoid(rwf::parse_machine_file(file), table);
		if(*c_check) {
			if(vname.empty() && vspec.empty())
				throw rwf::InputError("check needs --variety or --spec");
			return do_check(rwf::parse_machine_file(file), variety_argument(vname, vspec));
		}
		if(*c_minimize)
			return do_minimize(rwf::parse_machine_file(file));
		if(*c_determinize)
			return do_determinize(rwf::parse_machine_file(file));
		if(*c_tobim) {
			rwf::MachineFile f = rwf::parse_machine_file(file);
			std::cout << print_bimachine(rwf::nft_to_bimachine(transducer_input(f)), f.name);
			return rwf::exit_ok;
		}
		if(*c_frombim) {
			rwf::MachineFile f = rwf::parse_machine_file(file);
			const auto* b = std::get_if<rwf::Bimachine>(&f.value);
			if(!b)
				throw rwf::InputError("expected a bimachine file", {{"kind", f.kind}});
			std::cout << print_nft(rwf::bimachine_to_nft(*b), f.name);
			return rwf::exit_ok;
		}
		if(*c_canonical)
			return do_canonical(rwf::parse_machine_file(file), rfile);
		if(*c_fo)
			return do_decide_fo(rwf::parse_machine_file(file));
		if(*c_decide) {
			if(!unambiguous)
				throw rwf::InputError("decide needs --unambiguous");
			if(vname.empty() && vspec.empty())
				throw rwf::InputError("decide needs --variety or --spec");
			return do_decide(rwf::parse_machine_file(file), variety_argument(vname, vspec));
		}
		if(*c_translate)
			return do_translate(rwf::parse_machine_file(file),
			                    variety_argument(vname.empty() ? "all" : vname, vspec));
		if(*c_untranslate)
			return do_untranslate(rwf::parse_machine_file(file));
	} catch(const rwf::Error& e) {
		std::cerr << "error: " << e.what() << "\n";
		for(const auto& [k, val] : e.details())
			std::cerr << k << "=" << val << "\n";
		return e.code();
	} catch(const std::exception& e) {
		std::cerr << "internal error: " << e.what() << "\n";
		return 70;
	}
	return rwf::exit_input;
}
