#pragma once

#include <cstdint>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <tuple>
#include <utility>
#include <variant>
#include <vector>

#include "rwf/bimachine.hpp"
#include "rwf/translation.hpp"

namespace rwf {

struct MachineFile {
	std::string kind;
	std::string name;
	std::variant<Nfa, Dfa, Nft, Dft, Bimachine, Translation, VarietySpec> value;
};

namespace detail {

struct Token {
	std::string text;
	bool quoted = false;
};

struct Row {
	std::size_t line = 0;
	std::vector<Token> tok;
	std::string raw;
};

// One row per non-empty line, comments stripped, quoted strings kept as
// single tokens (quotes may be empty).
inline std::vector<Row> split_rows(const std::string& text)
{
	std::vector<Row> rows;
	std::size_t line = 0;
	std::istringstream in(text);
	std::string s;
	while(std::getline(in, s)) {
		line++;
		if(!s.empty() && s.back() == '\r')
			s.pop_back();
		Row row;
		row.line = line;
		std::size_t i = 0;
		while(i < s.size()) {
			char c = s[i];
			if(c == ' ' || c == '\t') {
				i++;
				continue;
			}
			if(c == '#')
				break;
			if(c == '"') {
				std::size_t j = s.find('"', i + 1);
				if(j == std::string::npos)
					throw ParseError(line, "unterminated quote");
				row.tok.push_back({s.substr(i + 1, j - i - 1), true});
				i = j + 1;
				continue;
			}
			std::size_t j = i;
			while(j < s.size() && s[j] != ' ' && s[j] != '\t' && s[j] != '"' && s[j] != '#')
				j++;
			row.tok.push_back({s.substr(i, j - i), false});
			i = j;
		}
		if(row.tok.empty())
			continue;
		std::size_t cut = s.find('#');
		row.raw = s.substr(0, cut == std::string::npos ? s.size() : cut);
		while(!row.raw.empty() && (row.raw.back() == ' ' || row.raw.back() == '\t'))
			row.raw.pop_back();
		std::size_t lead = row.raw.find_first_not_of(" \t");
		row.raw = lead == std::string::npos ? "" : row.raw.substr(lead);
		rows.push_back(std::move(row));
	}
	return rows;
}

struct Cursor {
	const std::vector<Row>& rows;
	std::size_t i = 0;

	bool done() const { return i >= rows.size(); }
	const Row& peek() const { return rows[i]; }
	const Row& next() { return rows[i++]; }
};

inline Word quoted_word(const Row& row, std::size_t at, const Alphabet& ab)
{
	if(at >= row.tok.size() || !row.tok[at].quoted)
		throw ParseError(row.line, "expected a quoted word");
	auto w = parse_word(row.tok[at].text, ab);
	if(!w)
		throw ParseError(row.line, "word uses letters outside the output alphabet");
	return *w;
}

inline const std::string& plain(const Row& row, std::size_t at, const char* what)
{
	if(at >= row.tok.size() || row.tok[at].quoted)
		throw ParseError(row.line, std::string("expected ") + what);
	return row.tok[at].text;
}

// Shared accumulator for the four machine body grammars. Initial and final
// entries keep an optional output word so acceptors and transducers parse
// with one routine.
struct AutoBody {
	Orientation orient;
	Alphabet in, out;
	std::vector<std::string> state_names;
	std::map<std::string, State> ids;
	std::vector<std::pair<State, std::optional<Word>>> initial, final;
	struct Tr {
		State from;
		Letter letter;
		State to;
		std::optional<Word> out_w;
		std::size_t line = 0;
	};
	std::vector<Tr> trans;
	std::size_t header_line = 0;

	State state(const Row& row, std::size_t at) const
	{
		const std::string& n = plain(row, at, "a state name");
		auto it = ids.find(n);
		if(it == ids.end())
			throw ParseError(row.line, "unknown state '" + n + "'");
		return it->second;
	}
	Letter letter(const Row& row, std::size_t at) const
	{
		const std::string& n = plain(row, at, "a letter");
		auto a = in.find(n);
		if(!a)
			throw ParseError(row.line, "unknown letter '" + n + "'");
		return *a;
	}
};

// Reads body rows until end of input, or a bare `end` row when sub is set.
// A preset input alphabet lets enclosing blocks share letters; an explicit
// alphabet line extends it.
inline AutoBody parse_auto_body(Cursor& c, bool sub, Orientation default_orient,
                                const Alphabet& preset_in = Alphabet())
{
	AutoBody b;
	b.orient = default_orient;
	b.in = preset_in;
	b.header_line = c.done() ? 0 : c.peek().line;
	auto marked = [&](const Row& row, std::size_t at) -> std::optional<Word> {
		if(at < row.tok.size() && row.tok[at].quoted)
			return quoted_word(row, at, b.out);
		return std::nullopt;
	};
	while(!c.done()) {
		const Row& row = c.peek();
		const std::string& key = row.tok[0].text;
		if(row.tok[0].quoted)
			throw ParseError(row.line, "expected a directive");
		if(sub && key == "end" && row.tok.size() == 1) {
			c.next();
			return b;
		}
		if(key == "orientation") {
			const std::string& o = plain(row, 1, "left or right");
			if(o == "left")
				b.orient = Orientation::left;
			else if(o == "right")
				b.orient = Orientation::right;
			else
				throw ParseError(row.line, "orientation must be left or right");
		} else if(key == "alphabet") {
			for(std::size_t i = 1; i < row.tok.size(); i++)
				b.in.add(plain(row, i, "a letter"));
		} else if(key == "output") {
			for(std::size_t i = 1; i < row.tok.size(); i++)
				b.out.add(plain(row, i, "a letter"));
		} else if(key == "states") {
			for(std::size_t i = 1; i < row.tok.size(); i++) {
				const std::string& n = plain(row, i, "a state name");
				auto [it, ins] = b.ids.try_emplace(n, static_cast<State>(b.state_names.size()));
				(void)it;
				if(!ins)
					throw ParseError(row.line, "duplicate state name '" + n + "'");
				b.state_names.push_back(n);
			}
		} else if(key == "initial" || key == "final") {
			auto& list = key[0] == 'i' ? b.initial : b.final;
			std::size_t i = 1;
			while(i < row.tok.size()) {
				State q = b.state(row, i++);
				auto w = marked(row, i);
				if(w)
					i++;
				list.push_back({q, std::move(w)});
			}
		} else if(key == "trans") {
			AutoBody::Tr t;
			t.from = b.state(row, 1);
			t.letter = b.letter(row, 2);
			t.to = b.state(row, 3);
			t.out_w = marked(row, 4);
			t.line = row.line;
			if(row.tok.size() > (t.out_w ? 5u : 4u))
				throw ParseError(row.line, "trailing input after transition");
			b.trans.push_back(std::move(t));
		} else {
			if(sub)
				throw ParseError(row.line, "unknown directive '" + key + "' (missing end?)");
			throw ParseError(row.line, "unknown directive '" + key + "'");
		}
		c.next();
	}
	if(sub)
		throw ParseError(b.header_line, "missing end");
	return b;
}

inline void reject_outputs(const AutoBody& b)
{
	for(const auto& [q, w] : b.initial)
		if(w)
			throw ParseError(b.header_line, "acceptors carry no output words");
	for(const auto& [q, w] : b.final)
		if(w)
			throw ParseError(b.header_line, "acceptors carry no output words");
	for(const auto& t : b.trans)
		if(t.out_w)
			throw ParseError(t.line, "acceptors carry no output words");
}

inline Nfa to_nfa(const AutoBody& b)
{
	reject_outputs(b);
	Nfa a;
	a.orient = b.orient;
	a.alphabet = b.in;
	a.states = static_cast<State>(b.state_names.size());
	a.names = b.state_names;
	for(const auto& [q, w] : b.initial)
		a.initial.push_back(q);
	for(const auto& [q, w] : b.final)
		a.final.push_back(q);
	for(const auto& t : b.trans)
		a.trans.push_back({t.from, t.letter, t.to});
	normalize(a);
	return a;
}

inline Dfa to_dfa(const AutoBody& b)
{
	reject_outputs(b);
	Dfa d;
	d.orient = b.orient;
	d.alphabet = b.in;
	d.states = static_cast<State>(b.state_names.size());
	d.names = b.state_names;
	if(b.initial.size() > 1)
		throw ParseError(b.header_line, "a deterministic machine has one initial state");
	if(b.initial.empty() && d.states > 0)
		throw ParseError(b.header_line, "missing initial state");
	d.initial = b.initial.empty() ? 0 : b.initial.front().first;
	for(const auto& [q, w] : b.final)
		d.final.push_back(q);
	sort_unique(d.final);
	d.delta.assign(static_cast<std::size_t>(d.states) * d.alphabet.size(), -1);
	for(const auto& t : b.trans) {
		std::int64_t& cell = d.at(t.from, t.letter);
		if(cell >= 0 && cell != t.to)
			throw ParseError(t.line, "conflicting transition on a deterministic machine");
		cell = t.to;
	}
	return d;
}

inline Nft to_nft(const AutoBody& b)
{
	Nft t;
	t.orient = b.orient;
	t.in = b.in;
	t.out = b.out;
	t.states = static_cast<State>(b.state_names.size());
	t.names = b.state_names;
	for(const auto& [q, w] : b.initial)
		t.initial.push_back({q, w.value_or(Word{})});
	for(const auto& [q, w] : b.final)
		t.final.push_back({q, w.value_or(Word{})});
	for(const auto& tr : b.trans)
		t.trans.push_back({tr.from, tr.letter, tr.out_w.value_or(Word{}), tr.to});
	normalize(t);
	return t;
}

inline Dft to_dft(const AutoBody& b)
{
	Dft d;
	d.orient = b.orient;
	d.in = b.in;
	d.out = b.out;
	d.states = static_cast<State>(b.state_names.size());
	d.names = b.state_names;
	if(b.initial.size() > 1)
		throw ParseError(b.header_line, "a deterministic machine has one initial state");
	if(b.initial.empty() && d.states > 0)
		throw ParseError(b.header_line, "missing initial state");
	d.initial = b.initial.empty() ? 0 : b.initial.front().first;
	d.initial_out = b.initial.empty() ? Word{} : b.initial.front().second.value_or(Word{});
	d.delta.assign(static_cast<std::size_t>(d.states) * d.in.size(), -1);
	d.out_word.assign(static_cast<std::size_t>(d.states) * d.in.size(), {});
	d.terminal.assign(d.states, std::nullopt);
	for(const auto& [q, w] : b.final) {
		if(d.terminal[q])
			throw ParseError(b.header_line, "terminal output must be unique per state");
		d.terminal[q] = w.value_or(Word{});
	}
	for(const auto& t : b.trans) {
		std::int64_t& cell = d.delta[t.from * d.in.size() + t.letter];
		if(cell >= 0)
			throw ParseError(t.line, "conflicting transition on a deterministic machine");
		cell = t.to;
		d.out_word[t.from * d.in.size() + t.letter] = t.out_w.value_or(Word{});
	}
	return d;
}

inline Bimachine parse_bimachine_body(Cursor& c)
{
	Bimachine b;
	bool have_left = false, have_right = false;
	while(!c.done()) {
		const Row& row = c.peek();
		const std::string& key = row.tok[0].text;
		if(key == "output") {
			for(std::size_t i = 1; i < row.tok.size(); i++)
				b.out.add(plain(row, i, "a letter"));
			c.next();
		} else if(key == "left" && row.tok.size() == 1) {
			c.next();
			b.left = to_dfa(parse_auto_body(c, true, Orientation::left));
			have_left = true;
		} else if(key == "right" && row.tok.size() == 1) {
			c.next();
			b.right = to_dfa(parse_auto_body(c, true, Orientation::right));
			have_right = true;
		} else if(key == "out" || key == "term-left" || key == "term-right") {
			if(!have_left || !have_right)
				throw ParseError(row.line, "left and right blocks must come first");
			auto name_id = [&](const Dfa& d, std::size_t at) {
				const std::string& n = plain(row, at, "a state name");
				for(State q = 0; q < d.states; q++)
					if(d.state_name(q) == n)
						return q;
				throw ParseError(row.line, "unknown state '" + n + "'");
			};
			if(key == "out") {
				State l = name_id(b.left, 1);
				const std::string& x = plain(row, 2, "a letter");
				auto a = b.left.alphabet.find(x);
				if(!a)
					throw ParseError(row.line, "unknown letter '" + x + "'");
				State r = name_id(b.right, 3);
				b.omega[{l, *a, r}] = quoted_word(row, 4, b.out);
			} else if(key == "term-left") {
				b.rho[name_id(b.left, 1)] = quoted_word(row, 2, b.out);
			} else {
				b.lambda[name_id(b.right, 1)] = quoted_word(row, 2, b.out);
			}
			c.next();
		} else {
			throw ParseError(row.line, "unknown directive '" + key + "'");
		}
	}
	normalize(b);
	return b;
}

inline Translation parse_translation_body(Cursor& c)
{
	Translation t;
	std::optional<std::tuple<std::uint32_t, Letter, Word>> pending;
	std::optional<Dfa> pending_left;
	auto rule_key = [&](const Row& row) {
		const std::string& js = plain(row, 1, "an index");
		std::uint32_t j = 0;
		for(char ch : js) {
			if(ch < '0' || ch > '9')
				throw ParseError(row.line, "rule index must be a number");
			j = j * 10 + static_cast<std::uint32_t>(ch - '0');
		}
		const std::string& x = plain(row, 2, "a letter");
		auto a = t.in.find(x);
		if(!a)
			throw ParseError(row.line, "unknown letter '" + x + "'");
		return std::tuple<std::uint32_t, Letter, Word>{j, *a, quoted_word(row, 3, t.out)};
	};
	while(!c.done()) {
		const Row& row = c.peek();
		const std::string& key = row.tok[0].text;
		if(key == "alphabet") {
			for(std::size_t i = 1; i < row.tok.size(); i++)
				t.in.add(plain(row, i, "a letter"));
			c.next();
		} else if(key == "output") {
			for(std::size_t i = 1; i < row.tok.size(); i++)
				t.out.add(plain(row, i, "a letter"));
			c.next();
		} else if(key == "k") {
			const std::string& n = plain(row, 1, "a number");
			t.k = 0;
			for(char ch : n) {
				if(ch < '0' || ch > '9')
					throw ParseError(row.line, "k must be a number");
				t.k = t.k * 10 + static_cast<std::uint32_t>(ch - '0');
			}
			c.next();
		} else if(key == "outputs") {
			for(std::size_t i = 1; i < row.tok.size(); i++)
				t.outputs.push_back(quoted_word(row, i, t.out));
			c.next();
		} else if(key == "variety") {
			t.variety = plain(row, 1, "a variety name");
			c.next();
		} else if(key == "phi<") {
			if(pending)
				throw ParseError(row.line, "phi< without a matching phi>");
			pending = rule_key(row);
			c.next();
			pending_left = to_dfa(parse_auto_body(c, true, Orientation::left, t.in));
		} else if(key == "phi>") {
			auto k = rule_key(row);
			if(!pending || *pending != k)
				throw ParseError(row.line, "phi> does not match the open phi<");
			c.next();
			Dfa right = to_dfa(parse_auto_body(c, true, Orientation::right, t.in));
			t.rules.push_back({std::get<0>(k), std::get<1>(k), std::get<2>(k),
			                   std::move(*pending_left), std::move(right)});
			pending.reset();
			pending_left.reset();
		} else if(key == "phi-init" || key == "phi-term") {
			Word v = quoted_word(row, 1, t.out);
			bool init = key == "phi-init";
			c.next();
			Dfa d = to_dfa(parse_auto_body(c, true,
			                               init ? Orientation::right : Orientation::left, t.in));
			auto& m = init ? t.initial : t.terminal;
			if(!m.emplace(std::move(v), std::move(d)).second)
				throw ParseError(row.line, "duplicate selector output");
		} else {
			throw ParseError(row.line, "unknown directive '" + key + "'");
		}
	}
	if(pending)
		throw ParseError(0, "phi< without a matching phi>");
	normalize(t);
	return t;
}

inline VarietySpec parse_variety_body(const std::string& name, Cursor& c)
{
	VarietySpec v;
	v.name = name;
	while(!c.done()) {
		const Row& row = c.next();
		if(row.tok[0].text != "eq" || row.tok[0].quoted)
			throw ParseError(row.line, "expected an eq line");
		std::string text = row.raw.substr(2);
		std::size_t lead = text.find_first_not_of(" \t");
		if(lead == std::string::npos)
			throw ParseError(row.line, "empty equation");
		try {
			v.eqs.push_back(parse_profinite_eq(text.substr(lead)));
		} catch(const Error& e) {
			throw ParseError(row.line, e.what());
		}
	}
	return v;
}

} // namespace detail

inline MachineFile parse_machine(const std::string& text)
{
	auto rows = detail::split_rows(text);
	if(rows.empty())
		throw ParseError(1, "empty machine file");
	const detail::Row& h = rows[0];
	const std::string& kind = h.tok[0].text;
	if(kind.empty() || kind[0] != '@' || h.tok[0].quoted)
		throw ParseError(h.line, "expected a @kind header");
	MachineFile f;
	f.kind = kind.substr(1);
	f.name = h.tok.size() > 1 && !h.tok[1].quoted ? h.tok[1].text : "m";
	detail::Cursor c{rows, 1};
	if(f.kind == "nfa")
		f.value = detail::to_nfa(detail::parse_auto_body(c, false, Orientation::left));
	else if(f.kind == "dfa")
		f.value = detail::to_dfa(detail::parse_auto_body(c, false, Orientation::left));
	else if(f.kind == "nft")
		f.value = detail::to_nft(detail::parse_auto_body(c, false, Orientation::left));
	else if(f.kind == "dft")
		f.value = detail::to_dft(detail::parse_auto_body(c, false, Orientation::left));
	else if(f.kind == "bimachine")
		f.value = detail::parse_bimachine_body(c);
	else if(f.kind == "translation")
		f.value = detail::parse_translation_body(c);
	else if(f.kind == "variety")
		f.value = detail::parse_variety_body(f.name, c);
	else
		throw ParseError(h.line, "unknown machine kind '@" + f.kind + "'");
	return f;
}

inline std::string read_text_file(const std::string& path)
{
	std::ifstream in(path, std::ios::binary);
	if(!in)
		throw InputError("cannot open file", {{"path", path}});
	std::ostringstream out;
	out << in.rdbuf();
	return out.str();
}

inline MachineFile parse_machine_file(const std::string& path)
{
	try {
		return parse_machine(read_text_file(path));
	} catch(const InputError& e) {
		auto d = e.details();
		d["file"] = path;
		throw InputError(e.what(), std::move(d));
	}
}

namespace detail {

inline std::string quoted(const Word& w, const Alphabet& ab)
{
	return "\"" + word_text(w, ab) + "\"";
}

// State names as printed: cleaned of characters the tokenizer treats
// specially and uniquified so the file parses back to the same structure.
inline std::vector<std::string> printable_names(std::size_t states,
                                                const std::vector<std::string>& names)
{
	std::vector<std::string> out;
	std::map<std::string, int> seen;
	for(std::size_t q = 0; q < states; q++) {
		std::string n = q < names.size() && !names[q].empty() ? names[q]
		                                                      : "q" + std::to_string(q);
		for(char& ch : n)
			if(ch == ' ' || ch == '\t' || ch == '"' || ch == '#')
				ch = '_';
		if(n == "end" || n[0] == '@')
			n = "_" + n;
		while(seen.count(n))
			n += "'";
		seen[n] = 1;
		out.push_back(std::move(n));
	}
	return out;
}

inline std::string symbols_line(const char* key, const Alphabet& ab)
{
	std::string s = key;
	for(const std::string& x : ab.symbols())
		s += " " + x;
	return s + "\n";
}

struct DfaText {
	std::string text;
	std::vector<std::string> names;
};

inline DfaText dfa_body(const Dfa& d, const std::string& pre)
{
	DfaText r;
	r.names = printable_names(d.states, d.names);
	std::optional<State> skip;
	if(d.sink && d.states > 0 && *d.sink != d.initial && !d.is_final(*d.sink))
		skip = d.sink;
	std::string& s = r.text;
	s += pre + "orientation " + orientation_name(d.orient) + "\n";
	s += pre + symbols_line("alphabet", d.alphabet);
	s += pre + "states";
	for(State q = 0; q < d.states; q++)
		if(q != skip)
			s += " " + r.names[q];
	s += "\n";
	if(d.states > 0)
		s += pre + "initial " + r.names[d.initial] + "\n";
	if(!d.final.empty()) {
		s += pre + "final";
		for(State q : d.final)
			s += " " + r.names[q];
		s += "\n";
	}
	for(State q = 0; q < d.states; q++) {
		if(q == skip)
			continue;
		for(Letter x = 0; x < d.alphabet.size(); x++)
			if(auto n = d.step(q, x); n && n != skip)
				s += pre + "trans " + r.names[q] + " " + d.alphabet.name(x) + " " +
				     r.names[*n] + "\n";
	}
	return r;
}

} // namespace detail

inline std::string print_dfa(const Dfa& d, const std::string& name)
{
	return "@dfa " + name + "\n" + detail::dfa_body(d, "").text;
}

inline std::string print_nfa(const Nfa& a, const std::string& name)
{
	auto names = detail::printable_names(a.states, a.names);
	std::string s = "@nfa " + name + "\n";
	s += "orientation " + std::string(orientation_name(a.orient)) + "\n";
	s += detail::symbols_line("alphabet", a.alphabet);
	s += "states";
	for(State q = 0; q < a.states; q++)
		s += " " + names[q];
	s += "\n";
	if(!a.initial.empty()) {
		s += "initial";
		for(State q : a.initial)
			s += " " + names[q];
		s += "\n";
	}
	if(!a.final.empty()) {
		s += "final";
		for(State q : a.final)
			s += " " + names[q];
		s += "\n";
	}
	for(const Transition& t : a.trans)
		s += "trans " + names[t.from] + " " + a.alphabet.name(t.letter) + " " + names[t.to] +
		     "\n";
	return s;
}

inline std::string print_nft(const Nft& t, const std::string& name)
{
	auto names = detail::printable_names(t.states, t.names);
	std::string s = "@nft " + name + "\n";
	s += "orientation " + std::string(orientation_name(t.orient)) + "\n";
	s += detail::symbols_line("alphabet", t.in);
	s += detail::symbols_line("output", t.out);
	s += "states";
	for(State q = 0; q < t.states; q++)
		s += " " + names[q];
	s += "\n";
	for(const auto& [q, w] : t.initial)
		s += "initial " + names[q] + " " + detail::quoted(w, t.out) + "\n";
	for(const auto& [q, w] : t.final)
		s += "final " + names[q] + " " + detail::quoted(w, t.out) + "\n";
	for(const NftTransition& tr : t.trans)
		s += "trans " + names[tr.from] + " " + t.in.name(tr.letter) + " " + names[tr.to] +
		     " " + detail::quoted(tr.out, t.out) + "\n";
	return s;
}

inline std::string print_dft(const Dft& t, const std::string& name)
{
	auto names = detail::printable_names(t.states, t.names);
	std::string s = "@dft " + name + "\n";
	s += "orientation " + std::string(orientation_name(t.orient)) + "\n";
	s += detail::symbols_line("alphabet", t.in);
	s += detail::symbols_line("output", t.out);
	s += "states";
	for(State q = 0; q < t.states; q++)
		s += " " + names[q];
	s += "\n";
	if(t.states > 0)
		s += "initial " + names[t.initial] + " " + detail::quoted(t.initial_out, t.out) + "\n";
	for(State q = 0; q < t.states; q++)
		if(t.terminal[q])
			s += "final " + names[q] + " " + detail::quoted(*t.terminal[q], t.out) + "\n";
	for(State q = 0; q < t.states; q++)
		for(Letter x = 0; x < t.in.size(); x++)
			if(auto n = t.step(q, x))
				s += "trans " + names[q] + " " + t.in.name(x) + " " + names[*n] + " " +
				     detail::quoted(t.output(q, x), t.out) + "\n";
	return s;
}

inline std::string print_bimachine(const Bimachine& b, const std::string& name)
{
	std::string s = "@bimachine " + name + "\n";
	s += detail::symbols_line("output", b.out);
	auto left = detail::dfa_body(b.left, "\t");
	auto right = detail::dfa_body(b.right, "\t");
	s += "left\n" + left.text + "end\n";
	s += "right\n" + right.text + "end\n";
	for(const auto& [key, w] : b.omega) {
		auto [l, x, r] = key;
		s += "out " + left.names[l] + " " + b.left.alphabet.name(x) + " " + right.names[r] +
		     " " + detail::quoted(w, b.out) + "\n";
	}
	for(const auto& [l, w] : b.rho)
		s += "term-left " + left.names[l] + " " + detail::quoted(w, b.out) + "\n";
	for(const auto& [r, w] : b.lambda)
		s += "term-right " + right.names[r] + " " + detail::quoted(w, b.out) + "\n";
	return s;
}

inline std::string print_translation(const Translation& t, const std::string& name)
{
	std::string s = "@translation " + name + "\n";
	s += detail::symbols_line("alphabet", t.in);
	s += detail::symbols_line("output", t.out);
	s += "k " + std::to_string(t.k) + "\n";
	s += "outputs";
	for(const Word& w : t.outputs)
		s += " " + detail::quoted(w, t.out);
	s += "\n";
	s += "variety " + t.variety + "\n";
	for(const TranslationRule& r : t.rules) {
		std::string head = std::to_string(r.j) + " " + t.in.name(r.letter) + " " +
		                   detail::quoted(r.out, t.out) + "\n";
		s += "phi< " + head + detail::dfa_body(r.left, "\t").text + "end\n";
		s += "phi> " + head + detail::dfa_body(r.right, "\t").text + "end\n";
	}
	for(const auto& [w, d] : t.initial)
		s += "phi-init " + detail::quoted(w, t.out) + "\n" + detail::dfa_body(d, "\t").text +
		     "end\n";
	for(const auto& [w, d] : t.terminal)
		s += "phi-term " + detail::quoted(w, t.out) + "\n" + detail::dfa_body(d, "\t").text +
		     "end\n";
	return s;
}

inline std::string print_variety(const VarietySpec& v)
{
	std::string s = "@variety " + (v.name.empty() ? "v" : v.name) + "\n";
	for(const ProfiniteEq& e : v.eqs)
		s += "eq " + e.text + "\n";
	return s;
}

inline std::string print_machine(const MachineFile& f)
{
	return std::visit(
	    [&](const auto& m) -> std::string {
		    using T = std::decay_t<decltype(m)>;
		    if constexpr(std::is_same_v<T, Nfa>)
			    return print_nfa(m, f.name);
		    else if constexpr(std::is_same_v<T, Dfa>)
			    return print_dfa(m, f.name);
		    else if constexpr(std::is_same_v<T, Nft>)
			    return print_nft(m, f.name);
		    else if constexpr(std::is_same_v<T, Dft>)
			    return print_dft(m, f.name);
		    else if constexpr(std::is_same_v<T, Bimachine>)
			    return print_bimachine(m, f.name);
		    else if constexpr(std::is_same_v<T, Translation>)
			    return print_translation(m, f.name);
		    else
			    return print_variety(m);
	    },
	    f.value);
}

} // namespace rwf
