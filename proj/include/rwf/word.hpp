#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace rwf {

using Letter = std::uint32_t;
using State = std::uint32_t;
using Word = std::vector<Letter>;

// Letters are interned indices into an Alphabet. Words over different
// alphabets compare equal if the index sequences match; callers keep
// alphabets consistent across the machines they combine.
class Alphabet {
public:
	Alphabet() = default;
	explicit Alphabet(std::initializer_list<std::string> symbols)
	{
		for(const std::string& s : symbols)
			add(s);
	}

	Letter add(const std::string& symbol)
	{
		if(symbol.empty())
			throw std::invalid_argument("alphabet symbol must be non-empty");
		auto [it, inserted] = index_.try_emplace(symbol, static_cast<Letter>(symbols_.size()));
		if(inserted)
			symbols_.push_back(symbol);
		return it->second;
	}
	std::optional<Letter> find(const std::string& symbol) const
	{
		auto it = index_.find(symbol);
		if(it == index_.end())
			return std::nullopt;
		return it->second;
	}
	const std::string& name(Letter a) const { return symbols_.at(a); }
	std::size_t size() const { return symbols_.size(); }

	const std::vector<std::string>& symbols() const { return symbols_; }

	bool operator==(const Alphabet& other) const { return symbols_ == other.symbols_; }

private:
	std::vector<std::string> symbols_;
	std::map<std::string, Letter> index_;
};

inline bool is_prefix(const Word& p, const Word& w)
{
	return p.size() <= w.size() && std::equal(p.begin(), p.end(), w.begin());
}

inline bool is_suffix(const Word& s, const Word& w)
{
	return s.size() <= w.size() && std::equal(s.rbegin(), s.rend(), w.rbegin());
}

inline Word lcp(const Word& a, const Word& b)
{
	auto [ia, ib] = std::mismatch(a.begin(), a.end(), b.begin(), b.end());
	(void)ib;
	return Word(a.begin(), ia);
}

// acc = lcp(acc, w), in place
inline void lcp_shrink(Word& acc, const Word& w)
{
	auto [ia, iw] = std::mismatch(acc.begin(), acc.end(), w.begin(), w.end());
	(void)iw;
	acc.erase(ia, acc.end());
}

inline Word lcs(const Word& a, const Word& b)
{
	auto [ia, ib] = std::mismatch(a.rbegin(), a.rend(), b.rbegin(), b.rend());
	(void)ib;
	return Word(ia.base(), a.end());
}

// prefix^{-1} w; requires is_prefix(prefix, w)
inline Word residual(const Word& prefix, const Word& w)
{
	if(!is_prefix(prefix, w))
		throw std::logic_error("residual: not a prefix");
	return Word(w.begin() + static_cast<std::ptrdiff_t>(prefix.size()), w.end());
}

// w suffix^{-1}; requires is_suffix(suffix, w)
inline Word residual_right(const Word& w, const Word& suffix)
{
	if(!is_suffix(suffix, w))
		throw std::logic_error("residual_right: not a suffix");
	return Word(w.begin(), w.end() - static_cast<std::ptrdiff_t>(suffix.size()));
}

inline std::size_t left_distance(const Word& a, const Word& b)
{
	return a.size() + b.size() - 2 * lcp(a, b).size();
}

inline std::size_t right_distance(const Word& a, const Word& b)
{
	return a.size() + b.size() - 2 * lcs(a, b).size();
}

inline Word cat(const Word& a, const Word& b)
{
	Word r = a;
	r.insert(r.end(), b.begin(), b.end());
	return r;
}

inline void append(Word& a, const Word& b) { a.insert(a.end(), b.begin(), b.end()); }

inline Word reversed(Word w)
{
	std::reverse(w.begin(), w.end());
	return w;
}

// Pair of words with the common prefix stripped; the relative advance of one
// run over another.
struct Delay {
	Word a, b;

	void reduce()
	{
		std::size_t k = lcp(a, b).size();
		a.erase(a.begin(), a.begin() + static_cast<std::ptrdiff_t>(k));
		b.erase(b.begin(), b.begin() + static_cast<std::ptrdiff_t>(k));
	}
	// advance both sides and re-reduce
	void push(const Word& xa, const Word& xb)
	{
		append(a, xa);
		append(b, xb);
		reduce();
	}
	std::size_t size() const { return a.size() + b.size(); }
	bool trivial() const { return a.empty() && b.empty(); }

	auto operator<=>(const Delay&) const = default;
};

inline std::string word_text(const Word& w, const Alphabet& ab)
{
	std::string s;
	for(Letter a : w)
		s += ab.name(a);
	return s;
}

// Greedy longest-match tokenization of a symbol string against an alphabet.
inline std::optional<Word> parse_word(const std::string& text, const Alphabet& ab)
{
	Word w;
	std::size_t pos = 0;
	while(pos < text.size()) {
		std::optional<Letter> best;
		std::size_t best_len = 0;
		for(Letter a = 0; a < ab.size(); a++) {
			const std::string& sym = ab.name(a);
			if(sym.size() > best_len && text.compare(pos, sym.size(), sym) == 0) {
				best = a;
				best_len = sym.size();
			}
		}
		if(!best)
			return std::nullopt;
		w.push_back(*best);
		pos += best_len;
	}
	return w;
}

} // namespace rwf
