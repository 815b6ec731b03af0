#pragma once

#include <cstdlib>
#include <string>
#include <variant>

#include "rwf/textio.hpp"

namespace rwf::test {

inline std::string machine_dir()
{
	const char* dir = std::getenv("RWF_MACHINE_DIR");
	if(dir && *dir)
		return dir;
#ifdef RWF_MACHINE_DIR
	return RWF_MACHINE_DIR;
#else
	return "machines";
#endif
}

inline std::string machine_path(const std::string& file)
{
	return machine_dir() + "/" + file;
}

template <class T>
T load(const std::string& file)
{
	MachineFile f = parse_machine_file(machine_path(file));
	return std::get<T>(std::move(f.value));
}

// Word literal; throws on symbols outside the alphabet so a typo in a test
// fails loudly instead of comparing against the wrong word.
inline Word W(const Alphabet& ab, const std::string& text)
{
	auto w = parse_word(text, ab);
	if(!w)
		throw std::logic_error("test word '" + text + "' does not tokenize");
	return *w;
}

// All words over the first `letters` letters up to the given length, in
// shortlex order.
inline std::vector<Word> words_upto(std::size_t letters, std::size_t max_len)
{
	std::vector<Word> all{{}};
	std::size_t begin = 0;
	for(std::size_t len = 1; len <= max_len; len++) {
		std::size_t end = all.size();
		for(std::size_t i = begin; i < end; i++)
			for(Letter x = 0; x < letters; x++) {
				Word w = all[i];
				w.push_back(x);
				all.push_back(std::move(w));
			}
		begin = end;
	}
	return all;
}

} // namespace rwf::test
