#pragma once

#include <map>
#include <stdexcept>
#include <string>

namespace rwf {

// Exit codes shared by the error taxonomy and the command line tool.
enum : int {
	exit_ok = 0,
	exit_no = 1,
	exit_input = 2,
	exit_precondition = 3,
	exit_not_sequential = 4,
};

// Library errors carry an exit code plus key=value details that the command
// line tool prints as trailer lines on stderr.
class Error : public std::runtime_error {
public:
	Error(int code, const std::string& message, std::map<std::string, std::string> details = {})
		: std::runtime_error(message), code_(code), details_(std::move(details))
	{
	}
	int code() const { return code_; }
	const std::map<std::string, std::string>& details() const { return details_; }

private:
	int code_;
	std::map<std::string, std::string> details_;
};

class InputError : public Error {
public:
	explicit InputError(const std::string& message, std::map<std::string, std::string> details = {})
		: Error(exit_input, message, std::move(details))
	{
	}
};

class ParseError : public InputError {
public:
	ParseError(std::size_t line, const std::string& message)
		: InputError("line " + std::to_string(line) + ": " + message, {{"line", std::to_string(line)}})
	{
	}
};

class PreconditionError : public Error {
public:
	explicit PreconditionError(const std::string& message, std::map<std::string, std::string> details = {})
		: Error(exit_precondition, message, std::move(details))
	{
	}
};

class NotSequentialisable : public Error {
public:
	explicit NotSequentialisable(const std::string& message, std::map<std::string, std::string> details = {})
		: Error(exit_not_sequential, message, std::move(details))
	{
	}
};

} // namespace rwf
