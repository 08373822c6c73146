#pragma once

#include <stdexcept>
#include <string>

namespace wordlab {

struct DivisionByZero : std::runtime_error {
	explicit DivisionByZero(const std::string &what) : std::runtime_error(what) {}
};

struct BudgetExceeded : std::runtime_error {
	explicit BudgetExceeded(const std::string &what) : std::runtime_error(what) {}
};

struct BadLetter : std::runtime_error {
	explicit BadLetter(const std::string &what) : std::runtime_error(what) {}
};

struct ArityMismatch : std::runtime_error {
	explicit ArityMismatch(const std::string &what) : std::runtime_error(what) {}
};

struct ArityUnsupported : std::runtime_error {
	explicit ArityUnsupported(const std::string &what) : std::runtime_error(what) {}
};

struct GroupMismatch : std::runtime_error {
	explicit GroupMismatch(const std::string &what) : std::runtime_error(what) {}
};

struct NotInvariant : std::runtime_error {
	explicit NotInvariant(const std::string &what) : std::runtime_error(what) {}
};

struct DegenerateSpectrum : std::runtime_error {
	explicit DegenerateSpectrum(const std::string &what) : std::runtime_error(what) {}
};

struct Disconnected : std::runtime_error {
	explicit Disconnected(const std::string &what) : std::runtime_error(what) {}
};

struct InsufficientData : std::runtime_error {
	explicit InsufficientData(const std::string &what) : std::runtime_error(what) {}
};

// A generated trace polynomial failed its random-evaluation validation.
struct OracleFailure : std::runtime_error {
	explicit OracleFailure(const std::string &what) : std::runtime_error(what) {}
};

} // namespace wordlab
