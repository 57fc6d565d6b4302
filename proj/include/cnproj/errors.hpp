#pragma once

#include <stdexcept>
#include <string>

namespace cnproj {

// Every failure the library can report, so callers (and the CLI) can map
// kinds to exit codes without string matching.
enum class ErrKind {
    MalformedInput,
    MalformedRelation,
    InfiniteDimensional,
    NotAComplex,
    BadEntry,
    NotIndecomposable,
    NotMinimal,
    BudgetExceeded,
    MaxNExceeded,
    EtaZero,
    Internal,
};

class Error : public std::runtime_error {
public:
    Error(ErrKind kind, const std::string& msg) : std::runtime_error(msg), kind_(kind) {}
    ErrKind kind() const { return kind_; }

private:
    ErrKind kind_;
};

// Tri-state answer for the budgeted exhaustive searches; `undecided` is
// reported, never silently rounded to yes/no.
enum class Tri { no, yes, undecided };

}  // namespace cnproj
