#ifndef MMPH_ERROR_HPP
#define MMPH_ERROR_HPP

#include <stdexcept>
#include <string>

namespace mmph {

enum class Errc {
    // parser
    UnknownCharacter,
    DanglingPlus,
    DuplicateVertexInEdge,
    MissingTerminator,
    EmptyEdge,
    // editing
    ResultEmpty,
    EdgeTooLarge,
    NotABijection,
    // contextuality
    NotContextual,
    // algebra
    DimensionMismatch,
    ZeroVector,
    NotOrthogonal,
    InsufficientRank,
    UnsupportedAtom,
    RingMismatch,
    DivisionByZero,
    // generation
    BudgetExceeded,
    NoCliques,
    CannotSatisfyConstraints,
    NotASubhypergraph,
    // coordinatization
    IncompleteCoordinatization,
    AmbiguousInterval,
    // io
    BadFormat,
    IoError,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    Errc code() const { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

} // namespace mmph

#endif
