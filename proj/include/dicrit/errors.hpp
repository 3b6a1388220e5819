#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace dicrit {

// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class LoopArcError : public Error {
public:
    int vertex;
    explicit LoopArcError(int u)
        : Error("loop arc at vertex " + std::to_string(u)), vertex(u) {}
};

class VertexOutOfRangeError : public Error {
public:
    int vertex;
    int n;
    VertexOutOfRangeError(int u, int n_)
        : Error("vertex " + std::to_string(u) + " out of range [0," +
                std::to_string(n_) + ")"),
          vertex(u), n(n_) {}
};

// Raised when an exact-search budget or a hard instance ceiling is exceeded.
// Never a wrong answer: the caller must treat it as "undecided".
class InstanceTooLargeError : public Error {
public:
    explicit InstanceTooLargeError(const std::string& what)
        : Error("instance too large: " + what) {}
};

class ChiTooSmallError : public Error {
public:
    ChiTooSmallError(int chi, int k)
        : Error("dichromatic number " + std::to_string(chi) +
                " is below requested k=" + std::to_string(k)) {}
};

class SizeTooSmallError : public Error {
public:
    explicit SizeTooSmallError(const std::string& what)
        : Error("size too small: " + what) {}
};

class ParityError : public Error {
public:
    explicit ParityError(const std::string& what)
        : Error("parity violation: " + what) {}
};

class UnsupportedVariantError : public Error {
public:
    explicit UnsupportedVariantError(const std::string& what)
        : Error("unsupported variant: " + what) {}
};

class NotATournamentError : public Error {
public:
    explicit NotATournamentError(const std::string& what)
        : Error("not a tournament: " + what) {}
};

class NotAThreadError : public Error {
public:
    explicit NotAThreadError(const std::string& what)
        : Error("not a thread: " + what) {}
};

class InvalidColouringError : public Error {
public:
    explicit InvalidColouringError(const std::string& what)
        : Error("invalid colouring: " + what) {}
};

class RNotProperError : public Error {
public:
    explicit RNotProperError(const std::string& what)
        : Error("vertex set must be a proper subset: " + what) {}
};

class NotGallaiForestError : public Error {
public:
    explicit NotGallaiForestError(const std::string& what)
        : Error("not an oriented Gallai forest: " + what) {}
};

class EmptyRangeError : public Error {
public:
    explicit EmptyRangeError(const std::string& what)
        : Error("empty search range: " + what) {}
};

class KTooSmallError : public Error {
public:
    explicit KTooSmallError(const std::string& what)
        : Error("k too small: " + what) {}
};

class ParseError : public Error {
public:
    explicit ParseError(const std::string& what)
        : Error("parse error: " + what) {}
};

} // namespace dicrit
