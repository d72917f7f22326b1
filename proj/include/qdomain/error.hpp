#pragma once

#include <stdexcept>
#include <string>

namespace qdomain {

enum class ErrorKind {
    Dimension,       // shapes of matrices or subspaces disagree
    ObjectMismatch,  // quantum sets of composed relations disagree
    InvalidArgument,
    NotAFunction,
    NotMonotone,
    Verification,    // a computed result failed its own postcondition
    Pairing,
    Input,           // malformed file or command line
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace qdomain
