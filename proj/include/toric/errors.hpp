#pragma once

#include <stdexcept>
#include <string>

namespace toric {

enum class ErrorKind {
    MalformedInput,
    NotPointed,
    DegreeMismatch,
    ZeroBinomial,
    BudgetExceeded,
    FiberTooLarge,
    InternalInconsistency,
    InvalidChoice,
    NotMinimal,
};

const char* to_string(ErrorKind kind);

class ToricError : public std::runtime_error {
public:
    ToricError(ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

template <ErrorKind K>
class TypedError : public ToricError {
public:
    explicit TypedError(const std::string& what) : ToricError(K, what) {}
};

using MalformedInput = TypedError<ErrorKind::MalformedInput>;
using NotPointed = TypedError<ErrorKind::NotPointed>;
using DegreeMismatch = TypedError<ErrorKind::DegreeMismatch>;
using ZeroBinomial = TypedError<ErrorKind::ZeroBinomial>;
using BudgetExceeded = TypedError<ErrorKind::BudgetExceeded>;
using FiberTooLarge = TypedError<ErrorKind::FiberTooLarge>;
using InternalInconsistency = TypedError<ErrorKind::InternalInconsistency>;
using InvalidChoice = TypedError<ErrorKind::InvalidChoice>;
using NotMinimal = TypedError<ErrorKind::NotMinimal>;

}  // namespace toric
