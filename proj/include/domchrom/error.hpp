#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace domchrom {

enum class ErrorKind {
    NotATree,
    SelfArc,
    DuplicateOrAntiparallelArc,
    BadVertexId,
    NotRooted,
    NotALeaf,
    SizeMismatch,
    BudgetExhausted,
    TooLarge,
    KTooSmall,
    NotACaterpillar,
    SpineNotDirected,
    SpecInvalid,
    ParseError,
};

std::string_view to_string(ErrorKind kind);

// Every recoverable failure in the library is reported through this type so
// callers (and the CLI) can branch on the kind without parsing messages.
class Error : public std::runtime_error {
  public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind)
    {
    }

    ErrorKind kind() const noexcept { return kind_; }

  private:
    ErrorKind kind_;
};

} // namespace domchrom
