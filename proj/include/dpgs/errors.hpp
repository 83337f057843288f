#pragma once

#include <stdexcept>
#include <string>

namespace dpgs {

struct DuplicateInsert : std::runtime_error {
  explicit DuplicateInsert(const std::string& what) : std::runtime_error(what) {}
};

struct MissingDelete : std::runtime_error {
  explicit MissingDelete(const std::string& what) : std::runtime_error(what) {}
};

struct IndexOutOfRange : std::runtime_error {
  explicit IndexOutOfRange(const std::string& what) : std::runtime_error(what) {}
};

struct AlreadyNoop : std::runtime_error {
  explicit AlreadyNoop(const std::string& what) : std::runtime_error(what) {}
};

struct NonPositiveScale : std::runtime_error {
  explicit NonPositiveScale(const std::string& what) : std::runtime_error(what) {}
};

struct EmptySelection : std::runtime_error {
  explicit EmptySelection(const std::string& what) : std::runtime_error(what) {}
};

struct TooLarge : std::runtime_error {
  explicit TooLarge(const std::string& what) : std::runtime_error(what) {}
};

struct InfeasibleT : std::runtime_error {
  explicit InfeasibleT(const std::string& what) : std::runtime_error(what) {}
};

struct BoundViolated : std::runtime_error {
  explicit BoundViolated(const std::string& what) : std::runtime_error(what) {}
};

struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

struct DeleteRefused : std::runtime_error {
  explicit DeleteRefused(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace dpgs
