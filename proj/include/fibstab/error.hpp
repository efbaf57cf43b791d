#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace fibstab {

/// Base class for every mathematical failure raised by the library.
/// `name()` is the stable identifier reported by the CLI.
class Error : public std::runtime_error {
public:
  Error(std::string name, const std::string &what)
      : std::runtime_error(what), name_(std::move(name)) {}

  const std::string &name() const noexcept { return name_; }

private:
  std::string name_;
};

#define FIBSTAB_DEFINE_ERROR(Type)                                             \
  class Type : public Error {                                                  \
  public:                                                                      \
    explicit Type(const std::string &what) : Error(#Type, what) {}             \
  };

FIBSTAB_DEFINE_ERROR(ShapeMismatch)
FIBSTAB_DEFINE_ERROR(SingularMatrix)
FIBSTAB_DEFINE_ERROR(VarietyMismatch)
FIBSTAB_DEFINE_ERROR(WrongVariety)
FIBSTAB_DEFINE_ERROR(NotHomogeneous)
FIBSTAB_DEFINE_ERROR(NonIntegralResult)
FIBSTAB_DEFINE_ERROR(NegativeTwist)
FIBSTAB_DEFINE_ERROR(NonzeroC1)
FIBSTAB_DEFINE_ERROR(UnsupportedBaseDimension)
FIBSTAB_DEFINE_ERROR(RankOne)
FIBSTAB_DEFINE_ERROR(RankOutOfRange)
FIBSTAB_DEFINE_ERROR(InvalidArgument)
FIBSTAB_DEFINE_ERROR(SingularGroupElement)
FIBSTAB_DEFINE_ERROR(TooFewColumns)
FIBSTAB_DEFINE_ERROR(ZeroEvaluationEntry)
FIBSTAB_DEFINE_ERROR(ParseError)

#undef FIBSTAB_DEFINE_ERROR

/// Raised by the canonical-form reduction when one of the invertibility
/// conditions on the extension data fails. `block()` is "IV", "W" or "I".
class GenericityFailure : public Error {
public:
  explicit GenericityFailure(std::string block)
      : Error("GenericityFailure", "block [" + block + "] is not invertible"),
        block_(std::move(block)) {}

  const std::string &block() const noexcept { return block_; }

private:
  std::string block_;
};

} // namespace fibstab
