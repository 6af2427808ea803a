#ifndef NBHD_ERROR_HPP
#define NBHD_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace nbhd {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Raised by the formula parser; position is a 0-based character offset.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : Error(message + " at position " + std::to_string(position)), position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Invalid frame, model, valuation or world index.
struct FrameError : Error {
  using Error::Error;
};

/// An exhaustive enumeration would exceed the combinatorial limit.
struct GuardError : Error {
  using Error::Error;
};

/// A construction was applied to an input lacking a required frame property.
struct PreconditionError : Error {
  using Error::Error;
};

/// Malformed frame/model document.
struct FormatError : Error {
  using Error::Error;
};

/// Invalid search configuration.
struct ConfigError : Error {
  using Error::Error;
};

/// A checked mathematical invariant failed. Never expected on correct code.
struct InternalError : Error {
  using Error::Error;
};

}  // namespace nbhd

#endif  // NBHD_ERROR_HPP
