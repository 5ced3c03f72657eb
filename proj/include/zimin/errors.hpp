#pragma once

#include <stdexcept>
#include <string>

namespace zimin {

/// An explicit word would exceed the configured materialization cap.
class SizeLimitError : public std::runtime_error {
  public:
	using std::runtime_error::runtime_error;
};

/// A sequence that was required to be a Zimin-word factor is not one.
class NotAFactorError : public std::runtime_error {
  public:
	using std::runtime_error::runtime_error;
};

/// Malformed textual input (words, patterns, rankings).
class ParseError : public std::runtime_error {
  public:
	using std::runtime_error::runtime_error;
};

} // namespace zimin
