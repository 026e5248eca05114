#pragma once

#include <stdexcept>
#include <string>

namespace capgroup {

enum class errc {
  invalid_argument,
  overflow,
  bound_exceeded,
  parent_mismatch,
  not_capable,
};

class Error : public std::runtime_error {
public:
  Error(errc code, const std::string &what)
      : std::runtime_error(what), code_(code) {}

  errc code() const noexcept { return code_; }

private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string &what) {
  throw Error(code, what);
}

} // namespace capgroup
