#ifndef MGFIL_ERROR_HPP
#define MGFIL_ERROR_HPP

#include <stdexcept>
#include <string>

namespace mgfil {

enum class ErrorKind {
  ring_mismatch,
  invalid_argument,
  not_m_primary,
  unsupported,
  parse,
  no_stabilization,
  internal,
};

class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, std::string msg, int line = -1)
      : std::runtime_error(line >= 0 ? "line " + std::to_string(line) + ": " + msg
                                     : std::move(msg)),
        kind_(kind),
        line_(line) {}

  ErrorKind kind() const { return kind_; }
  int line() const { return line_; }

private:
  ErrorKind kind_;
  int line_;
};

[[noreturn]] inline void fail(ErrorKind k, const std::string& msg, int line = -1) {
  throw Error(k, msg, line);
}

}  // namespace mgfil

#endif
