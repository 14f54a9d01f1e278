#pragma once

#include <stdexcept>
#include <string>

namespace sequp {

// Each kind maps to a distinct CLI exit status.
enum class ErrorKind {
  usage = 1,
  input = 2,
  state = 3,
  consistency = 4,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

inline Error input_error(const std::string& what) { return Error(ErrorKind::input, what); }
inline Error state_error(const std::string& what) { return Error(ErrorKind::state, what); }
inline Error consistency_error(const std::string& what) {
  return Error(ErrorKind::consistency, what);
}

}  // namespace sequp
