#pragma once

#include <stdexcept>
#include <string>

namespace vsb {

// Error kinds map onto the CLI exit codes: numeric failures exit 1,
// configuration / file problems exit 2.
enum class ErrorKind { numeric, config, io };

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& msg)
      : std::runtime_error(msg), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

inline Error numeric_error(const std::string& msg) { return Error(ErrorKind::numeric, msg); }
inline Error config_error(const std::string& msg) { return Error(ErrorKind::config, msg); }
inline Error io_error(const std::string& msg) { return Error(ErrorKind::io, msg); }

}  // namespace vsb
