#pragma once

#include <stdexcept>
#include <string>

namespace ptm {

/// Error categories map onto CLI exit codes: input/validation/parse/config
/// exit 1, transport/runtime exit 2.
enum class ErrorKind { input, validation, parse, config, transport, runtime };

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

inline Error input_error(const std::string& what) { return {ErrorKind::input, what}; }
inline Error validation_error(const std::string& what) { return {ErrorKind::validation, what}; }
inline Error parse_error(const std::string& what) { return {ErrorKind::parse, what}; }
inline Error config_error(const std::string& what) { return {ErrorKind::config, what}; }
inline Error transport_error(const std::string& what) { return {ErrorKind::transport, what}; }
inline Error runtime_error_(const std::string& what) { return {ErrorKind::runtime, what}; }

}  // namespace ptm
