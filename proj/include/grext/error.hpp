#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace grext {

/// Input errors are caused by the caller's data (exit code 2 at the CLI);
/// internal errors indicate a broken invariant inside the library (exit code 1).
enum class ErrorClass { Input, Internal };

/// Named library error. `name()` is the stable identifier (e.g. "NotSL2"),
/// `witness()` carries the data that demonstrates the failure.
class Error : public std::runtime_error {
 public:
  Error(std::string name, std::string witness,
        ErrorClass cls = ErrorClass::Input)
      : std::runtime_error(name + ": " + witness),
        name_(std::move(name)),
        witness_(std::move(witness)),
        class_(cls) {}

  const std::string& name() const noexcept { return name_; }
  const std::string& witness() const noexcept { return witness_; }
  ErrorClass error_class() const noexcept { return class_; }

 private:
  std::string name_;
  std::string witness_;
  ErrorClass class_;
};

[[noreturn]] inline void fail(std::string name, std::string witness,
                              ErrorClass cls = ErrorClass::Input) {
  throw Error(std::move(name), std::move(witness), cls);
}

}  // namespace grext
