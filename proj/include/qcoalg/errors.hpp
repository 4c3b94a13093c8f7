#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qcoalg {

// A precondition of one of the library modules was violated. `module()` names
// the module whose contract failed (quiver, exactlinalg, pathcoalg, ...).
class ContractError : public std::logic_error {
 public:
  ContractError(std::string module, const std::string& what)
      : std::logic_error(module + ": " + what), module_(std::move(module)) {}

  const std::string& module() const noexcept { return module_; }

 private:
  std::string module_;
};

// Malformed input text. Line and column are 1-based; 0 means unknown.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line = 0,
             std::size_t column = 0)
      : std::runtime_error(format(what, line, column)),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  static std::string format(const std::string& what, std::size_t line,
                            std::size_t column) {
    if (line == 0)
      return column == 0 ? what : "column " + std::to_string(column) + ": " + what;
    return std::to_string(line) + ":" + std::to_string(column) + ": " + what;
  }

  std::size_t line_;
  std::size_t column_;
};

}  // namespace qcoalg
