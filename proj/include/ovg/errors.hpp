#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ovg {

class error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Bad arguments or malformed domain input; CLI maps these to exit code 1.
class validation_error : public error {
  public:
    using error::error;
};

// Input parsing failure; carries the 1-based line number when known.
class parse_error : public validation_error {
  public:
    parse_error(const std::string& message, std::size_t line)
        : validation_error(message), line_(line) {}

    std::size_t line() const { return line_; }

  private:
    std::size_t line_;
};

// Filesystem-level failure; CLI maps these to exit code 2.
class io_error : public error {
  public:
    using error::error;
};

// Rejected graph stream; code identifies the first check that failed.
class format_error : public error {
  public:
    enum class code {
        truncated,
        bad_magic,
        bad_version,
        bad_crc,
        bad_header,
        bad_permutation,
        bad_count,
        bad_piece,
        bad_padding,
    };

    format_error(code c, const std::string& message) : error(message), code_(c) {}

    code what_code() const { return code_; }

  private:
    code code_;
};

} // namespace ovg
