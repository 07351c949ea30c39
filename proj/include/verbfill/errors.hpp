#ifndef VERBFILL_ERRORS_HPP
#define VERBFILL_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace verbfill {

// Malformed user-supplied data: documents, gold files, config, thesaurus.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Invalid UTF-8; carries the byte offset of the offending unit.
class Utf8Error : public InputError {
 public:
  Utf8Error(const std::string& what, std::size_t byte_offset)
      : InputError(what + " at byte " + std::to_string(byte_offset)),
        byte_offset_(byte_offset) {}
  std::size_t byte_offset() const { return byte_offset_; }

 private:
  std::size_t byte_offset_;
};

// Index file is not ours / wrong version / internally inconsistent.
class IndexFormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Index file ends before the declared payload.
class IndexTruncatedError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace verbfill

#endif  // VERBFILL_ERRORS_HPP
