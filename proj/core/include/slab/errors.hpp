#pragma once

#include <stdexcept>
#include <string>

namespace slab {

// Machine-readable error codes, mirrored in CLI JSON error objects.
enum class errc {
  field_mismatch,
  division_by_zero,
  resource_limit,
  shape,
  nilpotency,
  membership,
  stability,
  semisimplicity,
  splitting,
  precondition,
  domain,
  closure,
  bad_input,
};

const char* errc_name(errc code);

class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  errc code() const { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) {
  throw error(code, what);
}

}  // namespace slab
