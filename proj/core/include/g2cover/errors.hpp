#pragma once

#include <stdexcept>
#include <string>

namespace g2cover {

// Error taxonomy shared by every module. The CLI maps `what` to its JSON
// error payload and the category name to the "error" field, so the names
// here are part of the external interface.
enum class Errc {
  ExcludedParameter,    // parameter hits a forbidden factor (factor named in message)
  InvalidInput,
  InvalidRoot,          // z is not a root of F4
  IdentityViolation,    // an exact identity produced a nonzero residual
  DegenerateQuadratic,  // leading coefficient vanished
  ConstructionFailure,  // an exact division that must succeed did not
  SingularModel,        // curve discriminant is zero
  DegenerateSubcover,   // lambda in {0, 1, infinity}
  J2Zero,               // absolute invariants undefined on the J2 = 0 stratum
  NotOnLocus,           // invariant triple does not satisfy the locus equations
  Ambiguous,            // recovery produced more than one candidate
  Precision,            // numeric oracle failed to converge
  MixedExtension,       // arithmetic across two different quadratic extensions
  TheoremViolation,     // a verification report came back red
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(message), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace g2cover
