#pragma once

#include <stdexcept>
#include <string>

namespace scf {

/// L_n/Q is wildly ramified at 3, so no normal integral basis exists.
class wild_ramification : public std::domain_error {
  public:
    explicit wild_ramification(std::string const& n)
        : std::domain_error("L_" + n + "/Q is wildly ramified (3 | n and n != 12 mod 27); no normal integral basis") {}
};

class not_invertible : public std::domain_error {
  public:
    using std::domain_error::domain_error;
};

/// An internal consistency check failed; this always indicates a bug.
class verification_failure : public std::logic_error {
  public:
    using std::logic_error::logic_error;
};

/// Numeric evaluation did not reach the requested residual; retry with more bits.
class precision_insufficient : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

}  // namespace scf
