#pragma once

#include <stdexcept>
#include <string>

namespace stirlab {

// Thrown when a request would blow past a configured table cap or an
// enumeration guard. Distinct from std::invalid_argument so callers can
// tell "you asked for something huge" from "you asked for nonsense";
// the CLI maps the former to exit code 3 and the latter to exit code 2.
class cap_error : public std::runtime_error {
  public:
    explicit cap_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace stirlab
