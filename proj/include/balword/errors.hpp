#pragma once

#include <stdexcept>
#include <string>

namespace balword {

// A proven invariant of the construction failed at runtime. This signals an
// implementation bug or an unhandled density, never a legal state; callers
// should abort rather than degrade.
struct invariant_error : std::runtime_error {
    explicit invariant_error(const std::string& what) : std::runtime_error(what) {}
};

// A user-supplied sequence violated the hypothesis it declared (difference
// value outside {a, a-1}, entry not representable, index out of range).
struct sequence_error : std::runtime_error {
    explicit sequence_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace balword
