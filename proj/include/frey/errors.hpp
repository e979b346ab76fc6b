#pragma once

#include <stdexcept>
#include <string>

namespace frey {

// Error families map 1:1 onto CLI exit codes: rejected_input -> 2,
// invariant_violation -> 3, anything else -> 1.

struct rejected_input : std::runtime_error {
    explicit rejected_input(const std::string& what) : std::runtime_error(what) {}
};

struct invariant_violation : std::runtime_error {
    explicit invariant_violation(const std::string& what) : std::runtime_error(what) {}
};

struct degenerate_curve : rejected_input {
    explicit degenerate_curve(const std::string& what) : rejected_input(what) {}
};

struct undefined_valuation : rejected_input {
    explicit undefined_valuation(const std::string& what) : rejected_input(what) {}
};

// Internal consistency check that survives NDEBUG builds.
inline void require(bool cond, const std::string& what) {
    if (!cond) throw invariant_violation(what);
}

}  // namespace frey
