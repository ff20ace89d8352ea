#pragma once

#include <stdexcept>
#include <string>

namespace rainbow {

// Input text that could not be understood (bad header, bad index, self-loop, ...).
// Messages name the offending line where one exists.
class parse_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A construction was invoked on a graph that violates its hypotheses
// (disconnected input, wrong chromatic number, missing cycle, ...).
class hypothesis_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A configured search budget ran out before the answer was established.
class budget_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A conclusion that the underlying mathematics guarantees failed its
// re-verification.  Valid inputs must never trigger this; seeing it means a bug.
class internal_error : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace rainbow
