#pragma once

#include <stdexcept>
#include <string>

namespace btm {

// Domain error. The CLI maps these to exit code 1; anything else is a bug.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

[[noreturn]] inline void fail(const std::string& what) { throw Error(what); }

inline void require(bool cond, const std::string& what) {
    if (!cond) fail(what);
}

} // namespace btm
