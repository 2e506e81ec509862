#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace equiknot {

// Computation errors carry a stable machine-readable name (what the CLI echoes
// in its {"error": ...} payload) plus a human-readable detail string.
class Error : public std::runtime_error {
public:
    Error(std::string name, const std::string& detail)
        : std::runtime_error(name + ": " + detail), name_(std::move(name)) {}

    const std::string& name() const { return name_; }

private:
    std::string name_;
};

[[noreturn]] inline void fail(const std::string& name, const std::string& detail) {
    throw Error(name, detail);
}

inline void require(bool ok, const std::string& name, const std::string& detail) {
    if (!ok)
        fail(name, detail);
}

} // namespace equiknot
