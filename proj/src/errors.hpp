#pragma once

#include <stdexcept>
#include <string>

namespace dkc {

// Error categories map one-to-one onto CLI exit codes / C API status codes:
// config -> 2, physics/resource -> 3.
enum class ErrorKind {
    config,
    physics,
    resource,
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& msg)
        : std::runtime_error(msg), kind_(kind) {}

    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail_config(const std::string& msg) {
    throw Error(ErrorKind::config, msg);
}

[[noreturn]] inline void fail_physics(const std::string& msg) {
    throw Error(ErrorKind::physics, msg);
}

[[noreturn]] inline void fail_resource(const std::string& msg) {
    throw Error(ErrorKind::resource, msg);
}

} // namespace dkc
