#pragma once

#include <stdexcept>
#include <string>

namespace optseq {

enum class Errc {
    invalid_argument,
    parse_error,
    period_mismatch,
    unsupported,
    internal,
};

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& msg) : std::runtime_error(msg), code_(code) {}
    Errc code() const { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& msg) { throw Error(code, msg); }

} // namespace optseq
