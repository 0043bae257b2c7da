#pragma once

#include <stdexcept>
#include <string>

namespace viko {

// Error categories mirrored by the C API status codes.
enum class ErrorCode {
    argument = 1,
    config = 2,
    io = 3,
    parse = 4,
    init = 5,
    state = 6,
    segmenter = 7,
    insufficient_data = 8,
    internal = 9,
};

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& msg)
        : std::runtime_error(msg), code_(code) {}

    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

inline Error argument_error(const std::string& msg) { return Error(ErrorCode::argument, msg); }
inline Error config_error(const std::string& msg) { return Error(ErrorCode::config, msg); }
inline Error io_error(const std::string& msg) { return Error(ErrorCode::io, msg); }
inline Error parse_error(const std::string& msg) { return Error(ErrorCode::parse, msg); }
inline Error init_error(const std::string& msg) { return Error(ErrorCode::init, msg); }
inline Error segmenter_error(const std::string& msg) { return Error(ErrorCode::segmenter, msg); }

} // namespace viko
