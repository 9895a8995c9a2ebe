#pragma once

#include <stdexcept>
#include <string>

namespace forge {

enum class ErrorCode {
    runtime = 1,
    invalid_argument = 2,
    io = 3,
    config = 4,
    numeric = 5,
};

// Single exception type for the whole library; the code survives the trip
// through the C API as a status value.
class Error : public std::runtime_error {
  public:
    explicit Error(std::string msg, ErrorCode code = ErrorCode::runtime)
        : std::runtime_error(std::move(msg)), code_(code) {}

    ErrorCode code() const { return code_; }

  private:
    ErrorCode code_;
};

inline void require(bool cond, const std::string& msg,
                    ErrorCode code = ErrorCode::invalid_argument) {
    if (!cond) throw Error(msg, code);
}

} // namespace forge
