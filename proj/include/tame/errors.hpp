#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace tame {

/* Carries a stable machine-readable code alongside the human message.
   Codes are part of the CLI contract (JSON "code" field, exit status 2
   for verification failures). */
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& msg)
        : std::runtime_error(code + ": " + msg), code_(std::move(code)) {}

    const std::string& code() const { return code_; }

private:
    std::string code_;
};

[[noreturn]] inline void fail(const std::string& code, const std::string& msg) {
    throw Error(code, msg);
}

}  // namespace tame
