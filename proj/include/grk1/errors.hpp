#pragma once

#include <stdexcept>
#include <string>

namespace grk1 {

// All library errors carry a stable machine-readable code alongside the
// human message. Codes are listed in README.md and surface in CLI reports.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& message)
        : std::runtime_error(message), code_(std::move(code)) {}

    const std::string& code() const { return code_; }

private:
    std::string code_;
};

inline Error group_mismatch(const std::string& msg)   { return Error("group-mismatch", msg); }
inline Error ring_mismatch(const std::string& msg)    { return Error("ring-mismatch", msg); }
inline Error degree_mismatch(const std::string& msg)  { return Error("degree-mismatch", msg); }
inline Error degree_law_error(const std::string& msg) { return Error("degree-law", msg); }
inline Error unsupported(const std::string& msg)      { return Error("unsupported-operation", msg); }
inline Error witness_unavailable(const std::string& msg) { return Error("witness-unavailable", msg); }
inline Error not_invertible(const std::string& msg)   { return Error("not-invertible", msg); }
inline Error precondition(const std::string& msg)     { return Error("precondition", msg); }
inline Error truncated_error(const std::string& msg)  { return Error("truncated", msg); }
inline Error parse_error(const std::string& msg)      { return Error("parse", msg); }
inline Error invalid_argument(const std::string& msg) { return Error("invalid-argument", msg); }

} // namespace grk1
