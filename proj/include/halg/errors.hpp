#pragma once

#include <stdexcept>
#include <string>

namespace halg {

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct CompositionNotZero : Error {
    explicit CompositionNotZero(const std::string& msg) : Error(msg) {}
};

struct DSquareNonzero : Error {
    explicit DSquareNonzero(const std::string& msg) : Error(msg) {}
};

struct NotClosed : Error {
    explicit NotClosed(const std::string& msg) : Error(msg) {}
};

struct SizeLimitExceeded : Error {
    explicit SizeLimitExceeded(const std::string& msg) : Error(msg) {}
};

struct MixingDetected : Error {
    explicit MixingDetected(const std::string& msg) : Error(msg) {}
};

struct NotSimplyConnectedProxy : Error {
    explicit NotSimplyConnectedProxy(const std::string& msg) : Error(msg) {}
};

struct ParseError : Error {
    explicit ParseError(const std::string& msg) : Error(msg) {}
};

}  // namespace halg
