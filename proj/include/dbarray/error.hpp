// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace dbarray {

enum class errc {
    invalid_argument,
    invalid_modulus,
    singular_register,
    not_coprime,
    invalid_length,
    nonexistence,
    resource_exhausted,
    oracle_size,
    precondition,
    parse,
};

inline std::string_view to_string(errc code) noexcept
{
    switch (code) {
    case errc::invalid_argument: return "invalid-argument";
    case errc::invalid_modulus: return "invalid-modulus";
    case errc::singular_register: return "singular-register";
    case errc::not_coprime: return "not-coprime";
    case errc::invalid_length: return "invalid-length";
    case errc::nonexistence: return "nonexistence";
    case errc::resource_exhausted: return "resource-exhausted";
    case errc::oracle_size: return "oracle-size";
    case errc::precondition: return "precondition";
    case errc::parse: return "parse";
    }
    return "unknown";
}

/// Every failure raised by the library carries one of the codes above.
class error : public std::runtime_error {
public:
    error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}

    errc code() const noexcept { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw error(code, what); }

inline void require(bool condition, errc code, const std::string& what)
{
    if (!condition)
        fail(code, what);
}

} // namespace dbarray
