#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace clonedex {

using BlockId = std::uint32_t;
using TokenId = std::uint32_t;

/// Extraction unit: whole file, method/function definition, or
/// brace-delimited statement group.
enum class Granularity : std::uint8_t { File = 0, Method = 1, Block = 2 };

/// Which project combinations a detection run reports.
enum class Scope : std::uint8_t { Intra = 0, Inter = 1, Both = 2 };

struct NormalizationConfig {
    bool rename_identifiers = false;
    bool abstract_literals = false;

    bool operator==(const NormalizationConfig&) const = default;
};

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

#define CLONEDEX_DEFINE_ERROR(name)                  \
    class name : public Error {                      \
    public:                                          \
        using Error::Error;                          \
    }

CLONEDEX_DEFINE_ERROR(DomainError);
CLONEDEX_DEFINE_ERROR(UnsupportedLanguage);
CLONEDEX_DEFINE_ERROR(DuplicateBlock);
CLONEDEX_DEFINE_ERROR(UnknownBlock);
CLONEDEX_DEFINE_ERROR(CorruptIndex);
CLONEDEX_DEFINE_ERROR(VersionMismatch);
CLONEDEX_DEFINE_ERROR(IndexNotLoaded);
CLONEDEX_DEFINE_ERROR(NoBlockAtLocation);
CLONEDEX_DEFINE_ERROR(MutationInapplicable);
CLONEDEX_DEFINE_ERROR(IoFailure);
CLONEDEX_DEFINE_ERROR(WatchSetupFailure);

#undef CLONEDEX_DEFINE_ERROR

/// Non-fatal per-file problem, surfaced to the caller instead of thrown.
struct Warning {
    std::string file;
    std::string message;
};

inline const char* to_string(Granularity g) {
    switch (g) {
        case Granularity::File: return "file";
        case Granularity::Method: return "method";
        case Granularity::Block: return "block";
    }
    return "?";
}

inline Granularity parse_granularity(std::string_view s) {
    if (s == "file") return Granularity::File;
    if (s == "method") return Granularity::Method;
    if (s == "block") return Granularity::Block;
    throw DomainError("unknown granularity: " + std::string(s));
}

inline const char* to_string(Scope s) {
    switch (s) {
        case Scope::Intra: return "intra";
        case Scope::Inter: return "inter";
        case Scope::Both: return "both";
    }
    return "?";
}

inline Scope parse_scope(std::string_view s) {
    if (s == "intra") return Scope::Intra;
    if (s == "inter") return Scope::Inter;
    if (s == "both") return Scope::Both;
    throw DomainError("unknown scope: " + std::string(s));
}

/// Stable 64-bit string hash (FNV-1a). Used wherever a hash must not vary
/// across runs or standard library implementations.
constexpr std::uint64_t fnv1a64(std::string_view s) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

}  // namespace clonedex
