#pragma once

#include <stdexcept>
#include <string>

namespace ftml {

// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed input file (embedding file, TSV, dict, config).
struct ParseError : Error {
    using Error::Error;
};

// Invalid or inconsistent configuration.
struct ConfigError : Error {
    using Error::Error;
};

// Filesystem / stream failure, truncated or mismatched binary payload.
struct IoError : Error {
    using Error::Error;
};

// Loaded synonym dictionary no longer matches the counter-fitted file it
// was built from. Callers may treat this as a warning.
struct StaleDictionaryError : Error {
    using Error::Error;
};

}  // namespace ftml
