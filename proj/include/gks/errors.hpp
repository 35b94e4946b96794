#pragma once

#include <stdexcept>
#include <string>

namespace gks {

// Exit codes used by the CLI driver.
enum ExitCode {
    kExitOk = 0,
    kExitUsage = 2,
    kExitData = 3,
    kExitMissingIndex = 4,
    kExitRefusal = 5,
};

// Malformed input files, out-of-range values, unknown keywords.
class DataError : public std::runtime_error {
public:
    explicit DataError(const std::string& msg) : std::runtime_error(msg) {}
};

// A query keyword with no content nodes anywhere in the graph.
class NoMatchError : public DataError {
public:
    explicit NoMatchError(const std::string& keyword)
        : DataError("no node contains keyword \"" + keyword + "\""), keyword_(keyword) {}
    const std::string& keyword() const { return keyword_; }

private:
    std::string keyword_;
};

class UsageError : public std::runtime_error {
public:
    explicit UsageError(const std::string& msg) : std::runtime_error(msg) {}
};

// A query needs an index that has not been built yet; the message names
// the build command to run.
class MissingIndexError : public std::runtime_error {
public:
    explicit MissingIndexError(const std::string& msg) : std::runtime_error(msg) {}
};

// Exhaustive search refused because the instance is too large.
class RefusalError : public std::runtime_error {
public:
    explicit RefusalError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace gks
