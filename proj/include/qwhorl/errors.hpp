#pragma once

#include <stdexcept>
#include <string>

namespace qwhorl {

// Invalid user-supplied configuration (bad flag value, unknown figure id, ...).
class ConfigError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Failure to read or write a file. The message always carries the path.
class IoError : public std::runtime_error {
public:
    IoError(const std::string& path, const std::string& what)
        : std::runtime_error(path + ": " + what), path_(path) {}

    const std::string& path() const noexcept { return path_; }

private:
    std::string path_;
};

}  // namespace qwhorl
