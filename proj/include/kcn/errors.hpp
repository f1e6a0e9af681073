#pragma once

#include <stdexcept>

namespace kcn {

// Error families the command-line tool maps to distinct exit codes.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NetworkError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace kcn
