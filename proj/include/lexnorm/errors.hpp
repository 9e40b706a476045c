#pragma once

#include <stdexcept>

namespace lexnorm {

/// A corpus file could not be opened or contained no usable data.
class LoadError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A frequency corpus yielded no alphabetic words.
class TrainingError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Input to the phonetic encoder was not purely alphabetic.
class EncodingError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace lexnorm
