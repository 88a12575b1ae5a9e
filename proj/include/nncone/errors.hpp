#pragma once

#include <stdexcept>
#include <string>

namespace nncone {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// polycore
class NonPositiveInput : public Error { using Error::Error; };
class NoConvergence : public Error { using Error::Error; };

// exact1d
class NotNonnegative : public Error { using Error::Error; };
class IllConditioned : public Error { using Error::Error; };

// families
class InvalidSpec : public Error { using Error::Error; };

// membership
class NoUpperRefutation : public Error { using Error::Error; };
class BadBracket : public Error { using Error::Error; };

}  // namespace nncone
