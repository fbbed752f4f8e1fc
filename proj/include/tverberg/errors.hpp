#ifndef TVERBERG_ERRORS_HPP
#define TVERBERG_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace tverberg {

/** Thrown when an operation's precondition on its inputs is violated. */
class InvalidInput : public std::invalid_argument
{
    public:
        explicit InvalidInput(const std::string& what) : std::invalid_argument(what) {}
};

/** Thrown when an instance exceeds the size an exhaustive routine will accept. */
class BudgetExceeded : public std::runtime_error
{
    public:
        explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

/** Thrown when a rejection sampler runs out of retries. */
class RetriesExhausted : public std::runtime_error
{
    public:
        explicit RetriesExhausted(const std::string& what) : std::runtime_error(what) {}
};

} // namespace tverberg

#endif
