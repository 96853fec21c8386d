#ifndef CLIQUECOL_GUARD_ERRORS_HH
#define CLIQUECOL_GUARD_ERRORS_HH 1

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cliquecol
{
    /// Raised when an argument lies outside an operation's domain.
    class ParameterError : public std::invalid_argument
    {
        public:
            explicit ParameterError(const std::string & what) :
                std::invalid_argument(what)
            {
            }
    };

    /// Raised by the edge-list reader; carries the 1-based line number of the offending line.
    class ParseError : public std::runtime_error
    {
        private:
            std::size_t _line;

        public:
            ParseError(std::size_t line, const std::string & what) :
                std::runtime_error("line " + std::to_string(line) + ": " + what),
                _line(line)
            {
            }

            auto line() const -> std::size_t { return _line; }
    };

    /// The maximal clique count exceeded the caller's guard. Never a silent truncation.
    class CliqueOverflow : public std::runtime_error
    {
        private:
            std::size_t _limit;

        public:
            explicit CliqueOverflow(std::size_t limit) :
                std::runtime_error("maximal clique count exceeds limit " + std::to_string(limit)),
                _limit(limit)
            {
            }

            auto limit() const -> std::size_t { return _limit; }
    };

    /// An exact search ran out of time or nodes. The bounds are the best known when it stopped.
    class BudgetExhausted : public std::runtime_error
    {
        private:
            long long _lower, _upper;

        public:
            BudgetExhausted(const std::string & what, long long lower, long long upper) :
                std::runtime_error(what + " (budget exhausted; best bounds " + std::to_string(lower)
                    + ".." + std::to_string(upper) + ")"),
                _lower(lower),
                _upper(upper)
            {
            }

            auto lower() const -> long long { return _lower; }
            auto upper() const -> long long { return _upper; }
    };
}

#endif
