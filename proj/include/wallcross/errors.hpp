#pragma once

#include <stdexcept>
#include <string>

namespace wallcross {

struct NonExactDivision : std::runtime_error {
    explicit NonExactDivision(const std::string& what) : std::runtime_error(what) {}
};

struct BadDenominator : std::runtime_error {
    explicit BadDenominator(const std::string& what) : std::runtime_error(what) {}
};

struct NonIntegral : std::runtime_error {
    explicit NonIntegral(const std::string& what) : std::runtime_error(what) {}
};

struct NegativeCoefficient : std::runtime_error {
    explicit NegativeCoefficient(const std::string& what) : std::runtime_error(what) {}
};

struct NegativeExponent : std::runtime_error {
    explicit NegativeExponent(const std::string& what) : std::runtime_error(what) {}
};

struct NotAWall : std::invalid_argument {
    explicit NotAWall(const std::string& what) : std::invalid_argument(what) {}
};

struct ParityMismatch : std::invalid_argument {
    explicit ParityMismatch(const std::string& what) : std::invalid_argument(what) {}
};

struct IndexNotInSet : std::invalid_argument {
    explicit IndexNotInSet(const std::string& what) : std::invalid_argument(what) {}
};

struct DegreeTooLow : std::invalid_argument {
    explicit DegreeTooLow(const std::string& what) : std::invalid_argument(what) {}
};

struct PoleOrderTooSmall : std::invalid_argument {
    explicit PoleOrderTooSmall(const std::string& what) : std::invalid_argument(what) {}
};

struct TruncationNotZero : std::runtime_error {
    explicit TruncationNotZero(const std::string& what) : std::runtime_error(what) {}
};

struct RangeMismatch : std::runtime_error {
    explicit RangeMismatch(const std::string& what) : std::runtime_error(what) {}
};

} // namespace wallcross
