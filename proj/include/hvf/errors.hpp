#ifndef HVF_ERRORS_HPP
#define HVF_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace hvf
{

// Precondition violations: mu < 3, l > r, mismatched fields or dimensions.
class domain_error : public std::domain_error
{
public:
    using std::domain_error::domain_error;
};

class division_error : public std::domain_error
{
public:
    using std::domain_error::domain_error;
};

class unsupported_error : public std::domain_error
{
public:
    using std::domain_error::domain_error;
};

// Raised when the closure pivot of the Eisenstein recursion vanishes at an
// order that has not been pinned, or when the residual there is inconsistent.
class degenerate_recursion : public std::runtime_error
{
public:
    degenerate_recursion(int mu, int order, bool inconsistent = false)
        : std::runtime_error(make_message(mu, order, inconsistent)), mu_(mu), order_(order),
          inconsistent_(inconsistent)
    {
    }
    int mu() const noexcept { return mu_; }
    int order() const noexcept { return order_; }
    bool inconsistent() const noexcept { return inconsistent_; }

private:
    static std::string make_message(int mu, int order, bool inconsistent)
    {
        return std::string("degenerate recursion at order ") + std::to_string(order) + " (mu=" + std::to_string(mu) +
               (inconsistent ? "): pivot vanishes and residual is nonzero" : "): pivot vanishes, coefficient is free");
    }
    int mu_;
    int order_;
    bool inconsistent_;
};

// A target series is not in the span of the given basis; order() is the first
// q-order at which no combination matches.
class residual_error : public std::runtime_error
{
public:
    explicit residual_error(int order)
        : std::runtime_error("target not in span of basis: first mismatch at order " + std::to_string(order)),
          order_(order)
    {
    }
    int order() const noexcept { return order_; }

private:
    int order_;
};

class calibration_error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

class evaluation_error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

} // namespace hvf

#endif
