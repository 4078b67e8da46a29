#pragma once

#include <stdexcept>
#include <string>

namespace verma {

/// Base of every error raised by the library.
class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or out-of-domain input (bad text, invalid Cartan matrix, ...).
class invalid_input : public error {
 public:
  using error::error;
};

/// A series coefficient was requested beyond the order it is known to.
class truncation_error : public error {
 public:
  truncation_error(std::size_t requested, std::size_t order)
      : error("coefficient u^-" + std::to_string(requested) +
              " requested but series is only known to order " + std::to_string(order)),
        requested_(requested),
        order_(order) {}

  std::size_t requested() const noexcept { return requested_; }
  std::size_t order() const noexcept { return order_; }

 private:
  std::size_t requested_;
  std::size_t order_;
};

/// Not enough data to run a procedure at the requested budget.
class insufficient_data : public error {
 public:
  using error::error;
};

/// Input is valid but outside what the algorithms support (non-split polynomials, ...).
class unsupported_input : public error {
 public:
  using error::error;
};

/// Root generation exceeded the height cap: the Cartan matrix is not of finite type.
class non_finite_type : public error {
 public:
  using error::error;
};

/// An internal consistency check failed. Always a bug.
class invariant_breach : public error {
 public:
  using error::error;
};

}  // namespace verma
