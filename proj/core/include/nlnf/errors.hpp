#ifndef NLNF_ERRORS_HPP
#define NLNF_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace nlnf {

/// Base of every error raised by the library.
class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class division_by_zero : public error {
 public:
  using error::error;
};

/// Raised by field construction when the defining polynomial factors.
/// factor() is a nontrivial monic factor in the same textual form as
/// Polynomial::to_string.
class reducible_polynomial : public error {
 public:
  reducible_polynomial(const std::string& what, std::string factor)
      : error(what), factor_(std::move(factor)) {}
  const std::string& factor() const noexcept { return factor_; }

 private:
  std::string factor_;
};

class invalid_polynomial : public error {
 public:
  using error::error;
};

class field_mismatch : public error {
 public:
  using error::error;
};

class mode_mismatch : public error {
 public:
  using error::error;
};

/// The element lies in the trace kernel and has no projective class in N0.
class not_projectivizable : public error {
 public:
  using error::error;
};

/// Certified refinement hit the configured precision cap.
class undecided_numerically : public error {
 public:
  using error::error;
};

class signless_element : public error {
 public:
  using error::error;
};

class bandwidth_error : public error {
 public:
  using error::error;
};

class not_an_automorphism : public error {
 public:
  using error::error;
};

class not_invertible : public error {
 public:
  using error::error;
};

class domain_error : public error {
 public:
  using error::error;
};

class parse_error : public error {
 public:
  parse_error(const std::string& what, std::size_t position, std::string expected)
      : error(what + " at position " + std::to_string(position) +
              (expected.empty() ? std::string() : " (expected " + expected + ")")),
        position_(position),
        expected_(std::move(expected)) {}
  std::size_t position() const noexcept { return position_; }
  const std::string& expected() const noexcept { return expected_; }

 private:
  std::size_t position_;
  std::string expected_;
};

}  // namespace nlnf

#endif  // NLNF_ERRORS_HPP
