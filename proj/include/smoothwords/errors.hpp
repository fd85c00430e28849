#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace smoothwords {

/// Base class for every error raised by the library.
class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A letter or parameter outside the accepted domain (e.g. a letter not in
/// the alphabet, a non-positive letter, an inverted alphabet).
class invalid_argument : public error {
 public:
  using error::error;
};

/// Some run is longer than b, so no closure exists.
class not_closable : public error {
 public:
  not_closable(std::size_t run_index, std::size_t run_length)
      : error("run " + std::to_string(run_index) + " has length " +
              std::to_string(run_length) + ", longer than b"),
        run_index_(run_index) {}
  std::size_t run_index() const noexcept { return run_index_; }

 private:
  std::size_t run_index_;
};

/// The word violates the differentiability rule at `run_index`.
class not_differentiable : public error {
 public:
  not_differentiable(std::size_t run_index, const std::string& what)
      : error(what), run_index_(run_index) {}
  std::size_t run_index() const noexcept { return run_index_; }

 private:
  std::size_t run_index_;
};

/// The closure is undefined or is not differentiable.
class not_closurely_differentiable : public error {
 public:
  not_closurely_differentiable(std::size_t run_index, const std::string& what)
      : error(what), run_index_(run_index) {}
  std::size_t run_index() const noexcept { return run_index_; }

 private:
  std::size_t run_index_;
};

class precondition_violated : public error {
 public:
  using error::error;
};

/// A checked identity failed. Carries the offending level and both sides.
class certification_failure : public error {
 public:
  certification_failure(std::size_t level, std::string expected,
                        std::string actual, const std::string& what)
      : error(what),
        level_(level),
        expected_(std::move(expected)),
        actual_(std::move(actual)) {}
  std::size_t level() const noexcept { return level_; }
  const std::string& expected() const noexcept { return expected_; }
  const std::string& actual() const noexcept { return actual_; }

 private:
  std::size_t level_;
  std::string expected_;
  std::string actual_;
};

class parse_error : public error {
 public:
  parse_error(std::size_t position, const std::string& what)
      : error(what + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace smoothwords
