#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cfroots {

// A caller broke a documented precondition (zero polynomial, A(0) = 0 where a
// nonzero constant term is required, ...).
class precondition_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class not_squarefree_error : public precondition_error {
 public:
  not_squarefree_error() : precondition_error("polynomial is not square-free") {}
};

// The CF tree grew past the configured depth cap. For square-free input the
// transformed polynomials must reach at most one sign variation after finitely
// many partial quotients (Vincent/Alesina-Galuzzi), so this signals either a
// too-small cap or a broken invariant.
class depth_exceeded_error : public std::runtime_error {
 public:
  explicit depth_exceeded_error(std::size_t cap)
      : std::runtime_error(
            "continued-fraction tree exceeded depth cap " + std::to_string(cap) +
            ": termination guarantee violated (transformed polynomial should have "
            "no more than one sign variation by now)"),
        cap_(cap) {}
  std::size_t cap() const noexcept { return cap_; }

 private:
  std::size_t cap_;
};

// Something that cannot happen when preconditions hold.
class internal_error : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class parse_error : public std::runtime_error {
 public:
  parse_error(const std::string& what, std::size_t position)
      : std::runtime_error(what + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace cfroots
