#pragma once

#include <stdexcept>
#include <string>

namespace qlab {

// Series whose constant term vanishes has no inverse in the power-series ring.
class ZeroConstantTerm : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A denominator Pochhammer factor of a basic hypergeometric term is zero.
class PoleInTermRange : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A parameter environment hits a pole of one of an identity's sides.
class ConstraintViolation : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class UnsupportedN : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

class UnknownIdentity : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

class EmptyPartition : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class AnomalousInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace qlab
