#pragma once

#include <stdexcept>
#include <string>

namespace spheremap {

/// Base class for all spheremap errors. Messages name the violated
/// precondition so CLI diagnostics can surface them verbatim.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

class NonUnitVector : public Error {
 public:
  using Error::Error;
};

class DegenerateArc : public Error {
 public:
  using Error::Error;
};

class DegenerateTriangle : public Error {
 public:
  using Error::Error;
};

class BadSampleCount : public Error {
 public:
  using Error::Error;
};

class PoleParallel : public Error {
 public:
  using Error::Error;
};

class OutOfDomain : public Error {
 public:
  using Error::Error;
};

class OutOfImage : public Error {
 public:
  using Error::Error;
};

class NearPole : public Error {
 public:
  using Error::Error;
};

class EmptyGrid : public Error {
 public:
  using Error::Error;
};

class BadWindow : public Error {
 public:
  using Error::Error;
};

class BadParallels : public Error {
 public:
  using Error::Error;
};

class BeyondApex : public Error {
 public:
  using Error::Error;
};

class EmptyPathSet : public Error {
 public:
  using Error::Error;
};

class SpecParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace spheremap
