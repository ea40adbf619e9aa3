#pragma once

#include <stdexcept>
#include <string>

namespace l2lab {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// precondition or domain violation (t on the cut, z outside the half-plane, ...)
class DomainError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

// a truncated sum did not reach its tolerance within max_terms
class ConvergenceError : public Error {
 public:
  using Error::Error;
};

class CorpusError : public Error {
 public:
  using Error::Error;
};

// lookup of an id that is not in the corpus
class NotFoundError : public Error {
 public:
  using Error::Error;
};

}  // namespace l2lab
