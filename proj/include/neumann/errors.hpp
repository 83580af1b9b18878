#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace neumann {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NotUnimodular : public Error {
 public:
  using Error::Error;
};

class NotCoprime : public Error {
 public:
  using Error::Error;
};

class BadCase : public Error {
 public:
  using Error::Error;
};

class NotAdjacent : public Error {
 public:
  using Error::Error;
};

/// A generator index outside the finite window was required.
class OutOfWindow : public Error {
 public:
  explicit OutOfWindow(std::int64_t index)
      : Error("index " + std::to_string(index) + " lies outside the window"),
        index_(index) {}

  std::int64_t index() const noexcept { return index_; }

 private:
  std::int64_t index_;
};

/// The window's data is not a consistent involution (descent detected it).
class InconsistentWindow : public Error {
 public:
  using Error::Error;
};

class NotInCoset : public Error {
 public:
  using Error::Error;
};

class UnknownBlock : public Error {
 public:
  using Error::Error;
};

class NotAnEdge : public Error {
 public:
  using Error::Error;
};

class NoChainWithinBound : public Error {
 public:
  using Error::Error;
};

class NoSuchMap : public Error {
 public:
  using Error::Error;
};

class Unrealizable : public Error {
 public:
  using Error::Error;
};

class TooFewBlocks : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace neumann
