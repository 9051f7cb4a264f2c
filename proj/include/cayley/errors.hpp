#pragma once

#include <stdexcept>
#include <string>

namespace cayley {

// Root of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A token sequence handed to a decoder or parser is not a normal form.
class NotInLanguage : public Error {
 public:
  using Error::Error;
};

// A generator word contains a letter outside the representation's generator set.
class BadWord : public Error {
 public:
  using Error::Error;
};

// Input for a tape set contains the start marker or the blank.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

// A tape program tried to overwrite the start marker or to move left of it.
class TapeFault : public Error {
 public:
  using Error::Error;
};

// The output prefix of tape 0 contains a symbol outside the declared alphabet.
class OutputFault : public Error {
 public:
  using Error::Error;
};

// Guess-and-check inversion found no candidate; unreachable for valid input.
class NoCaseMatched : public Error {
 public:
  using Error::Error;
};

}  // namespace cayley
