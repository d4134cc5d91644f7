#pragma once

#include <stdexcept>
#include <string>

namespace sipq {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// partitions
class InvalidPartition : public Error { public: using Error::Error; };

// series
class TruncationMismatch : public Error { public: using Error::Error; };
class PrecisionLoss : public Error { public: using Error::Error; };
class NotAUnit : public Error { public: using Error::Error; };
class NonPositiveTail : public Error { public: using Error::Error; };
class NegativeQDegree : public Error { public: using Error::Error; };

// qseries
class NonConvergent : public Error { public: using Error::Error; };
class DomainError : public Error { public: using Error::Error; };

// sip
class NotInClass : public Error { public: using Error::Error; };
class LengthViolation : public Error { public: using Error::Error; };
class NonEvenMu : public Error { public: using Error::Error; };
class InternalError : public Error { public: using Error::Error; };

// identities
class UnknownTheorem : public Error { public: using Error::Error; };

// Malformed textual input (partition literals, class tags, selectors).
class ParseError : public Error { public: using Error::Error; };

}  // namespace sipq
