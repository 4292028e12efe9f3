#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hibi {

enum class Errc {
  UnknownElement,
  CycleDetected,
  RedundantCover,
  Unbounded,
  NotComparable,
  SizeLimitExceeded,
  NotALattice,
  NotDistributive,
  NotACover,
  BadParameters,
  IndexOutOfRange,
  BlocksOverlapOrTouch,
  NotEmbedded,
  NotGenerators,
  GradingMismatch,
  UnsupportedFace,
  ParseError,
};

constexpr std::string_view to_string(Errc code) {
  switch (code) {
    case Errc::UnknownElement: return "UnknownElement";
    case Errc::CycleDetected: return "CycleDetected";
    case Errc::RedundantCover: return "RedundantCover";
    case Errc::Unbounded: return "Unbounded";
    case Errc::NotComparable: return "NotComparable";
    case Errc::SizeLimitExceeded: return "SizeLimitExceeded";
    case Errc::NotALattice: return "NotALattice";
    case Errc::NotDistributive: return "NotDistributive";
    case Errc::NotACover: return "NotACover";
    case Errc::BadParameters: return "BadParameters";
    case Errc::IndexOutOfRange: return "IndexOutOfRange";
    case Errc::BlocksOverlapOrTouch: return "BlocksOverlapOrTouch";
    case Errc::NotEmbedded: return "NotEmbedded";
    case Errc::NotGenerators: return "NotGenerators";
    case Errc::GradingMismatch: return "GradingMismatch";
    case Errc::UnsupportedFace: return "UnsupportedFace";
    case Errc::ParseError: return "ParseError";
  }
  return "Unknown";
}

/// Domain error raised by every hibi operation. The code is stable and is
/// what callers (and the CLI) switch on; the message carries the offending
/// elements or the name of the violated size guard.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace hibi
