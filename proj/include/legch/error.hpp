#pragma once

#include <stdexcept>
#include <string>

namespace legch {

enum class Errc {
  ParseError,
  SlotOutOfRange,
  OpenDiagram,       // strand count nonzero at the right end
  NoPotential,       // Maslov constraint contradiction (nonzero rotation)
  CapExceeded,       // disk sweep hit the interval-multiplicity cap
  NotAComplex,       // d^2 != 0 at matrix level
  NoExtension,       // augmentation does not extend over a surgery
  PatternMismatch,   // surgery site does not match the move pattern
  PotentialMismatch, // connected sum across unequal Maslov potentials
  SameComponent,     // connected sum within one component
  WindowMismatch,    // interlace window invalid
  UnknownEntry,
  ParameterOutOfRange,
  BadInput,
};

inline const char* errc_name(Errc c) {
  switch (c) {
    case Errc::ParseError: return "ParseError";
    case Errc::SlotOutOfRange: return "SlotOutOfRange";
    case Errc::OpenDiagram: return "OpenDiagram";
    case Errc::NoPotential: return "NoPotential";
    case Errc::CapExceeded: return "CapExceeded";
    case Errc::NotAComplex: return "NotAComplex";
    case Errc::NoExtension: return "NoExtension";
    case Errc::PatternMismatch: return "PatternMismatch";
    case Errc::PotentialMismatch: return "PotentialMismatch";
    case Errc::SameComponent: return "SameComponent";
    case Errc::WindowMismatch: return "WindowMismatch";
    case Errc::UnknownEntry: return "UnknownEntry";
    case Errc::ParameterOutOfRange: return "ParameterOutOfRange";
    case Errc::BadInput: return "BadInput";
  }
  return "Error";
}

class Error : public std::runtime_error {
 public:
  Error(Errc c, const std::string& msg)
      : std::runtime_error(std::string(errc_name(c)) + ": " + msg), code_(c) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

}  // namespace legch
