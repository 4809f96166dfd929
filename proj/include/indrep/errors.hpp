#pragma once

#include <stdexcept>
#include <string>

namespace indrep {

/// Base class for all toolkit errors.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// A constructor parameter makes the requested element singular (e.g. lambda = 0).
class DegenerateParameter : public Error {
public:
  explicit DegenerateParameter(const std::string& msg) : Error(msg) {}
};

/// A matrix that must be unimodular is not (|det - 1| above tolerance).
class DetError : public Error {
public:
  explicit DetError(const std::string& msg) : Error(msg) {}
};

/// The coset coordinate left the big cell (denominator numerically zero).
class BigCellViolation : public Error {
public:
  explicit BigCellViolation(const std::string& msg) : Error(msg) {}
};

/// A coset-label operation received the origin, which is its own double coset.
class ZeroLabel : public Error {
public:
  explicit ZeroLabel(const std::string& msg) : Error(msg) {}
};

/// Two grid functions with different grid specs were combined.
class SpecMismatch : public Error {
public:
  explicit SpecMismatch(const std::string& msg) : Error(msg) {}
};

/// An operator with a 1/|z|^2-type multiplier was applied to a function that
/// does not vanish fast enough at the origin.
class UnremovablePole : public Error {
public:
  explicit UnremovablePole(const std::string& msg) : Error(msg) {}
};

/// A wavepacket spectrum whose amplitudes are all numerically zero.
class EmptySpectrum : public Error {
public:
  explicit EmptySpectrum(const std::string& msg) : Error(msg) {}
};

/// Invalid run configuration (bad field value, unknown key, unparsable file).
class ConfigError : public Error {
public:
  explicit ConfigError(const std::string& msg) : Error(msg) {}
};

}  // namespace indrep
