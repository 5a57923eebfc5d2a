#pragma once

#include <stdexcept>
#include <string>

namespace parkdr {

// Base class for everything this library throws on purpose.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Invalid model parameters or an ill-formed spec record.
class SpecError : public Error {
public:
    using Error::Error;
};

// A requested quantity falls outside its admissible interval
// (SOC bounds, demand-response capability limits, comfort band).
class BoundsError : public Error {
public:
    using Error::Error;
};

// Storage asked to charge and discharge in the same step.
class ExclusivityError : public Error {
public:
    using Error::Error;
};

// Bad input data: malformed CSV, unsorted timestamps, unusable gaps,
// mismatched series lengths.
class DataError : public Error {
public:
    using Error::Error;
};

// Persisted-file problems: version mismatch, truncation, schema violations.
class FormatError : public Error {
public:
    using Error::Error;
};

// An instance is too large for the exhaustive solver.
class SizeError : public Error {
public:
    using Error::Error;
};

}  // namespace parkdr
