#pragma once

#include <stdexcept>
#include <string>

namespace colorstat {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// ---- geometry / shape errors ----

class DimensionTooSmall final : public Error {
public:
    using Error::Error;
};

class DimensionMismatch final : public Error {
public:
    using Error::Error;
};

class PlaneTooSmall final : public Error {
public:
    using Error::Error;
};

class CropTooLarge final : public Error {
public:
    using Error::Error;
};

// ---- statistics errors ----

class BinCountMismatch final : public Error {
public:
    using Error::Error;
};

class DegenerateDenominator final : public Error {
public:
    using Error::Error;
};

// ---- classifier errors ----

class SingleClassInput final : public Error {
public:
    using Error::Error;
};

class InvalidHyperparameter final : public Error {
public:
    using Error::Error;
};

class MissingClass final : public Error {
public:
    using Error::Error;
};

// ---- I/O errors ----

class DecodeError final : public Error {
public:
    using Error::Error;
};

class UnsupportedFormat final : public Error {
public:
    using Error::Error;
};

class ModelLoadError final : public Error {
public:
    using Error::Error;
};

class FormatError final : public Error {
public:
    using Error::Error;
};

class IoError final : public Error {
public:
    using Error::Error;
};

/// Generic argument validation failure (bad config values, etc.).
class InvalidArgument final : public Error {
public:
    using Error::Error;
};

}  // namespace colorstat
