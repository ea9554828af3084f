#pragma once

#include <stdexcept>
#include <string>

namespace modnet {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Dimension or structural mismatch (layer sizes, vector lengths, grids).
class ShapeError : public Error {
public:
    using Error::Error;
};

/// A parameter value outside its documented range (rates, fractions, masks).
class ValueError : public Error {
public:
    using Error::Error;
};

/// Unreadable or unparsable file content (JSON, PGM, config).
class FormatError : public Error {
public:
    using Error::Error;
};

/// A persisted file declares an unsupported format version.
class VersionError : public Error {
public:
    using Error::Error;
};

/// Stored checksum does not match the recomputed payload hash.
class ChecksumError : public Error {
public:
    using Error::Error;
};

/// A modulation matrix applied to a network it was not derived from.
class ProvenanceError : public Error {
public:
    using Error::Error;
};

/// Training produced a non-finite loss; message names the epoch.
class TrainingDiverged : public Error {
public:
    using Error::Error;
};

/// A pattern filter matched nothing.
class NoMatchError : public Error {
public:
    using Error::Error;
};

/// Filesystem failure (open, write, rename).
class IoError : public Error {
public:
    using Error::Error;
};

/// Invalid experiment configuration (unknown keys, missing sections).
class ConfigError : public Error {
public:
    using Error::Error;
};

}  // namespace modnet
