#pragma once

#include <stdexcept>
#include <string>

namespace sgdir {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

#define SGDIR_DEFINE_ERROR(Name)                 \
    struct Name : Error {                        \
        using Error::Error;                      \
    }

SGDIR_DEFINE_ERROR(GeometryMismatch);
SGDIR_DEFINE_ERROR(InvalidCoordinate);
SGDIR_DEFINE_ERROR(UnsupportedOp);
SGDIR_DEFINE_ERROR(ShapeError);
SGDIR_DEFINE_ERROR(NotScalar);
SGDIR_DEFINE_ERROR(TimeOutOfRange);
SGDIR_DEFINE_ERROR(NonDivisibleDims);
SGDIR_DEFINE_ERROR(WindowTooLarge);
SGDIR_DEFINE_ERROR(EmptyStructure);
SGDIR_DEFINE_ERROR(LengthMismatch);
SGDIR_DEFINE_ERROR(NonFiniteLoss);
SGDIR_DEFINE_ERROR(UnsupportedCheckpoint);
SGDIR_DEFINE_ERROR(ConfigError);
SGDIR_DEFINE_ERROR(IoError);

#undef SGDIR_DEFINE_ERROR

}  // namespace sgdir
