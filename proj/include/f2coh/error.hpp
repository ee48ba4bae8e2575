#ifndef F2COH_ERROR_HPP
#define F2COH_ERROR_HPP

#include <stdexcept>
#include <string>

namespace f2coh {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InvalidPermutation : Error {
    using Error::Error;
};

struct CapExceeded : Error {
    using Error::Error;
};

struct DimensionMismatch : Error {
    using Error::Error;
};

// chain/cochain dimension out of the supported range (e.g. boundary of a 0-chain)
struct DimensionError : Error {
    using Error::Error;
};

struct EntryNotInH : Error {
    using Error::Error;
};

struct NormalizationError : Error {
    using Error::Error;
};

struct DegreeUnsupported : Error {
    using Error::Error;
};

struct CapacityExceeded : Error {
    using Error::Error;
};

struct BadSubgroupOrder : Error {
    using Error::Error;
};

} // namespace f2coh

#endif
