// errors.hpp
//
// Exception hierarchy shared by all zetastrips modules. Every error the
// library raises derives from ZetaError so callers (the CLI in particular)
// can map them onto exit codes in one place.

#pragma once

#include <stdexcept>
#include <string>

namespace zetastrips {

class ZetaError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

#define ZETASTRIPS_ERROR(Name)                                                \
    class Name : public ZetaError {                                           \
    public:                                                                   \
        explicit Name(const std::string& what) : ZetaError(#Name ": " + what) \
        {}                                                                    \
    }

// zeta-core
ZETASTRIPS_ERROR(DomainError);
ZETASTRIPS_ERROR(PoleError);
ZETASTRIPS_ERROR(PrecisionError);
ZETASTRIPS_ERROR(NearZeroError);

// zero-finder
ZETASTRIPS_ERROR(ScanResolutionError);

// contour-tracer
ZETASTRIPS_ERROR(SeedError);
ZETASTRIPS_ERROR(StallError);
ZETASTRIPS_ERROR(NoCrossingError);
ZETASTRIPS_ERROR(BranchError);

// strip-decomposer
ZETASTRIPS_ERROR(PartitionError);
ZETASTRIPS_ERROR(MissingPrimaryError);

// stats-report
ZETASTRIPS_ERROR(DegenerateError);

// cli-pipeline
ZETASTRIPS_ERROR(ConfigError);
ZETASTRIPS_ERROR(IoError);

#undef ZETASTRIPS_ERROR

}  // namespace zetastrips
