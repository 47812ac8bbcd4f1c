#pragma once

#include <stdexcept>
#include <string>

namespace nhqg {

// Base of all library failures. `name()` is the stable machine-readable
// identifier (the CLI prints it next to exit code 3).
class Error : public std::runtime_error {
public:
    Error(std::string name, const std::string& what)
        : std::runtime_error(name + ": " + what), name_(std::move(name)) {}
    const std::string& name() const noexcept { return name_; }

private:
    std::string name_;
};

#define NHQG_ERROR_TYPE(NAME)                                                  \
    class NAME : public Error {                                                \
    public:                                                                    \
        explicit NAME(const std::string& what) : Error(#NAME, what) {}         \
    }

NHQG_ERROR_TYPE(NonFinite);
NHQG_ERROR_TYPE(NearDefective);
NHQG_ERROR_TYPE(SelfOrthogonal);
NHQG_ERROR_TYPE(AmbiguousMatch);
NHQG_ERROR_TYPE(BandCrossing);
NHQG_ERROR_TYPE(CFLViolation);
NHQG_ERROR_TYPE(NonFiniteState);
NHQG_ERROR_TYPE(BandGapCollapse);
NHQG_ERROR_TYPE(VanishingNorm);
NHQG_ERROR_TYPE(TruncationUnresolved);
NHQG_ERROR_TYPE(VanishingOverlap);
NHQG_ERROR_TYPE(GaugeNotSmoothed);
NHQG_ERROR_TYPE(NotSingleStationary);
NHQG_ERROR_TYPE(StationaryDecays);
NHQG_ERROR_TYPE(NotTwoLevel);
NHQG_ERROR_TYPE(DegenerateSpectrum);
NHQG_ERROR_TYPE(UnknownModel);
NHQG_ERROR_TYPE(ConfigError);

#undef NHQG_ERROR_TYPE

} // namespace nhqg
