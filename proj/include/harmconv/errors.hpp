#pragma once

#include <stdexcept>
#include <string>

namespace harmconv {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

#define HARMCONV_ERROR(Name)                     \
    struct Name : Error {                        \
        using Error::Error;                      \
        Name() : Error(#Name) {}                 \
    }

HARMCONV_ERROR(NearZeroConstantTerm);
HARMCONV_ERROR(NoConvergence);
HARMCONV_ERROR(NotMonic);
HARMCONV_ERROR(ConstantTermNotInDisk);
HARMCONV_ERROR(NearPole);
HARMCONV_ERROR(DilatationNotSchlicht);
HARMCONV_ERROR(DegenerateShear);
HARMCONV_ERROR(OutsideDomain);
HARMCONV_ERROR(DegenerateDenominator);
HARMCONV_ERROR(DegenerateMoebius);
HARMCONV_ERROR(BoundaryCase);
HARMCONV_ERROR(WitnessNotFound);
HARMCONV_ERROR(DegenerateCurve);
HARMCONV_ERROR(UnknownCase);
HARMCONV_ERROR(OnSlitPoint);
HARMCONV_ERROR(ParseError);
HARMCONV_ERROR(IoError);

#undef HARMCONV_ERROR

} // namespace harmconv
