#pragma once

#include <stdexcept>
#include <string>

namespace tensoradj {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
    virtual const char* kind() const noexcept { return "Error"; }
};

#define TENSORADJ_ERROR(Name)                                            \
    struct Name : Error {                                                \
        using Error::Error;                                              \
        const char* kind() const noexcept override { return #Name; }    \
    }

TENSORADJ_ERROR(DivisionByZero);
TENSORADJ_ERROR(UnsupportedConductor);
TENSORADJ_ERROR(ShapeError);
TENSORADJ_ERROR(SchemaError);
TENSORADJ_ERROR(RigidityError);
TENSORADJ_ERROR(AdjunctionError);
TENSORADJ_ERROR(IndecomposabilityError);
TENSORADJ_ERROR(TheoremViolation);
TENSORADJ_ERROR(InvalidRescale);
TENSORADJ_ERROR(EquivalenceError);
TENSORADJ_ERROR(CocycleError);

#undef TENSORADJ_ERROR

// Input-side failures map to exit code 2, mathematical ones to 1.
inline bool is_input_error(const Error& e)
{
    std::string k = e.kind();
    return k == "SchemaError" || k == "ShapeError" || k == "UnsupportedConductor";
}

}  // namespace tensoradj
