#pragma once

#include <stdexcept>
#include <string>

namespace currentlab {

class CurrentlabError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
    virtual const char* kind() const noexcept { return "CurrentlabError"; }
};

#define CURRENTLAB_ERROR(Name)                                              \
    class Name : public CurrentlabError {                                   \
    public:                                                                 \
        using CurrentlabError::CurrentlabError;                             \
        const char* kind() const noexcept override { return #Name; }        \
    };

CURRENTLAB_ERROR(ParseError)
CURRENTLAB_ERROR(ValidationError)
CURRENTLAB_ERROR(GenericPositionError)
CURRENTLAB_ERROR(EmptyCurrentError)
CURRENTLAB_ERROR(MassRangeError)
CURRENTLAB_ERROR(NotLowerSubmeasureError)
CURRENTLAB_ERROR(ComplexityBudgetError)
CURRENTLAB_ERROR(ContractError)
CURRENTLAB_ERROR(NotLaminationError)
CURRENTLAB_ERROR(FixedPointError)
CURRENTLAB_ERROR(NotHyperbolicError)
CURRENTLAB_ERROR(DiagonalError)
CURRENTLAB_ERROR(RoundingCollisionError)
CURRENTLAB_ERROR(DegenerateConfigurationError)
CURRENTLAB_ERROR(IOError)

#undef CURRENTLAB_ERROR

}  // namespace currentlab
