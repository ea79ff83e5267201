#pragma once

#include <stdexcept>
#include <string>

namespace kerrcat {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Parameter combinations with no valid interpretation (g3 = 0 with eps2 > 0, ...)
struct DegenerateParams : Error { using Error::Error; };

// Thermal occupation requested at omega <= 0
struct InvalidFrequency : Error { using Error::Error; };

// Coherent state does not fit in the requested Fock dimension
struct TruncationTooSmall : Error { using Error::Error; };

// A transcribed channel rate came out negative; indicates a transcription bug
struct NegativeRate : Error { using Error::Error; };

// Liouvillian dimension exceeds the configured memory budget
struct DimensionOverflow : Error { using Error::Error; };

// Dense eigensolver did not converge or produced an invalid spectrum
struct EigensolveFailure : Error { using Error::Error; };

// Steady-state null vector could not be found to tolerance
struct NullspaceNotFound : Error { using Error::Error; };

// Every eigenvalue sits inside the numerical zero cluster
struct AllZeroSpectrum : Error { using Error::Error; };

// Adaptive integrator step size collapsed
struct StepSizeUnderflow : Error { using Error::Error; };

// Decay fit has no usable signal
struct FitDegenerate : Error { using Error::Error; };

// Config file missing, malformed, or inconsistent
struct ConfigInvalid : Error { using Error::Error; };

} // namespace kerrcat
