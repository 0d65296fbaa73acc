#pragma once

#include <stdexcept>
#include <string>

namespace minhom {

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct ParseError : Error { using Error::Error; };
struct DegenerateInput : Error { using Error::Error; };
struct PerturbationFailed : Error { using Error::Error; };
struct NotASelfCrossing : Error { using Error::Error; };
struct TopologyError : Error { using Error::Error; };
struct OnCurve : Error { using Error::Error; };
struct NumericalInstability : Error { using Error::Error; };
struct CapExceeded : Error { using Error::Error; };
struct MoveNotApplicable : Error { using Error::Error; };
struct InconsistentWitness : Error { using Error::Error; };
struct InvalidDecomposition : Error { using Error::Error; };
struct Disconnected : Error { using Error::Error; };

// Raised when validation finds a non-simple self-contact: tangential touch,
// triple point, vertex-on-edge, or collinear overlap. Carries the offending
// vertex indices so perturb_to_normal can jitter exactly those.
struct NormalityViolation : Error {
    NormalityViolation(const std::string& msg, std::vector<int> vertices)
        : Error(msg), offending_vertices(std::move(vertices)) {}
    std::vector<int> offending_vertices;
};

}  // namespace minhom
