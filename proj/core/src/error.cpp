#include "fhga/error.hpp"

namespace fhga {

std::string_view to_string(Errc code) noexcept {
    switch (code) {
    case Errc::UnsupportedFormat: return "UnsupportedFormat";
    case Errc::CorruptFile: return "CorruptFile";
    case Errc::IoFailure: return "IoFailure";
    case Errc::EmptyImage: return "EmptyImage";
    case Errc::EmptyCenters: return "EmptyCenters";
    case Errc::InvalidDimensions: return "InvalidDimensions";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::DegenerateClass: return "DegenerateClass";
    case Errc::EmptyHistogram: return "EmptyHistogram";
    case Errc::TooManyClasses: return "TooManyClasses";
    case Errc::InvalidK: return "InvalidK";
    case Errc::LengthMismatch: return "LengthMismatch";
    case Errc::TooFewClusters: return "TooFewClusters";
    case Errc::DegenerateImage: return "DegenerateImage";
    case Errc::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

} // namespace fhga
