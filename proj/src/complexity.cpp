#include "chebproj/complexity.hpp"

#include <cmath>
#include <stdexcept>

namespace chebproj {

ComplexityEstimate predicted_order(ProjectorMethod method, double gap,
                                   double overlap, double target_error) {
    if (!(gap > 0.0))
        throw std::invalid_argument("predicted_order: gap must be > 0");
    if (!(overlap > 0.0 && overlap <= 1.0))
        throw std::invalid_argument("predicted_order: overlap in (0,1]");
    if (!(target_error > 0.0 && target_error < 1.0))
        throw std::invalid_argument("predicted_order: target error in (0,1)");

    const double log_factor = std::log(1.0 / (target_error * overlap));
    double order;
    if (method == ProjectorMethod::WallCheb)
        order = std::sqrt(log_factor / gap);
    else
        order = log_factor / gap;
    return {method, gap, overlap, target_error, order};
}

const char* method_name(ProjectorMethod m) {
    switch (m) {
        case ProjectorMethod::WallCheb: return "wallcheb";
        case ProjectorMethod::ITE: return "ite";
        case ProjectorMethod::EigFilter: return "eigfilter";
        case ProjectorMethod::Step: return "step";
    }
    return "unknown";
}

} // namespace chebproj
