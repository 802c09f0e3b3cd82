#pragma once

namespace chebproj {

enum class ProjectorMethod { WallCheb, ITE, EigFilter, Step };

/// Asymptotic query-complexity predictor with the constant factor fixed
/// at 1; useful for trend comparison only.
///   WallCheb: Delta^{-1/2} * (log(1/(eps*c0)))^{1/2}
///   others:   Delta^{-1}   *  log(1/(eps*c0))
struct ComplexityEstimate {
    ProjectorMethod method;
    double gap;          // Delta > 0
    double overlap;      // c0 in (0,1]
    double target_error; // eps in (0,1)
    double predicted_order;
};

ComplexityEstimate predicted_order(ProjectorMethod method, double gap,
                                   double overlap, double target_error);

const char* method_name(ProjectorMethod m);

} // namespace chebproj
