#include "rcwall/problem.hpp"

namespace rcwall {

Problem Problem::make(Example ex, int case_number, ObjectiveKind kind) {
    Problem pr;
    pr.params = preset_parameters(ex);
    pr.seismic = seismic_case(case_number);
    pr.kind = kind;
    pr.bounds = bounds_for(ex);
    return pr;
}

Evaluation Problem::evaluate(const Position& p) const {
    const DesignVector d = DesignVector::from_position(p);
    const WallAnalysis a = analyze(d, params, seismic);
    const double raw = evaluate_objective(d, params, kind).value;
    const PenalizedFitness f = penalize(raw, a.constraints, lambda);
    return {f.penalized, f.power, raw, f.penalized == raw};
}

WallAnalysis Problem::analysis(const Position& p) const {
    return analyze(DesignVector::from_position(p), params, seismic);
}

} // namespace rcwall
