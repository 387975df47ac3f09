#include "tropical/solver.hpp"

#include <numeric>

#include "tropical/errors.hpp"

namespace tropical {

namespace {

SolutionDescription bottom_description(const MapSystem& preprocessed) {
    SolutionDescription d;
    d.status = SolutionDescription::Status::only_bottom;
    d.n = 0;
    d.n_original = preprocessed.n();
    d.names = preprocessed.names;
    d.pinned = preprocessed.forced_bottom;
    return d;
}

}  // namespace

SolveResult solve_system(const MapSystem& parsed) {
    SolveResult r;
    r.preprocessed = preprocess(parsed);
    r.reduced = drop_pinned(r.preprocessed, r.kept);

    if (r.reduced.n() == 0 && r.preprocessed.n() > 0) {
        // Everything pinned: the all-BOTTOM vector is the lone solution.
        r.classification = Classification::has_negative;
        r.description = bottom_description(r.preprocessed);
        return r;
    }

    r.matrices = fill_matrices(r.reduced);
    r.classification = classify(r.reduced);

    if (r.classification == Classification::all_positive) {
        r.positive = sharp_matrix(r.matrices.positive);
        return r;
    }

    Stage1Result s1 = stage1(r.matrices);
    SolutionDescription d;
    switch (s1.outcome) {
        case Stage1Result::Outcome::identity_system:
            throw internal_error("negative classification with an identity lead matrix");
        case Stage1Result::Outcome::only_bottom: {
            d = bottom_description(r.preprocessed);
            d.n = r.reduced.n();
            d.kept = r.kept;
            break;
        }
        case Stage1Result::Outcome::ok: {
            d = stage2(s1, r.matrices.positive);
            d.names = r.preprocessed.names;
            d.kept = r.kept;
            d.pinned = r.preprocessed.forced_bottom;
            d.n_original = r.preprocessed.n();
            break;
        }
    }
    r.description = std::move(d);
    return r;
}

}  // namespace tropical
