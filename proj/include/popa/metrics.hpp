#pragma once

#include "popa/types.hpp"

namespace popa {

struct F1Score {
    double precision = 0.0;
    double recall = 0.0;
    double f1 = 0.0;
};

struct ErrorSplit {
    double partiality = 0.0;    // truth pairs failing the feasibility threshold
    double mismatching = 0.0;   // feasible truth pairs absent from the prediction
    double total = 0.0;
};

struct MatchMetrics {
    double precision = 0.0;
    double recall = 0.0;
    double f1 = 0.0;
    double node_correctness = 0.0;
    double partiality_error = 0.0;
    double mismatching_error = 0.0;
    double total_error = 0.0;
};

// Set-overlap precision/recall/F1 on pair sets. Empty prediction gives
// (0, 0, 0); an empty truth is rejected (recall undefined).
F1Score match_f1(const PartialAssignment& pred, const PartialAssignment& truth);

// Fraction of truth-matched source nodes whose predicted partner equals the
// truth partner; predicted-unmatched counts as incorrect. Truth must be
// nonempty.
double node_correctness(const PartialAssignment& pred, const PartialAssignment& truth);

// Splits missed true matches into threshold-infeasible pairs (partiality) and
// feasible-but-missed pairs (mismatching), as fractions of |truth|.
ErrorSplit error_decomposition(const PartialAssignment& pred, const PartialAssignment& truth, const Instance& inst);

// All of the above against inst.ground_truth (must be present and nonempty).
MatchMetrics evaluate_against_truth(const PartialAssignment& pred, const Instance& inst);

}  // namespace popa
