#pragma once

#include <json.hpp>

#include "matalg/criteria.hpp"
#include "matalg/enumeration.hpp"
#include "matalg/matrix.hpp"
#include "matalg/subalgebra.hpp"

// JSON surfaces. Every index that leaves or enters through this header is
// 1-based; everything behind it is 0-based. Integers too large for int64 are
// written as decimal strings and accepted in either form.
namespace matalg::json_io {

using nlohmann::json;

/// [re_num, re_den, im_num, im_den].
json scalar_to_json(ComplexRational const& z);
ComplexRational scalar_from_json(json const& j);

/// {"n", "entries"} exact form.
json matrix_to_json(Matrix const& m);
/// Accepts "entries" (exact) or "entries_f" ([re, im] floats, snapped with
/// `tolerance`).
Matrix matrix_from_json(json const& j, double tolerance = 1e-9);

/// {"n", "edges": [[k, m], ...]}.
json pattern_to_json(Pattern const& p);
/// Accepts {"n", "edges"} or {"adjacency": [[0/1, ...], ...]}.
Pattern pattern_from_json(json const& j);

json subset_to_json(IndexSubset const& i);
IndexSubset subset_from_json(int n, json const& j);

/// {"n", "subset", "pattern", "invariant_subspace"}.
json subalgebra_to_json(MaximalSubalgebra const& s);
MaximalSubalgebra subalgebra_from_json(json const& j);

json report_to_json(ClassificationReport const& r);
ClassificationReport report_from_json(json const& j);

/// {"n", "labeled", "unlabeled", "seconds"}, null for counts not computed.
json count_row_to_json(CountRow const& row);
CountRow count_row_from_json(json const& j);

struct MatrixPair {
  DiagonalSpectrum lambda;
  Matrix a;
};

/// {"lambda": [scalar, ...], "A": matrix}. Lambda entries may also be float
/// pairs [re, im], converted exactly. InvalidSpectrum propagates unchanged.
MatrixPair pair_from_json(json const& j, double tolerance = 1e-9);
json pair_to_json(MatrixPair const& pair);

}  // namespace matalg::json_io
