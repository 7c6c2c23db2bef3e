#include "matalg/json_io.hpp"

#include <limits>
#include <string>

#include "matalg/error.hpp"

namespace matalg::json_io {

namespace {

json integer_to_json(mpz_class const& z) {
  if (z.fits_slong_p()) return z.get_si();
  return z.get_str();
}

mpz_class integer_from_json(json const& j) {
  if (j.is_number_integer()) {
    if (j.is_number_unsigned()) return mpz_class(std::to_string(j.get<std::uint64_t>()));
    return mpz_class(std::to_string(j.get<std::int64_t>()));
  }
  if (j.is_string()) {
    mpz_class z;
    if (z.set_str(j.get<std::string>(), 10) != 0) throw ParseError("malformed integer string");
    return z;
  }
  throw ParseError("expected an integer, got " + j.dump());
}

int int_from_json(json const& j, char const* what) {
  if (!j.is_number_integer()) throw ParseError(std::string(what) + " must be an integer");
  auto const v = j.get<std::int64_t>();
  if (v < std::numeric_limits<int>::min() || v > std::numeric_limits<int>::max()) {
    throw ParseError(std::string(what) + " out of range");
  }
  return static_cast<int>(v);
}

json const& member(json const& j, char const* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

json index_list(std::vector<int> const& zero_based) {
  json out = json::array();
  for (int v : zero_based) out.push_back(v + 1);
  return out;
}

std::vector<int> index_list_from_json(json const& j, int n) {
  if (!j.is_array()) throw ParseError("expected an index list");
  std::vector<int> out;
  for (auto const& v : j) {
    int const idx = int_from_json(v, "index");
    if (idx < 1 || idx > n) throw ParseError("index " + std::to_string(idx) + " outside 1.." + std::to_string(n));
    out.push_back(idx - 1);
  }
  return out;
}

ComplexRational float_scalar_from_json(json const& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    throw ParseError("float entry must be [re, im]");
  }
  return ComplexRational::from_double({j[0].get<double>(), j[1].get<double>()});
}

}  // namespace

json scalar_to_json(ComplexRational const& z) {
  return json::array({integer_to_json(z.re().get_num()), integer_to_json(z.re().get_den()),
                      integer_to_json(z.im().get_num()), integer_to_json(z.im().get_den())});
}

ComplexRational scalar_from_json(json const& j) {
  if (!j.is_array() || j.size() != 4) throw ParseError("exact entry must be [re_num, re_den, im_num, im_den]");
  try {
    return ComplexRational::from_parts(integer_from_json(j[0]), integer_from_json(j[1]),
                                       integer_from_json(j[2]), integer_from_json(j[3]));
  } catch (std::domain_error const& e) {
    throw ParseError(e.what());
  }
}

json matrix_to_json(Matrix const& m) {
  json rows = json::array();
  for (int k = 0; k < m.n(); ++k) {
    json row = json::array();
    for (int c = 0; c < m.n(); ++c) row.push_back(scalar_to_json(m(k, c)));
    rows.push_back(std::move(row));
  }
  return {{"n", m.n()}, {"entries", std::move(rows)}};
}

Matrix matrix_from_json(json const& j, double tolerance) {
  bool const exact = j.is_object() && j.contains("entries");
  bool const floats = j.is_object() && j.contains("entries_f");
  if (exact == floats) throw ParseError("matrix needs exactly one of \"entries\" or \"entries_f\"");
  json const& rows = exact ? j.at("entries") : j.at("entries_f");
  if (!rows.is_array() || rows.empty()) throw ParseError("matrix entries must be a nonempty array");
  int const n = static_cast<int>(rows.size());
  if (j.contains("n") && int_from_json(j.at("n"), "n") != n) throw ParseError("\"n\" disagrees with entries");
  if (n > kMaxDimension) throw ParseError("matrix dimension above " + std::to_string(kMaxDimension));
  if (exact) {
    Matrix out(n);
    for (int k = 0; k < n; ++k) {
      auto const& row = rows[static_cast<std::size_t>(k)];
      if (!row.is_array() || static_cast<int>(row.size()) != n) throw ParseError("matrix is not square");
      for (int m = 0; m < n; ++m) out(k, m) = scalar_from_json(row[static_cast<std::size_t>(m)]);
    }
    return out;
  }
  FloatMatrix out(n);
  for (int k = 0; k < n; ++k) {
    auto const& row = rows[static_cast<std::size_t>(k)];
    if (!row.is_array() || static_cast<int>(row.size()) != n) throw ParseError("matrix is not square");
    for (int m = 0; m < n; ++m) out(k, m) = float_scalar_from_json(row[static_cast<std::size_t>(m)]).to_complex();
  }
  return out.snapped(tolerance);
}

json pattern_to_json(Pattern const& p) {
  json edges = json::array();
  for (auto [k, m] : p.edges()) edges.push_back(json::array({k + 1, m + 1}));
  return {{"n", p.n()}, {"edges", std::move(edges)}};
}

Pattern pattern_from_json(json const& j) {
  if (j.is_object() && j.contains("adjacency")) {
    auto const& adj = j.at("adjacency");
    if (!adj.is_array() || adj.empty()) throw ParseError("adjacency must be a nonempty array");
    std::vector<std::vector<int>> rows;
    for (auto const& row : adj) {
      if (!row.is_array()) throw ParseError("adjacency rows must be arrays");
      std::vector<int> r;
      for (auto const& v : row) r.push_back(int_from_json(v, "adjacency entry"));
      rows.push_back(std::move(r));
    }
    if (rows.size() > static_cast<std::size_t>(kMaxDimension)) throw ParseError("pattern dimension above 64");
    try {
      Pattern p = Pattern::from_adjacency(rows);
      if (j.contains("n") && int_from_json(j.at("n"), "n") != p.n()) throw ParseError("\"n\" disagrees with adjacency");
      return p;
    } catch (DimensionMismatch const& e) {
      throw ParseError(e.what());
    }
  }
  int const n = int_from_json(member(j, "n"), "n");
  if (n < 1 || n > kMaxDimension) throw ParseError("pattern dimension must lie in 1..64");
  auto const& edges = member(j, "edges");
  if (!edges.is_array()) throw ParseError("edges must be an array");
  Pattern p(n);
  for (auto const& e : edges) {
    auto const idx = index_list_from_json(e, n);
    if (idx.size() != 2) throw ParseError("edge must be [k, m]");
    p.insert(idx[0], idx[1]);
  }
  return p;
}

json subset_to_json(IndexSubset const& i) { return index_list(i.members()); }

IndexSubset subset_from_json(int n, json const& j) {
  try {
    return IndexSubset::from_members(n, index_list_from_json(j, n));
  } catch (IndexOutOfRange const& e) {
    throw ParseError(e.what());
  }
}

json subalgebra_to_json(MaximalSubalgebra const& s) {
  return {{"n", s.subset.n()},
          {"subset", subset_to_json(s.subset)},
          {"pattern", pattern_to_json(s.pattern)},
          {"invariant_subspace", index_list(invariant_subspace_of(s.subset))}};
}

MaximalSubalgebra subalgebra_from_json(json const& j) {
  int const n = int_from_json(member(j, "n"), "n");
  IndexSubset const i = subset_from_json(n, member(j, "subset"));
  MaximalSubalgebra s = maximal_subalgebra(i);
  if (j.contains("pattern") && pattern_from_json(j.at("pattern")) != s.pattern) {
    throw ParseError("subalgebra pattern does not match its subset");
  }
  if (j.contains("invariant_subspace") && index_list_from_json(j.at("invariant_subspace"), n) != i.members()) {
    throw ParseError("invariant subspace does not match its subset");
  }
  return s;
}

json report_to_json(ClassificationReport const& r) {
  json components = json::array();
  for (auto const& block : r.weak_components) components.push_back(index_list(block));
  json subsets = json::array();
  for (auto const& i : r.invariant_subsets) subsets.push_back(subset_to_json(i));
  return {{"irreducible", r.irreducible},
          {"schur_irreducible", r.schur_irreducible},
          {"indecomposable", r.indecomposable},
          {"weak_components", std::move(components)},
          {"invariant_subsets", std::move(subsets)},
          {"witness", r.witness ? subset_to_json(*r.witness) : json(nullptr)},
          {"support", pattern_to_json(r.support)}};
}

ClassificationReport report_from_json(json const& j) {
  ClassificationReport r{.support = pattern_from_json(member(j, "support"))};
  int const n = r.support.n();
  auto boolean = [&](char const* key) {
    auto const& v = member(j, key);
    if (!v.is_boolean()) throw ParseError(std::string(key) + " must be a boolean");
    return v.get<bool>();
  };
  r.irreducible = boolean("irreducible");
  r.schur_irreducible = boolean("schur_irreducible");
  r.indecomposable = boolean("indecomposable");
  for (auto const& block : member(j, "weak_components")) r.weak_components.push_back(index_list_from_json(block, n));
  for (auto const& s : member(j, "invariant_subsets")) r.invariant_subsets.push_back(subset_from_json(n, s));
  auto const& witness = member(j, "witness");
  if (!witness.is_null()) r.witness = subset_from_json(n, witness);
  return r;
}

json count_row_to_json(CountRow const& row) {
  return {{"n", row.n},
          {"labeled", row.labeled ? json(*row.labeled) : json(nullptr)},
          {"unlabeled", row.unlabeled ? json(*row.unlabeled) : json(nullptr)},
          {"seconds", row.seconds}};
}

CountRow count_row_from_json(json const& j) {
  CountRow row{.n = int_from_json(member(j, "n"), "n")};
  auto count = [&](char const* key) -> std::optional<std::uint64_t> {
    auto const& v = member(j, key);
    if (v.is_null()) return std::nullopt;
    if (!v.is_number_integer() || v.get<std::int64_t>() < 0) throw ParseError(std::string(key) + " must be a count");
    return v.get<std::uint64_t>();
  };
  row.labeled = count("labeled");
  row.unlabeled = count("unlabeled");
  auto const& seconds = member(j, "seconds");
  if (!seconds.is_number()) throw ParseError("seconds must be a number");
  row.seconds = seconds.get<double>();
  return row;
}

MatrixPair pair_from_json(json const& j, double tolerance) {
  auto const& lambda = member(j, "lambda");
  if (!lambda.is_array() || lambda.empty()) throw ParseError("lambda must be a nonempty array");
  std::vector<ComplexRational> values;
  for (auto const& v : lambda) {
    values.push_back(v.is_array() && v.size() == 2 ? float_scalar_from_json(v) : scalar_from_json(v));
  }
  Matrix a = matrix_from_json(member(j, "A"), tolerance);
  if (static_cast<int>(values.size()) != a.n()) {
    throw ParseError("lambda has " + std::to_string(values.size()) + " entries but A is " +
                     std::to_string(a.n()) + "x" + std::to_string(a.n()));
  }
  return {DiagonalSpectrum(std::move(values)), std::move(a)};
}

json pair_to_json(MatrixPair const& pair) {
  json lambda = json::array();
  for (auto const& l : pair.lambda.lambdas()) lambda.push_back(scalar_to_json(l));
  return {{"lambda", std::move(lambda)}, {"A", matrix_to_json(pair.a)}};
}

}  // namespace matalg::json_io
