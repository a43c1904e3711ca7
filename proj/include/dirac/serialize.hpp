#ifndef DIRAC_SERIALIZE_HPP
#define DIRAC_SERIALIZE_HPP

#include <json.hpp>

#include "dirac/homogeneous.hpp"

namespace dirac {

using Json = nlohmann::ordered_json;

/// Versioned spec file: {"format_version": 1, "kind": ..., "payload": ...}.
/// parse(write(x)) = x bit-exactly; unknown kinds and versions are
/// rejected. All numbers are rational strings.
struct SpecFile {
  int format_version = 1;
  std::string kind;
  Json payload;
};

SpecFile parse_spec(const std::string& text);
std::string write_spec(const SpecFile& spec);

Json mat_to_json(const Mat& m);
Mat mat_from_json(const Json& j, std::size_t cols_hint = 0);
Json subspace_to_json(const Subspace& s);
Subspace subspace_from_json(const Json& j, std::size_t ambient);
Json algebra_to_json(const LieAlgebra& l);
LieAlgebra algebra_from_json(const Json& j);

SpecFile triple_to_spec(const DiracManinTriple& t);
DiracManinTriple triple_from_spec(const SpecFile& s);

SpecFile groupoid_to_spec(const LinearGroupoid& g);
LinearGroupoid groupoid_from_spec(const SpecFile& s);

SpecFile module_to_spec(const LinearModule& m);
/// Modules are stored with their groupoid inline.
LinearModule module_from_spec(const SpecFile& s);

SpecFile rep_to_spec(const MatrixRep& r);
/// The algebra is supplied by context (usually the triple's d).
MatrixRep rep_from_spec(const SpecFile& s, const LieAlgebra& algebra);

SpecFile classification_to_spec(const ClassificationData& d);
ClassificationData classification_from_spec(const SpecFile& s, std::size_t d_dim);

SpecFile robinson_to_spec(const RobinsonDatum& d, std::size_t d_dim);
RobinsonDatum robinson_from_spec(const SpecFile& s, std::size_t d_dim);

SpecFile metrized_to_spec(const MetrizedLieAlgebra& m);
MetrizedLieAlgebra metrized_from_spec(const SpecFile& s);

SpecFile double_to_spec(const Double& d);
Double double_from_spec(const SpecFile& s);

SpecFile subspaces_to_spec(std::size_t ambient, const std::vector<Subspace>& list);
std::vector<Subspace> subspaces_from_spec(const SpecFile& s);

}  // namespace dirac

#endif
