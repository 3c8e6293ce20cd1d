#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "ybh/deformation.hpp"
#include "ybh/hopf.hpp"

namespace ybh {

inline constexpr std::string_view kSchema = "ybh/1";

// Structure constants as stored on disk. Every map is optional at this level;
// braided_from_document and hopf_from_document say which ones they need.
//   mu      [i, j, k, c]     mu(e_i (x) e_j) has c on e_k
//   R       [i, j, k, l, c]  R(e_i (x) e_j) has c on e_k (x) e_l
//   Delta   [i, j, k, c]     Delta(e_i) has c on e_j (x) e_k
//   eta     [i, c]           eta(1) has c on e_i
//   epsilon [i, c]           epsilon(e_i) = c
//   S       [i, j, c]        S(e_i) has c on e_j
struct AlgebraDocument {
    FieldSpec field;
    std::size_t dim = 0;
    std::vector<std::string> basis;
    std::optional<TensorMap> mu, R, delta, eta, epsilon, antipode;
    std::string provenance;  // JSON object text, empty when absent
};

// `field` overrides the field recorded in the document; scalars are re-read in it.
AlgebraDocument parse_document(std::string_view text, std::optional<FieldSpec> field = std::nullopt);
AlgebraDocument load_document(const std::filesystem::path& path, std::optional<FieldSpec> field = std::nullopt);
// Canonical text: sorted keys, sorted entries, normalized scalars, one entry per line.
std::string dump_document(const AlgebraDocument& doc);
void save_document(const std::filesystem::path& path, const AlgebraDocument& doc);

AlgebraDocument to_document(const BraidedAlgebra& b, std::string provenance = {});
AlgebraDocument to_document(const HopfAlgebra& h, std::string provenance = {});

// Both run every axiom check and throw ValidationError naming the first failure.
BraidedAlgebra braided_from_document(const AlgebraDocument& doc);
HopfAlgebra hopf_from_document(const AlgebraDocument& doc);

// Hopf when the document carries Delta, braided otherwise.
using LoadedAlgebra = std::variant<BraidedAlgebra, HopfAlgebra>;
LoadedAlgebra load_algebra(const std::filesystem::path& path, std::optional<FieldSpec> field = std::nullopt);

// The base algebra document plus "phi_terms"/"psi_terms" lists of R-/mu-style entries.
std::string dump_series(const DeformationSeries& s);
DeformationSeries parse_series(std::string_view text, std::optional<FieldSpec> field = std::nullopt);

// {"dim", "in_arity", "out_arity", "entries": [[row, col, c], ...]}.
std::string dump_map(const TensorMap& f);
TensorMap parse_map(std::string_view text, const FieldSpec& k);

std::string field_to_json(const FieldSpec& k);
// "q", "rational", "p", "prime" (with `prime`), or a bare prime such as "101".
FieldSpec parse_field(std::string_view name, std::optional<std::uint64_t> prime = std::nullopt);

std::uint64_t fnv1a64(std::string_view bytes);

}  // namespace ybh
