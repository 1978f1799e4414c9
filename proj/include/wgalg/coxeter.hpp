#pragma once

// Finite Coxeter systems: builtin names, JSON documents, products, parabolic
// subsystems and element enumeration through the reflection representation.

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "wgalg/linalg.hpp"
#include "wgalg/scalar.hpp"

namespace wgalg {

/// Generator subset encoded as a bitmask over the ordered generator list.
using Subset = std::uint32_t;

inline bool contains(Subset set, int s) { return (set >> s) & 1u; }
inline int popcount(Subset set) { return __builtin_popcount(set); }

class CoxeterSystem {
 public:
  CoxeterSystem() = default;
  /// Validates the matrix; `factors` is optional declared factorization
  /// metadata (index sets partitioning the generators) and `factor_types`
  /// the builtin type name of each factor ("" when unknown).
  CoxeterSystem(std::vector<std::string> generators, std::vector<std::vector<int>> matrix,
                std::vector<std::vector<int>> factors = {},
                std::vector<std::string> factor_types = {});

  int rank() const { return static_cast<int>(generators_.size()); }
  const std::vector<std::string>& generators() const { return generators_; }
  const std::string& generator(int s) const { return generators_[s]; }
  const std::vector<std::vector<int>>& matrix() const { return matrix_; }
  int order(int s, int t) const { return matrix_[s][t]; }
  bool commute(int s, int t) const { return matrix_[s][t] <= 2; }

  /// Declared factorization (empty when none was given).
  const std::vector<std::vector<int>>& factors() const { return factors_; }
  const std::vector<std::string>& factor_types() const { return factor_types_; }
  /// Builtin name such as "A2xA1" when every factor type is known, else "".
  std::string name() const;

  Subset full() const { return rank() == 0 ? 0u : (Subset(1) << rank()) - 1u; }

  std::optional<int> find(std::string_view name) const;
  /// Index of a generator; throws UnknownGeneratorError.
  int index_of(std::string_view name) const;

  /// Field generated by 2cos(pi/m) for all off-diagonal orders.
  Field field() const;

  /// "{s1,s2}" style name of a subset.
  std::string subset_name(Subset set) const;
  /// Inverse of subset_name; accepts "{}" and whitespace.
  Subset parse_subset(std::string_view text) const;

  friend bool operator==(const CoxeterSystem& a, const CoxeterSystem& b) {
    return a.generators_ == b.generators_ && a.matrix_ == b.matrix_;
  }

 private:
  std::vector<std::string> generators_;
  std::vector<std::vector<int>> matrix_;
  std::vector<std::vector<int>> factors_;
  std::vector<std::string> factor_types_;
};

using CoxeterPtr = std::shared_ptr<const CoxeterSystem>;

/// Builtin name ("A2", "B3", "I2(5)", "G2", "A2xA1", ...) or a JSON document.
CoxeterSystem parse_coxeter(std::string_view text);

/// Builtin name only; errors carry the offending position.
CoxeterSystem builtin_coxeter(std::string_view name);

/// JSON document {"generators": [...], "matrix": [[...]], "product": [[...]]?}.
CoxeterSystem coxeter_from_json_text(std::string_view text);
std::string coxeter_to_json_text(const CoxeterSystem& W);

/// Connected components of the Coxeter diagram, each sorted, ordered by their
/// smallest generator. Throws InconsistentProductError when a declared
/// factorization is not a union of components.
std::vector<std::vector<int>> components(const CoxeterSystem& W);

/// Parabolic subsystem on the given generators, keeping their names.
CoxeterSystem parabolic(const CoxeterSystem& W, Subset generators);

/// Binary factorization S = S1 ⊔ S2 used by the product machinery: S2 is the
/// last declared factor (or last component) and S1 the rest. Throws
/// NotAProductError when there is only one block.
std::pair<Subset, Subset> binary_split(const CoxeterSystem& W);

struct ProductSystem {
  CoxeterSystem system;
  std::vector<int> embed_first;   // generator index of W1 inside the product
  std::vector<int> embed_second;  // generator index of W2 inside the product
};

/// Direct product W1 x W2 with declared factorization. Builtin names are
/// combined ("A2" x "A1" -> "A2xA1"); otherwise names are kept and clashing
/// names of the second factor get a "_2" suffix.
ProductSystem product(const CoxeterSystem& first, const CoxeterSystem& second);

struct GroupElement {
  std::vector<int> word;  // ShortLex-minimal reduced word
  int length = 0;
};

/// Finite Coxeter group enumerated through its exact reflection
/// representation, with multiplication tables by generators.
class CoxeterGroup {
 public:
  static constexpr std::size_t kDefaultCap = 5000;

  explicit CoxeterGroup(CoxeterPtr W, std::size_t cap = kDefaultCap);

  const CoxeterSystem& system() const { return *system_; }
  const CoxeterPtr& system_ptr() const { return system_; }
  std::size_t size() const { return elements_.size(); }
  const std::vector<GroupElement>& elements() const { return elements_; }
  const GroupElement& element(std::size_t w) const { return elements_[w]; }
  int length(std::size_t w) const { return elements_[w].length; }
  /// Index of s*w.
  std::size_t left_mult(int s, std::size_t w) const { return left_[w][s]; }
  /// Index of w*s.
  std::size_t right_mult(std::size_t w, int s) const { return right_[w][s]; }
  /// Index of the element represented by an arbitrary word.
  std::size_t evaluate(const std::vector<int>& word) const;
  std::size_t longest() const { return elements_.size() - 1; }
  const Matrix& representation(std::size_t w) const { return matrices_[w]; }
  /// Matrix of a generator in the reflection representation.
  Matrix generator_matrix(int s) const;

 private:
  CoxeterPtr system_;
  std::vector<GroupElement> elements_;
  std::vector<Matrix> matrices_;
  std::vector<std::vector<std::size_t>> left_;
  std::vector<std::vector<std::size_t>> right_;
};

std::vector<GroupElement> enumerate_elements(const CoxeterSystem& W,
                                             std::size_t cap = CoxeterGroup::kDefaultCap);

/// Words of a word in generator names, e.g. "s1 s2 s1".
std::string word_to_string(const CoxeterSystem& W, const std::vector<int>& word);

}  // namespace wgalg
