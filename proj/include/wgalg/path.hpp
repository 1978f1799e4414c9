#pragma once

// Paths in the compatibility quiver and elements of its path algebra.
// A path I0 <- I1 <- ... <- In with letters s1..sn stands for the product
// X^{s1}_{I0 I1} X^{s2}_{I1 I2} ... ; length-0 paths are the idempotents E_I.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "wgalg/coxeter.hpp"
#include "wgalg/scalar.hpp"

namespace wgalg {

class Quiver;

struct Path {
  std::vector<Subset> vertices;       // I0, I1, ..., In (never empty)
  std::vector<std::uint8_t> letters;  // letter of the arrow I_{k-1} <- I_k

  static Path vertex(Subset I) { return Path{{I}, {}}; }
  static Path arrow(Subset I, Subset J, int s) {
    return Path{{I, J}, {static_cast<std::uint8_t>(s)}};
  }

  int length() const { return static_cast<int>(letters.size()); }
  Subset start() const { return vertices.front(); }
  Subset end() const { return vertices.back(); }

  friend bool operator==(const Path& a, const Path& b) {
    return a.vertices == b.vertices && a.letters == b.letters;
  }
};

/// Concatenation; requires a.end() == b.start().
Path concat(const Path& a, const Path& b);

/// Path order: longer paths first, then lexicographic by vertex sequence,
/// then by letters. The leading term of an element is its first path.
struct PathOrder {
  bool operator()(const Path& a, const Path& b) const;
};

/// True when every arrow of the path is an arrow of Q.
bool path_in_quiver(const Path& p, const Quiver& Q);

/// "E{s1}" or "X{s1,s2}->{s1}^s2 * X{s1}->{}^s1".
std::string path_to_string(const Path& p, const CoxeterSystem& W);

class OmegaElement {
 public:
  using Terms = std::map<Path, FieldElement, PathOrder>;

  OmegaElement() = default;
  static OmegaElement from_path(const Path& p, const FieldElement& c = FieldElement(1));
  static OmegaElement vertex(Subset I) { return from_path(Path::vertex(I)); }
  static OmegaElement arrow(Subset I, Subset J, int s) { return from_path(Path::arrow(I, J, s)); }
  /// c * sum_I E_I over all subsets of the generators of W.
  static OmegaElement scalar(const CoxeterSystem& W, const FieldElement& c);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  /// Longest path length (-1 for zero).
  int max_length() const;
  FieldElement coefficient(const Path& p) const;

  void add(const Path& p, const FieldElement& c);

  OmegaElement operator-() const;
  OmegaElement& operator+=(const OmegaElement& other);
  OmegaElement& operator-=(const OmegaElement& other);
  OmegaElement& operator*=(const FieldElement& c);
  friend OmegaElement operator+(OmegaElement a, const OmegaElement& b) { return a += b; }
  friend OmegaElement operator-(OmegaElement a, const OmegaElement& b) { return a -= b; }
  friend OmegaElement operator*(OmegaElement a, const FieldElement& c) { return a *= c; }
  friend OmegaElement operator*(const FieldElement& c, OmegaElement a) { return a *= c; }
  /// Path algebra product: concatenation, non-composable pairs vanish.
  friend OmegaElement operator*(const OmegaElement& a, const OmegaElement& b);

  friend bool operator==(const OmegaElement& a, const OmegaElement& b) {
    return a.terms_ == b.terms_;
  }

  /// Expression syntax; "0" for zero.
  std::string to_string(const CoxeterSystem& W) const;

 private:
  Terms terms_;
};

OmegaElement multiply(const OmegaElement& a, const OmegaElement& b);

}  // namespace wgalg
