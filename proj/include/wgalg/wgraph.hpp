#pragma once

// W-graphs: validation of the two defining conditions, the induced
// Ω-modules, and evaluation of algebra elements on them.

#include <map>
#include <string>
#include <vector>

#include "wgalg/coxeter.hpp"
#include "wgalg/expr.hpp"
#include "wgalg/freealg.hpp"
#include "wgalg/linalg.hpp"
#include "wgalg/path.hpp"
#include "wgalg/relations.hpp"

namespace wgalg {

/// Square matrix with Laurent polynomial entries, stored by v-degree.
class LaurentMatrix {
 public:
  LaurentMatrix() = default;
  LaurentMatrix(std::size_t n, Field field) : n_(n), field_(std::move(field)) {}

  std::size_t size() const { return n_; }
  const Field& field() const { return field_; }
  const std::map<int, Matrix>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Coefficient matrix of v^k (zero matrix when absent).
  Matrix coefficient(int k) const;
  void add(int k, const Matrix& m);

  LaurentMatrix& operator+=(const LaurentMatrix& other);
  LaurentMatrix& operator-=(const LaurentMatrix& other);
  friend LaurentMatrix operator+(LaurentMatrix a, const LaurentMatrix& b) { return a += b; }
  friend LaurentMatrix operator-(LaurentMatrix a, const LaurentMatrix& b) { return a -= b; }
  friend LaurentMatrix operator*(const LaurentMatrix& a, const LaurentMatrix& b);
  friend bool operator==(const LaurentMatrix& a, const LaurentMatrix& b) {
    return a.n_ == b.n_ && a.terms_ == b.terms_;
  }

  std::string to_string() const;

 private:
  std::size_t n_ = 0;
  Field field_;
  std::map<int, Matrix> terms_;
};

struct WGraph {
  CoxeterPtr system;
  Field field;
  std::string name;
  std::vector<std::string> vertices;
  std::vector<Subset> labels;
  /// weights[s](x, y) = m^s_{xy}, i.e. the matrix of x_s on column vectors.
  std::vector<Matrix> weights;

  std::size_t size() const { return vertices.size(); }
};

struct BraidCheck {
  int s = 0;
  int t = 0;
  bool holds = false;
};

struct WGraphReport {
  std::vector<std::string> condition_a;  // violations
  std::vector<std::string> coherence;    // violations
  std::vector<int> quadratic_failures;   // generators failing T_s^2 = 1 + (v - v^-1) T_s
  std::vector<BraidCheck> braid;
  bool passed() const;
  std::string to_string(const CoxeterSystem& W) const;
};

/// Throws ValidationError on shape mismatches.
WGraphReport validate_wgraph(const WGraph& G);

/// omega(T_s) by the case formula: -v^-1 on the diagonal when s in I(x), v when
/// s not in I(x), m^s_{xy} off the diagonal.
LaurentMatrix omega_T_matrix(const WGraph& G, int s);
/// omega(T_{s1}) ... omega(T_{sk}).
LaurentMatrix omega_T_word(const WGraph& G, const std::vector<int>& word);

class OmegaModule {
 public:
  std::size_t dimension() const { return dimension_; }
  const Field& field() const { return field_; }
  const std::string& name() const { return name_; }
  const std::vector<Subset>& labels() const { return labels_; }
  const Matrix& e(int s) const { return e_[s]; }
  const Matrix& x(int s) const { return x_[s]; }

  /// Matrix of an element of Ω (paths act through E_I x_s E_J blocks).
  Matrix apply(const OmegaElement& e) const;
  Matrix apply(const Path& p) const;
  /// Free-algebra element with Laurent coefficients.
  LaurentMatrix apply(const FreeElement& f) const;
  LaurentMatrix apply(const LaurentOmega& f) const;

 private:
  friend OmegaModule omega_module(const WGraph& G, const std::vector<Relation>* relations);
  std::size_t dimension_ = 0;
  Field field_;
  std::string name_;
  std::vector<Subset> labels_;
  std::vector<Matrix> e_;
  std::vector<Matrix> x_;
};

/// Module of a validated W-graph. When `relations` is given, each must act as
/// zero; otherwise InconsistencyError names the first offender.
OmegaModule omega_module(const WGraph& G, const std::vector<Relation>* relations = nullptr);

/// Tensor product of W-graphs for the two factors of a product system: the
/// label is I1(x) ∪ I2(y) and m^s acts on the factor containing s.
WGraph tensor_wgraph(const WGraph& G1, const WGraph& G2, const ProductSystem& P);

/// Builtin corpus: trivial and sign graphs for every irreducible factor, the
/// two-dimensional dihedral graphs with weights 2cos(pi j/m), and tensor
/// products over the factors. Every graph is validated before it is returned.
/// `field` defaults to the system's field and must contain it.
std::vector<WGraph> builtin_wgraphs(const CoxeterPtr& W, Field field = {});

/// W-graph JSON: {"coxeter", "vertices", "labels", "weights", "conductor"?, "name"?}.
WGraph wgraph_from_json_text(std::string_view text, CoxeterPtr W = nullptr);
std::string wgraph_to_json_text(const WGraph& G);

/// True when some module of `modules` does not annihilate e.
bool module_nonzero(const std::vector<OmegaModule>& modules, const OmegaElement& e);

}  // namespace wgalg
