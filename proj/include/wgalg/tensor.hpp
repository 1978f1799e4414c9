#pragma once

// Product machinery for W = W1 x W2: parabolic embeddings of the factor
// algebras, the morphism tau into the tensor product of the factor algebras,
// its kernel, commutation of the two Ψ subalgebras, product certificates and
// nilpotency of the kernel.

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "wgalg/certificate.hpp"
#include "wgalg/context.hpp"
#include "wgalg/report.hpp"

namespace wgalg {

/// Binary split S = S1 ⊔ S2 of a product system (S2 the last factor) with the
/// two parabolic factors and their quivers.
class ProductStructure {
 public:
  /// Throws NotAProductError when W has a single block.
  explicit ProductStructure(CoxeterPtr W);
  /// Explicit split S = first ⊔ second with all cross orders 2; a part may be
  /// empty, which makes that factor the trivial group.
  ProductStructure(CoxeterPtr W, Subset first, Subset second);
  ProductStructure(const ProductStructure&) = delete;
  ProductStructure& operator=(const ProductStructure&) = delete;

  const CoxeterSystem& system() const { return *system_; }
  const CoxeterPtr& system_ptr() const { return system_; }
  const Quiver& quiver() const { return *quiver_; }
  /// which = 1 or 2.
  const CoxeterPtr& factor(int which) const { return factor_[which - 1]; }
  const Quiver& factor_quiver(int which) const { return *factor_quiver_[which - 1]; }
  Subset part(int which) const { return part_[which - 1]; }
  /// Generator of W for a local generator of a factor.
  int global(int which, int local) const { return embed_[which - 1][local]; }
  /// Factor containing s (1 or 2) and its index there.
  int side(int s) const { return contains(part_[0], s) ? 1 : 2; }
  int local(int s) const { return local_[s]; }

  Subset lift(int which, Subset local) const;
  Subset project(int which, Subset I) const;

 private:
  CoxeterPtr system_;
  std::unique_ptr<Quiver> quiver_;
  CoxeterPtr factor_[2];
  std::unique_ptr<Quiver> factor_quiver_[2];
  Subset part_[2] = {0, 0};
  std::vector<int> embed_[2];
  std::vector<int> local_;
};

/// Element of Ω1 ⊗ Ω2 as a combination of pairs of paths.
class TensorElement {
 public:
  using Key = std::pair<Path, Path>;
  struct KeyOrder {
    bool operator()(const Key& a, const Key& b) const;
  };
  using Terms = std::map<Key, FieldElement, KeyOrder>;

  TensorElement() = default;
  static TensorElement pure(const OmegaElement& a, const OmegaElement& b);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void add(const Path& a, const Path& b, const FieldElement& c);

  TensorElement& operator+=(const TensorElement& other);
  TensorElement& operator-=(const TensorElement& other);
  friend TensorElement operator+(TensorElement a, const TensorElement& b) { return a += b; }
  friend TensorElement operator-(TensorElement a, const TensorElement& b) { return a -= b; }
  friend TensorElement operator*(const TensorElement& a, const TensorElement& b);
  friend bool operator==(const TensorElement& a, const TensorElement& b) {
    return a.terms_ == b.terms_;
  }

  /// "E{s1} (x) E{t1} + 2*X{s1}->{}^s1 (x) E{}".
  std::string to_string(const CoxeterSystem& W1, const CoxeterSystem& W2) const;

 private:
  Terms terms_;
};

/// Parabolic embedding of Ω(W_which) into Ω(W):
/// E_A -> sum of E_{A'} with A' ∩ S_which = A, X^s_{AB} -> the sum of the
/// arrows X^s_{A'B'} of Q_W over the same lifts; extended multiplicatively.
OmegaElement parabolic_embed(const ProductStructure& P, int which, const OmegaElement& e);

/// tau: E_I -> E_{I1} ⊗ E_{I2}; X^s_{IJ} (s in S1) -> X^s_{I1J1} ⊗ E_{I2}E_{J2},
/// symmetrically for s in S2; multiplicative along paths.
TensorElement tau_map(const ProductStructure& P, const OmegaElement& e);

/// Inclusion edges (I, J) of Q_W with I1 ⊋ J1 and I2 ⊋ J2, sorted.
std::vector<std::pair<Subset, Subset>> kernel_generators(const ProductStructure& P);
/// The lettered arrows on those edges.
std::vector<OmegaElement> kernel_generator_elements(const ProductStructure& P);

/// Zero test in Ω1 ⊗ Ω2. With both certified tables it is exact. Otherwise the
/// left components are reduced, right cofactors collected and reduced;
/// nonvanishing is proven by a pair of modules.
class TensorTester {
 public:
  TensorTester(const OmegaContext& first, const OmegaContext& second)
      : first_(first), second_(second) {}
  Verdict verdict(const TensorElement& t) const;

 private:
  const OmegaContext& first_;
  const OmegaContext& second_;
};

/// (i) tau kills each kernel generator, (ii) each [e_s, x_t] and [e_t, x_s]
/// (s in S1, t in S2) lies in the ideal of the relations and the kernel
/// generators at the bound of `omega`, (iii) E_I [e_s, x_t] E_J follows the
/// four-case formula, and tau is nonzero on every other arrow.
Report verify_kernel(const ProductStructure& P, const OmegaContext& omega,
                     const OmegaContext& first, const OmegaContext& second);

/// [ι1(g1), ι2(g2)] = 0 for all Ψ generators, and the two-term identity
/// X^s_{I⊔K,J⊔K} X^t_{J⊔K,J⊔L} = X^t_{I⊔K,I⊔L} X^s_{I⊔L,J⊔L}
/// for transversal I⇄J in Q_{W1}, K⇄L in Q_{W2}.
Report check_psi_commutation(const ProductStructure& P, const OmegaContext& omega);

/// tau(ι(T_s)) equals ι1(T_s) ⊗ 1 (or 1 ⊗ ι2(T_s)) degree by degree.
Check check_tau_hecke(const ProductStructure& P);
/// tau maps Ψ generators to generators of Ψ1 ⊗ Ψ2, and every such generator is
/// tau(ι1(g1) ι2(g2)).
Check check_tau_psi(const ProductStructure& P);

/// F^{λ.μ} = ι1(F^λ) ι2(F^μ), degrees multiplied, product order, labels
/// "λ.μ". Refuses (RefusalError) unless both reports passed Z1, Z2 and Z6.
Certificate product_certificate(const ProductStructure& P, const Certificate& c1,
                                const Report& r1, const Certificate& c2, const Report& r2);

/// F^{λ.μ} [ι1(X), ι2(g2)] F^{λ'.μ'} = 0 for every inclusion arrow X of Q_{W1},
/// every Ψ2 generator g2 and all label pairs with μ not ⪯ μ'.
Check check_product_corners(const ProductStructure& P, const OmegaContext& omega,
                            const Certificate& c1, const Certificate& c2);

/// ker(tau)^k = 0 for k = min(ht1, ht2) + 1, plus the smallest such k.
Report nilpotency_check(const ProductStructure& P, const OmegaContext& omega,
                        const Certificate& c1, const Certificate& c2);

}  // namespace wgalg
