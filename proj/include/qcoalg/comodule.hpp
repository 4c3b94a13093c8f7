#pragma once

// Finite-dimensional right comodules over a truncated subcoalgebra C ⊆ KQ.
//
// A comodule of dimension m is stored by its coaction coefficients:
//   rho(m_i) = sum_j m_j (x) c_ij,   c_ij in C,
// module leg first. The axioms become
//   counit(c_ij) = [i == j]   and   delta(c_ik) = sum_j c_jk (x) c_ij.
// Subspaces of a comodule are RowEchelon objects over its basis indices.

#include <map>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "qcoalg/coalgebra.hpp"
#include "qcoalg/linalg.hpp"
#include "qcoalg/localization.hpp"

namespace qcoalg {

using CoalgebraPtr = std::shared_ptr<const GradedSubcoalgebra>;

// Multiplicity of each simple comodule S_x, keyed by vertex id. Zero
// entries are not stored.
using LengthVector = std::map<std::string, std::size_t>;

std::size_t total_length(const LengthVector& v);
LengthVector operator+(LengthVector a, const LengthVector& b);

class FinComodule {
 public:
  using Coefficients = std::vector<std::vector<PathVector>>;

  // coefficients must be square; no axiom check (see validate).
  FinComodule(CoalgebraPtr c, Coefficients coefficients);

  const CoalgebraPtr& coalgebra() const noexcept { return c_; }
  const Quiver& quiver() const noexcept { return c_->quiver(); }
  std::size_t dim() const noexcept { return coef_.size(); }
  const PathVector& coefficient(std::size_t i, std::size_t j) const {
    return coef_.at(i).at(j);
  }
  const Coefficients& coefficients() const noexcept { return coef_; }

  // rho(v) for v given in basis coordinates, grouped by coalgebra path:
  // the module-leg vector in front of each path.
  std::map<Path, linalg::SparseVec> coact(const linalg::SparseVec& v) const;

 private:
  CoalgebraPtr c_;
  Coefficients coef_;
};

struct ValidationReport {
  bool valid = true;
  std::vector<std::string> problems;  // failing axiom and basis indices
};

ValidationReport validate(const FinComodule& m);

FinComodule simple_comodule(CoalgebraPtr c, Vertex x);
FinComodule direct_sum(const FinComodule& a, const FinComodule& b);

bool is_subcomodule(const FinComodule& m, const linalg::RowEchelon& w);
// Smallest sub-comodule containing the vectors.
linalg::RowEchelon subcomodule_generated(
    const FinComodule& m, std::span<const linalg::SparseVec> vectors);
// The sub-comodule w on its RREF basis; w must be a sub-comodule.
FinComodule restrict_to(const FinComodule& m, const linalg::RowEchelon& w);
// M / w on the classes of the non-pivot basis vectors.
FinComodule quotient(const FinComodule& m, const linalg::RowEchelon& w);

// {m : rho(m) = m (x) e_x}, the image of Hom(S_x, M).
linalg::RowEchelon hom_simple(const FinComodule& m, Vertex x);

struct Socle {
  linalg::RowEchelon space;  // {m : rho(m) in M (x) span of trivial paths}
  LengthVector lengths;
};
Socle socle(const FinComodule& m);

struct SocleFiltration {
  LengthVector lengths;
  std::size_t loewy_length = 0;
};
// Iterated socle quotients. Throws ContractError("comodules") when a
// nonzero quotient has zero socle, which only happens for invalid input.
SocleFiltration socle_filtration(const FinComodule& m);
LengthVector length_vector(const FinComodule& m);

// A comodule together with the coalgebra elements its basis came from.
struct LabeledComodule {
  FinComodule module;
  std::vector<PathVector> elements;
};

// The sub-comodule of C (coacting on itself by delta) generated by the
// given elements; basis = RREF rows, component by component.
LabeledComodule comodule_from_coalgebra(CoalgebraPtr c,
                                        std::span<const PathVector> generators);

// eC = sum of C_ab with a in X as a right comodule over the localized
// coalgebra: rho(g) = sum over splits g = eta*tau at a vertex of X of
// eta (x) tau, with tau re-expressed over the localized quiver.
LabeledComodule comodule_of_eC(const Localization& loc);

// eM = e.M with coaction sum e m_(0) (x) e m_(1) e, over loc.coalgebra.
// Requires m over loc.source.
FinComodule quotient_functor(const FinComodule& m, const Localization& loc);

inline constexpr std::size_t kDefaultCotensorCap = 100000;

// N cotensor Ce: the kernel of rho_N (x) id - id (x) lambda inside N (x) Ce,
// where Ce is spanned by the components of C with target in X, lambda
// splits at vertices of X, and the right C-coaction comes from delta on the
// Ce leg. Throws ContractError("comodules") when dim N * dim Ce exceeds cap.
FinComodule cotensor_section(const FinComodule& n, const Localization& loc,
                             std::size_t cap = kDefaultCotensorCap);

}  // namespace qcoalg
