#pragma once

#include "tensoradj/center.hpp"

#include <map>

namespace tensoradj {

// A_M = end of Hom(m, m) with the half-braiding, product and unit determined through the dinaturals:
//   (id_X (*) pi_m) sigma_X = frak_a(X, m, m) frak_b(X, m, X (.) m) (pi_{X (.) m} (*) id_X),
//   pi_m mult = comp_m (pi_m (*) pi_m),  pi_m unit = coev(1, m).
struct ShimizuAdjoint {
    ModulePtr module;
    EndResult end;
    CenterAlgebra algebra;
};
// Throws IndecomposabilityError on decomposable input and TheoremViolation if a factoring is not unique.
ShimizuAdjoint shimizu_adjoint(const ModulePtr& m);

// L = sum over the simples m of *R_m o R_m, an endofunctor of the regular module, with the
// adjunctions R_m -| *R_m synthesized by right_adjoint. pi[m]: L -> *R_m o R_m is the coordinate
// projection, rescaled by `scale[m]` when a rescaling is requested.
struct TwoCatAdjoint {
    ModulePtr module, regular;
    ModuleFunctor L;
    std::vector<Adjunction> duals;
    std::vector<ModuleNatTrans> pi;
    // sigma2[x]: R_x o L -> L o R_x, determined by
    //   (pi_m o id_{R_x}) sigma2 = (eps^{R_x} o id)(id_{R_x} o (delta o id) pi_{R_m o R_x}).
    std::vector<ModuleNatTrans> sigma2;
    Morphism mult2;  // (m2)_1: L(L(1)) -> L(1), from (id o ev_{R_m} o id)(pi_m o pi_m)
    Morphism unit2;  // (u2)_1: 1 -> L(1), from the units of R_m -| *R_m
    CenterAlgebra phi_image;

    // Dinatural at any functor F out of the regular module, transported along alpha_F: R_{F(1)} -> F.
    ModuleNatTrans pi_at(const ModuleFunctor& f, const Adjunction& fa) const;
    // pi at R_P for an object P of the module, from the simple dinaturals.
    ModuleNatTrans pi_at_object(const Obj& p, const Adjunction& pa) const;
    // Both are linear in the dinaturals: pi_at(F) = sum_q weights(F)[q] pi[q], with weights that do not
    // depend on the choice of dinaturals.
    std::vector<ModuleNatTrans> pi_weights(const ModuleFunctor& f, const Adjunction& fa) const;
    std::vector<ModuleNatTrans> pi_weights_object(const Obj& p, const Adjunction& pa) const;

    // Adjunction data that does not depend on the dinaturals, shared by rescaled copies:
    // the rigidity adjunctions R_x -| R_{x*}, and weights[x][m][q] turning pi[q] into the target
    // (delta o id) pi_{R_m o R_x} of the half-braiding equation.
    struct Cache {
        std::map<Obj, Adjunction> action_adjoints;  // R_P -| *R_P
        std::vector<Adjunction> rigidity;
        std::vector<std::vector<std::vector<ModuleNatTrans>>> weights;
    };
    std::shared_ptr<Cache> cache = std::make_shared<Cache>();
    const Adjunction& action_adjoint(const Obj& p) const;
};
TwoCatAdjoint twocat_adjoint(const ModulePtr& m, const std::vector<ExactScalar>& scale = {});
// Same construction with pi[m] replaced by scale[m] pi[m], reusing the adjunction data of t.
TwoCatAdjoint rescaled(const TwoCatAdjoint& t, const std::vector<ExactScalar>& scale);
// Rebuilds phi_image from sigma2, mult2 and unit2:
//   alpha^sigma_X = c^L_{X,1} (sigma2_X)_1,  product = mult2 (c^L_{L(1),1})^{-1}.
void materialize(TwoCatAdjoint& t);

struct ComparisonIso {
    Morphism phi;           // Phi(Ad_M) = L(1) -> A_M with pi^M_m phi = (pi_m)_1
    Report invertible;      // certificate (a)
    Report center;          // certificate (b) and the dinatural claim behind it
    Report algebra;         // certificate (c)
    bool ok() const { return invertible.ok() && center.ok() && algebra.ok(); }
};
ComparisonIso compare_adjoints(const ShimizuAdjoint& s, const TwoCatAdjoint& t);
// Computes both sides and throws TheoremViolation when a certificate fails.
ComparisonIso compare_adjoints(const ModulePtr& m);

// Rescales the dinaturals by `scale` (InvalidRescale on a zero entry), recomputes sigma2 and checks
// that h = sum_m scale[m]^{-1} satisfies sigma2'(id_{R_x} o h) = (h o id_{R_x}) sigma2 and that h_1 is a
// morphism in the center between the two materializations.
Report dinatural_invariance(const ModulePtr& m, const std::vector<ExactScalar>& scale);
// As above, relative to the dinaturals of `t` and reusing its adjunction data.
Report dinatural_invariance(const TwoCatAdjoint& t, const std::vector<ExactScalar>& scale);

// Equivalence data X: M -> M', Y: M' -> M with alpha: X o Y -> Id, beta: Y o X -> Id.
struct EquivalenceData {
    ModuleFunctor X, Y;
    ModuleNatTrans alpha, beta;
};
struct EquivalenceIso {
    ModuleNatTrans f;  // L(C, M) -> L(C, M')
    ModuleNatTrans g;  // L(C, M') -> L(C, M)
    Report report;
};
// Throws EquivalenceError when the data is not an equivalence of module categories.
EquivalenceIso equivalent_modules_iso(const ModulePtr& m, const ModulePtr& m2, const EquivalenceData& d);

// Basis of Hom_{Z(C)}(A_M, A_C).
std::vector<Morphism> class_functions(const ModulePtr& m);

// X (*) A_M with dinaturals id_X (*) pi_m, as an end of X (*) Hom(-, -).
EndResult tensor_end(const ShimizuAdjoint& s, const Obj& x);
// Dinaturality of pi_F against module transformations between the functors R_m, R_m o R_x and R_P,
// and unique factoring of random families pi h0 for module transformations h0: L -> L.
Report verify_twocat_end(const TwoCatAdjoint& t, int trials, std::mt19937& rng);

}  // namespace tensoradj
