#pragma once

#include "tensoradj/functor.hpp"

#include <functional>

namespace tensoradj {

// h with legs[k] h = targets[k] for every k, solved label by label from the stacked legs.
struct Factoring {
    Morphism h;
    bool exists = false;
    bool unique = false;
};
Factoring solve_stacked(const std::vector<Morphism>& legs, const std::vector<Morphism>& targets);
// As solve_stacked, but a missing or non-unique solution throws TheoremViolation naming `what`.
Morphism factor_uniquely(const std::vector<Morphism>& legs, const std::vector<Morphism>& targets,
                         const std::string& what);

// End of S: M^op x M -> C over a semisimple M, realized as the sum over simples of S(m, m).
// S_map(f, g): S(P, Q) -> S(P', Q') for f: P' -> P and g: Q -> Q'.
struct EndResult {
    Obj object;
    int size = 0;                // number of simples of M
    std::vector<Morphism> pi;    // pi[m]: object -> S(m, m)
    std::function<Obj(const Obj&, const Obj&)> S;
    std::function<Morphism(const Morphism&, const Morphism&)> S_map;

    // Dinatural at an arbitrary object: sum over its summands of S(p_{m,j}, i_{m,j}) pi_m.
    Morphism at(const Obj& p) const;
};

// Inclusions and projections of the summands of a finite direct sum of objects; summand k comes
// before summand k + 1 within every label.
struct SumLayout {
    Obj total;
    std::vector<Morphism> inc, proj;
};
SumLayout sum_layout(const std::vector<Obj>& parts);

// Integral over the simples of M of Hom(m, F(m)) for an endofunctor F of M.
EndResult end_internal_hom(const ModulePtr& m, const ModuleFunctor& f);
// Random families pi h0 must factor uniquely through h0; lambda pi must give lambda id; dinaturality is
// checked on random composites and random morphisms between them.
Report verify_end_universal(const EndResult& e, int trials, std::mt19937& rng);

// Object with half-braiding sigma[a]: V (*) a -> a (*) V at each simple a.
struct CenterObject {
    CategoryPtr cat;
    Obj object;
    std::vector<Morphism> sigma;

    static CenterObject unit(const CategoryPtr& c);
    // sigma_X for an arbitrary object, summed over the simple summands of X.
    Morphism at(const Obj& x) const;
};

// Unit law and sigma_{X Y} = a^{-1}_{X,Y,V} (id (*) sigma_Y) a_{X,V,Y} (sigma_X (*) id) a^{-1}_{V,X,Y} on simples.
Report validate_half_braiding(const CenterObject& v);
// (id_X (*) f) sigma_X = tau_X (f (*) id_X) at every simple X.
bool is_center_morphism(const Morphism& f, const CenterObject& v, const CenterObject& w);
std::vector<Morphism> center_hom(const CenterObject& v, const CenterObject& w);
// sigma_X = a_{X,V,W} (sigma^V_X (*) id) a^{-1}_{V,X,W} (id (*) sigma^W_X) a_{V,W,X}.
CenterObject center_tensor(const CenterObject& v, const CenterObject& w);

struct CenterAlgebra {
    CenterObject carrier;
    Morphism mult;  // A (*) A -> A
    Morphism unit;  // 1 -> A
};
Report validate_center_algebra(const CenterAlgebra& a);

}  // namespace tensoradj
