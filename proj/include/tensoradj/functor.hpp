#pragma once

#include "tensoradj/module.hpp"

#include <optional>

namespace tensoradj {

// Additive functor fixed by its values on simples: F(m) holds T(m, n) copies of n, numbered so that
// F(f) = f (x) id on those copies. coh[x * |source| + m] is c_{x,m}: F(x (.) m) -> x (.) F(m).
struct TableFunctor {
    ModulePtr source, target;
    Mult3 T;  // (source, 1, target)
    std::vector<Morphism> coh;
};

// Module functor stored as a chain of table functors applied first to last; an empty chain is the
// identity. Composition concatenates chains, so it is strictly associative and unital.
class ModuleFunctor {
public:
    ModulePtr source, target;
    std::vector<std::shared_ptr<const TableFunctor>> factors;

    static ModuleFunctor identity(ModulePtr m);
    // t[m][n] is the multiplicity of n in F(m). Throws ShapeError on size mismatches.
    static ModuleFunctor from_table(ModulePtr source, ModulePtr target, const std::vector<std::vector<int>>& t,
                                    std::vector<Morphism> coh);

    bool is_identity() const { return factors.empty(); }
    std::vector<std::vector<int>> table() const;
    Obj apply(const Obj& m) const;
    Morphism apply(const Morphism& f) const;
    // c_{X,M}: F(X (.) M) -> X (.) F(M) for arbitrary objects.
    Morphism coherence(const Obj& x, const Obj& m) const;
    // A single table factor agreeing with this functor on simples, with the coherence transported.
    ModuleFunctor flatten() const;

    // Compatibility with the module associators on simple triples, unit condition, invertibility.
    Report validate() const;
};

bool same_module(const ModulePtr& a, const ModulePtr& b);

ModuleFunctor compose(const ModuleFunctor& g, const ModuleFunctor& f);  // g after f; throws ShapeError
// Direct sum of parallel functors; in each block the copies of the first summand come first.
ModuleFunctor direct_sum(const std::vector<ModuleFunctor>& fs);

// Natural transformation given by its components at the simples of the source category.
struct ModuleNatTrans {
    ModuleFunctor source, target;
    std::vector<Morphism> comp;  // comp[m]: F(m) -> G(m)

    static ModuleNatTrans identity(const ModuleFunctor& f);
    static ModuleNatTrans zero(const ModuleFunctor& f, const ModuleFunctor& g);
    // Component at an arbitrary object, summed over its simple summands by naturality.
    Morphism at(const Obj& m) const;
    bool is_invertible() const;
    ModuleNatTrans inverse() const;
    ModuleNatTrans scaled(const ExactScalar& s) const;
    // d_{X,M} theta_{X (.) M} = (id_X (.) theta_M) c_{X,M} at simple X and M.
    Report check_module() const;
    bool operator==(const ModuleNatTrans& o) const { return comp == o.comp; }
};

ModuleNatTrans operator*(const ModuleNatTrans& b, const ModuleNatTrans& a);  // vertical, b after a
ModuleNatTrans operator+(const ModuleNatTrans& a, const ModuleNatTrans& b);
ModuleNatTrans whisker(const ModuleFunctor& h, const ModuleNatTrans& a);     // id_H o a
ModuleNatTrans whisker(const ModuleNatTrans& a, const ModuleFunctor& k);     // a o id_K
ModuleNatTrans horizontal(const ModuleNatTrans& b, const ModuleNatTrans& a); // b o a

// Summand s of direct_sum(fs) and the projection onto it, as module transformations.
ModuleNatTrans direct_sum_inclusion(const ModuleFunctor& sum, const std::vector<ModuleFunctor>& fs, size_t s);
ModuleNatTrans direct_sum_projection(const ModuleFunctor& sum, const std::vector<ModuleFunctor>& fs, size_t s);

// Basis of the module natural transformations F -> G, and an invertible one when it exists. The
// invertible element is a combination of the basis with coefficients from a fixed seed.
std::vector<ModuleNatTrans> module_transformations(const ModuleFunctor& f, const ModuleFunctor& g);
std::optional<ModuleNatTrans> find_natural_iso(const ModuleFunctor& f, const ModuleFunctor& g);

// left -| right with unit Id -> right o left and counit left o right -> Id.
struct Adjunction {
    ModuleFunctor left, right;
    ModuleNatTrans unit, counit;
    // Triangle identities, module conditions on unit and counit, module axioms of both functors.
    Report check() const;
};

// F -| *F: transposed table, coordinate unit and counit, coherence the inverse of
// G(x (.) eps) G(c_{x,G}) eta_{x (.) G}. Throws AdjunctionError when that map is singular.
Adjunction right_adjoint(const ModuleFunctor& f);
// F* -| F with coherence eps' K(c^{-1}) K(x (.) eta').
Adjunction left_adjoint(const ModuleFunctor& f);

// F o G -| *G o *F from F -| *F and G -| *G, with F o G = compose(F, G).
Adjunction compose_adjunctions(const Adjunction& f, const Adjunction& g);

// *G -> *F for a: F -> G, along fa: F -| *F and ga: G -| *G.
ModuleNatTrans mate(const ModuleNatTrans& a, const Adjunction& fa, const Adjunction& ga);
// *(F o G) -> *G o *F built from the duality data of F, G and F o G.
ModuleNatTrans dual_of_composition_iso(const Adjunction& f, const Adjunction& g, const Adjunction& fg);
ModuleNatTrans dual_of_composition_iso(const ModuleFunctor& f, const ModuleFunctor& g);

ModulePtr regular_module(const CategoryPtr& c);
// R_P: Y -> Y (.) P from the regular module to m, with coherence m_{Z,Y,P}.
ModuleFunctor action_functor(const ModulePtr& regular, const ModulePtr& m, const Obj& p);
// R_f: R_P -> R_Q with components id_Y (.) f for f: P -> Q.
ModuleNatTrans action_transformation(const ModulePtr& regular, const ModulePtr& m, const Morphism& f);
// R_x: Y -> Y (*) x on the regular module.
inline ModuleFunctor right_mult(const ModulePtr& regular, const Obj& x) { return action_functor(regular, regular, x); }
// R_x -| R_{x*} with unit a^{-1}_{Y,x,x*}(id (*) coev_x) and counit (id (*) ev_x) a_{Z,x*,x}.
Adjunction rigidity_adjunction(const ModulePtr& regular, const Obj& x);
// alpha_F: R_{F(1)} -> F with components (c_{X,1})^{-1}, for F out of the regular module.
ModuleNatTrans point_iso(const ModuleFunctor& f, const ModulePtr& regular);

// Compares, for every simple N, the dual-of-composition isomorphism of R_m o R_x (made comparable
// through the mate of m_{-,x,m}) against frak_b1(x, m, N). A theta_scale other than 1 rescales that
// identification and serves as a negative control.
Report verify_duals_lemma(const ModulePtr& m, int x, int mm, const ExactScalar& theta_scale = ExactScalar(1));

}  // namespace tensoradj
