#pragma once

#include "tensoradj/fusion.hpp"

#include <memory>

namespace tensoradj {

// Semisimple left module category. A(x, m, n) is the multiplicity of n in x (.) m; the module
// associator m_{X,Y,M}: (X Y) (.) M -> X (.) (Y (.) M) is assembled from blocks (x, y, m; n).
//
// Internal Hom: Hom(M, N) has, in the block of a base label a, one summand per (m, j, n, l, alpha)
// with j < M[m], l < N[n], alpha < A(a, m, n). The isomorphism
//   phi: Hom_C(X, Hom(M, N)) -> Hom_M(X (.) M, N)
// sends the entry [(m, j, n, l, alpha), i] of the a-block to the entry [l, (a, i, m, j, alpha)] of the
// n-block, so phi and psi are coordinate reindexings and all structure lives in the associators.
class ModuleCategory {
public:
    std::string id;
    std::shared_ptr<const FusionCategory> base;
    std::vector<std::string> msimples;
    Mult3 A;     // (base, module, module)
    Mult3 Ahom;  // (module, module, base): Ahom(m, n, a) = A(a, m, n)

    ModuleCategory(std::string id, std::shared_ptr<const FusionCategory> base, std::vector<std::string> msimples,
                   Mult3 A, const std::vector<std::pair<std::array<int, 4>, ExactMatrix>>& given);

    const FusionCategory& C() const { return *base; }
    int size() const { return static_cast<int>(msimples.size()); }
    Obj msimple(int m) const { return simple_obj(size(), m); }

    const ExactMatrix& Mblock(int x, int y, int m, int n) const;
    void set_Mblock(int x, int y, int m, int n, const ExactMatrix& b);

    Obj act(const Obj& x, const Obj& m) const { return Product(x, m, A).out(); }
    Morphism act(const Morphism& f, const Morphism& g) const { return tensor_morphisms(f, g, A); }
    Morphism massoc(const Obj& x, const Obj& y, const Obj& m) const;
    Morphism massoc_inv(const Obj& x, const Obj& y, const Obj& m) const { return massoc(x, y, m).inverse(); }

    Report validate(bool stop_at_first = false) const;  // see FusionCategory::validate
    bool indecomposable() const;

    Obj hom(const Obj& m, const Obj& n) const { return Product(m, n, Ahom).out(); }
    Morphism phi(const Obj& x, const Obj& m, const Obj& n, const Morphism& beta) const;
    Morphism psi(const Obj& x, const Obj& m, const Obj& n, const Morphism& alpha) const;
    // Hom(h, g): Hom(M', N) -> Hom(M, N') for h: M -> M', g: N -> N'.
    Morphism hom_map(const Morphism& h, const Morphism& g) const;

    Morphism ev(const Obj& m, const Obj& n) const;    // Hom(M, N) (.) M -> N
    Morphism coev(const Obj& x, const Obj& m) const;  // X -> Hom(M, X (.) M)
    // Hom(M, N) (*) Hom(L, M) -> Hom(L, N); the right factor acts first.
    Morphism comp(const Obj& l, const Obj& m, const Obj& n) const;
    Morphism comp(const Obj& m) const { return comp(m, m, m); }

    // Module structure of Hom(M, -): Hom(M, X (.) N) -> X (*) Hom(M, N).
    Morphism frak_a(const Obj& x, const Obj& m, const Obj& n) const;
    // Hom(X (.) M, N) -> Hom(M, N) (*) X*.
    Morphism frak_b1(const Obj& x, const Obj& m, const Obj& n) const;
    // Hom(X (.) M, N) (*) X -> Hom(M, N), assembled from frak_b1 and ev_X.
    Morphism frak_b(const Obj& x, const Obj& m, const Obj& n) const;

    bool same_data(const ModuleCategory& o) const;

private:
    std::vector<ExactMatrix> M_;
    size_t key(int x, int y, int m, int n) const;
};

using ModulePtr = std::shared_ptr<const ModuleCategory>;
using CategoryPtr = std::shared_ptr<const FusionCategory>;

}  // namespace tensoradj
