#pragma once

#include "tensoradj/matrix.hpp"

#include <array>
#include <functional>
#include <random>
#include <string>
#include <vector>

namespace tensoradj {

// Skeletal object: multiplicity of each simple label.
using Obj = std::vector<int>;

Obj simple_obj(int rank, int a);
int total_dim(const Obj& x);
Obj direct_sum(const Obj& x, const Obj& y);  // copies of x come first within each label

// Multiplicity tensor mu(a, b, c) over label sets of sizes n0, n1, n2.
struct Mult3 {
    int n0 = 0, n1 = 0, n2 = 0;
    std::vector<int> v;

    Mult3() = default;
    Mult3(int a, int b, int c) : n0(a), n1(b), n2(c), v(static_cast<size_t>(a) * b * c, 0) {}
    int operator()(int a, int b, int c) const { return v[(static_cast<size_t>(a) * n1 + b) * n2 + c]; }
    int& at(int a, int b, int c) { return v[(static_cast<size_t>(a) * n1 + b) * n2 + c]; }
    bool operator==(const Mult3& o) const = default;
};

// Layout of the decomposition of x (*) y: in the block of output label c, summands are ordered
// lexicographically by (a, i, b, j, alpha) with i < x[a], j < y[b], alpha < mu(a, b, c).
// Holds a pointer to mu, which must outlive the Product.
class Product {
public:
    Product(const Obj& x, const Obj& y, const Mult3& mu);

    const Obj& out() const { return out_; }
    int pos(int c, int a, int i, int b, int j, int alpha) const
    {
        return off_[(static_cast<size_t>(c) * mu_->n0 + a) * mu_->n1 + b] + (i * y_[b] + j) * (*mu_)(a, b, c) + alpha;
    }

private:
    Obj x_, y_, out_;
    const Mult3* mu_;
    std::vector<int> off_;
};

// Morphism between skeletal objects: one block of shape tgt[i] x src[i] per label.
struct Morphism {
    Obj src, tgt;
    std::vector<ExactMatrix> blocks;

    static Morphism zero(const Obj& src, const Obj& tgt);
    static Morphism identity(const Obj& x);

    bool is_zero() const;
    bool is_identity() const;
    bool is_invertible() const;
    Morphism inverse() const;  // throws DivisionByZero when singular
    Morphism scaled(const ExactScalar& s) const;

    friend Morphism operator*(const Morphism& g, const Morphism& f);  // g after f
    friend Morphism operator+(const Morphism& f, const Morphism& g);
    friend Morphism operator-(const Morphism& f, const Morphism& g);
    friend bool operator==(const Morphism& f, const Morphism& g);
    friend bool operator!=(const Morphism& f, const Morphism& g) { return !(f == g); }
};

// Inclusion of x into x (+) y and the matching projection, and of y likewise.
Morphism sum_inclusion(const Obj& x, const Obj& y, bool second);
Morphism sum_projection(const Obj& x, const Obj& y, bool second);
Morphism direct_sum(const Morphism& f, const Morphism& g);

// The i-th copy of the simple a inside x, and the matching projection.
Morphism summand_inclusion(const Obj& x, int a, int i);
Morphism summand_projection(const Obj& x, int a, int i);

Morphism random_morphism(std::mt19937& rng, const Obj& src, const Obj& tgt);

// f (*) g through the Product layout of mu.
Morphism tensor_morphisms(const Morphism& f, const Morphism& g, const Mult3& mu);

// Per-quadruple associator block (x, y, z; d). Rows index the target basis (f, gamma, delta) with
// gamma < muYZ(y, z, f), delta < muXF(x, f, d); columns the source basis (e, alpha, beta) with
// alpha < muXY(x, y, e), beta < muEZ(e, z, d).
using BlockFn = std::function<const ExactMatrix&(int, int, int, int)>;

// (x y) z -> x (y z) assembled from blocks for arbitrary objects.
Morphism assemble_associator(const Obj& x, const Obj& y, const Obj& z, const Mult3& muXY, const Mult3& muEZ,
                             const Mult3& muYZ, const Mult3& muXF, const BlockFn& block);

int assoc_source_dim(int a, int b, int c, int d, const Mult3& muXY, const Mult3& muEZ);
int assoc_target_dim(int a, int b, int c, int d, const Mult3& muYZ, const Mult3& muXF);

struct Report {
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
    void add(std::string s) { violations.push_back(std::move(s)); }
    void merge(const Report& o, const std::string& prefix = "");
};

class FusionCategory {
public:
    std::string id;
    std::vector<std::string> simples;
    int unit = 0;
    std::vector<int> dual;
    Mult3 N;

    // Builds blocks keyed by (a, b, c, d); blocks absent from `given` default to the identity.
    // Throws SchemaError on malformed tensors and RigidityError when zig-zags cannot be solved.
    FusionCategory(std::string id, std::vector<std::string> simples, int unit, std::vector<int> dual, Mult3 N,
                   const std::vector<std::pair<std::array<int, 4>, ExactMatrix>>& given);

    int rank() const { return static_cast<int>(simples.size()); }
    Obj simple(int a) const { return simple_obj(rank(), a); }
    Obj unit_obj() const { return simple(unit); }
    int conductor() const;

    const ExactMatrix& F(int a, int b, int c, int d) const;
    void set_F(int a, int b, int c, int d, const ExactMatrix& m);  // for perturbation experiments; revalidate after

    Obj tensor(const Obj& x, const Obj& y) const;
    Product product(const Obj& x, const Obj& y) const { return Product(x, y, N); }
    Morphism tensor(const Morphism& f, const Morphism& g) const { return tensor_morphisms(f, g, N); }
    Morphism assoc(const Obj& x, const Obj& y, const Obj& z) const;
    Morphism assoc_inv(const Obj& x, const Obj& y, const Obj& z) const { return assoc(x, y, z).inverse(); }

    Obj dual_obj(const Obj& x) const;
    // Right duality pair: ev: x* (*) x -> 1 and coev: 1 -> x (*) x*. Left duality uses the pair of x*.
    Morphism ev(const Obj& x) const;
    Morphism coev(const Obj& x) const;
    Morphism left_ev(const Obj& x) const { return ev(dual_obj(x)); }      // x (*) x* -> 1
    Morphism left_coev(const Obj& x) const { return coev(dual_obj(x)); }  // 1 -> x* (*) x
    const ExactScalar& ev_coeff(int a) const { return ev_coeff_[a]; }
    const ExactScalar& coev_coeff(int a) const { return coev_coeff_[a]; }

    // Pentagon, unit and duality checks; rigidity zig-zags. stop_at_first returns after the first violation.
    Report validate(bool stop_at_first = false) const;
    Report check_zigzags() const;

    FusionCategory reverse() const;

    bool same_data(const FusionCategory& o) const;

private:
    std::vector<ExactMatrix> F_;
    std::vector<ExactScalar> ev_coeff_, coev_coeff_;
    size_t key(int a, int b, int c, int d) const;
    void check_schema() const;
    void synthesize_rigidity();
};

}  // namespace tensoradj
