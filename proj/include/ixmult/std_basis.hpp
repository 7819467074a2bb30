#pragma once

#include <string>
#include <vector>

#include "ixmult/ideal.hpp"
#include "ixmult/module_vector.hpp"
#include "ixmult/order.hpp"

namespace ixm {

// Order on (monomial, position) pairs: positions below `dominant_components`
// beat all others (used for syzygy extraction); within a block the monomial is
// compared under the ring order and ties go to the lower position.
struct ModuleOrder {
    MonomialOrder ring_order;
    int dominant_components = 0;
};

struct StdBasis {
    std::vector<Polynomial> gens;
    MonomialOrder order;
};

struct ModuleStdBasis {
    std::vector<ModuleVector> gens;
    ModuleOrder order;
};

// Reduction against G under the ring's own order: full division for global
// orders, Mora's weak normal form (ecart-guided, with intermediate results
// admitted as reducers) otherwise. A zero result certifies membership in the
// submodule generated by G when G is a standard basis.
Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& G);
ModuleVector normal_form(const ModuleVector& v, const std::vector<ModuleVector>& G,
                         int dominant_components = 0);

StdBasis std_basis(const Ideal& I);
ModuleStdBasis std_basis(const RingPtr& ring, int rank, const std::vector<ModuleVector>& gens,
                         int dominant_components = 0);

bool is_member(const Polynomial& f, const StdBasis& B);
bool is_member(const Polynomial& f, const Ideal& I);

// Generators of I ∩ Q[remaining variables], as an ideal of a fresh ring on the
// remaining variables (original relative order, DegRevLex). Uses a block order
// with the eliminated variables dominant.
Ideal eliminate(const Ideal& I, const std::vector<std::string>& vars);

// Generators of the kernel of R^(#gens) -> R^m, e_i -> gens[i], over the
// localization when the ring order is local. Result vectors have rank #gens.
std::vector<ModuleVector> syzygies(const RingPtr& ring, const std::vector<Polynomial>& gens);
std::vector<ModuleVector> syzygies(const RingPtr& ring, int rank,
                                   const std::vector<ModuleVector>& gens);

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g);

}  // namespace ixm
