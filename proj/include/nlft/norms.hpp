#pragma once

#include <limits>

#include "nlft/field.hpp"

namespace nlft {

inline constexpr double infinity = std::numeric_limits<double>::infinity();

/// Lattice L^p norm (h^2 sum |f|^p)^{1/p}; p = infinity gives max |f|.
double norm(const ComplexField& f, double p);

/// Homogeneous Sobolev norm ((2 pi)^{-2} int |xi|^{2s} |f^(xi)|^2 dxi)^{1/2}
/// with the ordinary transform. The xi = 0 mode is excluded when s < 0.
double sobolev_norm(const ComplexField& f, double s);

/// Dyadic shells 2^{j-1} < |xi| <= 2^j that meet the resolved band of
/// `lattice` (nonzero frequencies below the unpaired Nyquist row/column).
struct ShellRange {
  int lowest;
  int highest;
};
ShellRange resolved_shells(const Lattice& lattice);

/// Sharp Littlewood-Paley projection onto 2^{j-1} < |xi| <= 2^j. The shells
/// are disjoint, so summing every resolved shell plus the mean reproduces f
/// minus its Nyquist modes. Throws std::out_of_range for shells outside the band.
ComplexField lp_project(const ComplexField& f, int j);

/// sup_j 2^{j s} ||P_j f||_p over the resolved shells; the mean is excluded.
double besov_norm(const ComplexField& f, double s, double p);

/// Dyadic Hardy-Littlewood maximal function.
///
/// Mf(x) = max over r in {h, 2h, 4h, ..., <= L/2} of the mean of |f| over the
/// lattice nodes y with |x - y| < r. Balls are open, so the smallest one holds
/// x alone and Mf >= |f| exactly; balls are cut at the lattice edge and the
/// mean uses the number of nodes actually inside.
ComplexField maximal_function(const ComplexField& f);

}  // namespace nlft
