#pragma once

#include "refdefect/jordan.hpp"

namespace refdefect {

/// The two length-2 operator families with closed-form defect terms. The
/// per-block-pair term has the same min{p,r}-k shape for both, but under
/// different resonance conditions, so every evaluation names its family.
enum class OperatorFamily { derivation, mult };

/// Per-block-pair defect contribution.
///   derivation (T |-> AT - TB): min{p,r} - k when lam == mu and k < min{p,r}.
///   mult (T |-> ATB - T): min{p,r} - k when lam, mu != 0, lam*mu == 1 and
///   k < min{p,r}.
/// Zero otherwise.
int defect_term(OperatorFamily kind, int p, int r, const Scalar& lam, const Scalar& mu, int k);

/// Defect of the image of the assembled operator: the double sum of
/// defect_term over all block pairs of the two specs.
int rd_k_formula(OperatorFamily kind, const JordanSpec& a, const JordanSpec& b, int k);

/// True iff every common root of the minimal polynomials of the two specs has
/// multiplicity at most k; equivalent to rd_k_formula(derivation, a, b, k) == 0.
bool is_k_reflexive_image(const JordanSpec& a, const JordanSpec& b, int k);

const char* family_name(OperatorFamily f);
OperatorFamily family_from_name(const std::string& name);

}  // namespace refdefect
