#pragma once

#include "splitquat/polynomial.hpp"

namespace fixtures {

using splitquat::QuatPoly;
using splitquat::Quaternion;
using splitquat::Signature;

inline Quaternion qt(const mpq_class& w, const mpq_class& x, const mpq_class& y, const mpq_class& z,
                     Signature sig = Signature::Split) {
  return Quaternion::exact(w, x, y, z, sig);
}

// t^2 - (2+j+2k)t + (1 + s*2i + j + 2k), s = +1 Hamiltonian, -1 split.
inline QuatPoly example(Signature sig) {
  int s = sig == Signature::Split ? -1 : 1;
  return QuatPoly({qt(1, 2 * s, 1, 2, sig), qt(-2, 0, -1, -2, sig), qt(1, 0, 0, 0, sig)}, sig,
                  splitquat::Backend::Exact);
}

inline QuatPoly example1() { return example(Signature::Hamiltonian); }
inline QuatPoly example2() { return example(Signature::Split); }

// Monic (t - h1)(t - h2) written out coefficient by coefficient from a
// product supplied by the caller.
inline QuatPoly expanded(const Quaternion& h1, const Quaternion& h2, const Quaternion& h1h2) {
  Signature sig = h1.signature();
  return QuatPoly({h1h2, -(h1 + h2), Quaternion::one(sig, splitquat::Backend::Exact)}, sig,
                  splitquat::Backend::Exact);
}

}  // namespace fixtures
