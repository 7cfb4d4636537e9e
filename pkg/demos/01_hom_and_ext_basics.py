"""
Hom and Ext of two quiver representations, step by step
=======================================================

A representation of a quiver assigns a vector space to every vertex and a
matrix to every arrow.  The morphisms between two representations are the
kernel of one block matrix, and the first extension group is its cokernel.
This script builds that matrix by hand on the smallest interesting example.
"""
import numpy as np

from quiverhom import (DimVector, FieldSpec, Quiver, euler_form,
                       hom_differential, hom_report, random_rep, rank,
                       thin_rep)

# the A2 quiver: one arrow 1 -> 2
q = Quiver(("1", "2"), [("1", "2")])
print("quiver:", q)

field = FieldSpec.prime()  # F_p at p = 2^31 - 1

# the two thin indecomposables supported on a single vertex
s1 = thin_rep(q, {"1"}, field)
s2 = thin_rep(q, {"2"}, field)

# Hom(S1, S2): a morphism needs a square at the arrow, but S1 has nothing
# at vertex 2 and S2 nothing at vertex 1, so the only morphism is zero.
# Ext^1(S1, S2) is one-dimensional: the extension is the thin interval rep.
rep = hom_report(s1, s2)
print(f"S1 -> S2: hom={rep.hom} ext1={rep.ext1} euler={rep.euler}")
assert (rep.hom, rep.ext1) == (0, 1)

# in the other order both groups vanish
rep = hom_report(s2, s1)
print(f"S2 -> S1: hom={rep.hom} ext1={rep.ext1} euler={rep.euler}")
assert (rep.hom, rep.ext1) == (0, 0)

# the difference hom - ext1 never depends on the matrices, only on the
# dimension vectors: it is the Euler form of the quiver
a, b = DimVector(q, (3, 2)), DimVector(q, (2, 4))
rng = np.random.default_rng(0)
r = random_rep(q, a, field, rng)
s = random_rep(q, b, field, rng)
rep = hom_report(r, s)
print(f"random (3,2) -> (2,4): hom={rep.hom} ext1={rep.ext1}, "
      f"euler form = {euler_form(q, a, b)}")
assert rep.hom - rep.ext1 == euler_form(q, a, b)

# the matrix whose rank decides everything, in the flesh: one column block
# per vertex (maps between the vertex spaces), one row block per arrow
F = hom_differential(r, s)
print(f"differential: {F.rows} x {F.cols}, rank {rank(F)}")
print("max rank?", rep.max_rank, "(hom or ext1 must vanish for that)")
