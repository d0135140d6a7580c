"""
Planar duals and the Cremona transformation
===========================================

A rotation system fixes an embedding in the sphere. Its faces become the
vertices of the dual graph, and each edge keeps its id. The polynomial of
the dual is the polynomial of the graph with every t_i inverted and the
result multiplied by t_1 ... t_n.
"""

from graphmotive import cremona_identity_check, cremona_point_check, dual, faces, psi, wheel_rotation
from graphmotive.embedding import family_rotation
from graphmotive.multipoly import reciprocal_transform

r = family_rotation("polygon", 4)
d = dual(r)
print("faces of the square:", len(faces(r).faces))
print("dual edges:", [(e.id, e.tail, e.head) for e in d.graph.edges])
print("Psi(square)        =", psi(r.graph))
print("Psi(dual)          =", psi(d.graph))
print("reciprocal of dual =", reciprocal_transform(psi(d.graph)))

###############################################################################
# The identity holds for any sphere embedding, e.g. the wheels.

for k in range(3, 7):
    print(f"W{k}: identity holds = {cremona_identity_check(wheel_rotation(k))}")

###############################################################################
# Over F_q, inverting coordinates maps the zeros of Psi with no vanishing
# coordinate one-to-one onto the same kind of zeros of the dual polynomial.

for q in (2, 3, 5):
    rep = cremona_point_check(wheel_rotation(4), q)
    print(f"q={q}: {rep.primal_off_sigma} -> {rep.dual_off_sigma} points, bijection {rep.passed}")
