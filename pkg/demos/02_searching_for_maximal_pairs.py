# Searching whole state spaces for maximally incompatible pairs.
#
# A pair is maximal exactly when points in the four level-face
# intersections form a parallelogram, so the search runs over pairs of
# disjoint faces and solves small LPs only for combinatorially viable ones.
import time

from gptmaxinc import zoo
from gptmaxinc.compat import degcom_half
from gptmaxinc.maxinc import cross_section, find_maxinc
from gptmaxinc.polytope import Halfspace, exposed_face

# %% Every built-in state space
for name in zoo.names():
    K = zoo.space(name)
    t0 = time.perf_counter()
    found = find_maxinc(K)
    dt = time.perf_counter() - t0
    verdict = "found" if found else "none"
    print(f"{name:>13}  dim {K.dim}  {K.num_vertices:>2} vertices  {verdict:>5}  ({dt:.2f}s)")

# %% The octahedron's certificate lies on an equatorial square
f, g, cert = find_maxinc(zoo.space("octahedron"))
for name, x in zip(("x00", "x10", "x01", "x11"), cert.points):
    print(name, tuple(map(str, x)))
print("section:", [tuple(map(str, x)) for x in cross_section(cert)])
print("degree of compatibility:", degcom_half(f, g).lambda_star)

# %% The cut-off pyramid has a square face, but the square is not enough
K = zoo.space("cut-pyramid")
top = exposed_face(K.body, Halfspace((0, 0, 1), 1))
print("top face vertices:", [tuple(map(str, v)) for v in K.body.face_points(top)])
print("maximal pair:", find_maxinc(K))

# %% Polygon prisms stand in for a cylinder; each of them has a maximal pair
for sides in (3, 5, 8):
    found = find_maxinc(zoo.polygon_prism(sides))
    print(f"prism over a {sides}-gon:", "found" if found else "none")
