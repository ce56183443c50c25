# Degree of compatibility on two small state spaces.
#
# A square is the simplest state space with a maximally incompatible pair;
# a simplex is classical, so every pair of measurements on it is compatible.
from fractions import Fraction

from gptmaxinc import zoo
from gptmaxinc.compat import check_compatible, degcom_free, degcom_half, dual_beta
from gptmaxinc.gpt import effect_from_functional

# %% The square with the two coordinate effects
K = zoo.space("square")
f = effect_from_functional(K, (1, 0), 0)
g = effect_from_functional(K, (0, 1), 0)
print("vertices:", [tuple(map(str, v)) for v in K.vertices])
print("f at the vertices:", f)
print("g at the vertices:", g)

print("jointly measurable?", check_compatible(f, g) is not None)

# %% Mixing with fair coins until a joint measurement exists
half = degcom_half(f, g)
print("lambda with fair coins:", half.lambda_star)
print("joint effect p at that lambda:", half.witness.p)

free = degcom_free(f, g)
print("lambda with the best coins:", free.lambda_star, "biases", free.mu1, free.mu2)

# %% The dual program certifies the same number from the other side
cert = dual_beta(f, g)
print("beta =", cert.beta, " (1 - lambda)/lambda =", (1 - half.lambda_star) / half.lambda_star)
print("nu, eta =", cert.nu, cert.eta)
for i, z in enumerate(cert.points, 1):
    print(f"  z{i} =", tuple(map(str, z)))
print("nu z1 + (1-nu) z2 == eta z3 + (1-eta) z4:", cert.balanced())

# %% A simplex: effects b1 + b2 and b1 + b3 are compatible, with p = b1
S = zoo.space("simplex3")
f = effect_from_functional(S, (1, 1, 0, 0), 0)
g = effect_from_functional(S, (1, 0, 1, 0), 0)
w = check_compatible(f, g)
print("simplex pair compatible?", w is not None)
for outcome, values in w.table.items():
    print(f"  {outcome:>8}:", ", ".join(map(str, values)))
print("lambda:", degcom_half(f, g).lambda_star, " beta:", dual_beta(f, g).beta)

# %% Noise interpolates: shrinking one effect towards 1/2 raises the degree
for shrink in (Fraction(1), Fraction(3, 4), Fraction(1, 2)):
    f = effect_from_functional(K, (shrink, 0), (1 - shrink) / 2)
    g = effect_from_functional(K, (0, 1), 0)
    print(f"f = {shrink} x1 + {(1 - shrink) / 2}:  lambda =", degcom_half(f, g).lambda_star)
