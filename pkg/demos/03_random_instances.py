# Duality, complement invariance and the [1/2, 1] bound on random instances.
from collections import Counter

from gptmaxinc import zoo
from gptmaxinc.compat import check_compatible, complement_variants, degcom_half, dual_beta

cases = zoo.random_instances(40, seed=1)
kinds = Counter()
for K, f, g in cases:
    lam = degcom_half(f, g).lambda_star
    beta = dual_beta(f, g).beta
    assert beta == (1 - lam) / lam
    assert (beta == 0) == (check_compatible(f, g) is not None)
    assert len({degcom_half(a, b).lambda_star for a, b in complement_variants(f, g)}) == 1
    kinds["compatible" if lam == 1 else "maximal" if lam * 2 == 1 else "in between"] += 1

print("instances:", len(cases))
print(dict(kinds))

# %% The spread of lambda values
lams = sorted(degcom_half(f, g).lambda_star for _, f, g in cases)
print("smallest:", lams[0], "~", float(lams[0]))
print("median:", lams[len(lams) // 2], "~", float(lams[len(lams) // 2]))
