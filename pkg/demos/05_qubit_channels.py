# Maximal incompatibility among qubit channels.
#
# Four Choi matrices and two process-POVM effects reproduce the square's
# value table, and the midpoint identity holds, so the pair is maximal.
from gptmaxinc.channel import HermitianMatrix, qubit_channel_case, verify_case

case = qubit_channel_case()
for name, C in case.states.items():
    print(name, C)
print("M", case.M, " with sigma_M", case.sigma_M)
print("N", case.N, " with sigma_N", case.sigma_N)

# %% All checks
rep = verify_case(case)
for c in rep.checks:
    print(f"{c.name:>16}: {'pass' if c.passed else 'FAIL'}  {c.detail}")
print(rep.verdict)

# %% Breaking the data on purpose
print("2M:", verify_case(case.replace(M=case.M.scaled(2))).failed())
print("C10 with Tr1 != 1:", verify_case(case.replace(C10=HermitianMatrix.diag([1, 0, 1, 0]))).failed())
