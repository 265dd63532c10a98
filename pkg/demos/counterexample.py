"""A DSDD Z-matrix that is not positive definite.

[[-1, -1/2], [-1/2, -1]] satisfies both doubly-dominant conditions but has
negative diagonal, so dominance alone certifies nothing. Sign-normalizing
the rows moves it into the B-bar classes without making it PD.

    python demos/counterexample.py
"""
import json

from hbounds import certify_positive_definite, classify_all, heig_exact_n2, sign_normalize
from hbounds.io import bundled

A = bundled("counterexample")
report = classify_all(A)
print(json.dumps(report.to_json(), indent=2))

# The first violated inequality for double B: the diagonal is below beta = 0.
print("witness:", report.witnesses["double_b"])

print("Abar =", sign_normalize(A).data.tolist())
print("certificate:", certify_positive_definite(A))
print("eigenvalues:", [p.lam for p in heig_exact_n2(A)])
