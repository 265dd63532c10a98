"""Why the open row interval ends at a_ii - gamma_i + Theta_i.

With the alternative endpoint (minus Theta_i) the double B-bar intervals of
A1 stop at 35, below the H-eigenvalue 35.1469.

    python demos/literal_endpoint.py
"""
from hbounds import double_b_bar_set, heig_exact_n2
from hbounds.io import bundled

A1 = bundled("A1")
top = max(p.lam for p in heig_exact_n2(A1))
for mode in ("literal", "corrected"):
    S = double_b_bar_set(A1, tilde=mode)
    print(f"{mode:<10} {str(S):<32} contains {top:.4f}: {S.contains(top)}")
