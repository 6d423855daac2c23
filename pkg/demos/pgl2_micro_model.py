# pgl_2 in characteristic 2: centraliser and stabiliser dimensions disagree.
from decompclasses.micro import pgl2_micro

for p, k in [(2, 1), (2, 2), (2, 3), (3, 1)]:
    report = pgl2_micro(p, k)
    print(f"F_{p}^{k}", "control" if report["control"] else "")
    for r in report["rows"]:
        print("  ", r["element"].ljust(18), r["centraliser_dim"], r["stabiliser_dim"], "nilp" if r["nilpotent"] else "")
    print("  checks:", report["checks"])

# the nilpotent pi(E12): centraliser dim 2, stabiliser dim 1, and raising k changes nothing
