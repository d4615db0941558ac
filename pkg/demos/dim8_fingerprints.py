"""
The fourteen 8-dimensional algebras
===================================

Each entry is Frobenius; the invariant vector shown below each name tells
them apart.
"""
from frobenius_masa.catalog import dim8_table
from frobenius_masa.lie import fingerprint, frobenius_decide

table = dim8_table()
keys = {}
for e in table:
    k = fingerprint(e.algebra).key()
    keys[e.label] = k
    mark = "nonderog" if e.expected["nonderogatory_form"] else "        "
    print(f"{e.label:<28} {mark}  frobenius={frobenius_decide(e.algebra).frobenius}")
    print(f"    {k}")

print()
print("distinct fingerprints:", len(set(keys.values())), "of", len(table))
