"""Print the table of sharp constants kappa(n, B)."""
from approxconvex.cli import format_table_entry
from approxconvex.extremal import kappa

print("B\\n " + " ".join(f"{n:>7}" for n in range(1, 11)))
for B in range(2, 12):
    print(f"{B:>3} " + " ".join(f"{format_table_entry(kappa(n, B)):>7}" for n in range(1, 11)))

# Exact values for B = 2; powers of two minus one give integers.
print([str(kappa(n, 2)) for n in range(1, 11)])
print([int(kappa(2**k - 1, 2)) for k in range(1, 7)])
