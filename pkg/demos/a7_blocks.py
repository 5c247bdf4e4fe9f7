"""Split the 272 alternating orderings of a 7-vertex path into rooted-tree blocks.

Run: python3 demos/a7_blocks.py
"""
from collections import Counter

from gammacone import (
    block_decomposition,
    classify_extension,
    named_family,
    principal_decomposition,
    principal_number_formula,
    principal_number_induction,
    principal_orientation,
)
from gammacone.count import brute_extensions, count_ideals_dp

g = named_family("path", 7)

# Two ways to 2-colour the path: the even positions or the odd ones go first.
for side in (0, 1):
    d = principal_decomposition(g, side)
    po = principal_orientation(g, d)
    print(f"pi1 = {sorted(d.pi1)}  pi2 = {sorted(d.pi2)}  orientation {po.to_bitstring()}")

    # The same number three ways.
    print("  formula  ", principal_number_formula(g, d))
    print("  induction", principal_number_induction(g, d))
    print("  ideal DP ", count_ideals_dp(po))

    # Each block is a rooted tree on all seven vertices; its chambers are
    # counted by the hook length formula 7! / prod(subtree sizes).
    report = block_decomposition(g, d)
    for i, b in enumerate(report.blocks):
        sizes = " * ".join(map(str, b.denominators))
        print(f"  block {i:>2}: root {b.lifted.root}  7!/({sizes}) = {b.hook_count}")
    print(f"  {len(report.blocks)} blocks, total {report.total}")

    # Every extension falls in exactly one block.
    fibers = Counter(classify_extension(c, report) for c in brute_extensions(po))
    assert [fibers[i] for i in range(len(report.blocks))] == report.counts()
    print("  every one of the", sum(fibers.values()), "orderings lands in exactly one block\n")
