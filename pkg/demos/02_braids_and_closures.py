#!/usr/bin/env python3
"""Braid words, their closures, and the Markov moves.

A braid on n strands is a word in the Artin generators; letter +k crosses
strand k over strand k+1 and -k crosses it under.  Closing the braid (joining
each top endpoint to the bottom endpoint directly below) produces a link.
Two braid words close to the same link exactly when they are related by
conjugation and by (de)stabilization, so any function of braids invariant
under those two moves is a link invariant.
"""

from braidinv import BraidWord, compute_ado3, parse_braid


def main() -> None:
    print("=== parsing and formatting ===")
    for text in ["{1,{}}", "{2,{1}}", "{2,{1,1,1}}", "{3,{1,-2,1,-2}}"]:
        b = parse_braid(text)
        comps = b.closure_components()
        kind = "knot" if comps == 1 else f"{comps}-component link"
        print(f"  {str(b):<20}  strands={b.strands}  writhe={b.writhe():+d}  closure: {kind}")

    print("\n=== the underlying permutation ===")
    b = BraidWord(3, (1, 2))
    print(f"braid {b}: bottom strand arriving at each top position = {b.permutation()}")
    print(f"its closure has {b.closure_components()} component (a single 3-cycle)")

    print("\n=== conjugation never changes the closure ===")
    trefoil = parse_braid("{2,{1,1,1}}")
    g = parse_braid("{2,{1,-1,1}}")
    conj = trefoil.conjugate(g)
    print(f"braid:      {trefoil}")
    print(f"conjugate:  {conj}")
    v1 = compute_ado3(trefoil)
    v2 = compute_ado3(conj)
    print(f"same colored Alexander value: {v1.value == v2.value}")
    print(f"  value = {v1.value}")

    print("\n=== stabilization adds a strand but keeps the closure ===")
    stab_pos = trefoil.stabilize(+1)
    stab_neg = trefoil.stabilize(-1)
    print(f"stabilized: {stab_pos}  and  {stab_neg}")
    print(f"values still equal: "
          f"{compute_ado3(stab_pos).value == v1.value and compute_ado3(stab_neg).value == v1.value}")

    print("\n=== split links: add a strand without tying it in ===")
    # Same letters on one more strand: the closure gains a disjoint unknot.
    split = BraidWord(trefoil.strands + 1, trefoil.word)
    print(f"braid {split} closes to trefoil + far-away unknot")
    print(f"colored Alexander value: {compute_ado3(split).value}  (split links always vanish)")

    print("\n=== word algebra ===")
    a = parse_braid("{3,{1,2}}")
    b2 = parse_braid("{3,{-2,-1}}")
    print(f"{a} * {b2} = {a * b2}")
    print(f"inverse of {a} is {a.inverse()}")


if __name__ == "__main__":
    main()
