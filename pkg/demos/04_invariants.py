#!/usr/bin/env python3
"""Computing the invariants: colored Alexander, Links-Gould, specialization.

Three entry points share one engine.  compute_ado3 returns the third colored
Alexander polynomial, a one-variable Laurent polynomial over Z[w].
compute_lg returns the two-variable Links-Gould polynomial.
compute_lg_specialized pushes Links-Gould through t0 = t^2, t1 = w^2 t^-2
without ever forming the generic polynomial, which is much cheaper.  On every
braid the specialized value coincides with the colored Alexander value; this
script shows the coincidence on the standard small links and spot-checks the
structural facts that pin the normalization.
"""

from braidinv import (
    CycScalar,
    compute_ado3,
    compute_lg,
    compute_lg_specialized,
    parse_braid,
    specialize,
)

EXAMPLES = [
    ("unknot", "{1,{}}"),
    ("unknot, 2 strands", "{2,{1}}"),
    ("Hopf link", "{2,{1,1}}"),
    ("trefoil", "{2,{1,1,1}}"),
    ("figure-eight", "{3,{1,-2,1,-2}}"),
    ("Solomon's link", "{2,{1,1,1,1}}"),
    ("5_1 knot", "{2,{1,1,1,1,1}}"),
]


def main() -> None:
    print("=== colored Alexander vs specialized Links-Gould ===")
    for name, text in EXAMPLES:
        b = parse_braid(text)
        ado = compute_ado3(b)
        lgs = compute_lg_specialized(b)
        flag = "==" if ado.value == lgs.value else "!="
        print(f"{name:<20} {str(b):<16} {flag}  {ado.value}")

    print("\n=== the two-variable polynomial and its specialization ===")
    trefoil = parse_braid("{2,{1,1,1}}")
    lg = compute_lg(trefoil)
    print(f"Links-Gould(trefoil) = {lg.value}")
    print(f"specialize(generic) == specialized engine: "
          f"{specialize(lg.value) == compute_lg_specialized(trefoil).value}")

    print("\n=== mirror images ===")
    mirror = trefoil.inverse()
    print(f"trefoil:        {compute_ado3(trefoil).value}")
    print(f"mirror trefoil: {compute_ado3(mirror).value}")
    print("(the invariant separates this chiral pair)")

    print("\n=== evaluations at roots ===")
    # On knots the value at t = 1 and at t = w is exactly 1; on links with
    # more than one component it is 0.
    for name, text in EXAMPLES:
        b = parse_braid(text)
        v = compute_ado3(b).value
        at_one = v.evaluate(CycScalar.one())
        at_w = v.evaluate(CycScalar.omega())
        comps = b.closure_components()
        print(f"{name:<20} components={comps}  value(1)={at_one}  value(w)={at_w}")

    print("\n=== palindromic symmetry t -> w / t ===")
    fig8 = parse_braid("{3,{1,-2,1,-2}}")
    v = compute_ado3(fig8).value
    print(f"figure-eight value: {v}")
    print(f"after t -> w/t:     {v.substitute_unit_over_t(CycScalar.omega())}")
    print(f"equal: {v == v.substitute_unit_over_t(CycScalar.omega())}")

    print("\n=== paranoid mode ===")
    # paranoid=True re-verifies, per braid, that the closure operator is a
    # scalar multiple of the identity before reading off the invariant.
    v = compute_ado3(trefoil, paranoid=True)
    print(f"paranoid recompute agrees: {v.value == compute_ado3(trefoil).value}")
    print(f"metadata: kind={v.kind}, braid={v.braid}, paranoid={v.paranoid}")


if __name__ == "__main__":
    main()
