#!/usr/bin/env python3
"""Walk the bundled worked example end to end and print every verdict.

The session presents a three-dimensional domain as the kernel of a map
onto a five-generator subring of Q[x, y, z].  Two distinct primes of
the target contract onto the same height-two prime of the presented
ring, and the fraction e/d lies in the S2-ification because its
conductor is that height-two prime.
"""

from pathlib import Path

from ringgraph import (
    conductor,
    dimension,
    height_in_quotient,
    parse_fraction,
    parse_session,
    s2_local_decision,
)

SESSION = Path(__file__).resolve().parent.parent / "sessions" / (
    "surface_with_two_planes_over_a_line.rg"
)


def main() -> int:
    session = parse_session(SESSION.read_text())
    phi = session.ring_map("phi")
    print("map images:", ", ".join(str(g) for g in phi.images))

    j = session.ideal("J")
    print("kernel generators:")
    for g in j.min_gen_strings():
        print(f"  {g}")
    print("all generators map to zero:", all(phi.apply(g).is_zero() for g in j.gens))
    print("dimension of the presented ring:", dimension(j))

    pres = session.presented("R")
    p = session.ideal("P")
    print("height of P = (b, c, d, e):", height_in_quotient(pres, p))

    c1, c2 = session.ideal("C1"), session.ideal("C2")
    q1, q2 = session.ideal("Q1"), session.ideal("Q2")
    print("Q1 == Q2 in the target:", q1.equals(q2))
    print("contract(Q1) == P:", c1.equals(p))
    print("contract(Q2) == P:", c2.equals(p))

    frac = parse_fraction(session, "R", "e / d")
    res = conductor(frac)
    print(f"conductor of e/d: ({', '.join(res.ideal.min_gen_strings())})")
    print("conductor height:", res.height_text())
    print("e/d lies in the S2-ification:", res.member)

    local = s2_local_decision(pres)
    print("S2-ification is local:", local.connected)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
