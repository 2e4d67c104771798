"""
Diagrams on a cylinder
======================

Affine diagrams live on the side of a cylinder. Composing two of them stacks one on top of the
other; contractible loops are removed and counted, arcs may wind around the cut.
"""
from __future__ import annotations

import tempfile
from pathlib import Path

from affinetl import diagrams as dg
from affinetl.render import to_svg, to_text

# the twist moves every strand one slot to the right; the last one crosses the cut
t = dg.twist(3)
print("twist:", t)
print(to_text(t))

# three twists make a full turn: no arc is changed but every strand wraps once
full = dg.compose_many(t, t, t).diagram
print("twist^3:", full, " rank", dg.rank(full))

# a cup-cap generator squares to itself times one contractible loop
e = dg.cup_cap(3, 1)
res = dg.compose(e, e)
print("E1 E1 =", res.diagram, "with", res.loops, "loop(s)")

# the standard basis of the module with one through strand
for i, b in enumerate(dg.enumerate_standard(1, 3), 1):
    print(f"beta_{i}:", b)

# every diagram factors as standard . twist power . reflected standard
d = dg.compose_many(dg.twist(3), e, dg.twist(3)).diagram
mu, power, nu = dg.factorize(d)
print("factorization of", d, "->", mu, power, nu)

out = Path(tempfile.gettempdir()) / "twist3.svg"
out.write_text(to_svg(t, "twist on three strands"))
print("wrote", out)
