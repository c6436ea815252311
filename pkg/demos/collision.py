"""One query to a trit-to-bit oracle: is the function constant?

Run with ``python3 demos/collision.py``.
"""

from __future__ import annotations

from hoi import collision as coll

print("quantum error:", coll.qt_collision_error())

print("density-cube error per non-constant f (tensor, closed form):")
for f, tensor, closed in coll.dc_collision_errors():
    print(f"  f={f.values}: {tensor:.6f}  {closed:.6f}")
print("density-cube error:", coll.dc_collision_error(), "(1/36 =", 1 / 36, ")")
