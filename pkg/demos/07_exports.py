"""Byte-stable exports: DOT for rendering, JSON for downstream tooling.

Vertex labels use each family's canonical element names (residues, cycle
notation, or normal-form words); edge lists are sorted with u < v, so
identical inputs always produce identical bytes.
"""

import json

from kpower import build_group, build_undirected, to_dot, to_json_dict

q8 = build_group("quaternion:2")
gr = build_undirected(q8, 6)
print("Q_8 at k=6 is a star centred at the unique involution a^2:\n")
print(to_dot(q8, gr))

z4 = build_group("cyclic:4")
print("JSON export of P(Z_4, 2):\n")
print(json.dumps(to_json_dict(z4, build_undirected(z4, 2)), indent=2))
