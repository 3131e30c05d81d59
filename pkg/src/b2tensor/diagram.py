"""Growth diagram of tensor powers as DOT.

Level p holds the irreducible summands of the p-th power; an edge joins a
level-(p-1) node to each summand of its product with the fundamental module,
so paths from the root count multiplicities.
"""

from __future__ import annotations

from .engine import decomposition, single_step_decompose, _module_index
from .lattice import MODULE_NAME, Weight


def level_slice(module, p: int) -> dict:
    """Dominant weight -> multiplicity at level p."""
    return dict(decomposition(module, p).multiplicities)


def growth_edges(module, p_max: int):
    """[(p, source weight, target weight)] for 1 <= p <= p_max."""
    i = _module_index(module)
    out = []
    for p in range(1, p_max + 1):
        for mu, _ in decomposition(i, p - 1).multiplicities:
            for nu in sorted(single_step_decompose(mu, i)):
                out.append((p, mu, nu))
    return out


def _node_id(p: int, w: Weight) -> str:
    return f"p{p}_{w.d1}_{w.d2}".replace("-", "m")


def to_dot(module, p_max: int) -> str:
    """DOT source for the growth diagram up to level p_max."""
    i = _module_index(module)
    name = MODULE_NAME[i]
    lines = [
        f'digraph "{name}_powers" {{',
        "  rankdir=TB;",
        '  node [shape=box, fontname="monospace"];',
    ]
    for p in range(p_max + 1):
        lines.append(f"  subgraph level_{p} {{ rank=same;")
        for w, m in decomposition(i, p).multiplicities:
            label = f"{w.text()}\\nx{m}"
            lines.append(f'    {_node_id(p, w)} [label="{label}"];')
        lines.append("  }")
    for p, mu, nu in growth_edges(i, p_max):
        lines.append(f"  {_node_id(p - 1, mu)} -> {_node_id(p, nu)};")
    lines.append("}")
    return "\n".join(lines) + "\n"
