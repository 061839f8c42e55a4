"""Plain-text trace of a fold sequence, printed the way the maps are written by hand."""

from mtorus.core.models import GraphMap
from mtorus.folding.models import FoldSequence, SubdivisionStep


def _map_lines(name: str, m: GraphMap) -> list[str]:
    return [f"{name}({label}) = {path}" for label, path in m.edge_map.items()]


def format_trace(seq: FoldSequence) -> str:
    """One stanza per step; fold stanzas also list the induced map g_{i+1}."""
    lines = [
        f"# input: {seq.original.graph.num_vertices} vertices, "
        f"{seq.original.graph.num_edges} edges, size {seq.sizes[0]}",
        *_map_lines("f", seq.original.map),
        f"sigma0 = {seq.stages[0].sigma}",
    ]
    for j, step in enumerate(seq.steps):
        i, after = j // 2, seq.stages[j + 1]
        lines.append("")
        if isinstance(step, SubdivisionStep):
            lines.append(f"# subdivision s{i}: candidate {step.candidate}")
            lines += _map_lines(f"s{i}", step.s)
        else:
            d1, d2 = step.identified
            lines.append(
                f"# fold p{i} ({step.kind}): {d1} onto {d2}, "
                f"size {step.size_before} -> {step.size_after}"
                + (", arc contracted" if step.collapsed else "")
            )
            lines += _map_lines(f"p{i}", step.p)
            lines += _map_lines(f"g{i + 1}", after.map)
        lines.append(f"sigma{j + 1} = {after.sigma}")
    lines += ["", f"# terminal homeomorphism g{seq.n}", *_map_lines(f"g{seq.n}", seq.terminal)]
    return "\n".join(lines) + "\n"
