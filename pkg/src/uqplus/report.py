"""JSON and Markdown renderings of a list of ``CheckSpec`` results."""

import json


def to_json(specs):
    return json.dumps([s.as_dict() for s in specs], indent=2, default=str)


def _params_text(params):
    return ", ".join(f"{k}={v}" for k, v in sorted(params.items()))


def to_markdown(specs, figure=None):
    lines = ["# Verification report", ""]
    passed = sum(s.passed() for s in specs)
    lines.append(f"{passed} of {len(specs)} checks passed.")
    lines.append("")
    lines.append("| check | status | ms | max terms | identities | params |")
    lines.append("|---|---|---:|---:|---:|---|")
    for s in specs:
        lines.append(f"| {s.name} | {s.status} | {s.millis:.0f} | {s.max_terms} | "
                     f"{s.identities} | {_params_text(s.params)} |")
    lines.append("")
    for s in specs:
        lines.append(f"## {s.name}")
        lines.append("")
        lines.append(f"Identity: `{s.anchor}`")
        if s.counterexample:
            lines.append("")
            lines.append(f"First counterexample: {s.counterexample}")
        lines.append("")
    if figure:
        lines.append(f"![timings]({figure})")
        lines.append("")
    return "\n".join(lines)


def write_report(specs, path, fmt=None, figure=True):
    """Write the report, and a timing figure next to it.  Returns the figure path."""
    from pathlib import Path

    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    fmt = fmt or ("md" if path.suffix == ".md" else "json")
    fig_path = None
    if figure:
        from .plotting import plot_checks

        fig_path = path.with_suffix(".png")
        plot_checks(specs, fig_path)
    if fmt == "md":
        text = to_markdown(specs, fig_path.name if fig_path else None)
    else:
        text = to_json(specs)
    path.write_text(text + "\n")
    return fig_path
