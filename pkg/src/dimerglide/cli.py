"""Command-line front end.

Exit codes: 0 on success, 2 on invalid input, 3 when a size budget is exhausted.
"""
from __future__ import annotations

import argparse
import json
import os
import random
import sys
from dataclasses import dataclass
from typing import Optional

from .braid import braid_permutation, cycle_notation, one_line, theta_n_permutation
from .cycles import BudgetExceeded, DEFAULT_MAX_CYCLES
from .dimer import (dimer_complex, dimer_hull, dimer_system, enumerate_dimer_coverings,
                    labeling_components, random_loop)
from .formats import (CORPUS, corpus_text, covering_ref, loop_to_dict, parse_halves,
                      parse_loop, parse_profile, parse_states, parse_vhalves)
from .glide import DEFAULT_MAX_CUBES, npc_verdict
from .hypergraph import HypergraphError, parse_hypergraph
from .presentation import (PresentationError, abelianization, dimer_presentation,
                           pi1_spanning_tree, tietze_reduce)
from .raag import artin_group, edge_artin_group, typing_word, u_word

EXIT_OK, EXIT_INVALID, EXIT_BUDGET = 0, 2, 3


@dataclass
class RunConfig:
    input: str
    command: str
    format: str = "text"
    max_cubes: int = DEFAULT_MAX_CUBES
    max_cycles: int = DEFAULT_MAX_CYCLES
    seed: int = 0
    jobs: int = 1

    def __post_init__(self):
        if self.max_cubes <= 0 or self.max_cycles <= 0 or self.jobs <= 0:
            raise HypergraphError("budgets and --jobs must be positive")


def _read_source(path: str) -> str:
    """File contents, falling back to a bundled corpus file of that name."""
    if os.path.exists(path):
        with open(path) as fh:
            return fh.read()
    name = os.path.splitext(os.path.basename(path))[0]
    try:
        return corpus_text(name)
    except (FileNotFoundError, OSError, ModuleNotFoundError):
        raise HypergraphError(f"no such file: {path}") from None


def _emit(cfg: RunConfig, payload: dict, text_lines: list[str], out) -> None:
    if cfg.format == "json":
        out.write(json.dumps(payload, indent=2, sort_keys=False) + "\n")
    else:
        out.write("\n".join(text_lines) + "\n")


def _graph(cfg):
    return parse_hypergraph(_read_source(cfg.input))


def _system_and_complex(cfg, h):
    sys_ = dimer_system(h, max_cycles=cfg.max_cycles)
    x = dimer_complex(h, max_cubes=cfg.max_cubes, jobs=cfg.jobs, system=sys_)
    return sys_, x


def _h1(x, base):
    return abelianization(pi1_spanning_tree(x, base))


def cmd_dimers(cfg, args, out):
    h = _graph(cfg)
    covs = [h.edge_names(a) for a in enumerate_dimer_coverings(h)]
    _emit(cfg, {"coverings": covs},
          [f"{len(covs)} dimer coverings"] + [" ".join(c) for c in covs], out)


def cmd_complex(cfg, args, out):
    h = _graph(cfg)
    _, x = _system_and_complex(cfg, h)
    if cfg.format == "dot":
        out.write(x.to_dot())
        return
    comps = x.components()
    payload = {
        "f_vector": x.f_vector(),
        "dimension": x.dimension(),
        "components": len(comps),
        "euler": x.euler(),
    }
    lines = [f"f-vector: {tuple(x.f_vector())}", f"dimension: {x.dimension()}",
             f"components: {len(comps)}", f"euler characteristic: {x.euler()}"]
    if x.states:
        betti, torsion = _h1(x, x.states[0])
        payload["h1"] = {"betti": betti, "torsion": torsion}
        lines.append(f"H1: betti {betti}, torsion {torsion}")
        if len(x.cubes_by_dim) <= 2 and len(comps) == 1:
            payload["free_rank"] = betti
            lines.append(f"fundamental group: free of rank {betti}")
    _emit(cfg, payload, lines, out)


def cmd_check_npc(cfg, args, out):
    doc = json.loads(_read_source(cfg.input))
    if "states" in doc:
        sys_, states, _ = parse_states(doc)
    else:
        h = parse_hypergraph(doc)
        sys_ = dimer_system(h, max_cycles=cfg.max_cycles)
        states = frozenset(enumerate_dimer_coverings(h))
    report = npc_verdict(sys_, states, max_cubes=cfg.max_cubes)
    payload = report.to_dict()
    lines = [f"{k}: {v}" for k, v in payload.items()]
    lines.append(f"nonpositively curved: {report.npc}")
    _emit(cfg, payload, lines, out)


def _basepoint(h, x, ref):
    if ref is None:
        if not x.states:
            raise HypergraphError("graph has no dimer coverings")
        return x.states[0]
    a = covering_ref(h, ref)
    if a not in x.state_index:
        raise HypergraphError("basepoint is not a dimer covering")
    return a


def cmd_present(cfg, args, out):
    h = _graph(cfg)
    _, x = _system_and_complex(cfg, h)
    base = _basepoint(h, x, args.basepoint)
    p = dimer_presentation(x, base, groupoid=args.groupoid)
    r = tietze_reduce(p)
    payload = {"presentation": r.to_dict(),
               "unreduced": {"generators": len(p.generators), "relators": len(p.relators)}}
    lines = [f"generators ({len(r.generators)}): " + " ".join(r.generators),
             f"relators ({len(r.relators)}):"] + ["  " + r.word_str(w) for w in r.relators]
    if not args.groupoid:
        betti, torsion = abelianization(p)
        payload["abelianization"] = {"betti": betti, "torsion": torsion}
        lines.append(f"abelianization: betti {betti}, torsion {torsion}")
    _emit(cfg, payload, lines, out)


def cmd_hull(cfg, args, out):
    h = _graph(cfg)
    sys_, x = _system_and_complex(cfg, h)
    a = _basepoint(h, x, args.a)
    b = _basepoint(h, x, args.b)
    q = dimer_hull(x, a, b)
    payload = {"base": h.edge_names(q.base), "dimension": q.dim,
               "cycles": [h.edge_names(sys_.glides[i]) for i in q.glides]}
    lines = [f"hull: {q.dim}-cube based at {{{','.join(payload['base'])}}}"]
    lines += ["  cycle " + " ".join(c) for c in payload["cycles"]]
    _emit(cfg, payload, lines, out)


def cmd_braid(cfg, args, out):
    h = _graph(cfg)
    h.require_graph()
    sys_ = dimer_system(h, max_cycles=cfg.max_cycles)
    if not args.loop:
        raise HypergraphError("--loop is required")
    loop = parse_loop(sys_, _read_source(args.loop))
    loop.validate(sys_, frozenset(enumerate_dimer_coverings(h)))
    vo = parse_vhalves(sys_, _read_source(args.vhalves) if args.vhalves else "{}")
    if args.subdivide:
        perm = theta_n_permutation(sys_, loop, parse_profile(h, args.subdivide), vo)
    else:
        perm = braid_permutation(sys_, loop, vo)
    _emit(cfg, {"permutation": list(perm), "cycles": cycle_notation(perm)},
          [one_line(perm), cycle_notation(perm)], out)


def cmd_components(cfg, args, out):
    h = _graph(cfg)
    comps = labeling_components(h, max_cubes=cfg.max_cubes, max_cycles=cfg.max_cycles)
    rows = []
    for c in comps:
        rows.append({
            "odd_cycles": [h.edge_names(s.edges) for s in c.odd_cycles],
            "subgraph": {"vertices": c.subgraph.n_vertices, "edges": c.subgraph.n_edges},
            "f_vector": c.complex.f_vector(),
        })
    lines = [f"{len(rows)} components"]
    for r in rows:
        cyc = "; ".join(" ".join(s) for s in r["odd_cycles"]) or "none"
        lines.append(f"  odd cycles [{cyc}] f-vector {tuple(r['f_vector'])}")
    _emit(cfg, {"components": rows}, lines, out)


def cmd_mu(cfg, args, out):
    h = _graph(cfg)
    sys_, x = _system_and_complex(cfg, h)
    halves = parse_halves(sys_, _read_source(args.halves) if args.halves else "{}")
    if args.loop:
        loops = [parse_loop(sys_, _read_source(args.loop))]
        loops[0].validate(sys_, frozenset(x.states))
    else:
        if not x.states:
            raise HypergraphError("graph has no dimer coverings")
        rng = random.Random(cfg.seed)
        loops = [random_loop(x, x.states[0], rng) for _ in range(args.random_loops)]
    a, b = artin_group(sys_), edge_artin_group(h)
    results = []
    for loop in loops:
        mu = typing_word(sys_, loop, halves)
        image = b.normal_form(u_word(sys_, mu, halves))
        results.append({"loop": loop_to_dict(sys_, loop), "mu": a.word_str(a.normal_form(mu)),
                        "u_image": b.word_str(image), "trivial": not image})
    lines = []
    for r in results:
        lines += [f"mu: {r['mu']}", f"u(mu): {r['u_image']}", f"trivial: {r['trivial']}"]
    _emit(cfg, {"loops": results, "all_trivial": all(r["trivial"] for r in results)},
          lines, out)


COMMANDS = {
    "dimers": cmd_dimers,
    "complex": cmd_complex,
    "check-npc": cmd_check_npc,
    "present": cmd_present,
    "hull": cmd_hull,
    "braid": cmd_braid,
    "components": cmd_components,
    "mu": cmd_mu,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="dimerglide", description=__doc__.splitlines()[0])
    parser.add_argument("command", choices=sorted(COMMANDS))
    parser.add_argument("input_pos", nargs="?", metavar="INPUT",
                        help="graph or state file (or a bundled corpus name)")
    parser.add_argument("--input", "-i", help="graph or state file (or a bundled corpus name)")
    parser.add_argument("--format", "-f", choices=("text", "json", "dot"), default="text")
    parser.add_argument("--max-cubes", type=int, default=DEFAULT_MAX_CUBES)
    parser.add_argument("--max-cycles", type=int, default=DEFAULT_MAX_CYCLES)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--jobs", type=int, default=1)
    parser.add_argument("--groupoid", action="store_true")
    parser.add_argument("--subdivide", help='profile "edge:count,..." or JSON mapping')
    parser.add_argument("--basepoint", help="comma-separated edge ids of a covering")
    parser.add_argument("--a", help="first covering for hull")
    parser.add_argument("--b", help="second covering for hull")
    parser.add_argument("--loop", help="loop file")
    parser.add_argument("--vhalves", help="v-half choice file")
    parser.add_argument("--halves", help="half choice file")
    parser.add_argument("--random-loops", type=int, default=10)
    parser.epilog = "bundled corpus: " + ", ".join(CORPUS)
    return parser


def main(argv: Optional[list[str]] = None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    source = args.input or args.input_pos
    try:
        if source is None:
            raise HypergraphError("an input file is required")
        cfg = RunConfig(source, args.command, args.format, args.max_cubes,
                        args.max_cycles, args.seed, args.jobs)
        if cfg.format == "dot" and cfg.command != "complex":
            raise HypergraphError("dot output is only available for 'complex'")
        COMMANDS[args.command](cfg, args, out)
    except BudgetExceeded as exc:
        print(f"budget exhausted: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (HypergraphError, PresentationError, ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
