"""Batch command-line interface.

Exit codes: 0 success, 1 negative mathematical answer (not equal, not
central, covering impossible, invalid chain), 2 inconclusive (budget
exhausted), 3 usage or parse error.  With ``--json``, each command
prints a single JSON object carrying a ``result`` field.

Presentations are read from ``--input FILE`` or stdin, so commands
pipe: ``braidkernel build --surface rp2 --n 2 | braidkernel order``.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Optional

from . import atlas, coverings
from .coset import (
    DEFAULT_MAX_COSETS, group_order, is_central_finite,
    table_equality_oracle, todd_coxeter, word_equal_finite,
)
from .derivations import (
    DEFAULT_MAX_NODES, DEFAULT_MAX_WORD_LEN, ChainError, check_derivation,
    format_chain, parse_chain_file, search_equality,
)
from .presentations import (
    GroupHom, Presentation, PresentationError, abelianization,
    format_presentation, hom_check, parse_presentation,
)
from .rewriting import DEFAULT_MAX_LEN, DEFAULT_MAX_RULES, knuth_bendix, normal_form
from .surfaces import TORUS, SurfaceError, describe_surface, parse_surface
from .words import WordError, format_word, parse_word

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_UNDECIDED = 2
EXIT_USAGE = 3

ENV_MAX_COSETS = "BRAIDKERNEL_MAX_COSETS"


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _build_parser() -> _Parser:
    parser = _Parser(prog="braidkernel", description=__doc__,
                     formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, input_file=True):
        p.add_argument("--json", action="store_true", help="machine-readable output")
        if input_file:
            p.add_argument("--input", default=None,
                           help="presentation file (default: stdin)")
            p.add_argument("--max-cosets", type=int, default=None,
                           help=f"enumeration budget (default {DEFAULT_MAX_COSETS}, "
                                f"or ${ENV_MAX_COSETS})")

    p = sub.add_parser("build", help="print an atlas presentation")
    p.add_argument("--surface", required=True,
                   help="rp2 | torus | klein | nonorientable:k | quaternion")
    p.add_argument("--n", type=int, default=None, help="strand count (rp2)")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("order", help="group order by coset enumeration")
    common(p)

    p = sub.add_parser("central", help="test centrality in the finite group")
    p.add_argument("--element", required=True,
                   help='a word, or "tau" on an atlas rp2 presentation')
    common(p)

    p = sub.add_parser("abelianize", help="abelian invariants")
    common(p)

    p = sub.add_parser("hom-check", help="verify a homomorphism map file")
    p.add_argument("--map", required=True, dest="map_file")
    common(p, input_file=False)
    p.add_argument("--max-cosets", type=int, default=None)

    p = sub.add_parser("equal", help="decide or certify a word equality")
    p.add_argument("--lhs", required=True)
    p.add_argument("--rhs", required=True)
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--table", action="store_true", help="coset-table oracle (default)")
    mode.add_argument("--search", action="store_true", help="derivation-chain search")
    mode.add_argument("--rewrite", action="store_true", help="Knuth-Bendix normal forms")
    p.add_argument("--max-word-len", type=int, default=DEFAULT_MAX_WORD_LEN)
    p.add_argument("--max-nodes", type=int, default=DEFAULT_MAX_NODES)
    p.add_argument("--max-rules", type=int, default=DEFAULT_MAX_RULES)
    p.add_argument("--max-len", type=int, default=DEFAULT_MAX_LEN)
    common(p)

    p = sub.add_parser("kernel", help="kernel description for a quotient surface")
    p.add_argument("--quotient", required=True, help="quotient surface")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--q", type=int, default=None)
    p.add_argument("--r", type=int, default=None)
    p.add_argument("--full-braid", action="store_true",
                   help="describe ker j* (full braid group) instead of ker i*")
    p.add_argument("--presentation-out", default=None,
                   help="write the explicit presentation here when available")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("cover", help="covering impossibility certificates")
    p.add_argument("--from", required=True, dest="cover_surface")
    p.add_argument("--to", required=True, dest="base_surface")
    p.add_argument("--sheets", type=int, required=True)
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("quotients", help="quotient-surface candidates of a free action")
    p.add_argument("--surface", required=True)
    p.add_argument("--sheets", type=int, required=True)
    p.add_argument("--strict-orientability", action="store_true")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("check-derivation", help="replay a derivation chain file")
    p.add_argument("chain_file")
    common(p)

    return parser


def _emit(args, payload, text_lines):
    if getattr(args, "json", False):
        print(json.dumps({"result": payload}, indent=2))
    else:
        for line in text_lines:
            print(line)


def _load_presentation(args) -> Presentation:
    if getattr(args, "input", None):
        with open(args.input, encoding="utf-8") as fh:
            text = fh.read()
    else:
        text = sys.stdin.read()
    return parse_presentation(text)


def _budget(args) -> int:
    if getattr(args, "max_cosets", None) is not None:
        if args.max_cosets < 1:
            raise UsageError("--max-cosets must be positive")
        return args.max_cosets
    env = os.environ.get(ENV_MAX_COSETS)
    if env is not None:
        try:
            value = int(env)
        except ValueError as exc:
            raise UsageError(f"bad {ENV_MAX_COSETS} value {env!r}") from exc
        if value < 1:
            raise UsageError(f"{ENV_MAX_COSETS} must be positive")
        return value
    return DEFAULT_MAX_COSETS


def _enumerate(args, p: Presentation):
    table = todd_coxeter(p, max_cosets=_budget(args))
    if not table.is_complete:
        print(f"undecided: enumeration budget exhausted at {table.n_cosets} live cosets",
              file=sys.stderr)
        return None
    return table


def _resolve_element(args, p: Presentation):
    if args.element == "tau":
        n = atlas.rp2_strand_count(p)
        if n is None:
            raise UsageError(
                '"tau" is only defined on atlas rp2 presentations '
                f"(group name is {p.name!r})")
        return atlas.tau_n(n)
    return parse_word(args.element, p.alphabet)


# command bodies ---------------------------------------------------------------

def _cmd_build(args) -> int:
    spec = args.surface.strip().lower()
    if spec == "rp2":
        if args.n is None:
            raise UsageError("--surface rp2 needs --n")
        p = atlas.pure_braid_rp2(args.n)
    elif spec == "torus":
        p = atlas.torus_presentation()
    elif spec == "klein":
        p = atlas.klein_presentation()
    elif spec == "quaternion":
        p = atlas.quaternion_presentation()
    elif spec.startswith("nonorientable:"):
        k = spec.split(":", 1)[1]
        if not k.isdigit() or int(k) < 1:
            raise UsageError(f"bad crosscap count {k!r}")
        p = atlas.pi1_nonorientable(int(k))
    else:
        raise UsageError(f"unknown atlas surface {args.surface!r}")
    text = format_presentation(p)
    if args.json:
        _emit(args, {"presentation": text}, [])
    else:
        print(text, end="")
    return EXIT_OK


def _cmd_order(args) -> int:
    p = _load_presentation(args)
    table = _enumerate(args, p)
    if table is None:
        return EXIT_UNDECIDED
    order = group_order(table)
    _emit(args, {"order": order}, [str(order)])
    return EXIT_OK


def _cmd_central(args) -> int:
    p = _load_presentation(args)
    w = _resolve_element(args, p)
    table = _enumerate(args, p)
    if table is None:
        return EXIT_UNDECIDED
    central = is_central_finite(table, w)
    _emit(args, {"element": format_word(w), "central": central},
          [f"{format_word(w)} is {'central' if central else 'not central'}"])
    return EXIT_OK if central else EXIT_NEGATIVE


def _cmd_abelianize(args) -> int:
    p = _load_presentation(args)
    inv = abelianization(p)
    _emit(args, {"rank": inv.rank, "torsion": list(inv.torsion)},
          [f"rank {inv.rank}, torsion {list(inv.torsion)}"])
    return EXIT_OK


def _parse_hom_file(text: str) -> GroupHom:
    """Self-contained map files: a ``begin source``/``end`` block and a
    ``begin target``/``end`` block in the presentation format, then one
    ``send <gen> = <word>`` line per source generator."""
    blocks: dict[str, list[str]] = {}
    sends: list[tuple[str, str]] = []
    current: Optional[str] = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        if current is not None:
            if raw.strip() == "end":
                current = None
            else:
                blocks[current].append(raw)
            continue
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, _, rest = line.partition(" ")
        rest = rest.strip()
        if key == "hom":
            pass  # label only
        elif key == "begin":
            if rest not in ("source", "target"):
                raise UsageError(f"line {lineno}: begin must name source or target")
            current = rest
            blocks[current] = []
        elif key == "send":
            gen, eq, image = rest.partition("=")
            if not eq:
                raise UsageError(f"line {lineno}: send needs '<gen> = <word>'")
            sends.append((gen.strip(), image.strip()))
        else:
            raise UsageError(f"line {lineno}: unknown directive {key!r}")
    if current is not None:
        raise UsageError(f"unterminated begin {current}")
    if "source" not in blocks or "target" not in blocks:
        raise UsageError("map file needs source and target blocks")
    source = parse_presentation("\n".join(blocks["source"]))
    target = parse_presentation("\n".join(blocks["target"]))
    by_name = dict(sends)
    images = []
    for sym in source.alphabet:
        if sym.name not in by_name:
            raise UsageError(f"no send line for generator {sym.name}")
        images.append(parse_word(by_name[sym.name], target.alphabet))
    return GroupHom(source, target, tuple(images))


def _cmd_hom_check(args) -> int:
    with open(args.map_file, encoding="utf-8") as fh:
        hom = _parse_hom_file(fh.read())
    table = todd_coxeter(hom.target, max_cosets=_budget(args))
    if not table.is_complete:
        print("undecided: target enumeration budget exhausted", file=sys.stderr)
        return EXIT_UNDECIDED
    result = hom_check(hom, table_equality_oracle(table))
    payload = {"status": result.status, "failing_relator": result.relator_index}
    _emit(args, payload, [result.status if result.verified else
                          f"{result.status} at relator {result.relator_index}"])
    if result.verified:
        return EXIT_OK
    return EXIT_UNDECIDED if result.status == "undecided" else EXIT_NEGATIVE


def _cmd_equal(args) -> int:
    p = _load_presentation(args)
    lhs = parse_word(args.lhs, p.alphabet)
    rhs = parse_word(args.rhs, p.alphabet)
    if args.search:
        chain = search_equality(p, lhs, rhs, max_word_len=args.max_word_len,
                                max_nodes=args.max_nodes)
        if chain is None:
            print("undecided: no chain found within budget", file=sys.stderr)
            return EXIT_UNDECIDED
        _emit(args, {"equal": True, "steps": len(chain.steps),
                     "chain": format_chain(chain)},
              ["equal", format_chain(chain).rstrip()])
        return EXIT_OK
    if args.rewrite:
        rs = knuth_bendix(p, max_rules=args.max_rules, max_len=args.max_len)
        same = normal_form(rs, lhs) == normal_form(rs, rhs)
        if same:
            _emit(args, {"equal": True, "confluent": rs.confluent}, ["equal"])
            return EXIT_OK
        if rs.confluent:
            _emit(args, {"equal": False, "confluent": True}, ["not equal"])
            return EXIT_NEGATIVE
        print("undecided: rewriting system is not confluent", file=sys.stderr)
        return EXIT_UNDECIDED
    table = _enumerate(args, p)
    if table is None:
        return EXIT_UNDECIDED
    same = word_equal_finite(table, lhs, rhs)
    _emit(args, {"equal": same}, ["equal" if same else "not equal"])
    return EXIT_OK if same else EXIT_NEGATIVE


def _cmd_kernel(args) -> int:
    surface = parse_surface(args.quotient)
    params = None
    if args.q is not None or args.r is not None:
        if args.q is None or args.r is None:
            raise UsageError("--q and --r must be given together")
        params = (args.q, args.r)
    desc = coverings.kernel_description(surface, args.n, not args.full_braid, params)
    pres_file = None
    if desc.presentation is not None and args.presentation_out:
        with open(args.presentation_out, "w", encoding="utf-8") as fh:
            fh.write(format_presentation(desc.presentation))
        pres_file = args.presentation_out
    lines = [f"case: {desc.case}",
             f"kernel: {desc.description}",
             f"base surface: {describe_surface(surface)}"]
    if desc.presentation is not None:
        lines.append("explicit presentation: available"
                     + (f" (written to {pres_file})" if pres_file else ""))
    _emit(args, desc.to_json_dict(pres_file), lines)
    return EXIT_OK


def _cmd_cover(args) -> int:
    cover = parse_surface(args.cover_surface)
    base = parse_surface(args.base_surface)
    decision = coverings.can_cover(cover, base, args.sheets)
    verdict = "not excluded" if decision.possible else "impossible"
    lines = [f"{describe_surface(cover)} over {describe_surface(base)}, "
             f"{args.sheets} sheets: {verdict}"]
    if decision.certificate:
        lines.append(f"certificate: {decision.certificate}")
        lines.append(decision.detail)
    _emit(args, {"possible": decision.possible, "certificate": decision.certificate,
                 "detail": decision.detail}, lines)
    return EXIT_OK if decision.possible else EXIT_NEGATIVE


def _cmd_quotients(args) -> int:
    spec = coverings.ActionSpec(parse_surface(args.surface), args.sheets)
    candidates = coverings.action_quotients(spec, args.strict_orientability)
    lines = []
    payload = []
    for cand in candidates:
        entry = {"surface": cand.label, "orientable": cand.orientable,
                 "genus": cand.genus}
        note = describe_surface(cand)
        if cand == TORUS:
            forms = coverings.torus_action_forms(args.sheets)
            entry["group_forms"] = [list(f) for f in forms]
            note += "; acting group Z/q + Z/r with (q,r) in " + str(forms)
        lines.append(note)
        payload.append(entry)
    _emit(args, payload, lines if lines else ["(no candidates)"])
    return EXIT_OK


def _cmd_check_derivation(args) -> int:
    p = _load_presentation(args)
    with open(args.chain_file, encoding="utf-8") as fh:
        text = fh.read()
    try:
        chain, declared_end = parse_chain_file(text, p)
    except ChainError as exc:
        _emit(args, {"valid": False, "error": str(exc)}, [f"invalid: {exc}"])
        return EXIT_NEGATIVE
    report = check_derivation(chain)
    endpoint_ok = chain.end == declared_end
    valid = report.valid and endpoint_ok
    message = report.message if endpoint_ok else (
        f"chain replays but ends at {format_word(chain.end)}, "
        f"file declares {format_word(declared_end)}")
    _emit(args, {"valid": valid, "steps": len(chain.steps), "message": message},
          [("valid: " if valid else "invalid: ") + message])
    return EXIT_OK if valid else EXIT_NEGATIVE


_COMMANDS = {
    "build": _cmd_build,
    "order": _cmd_order,
    "central": _cmd_central,
    "abelianize": _cmd_abelianize,
    "hom-check": _cmd_hom_check,
    "equal": _cmd_equal,
    "kernel": _cmd_kernel,
    "cover": _cmd_cover,
    "quotients": _cmd_quotients,
    "check-derivation": _cmd_check_derivation,
}


def run(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        return _COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (WordError, PresentationError, SurfaceError, ChainError,
            coverings.CoveringError, atlas.AtlasError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
