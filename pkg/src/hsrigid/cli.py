"""Command-line interface: ``hsrigid <command> ...``."""
from __future__ import annotations

import argparse
import json
import sys
import warnings
from typing import Sequence

from . import __version__
from .catalog import CatalogEntry, CatalogError, load_catalog, lookup
from .concrete import ConcreteError, fundamental_form_dims, prolong, realize_nu
from .concrete import poly as P
from .grading import GradingError, HSSGrading, UnmarkedComponentWarning, parse_grading
from .notation import NotationError, format_weight, parse_weight
from .repmod import (
    IrreducibleModule,
    RepresentationError,
    fundamental_form_profile,
    gperp_constituents,
    weyl_dim,
)
from .rootdata import RootDataError
from .serialize import (
    VerdictRecord,
    decomposition_to_json,
    entry_to_json,
    profile_to_json,
    weight_to_json,
)
from .spencer import SpencerEntry, SpencerError, Verdict, nonvanishing_entries, rigidity_check
from .verify import SUITES, compare_entry, expected_prolongation, run_suite

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_NON_RIGID = 2
EXIT_NOT_APPLICABLE = 3
EXIT_MISMATCH = 4

VERDICT_EXIT = {
    Verdict.RIGID: EXIT_OK,
    Verdict.NON_RIGID_CANDIDATE: EXIT_NON_RIGID,
    Verdict.NOT_APPLICABLE: EXIT_NOT_APPLICABLE,
}

INPUT_ERRORS = (
    RootDataError, GradingError, NotationError, RepresentationError,
    SpencerError, ConcreteError, CatalogError,
)

SYNTAX_HELP = """\
gradings
  Simple components joined by '+', each optionally followed by ':' and a
  comma-separated list of marked nodes (1-based, Bourbaki numbering):
    A4:2          Grassmannian Gr(2,5)
    A1:1+A2:1     Segre P1 x P2
    E7:7          the 27-dimensional E7/E6 x U(1)
  Bourbaki numbering: B_n has alpha_n short, C_n has alpha_n long, D_n has
  the fork at alpha_{n-2} with alpha_{n-1}, alpha_n as the two tips, E_n has
  alpha_2 attached to alpha_4, G2 has alpha_1 short.

weights (fundamental-weight coordinates)
  weight := factor ('*' factor)*     one factor per simple component
          | '[' int (',' int)* ']'   raw coordinate vector
  factor := '0' | sign? term (sign term)*
  term   := int? 'l' index           e.g. l1, 2l3, -l2
  With one factor per component indices are local (l1*l1 on A1+A2 is
  lambda^1_1 + lambda^2_1); a single factor uses global indices.
  Weights starting with '-' must be attached with '=': --gamma=-l1-l2.

exit codes
  0 Rigid / success, 1 input error, 2 NonRigidCandidate, 3 NotApplicable,
  4 verification mismatch
"""


def _emit(args, payload, human: str) -> None:
    if args.json:
        print(json.dumps(payload, indent=2))
    else:
        print(human)


def _grading_and_weight(grading_text: str, weight_text: str) -> tuple[HSSGrading, tuple]:
    grading = parse_grading(grading_text)
    return grading, parse_weight(weight_text, grading.datum)


def _entry_table(grading: HSSGrading, entries: Sequence[SpencerEntry]) -> str:
    datum = grading.datum
    show_h = any(e.h_dim is not None for e in entries)
    head = f"  {'gamma':<22} {'alpha':<6} {'xi':<22} {'p':>4} {'mult':>5}"
    lines = [head + ("  h_dim" if show_h else "")]
    for e in entries:
        line = (f"  {format_weight(e.constituent, datum):<22} a{e.reflection_node + 1:<5} "
                f"{format_weight(e.xi, datum):<22} {str(e.p):>4} {e.multiplicity:>5}")
        if show_h:
            line += f"  {e.h_dim}"
        lines.append(line)
    return "\n".join(lines)


def _decomposition_table(grading: HSSGrading, dec) -> str:
    lines = [f"  {'highest weight':<26} {'mult':>4} {'dim':>6}"]
    for w, m in dec.entries:
        d = weyl_dim(IrreducibleModule(grading.datum, w))
        lines.append(f"  {format_weight(w, grading.datum):<26} {m:>4} {d:>6}")
    return "\n".join(lines)


def _resolve(args) -> tuple[str, str, str, CatalogEntry | None]:
    """(name, grading text, weight text, catalog entry) for rigidity."""
    if args.entry:
        entry = lookup(args.entry, args.catalog)
        return entry.name, entry.grading_spec, entry.weight_spec, entry
    if not args.grading or args.weight is None:
        raise NotationError("", 0, "give a grading and --lambda, or --entry NAME")
    return f"{args.grading} {args.weight}", args.grading, args.weight, None


def cmd_rigidity(args) -> int:
    name, gtext, wtext, entry = _resolve(args)
    grading, weight = _grading_and_weight(gtext, wtext)
    report = rigidity_check(grading, weight, with_h_dim=args.h_dims)
    oracle = None
    if entry is not None and entry.has_model:
        oracle = compare_entry(entry, spencer=not args.no_oracle_spencer).flags
    record = VerdictRecord.from_report(name, grading.spec_string(), weight, report, oracle)
    human = [
        f"name:     {name}",
        f"grading:  {grading.spec_string()}   lambda: {format_weight(weight, grading.datum)}",
        f"profile:  {record.profile.dims}",
        f"g-perp:   {len(record.gperp)} constituents, dim {record.gperp.dim}",
        _decomposition_table(grading, record.gperp),
        f"verdict:  {record.verdict.value}" + (f" ({record.reason})" if record.reason else ""),
        "entries:",
        _entry_table(grading, record.entries),
    ]
    human.extend(f"note:     {w}" for w in grading.warnings)
    if oracle is not None:
        human.append("oracles:  " + ", ".join(f"{k}={'ok' if v else 'MISMATCH'}"
                                              for k, v in oracle.items()))
    _emit(args, record.to_json(), "\n".join(human))
    return VERDICT_EXIT[record.verdict]


def cmd_spencer(args) -> int:
    grading = parse_grading(args.grading)
    gamma = parse_weight(args.gamma, grading.datum)
    entries = nonvanishing_entries(grading, gamma, with_h_dim=args.h_dims)
    payload = {
        "grading": grading.spec_string(),
        "gamma": weight_to_json(gamma),
        "entries": [entry_to_json(e) for e in entries],
    }
    _emit(args, payload, _entry_table(grading, entries))
    return EXIT_OK


def cmd_profile(args) -> int:
    grading, weight = _grading_and_weight(args.grading, args.weight)
    profile = fundamental_form_profile(grading, IrreducibleModule(grading.datum, weight))
    payload = {"grading": grading.spec_string(), "weight": weight_to_json(weight),
               "profile": profile_to_json(profile)}
    _emit(args, payload, f"profile {profile.dims} (dim S = {sum(profile.dims)})")
    return EXIT_OK


def cmd_gperp(args) -> int:
    grading, weight = _grading_and_weight(args.grading, args.weight)
    dec = gperp_constituents(grading, IrreducibleModule(grading.datum, weight))
    payload = {"grading": grading.spec_string(), "weight": weight_to_json(weight),
               "constituents": decomposition_to_json(dec)}
    _emit(args, payload, _decomposition_table(grading, dec) + f"\n  total dim {dec.dim}")
    return EXIT_OK


def cmd_jets(args) -> int:
    entry = lookup(args.entry, args.catalog)
    profile, F = fundamental_form_dims(entry.polynomial_map())
    payload = {
        "name": entry.name,
        "profile": profile_to_json(profile),
        "pieces": [[P.to_sparse_json(b) for b in piece] for piece in F.pieces],
    }
    lines = [f"profile {profile.dims}"]
    for r, piece in enumerate(F.pieces):
        lines.append(f"  F^{r}: " + ", ".join(P.format_poly(b) for b in piece))
    _emit(args, payload, "\n".join(lines))
    return EXIT_OK


def cmd_prolong(args) -> int:
    entry = lookup(args.entry, args.catalog)
    _, F = fundamental_form_dims(entry.polynomial_map())
    g = prolong(realize_nu(F))
    expected = expected_prolongation(entry.grading)
    ok = g.dims == expected
    payload = {"name": entry.name, "dims": list(g.dims), "expected": list(expected), "ok": ok}
    _emit(args, payload, f"prolongation dims {g.dims}; expected {expected}: "
                         f"{'ok' if ok else 'MISMATCH'}")
    return EXIT_OK if ok else EXIT_MISMATCH


def cmd_oracle_spencer(args) -> int:
    entry = lookup(args.entry, args.catalog)
    cmp = compare_entry(entry)
    ok = cmp.bruteforce == cmp.kostant
    payload = {
        "name": entry.name,
        "bruteforce": {str(p): d for p, d in cmp.bruteforce.items()},
        "kostant": {str(p): d for p, d in cmp.kostant.items()},
        "ok": ok,
    }
    human = (f"dim H^(p,1)(l_-1, g-perp) by degree p\n"
             f"  explicit complex: {cmp.bruteforce}\n  Kostant:          {cmp.kostant}\n"
             f"  {'agree' if ok else 'MISMATCH'}")
    _emit(args, payload, human)
    return EXIT_OK if ok else EXIT_MISMATCH


def cmd_verify(args) -> int:
    results = run_suite(args.suite)
    payload = [
        {"suite": r.suite, "case": r.case, "expected": r.expected, "computed": r.computed,
         "ok": r.ok}
        for r in results
    ]
    failed = sum(not r.ok for r in results)
    human = "\n".join(r.line() for r in results) + f"\n{len(results) - failed}/{len(results)} passed"
    _emit(args, payload, human)
    return EXIT_OK if not failed else EXIT_MISMATCH


def cmd_catalog(args) -> int:
    cat = load_catalog(args.catalog)
    payload = [{"name": e.name, "grading": e.grading_spec, "lambda": e.weight_spec,
                "model": e.has_model} for e in cat.values()]
    lines = [f"  {e.name:<28} {e.grading_spec:<18} {e.weight_spec:<10} "
             f"{'model' if e.has_model else ''}" for e in cat.values()]
    _emit(args, payload, "\n".join(lines))
    return EXIT_OK


class _Parser(argparse.ArgumentParser):
    # usage errors are input errors; 2 is reserved for NonRigidCandidate
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--catalog", metavar="FILE", help="embedding catalog (YAML)")

    parser = _Parser(
        prog="hsrigid",
        description="Rigidity of equivariant embeddings of Hermitian symmetric spaces "
                    "via Spencer cohomology.",
        epilog=SYNTAX_HELP,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, metavar="command")

    def add(name, func, help_text):
        p = sub.add_parser(name, parents=[common], help=help_text, description=help_text,
                           epilog=SYNTAX_HELP, formatter_class=argparse.RawDescriptionHelpFormatter)
        p.set_defaults(func=func)
        return p

    p = add("rigidity", cmd_rigidity, "full verdict for H in P(V(lambda))")
    p.add_argument("grading", nargs="?")
    p.add_argument("--lambda", dest="weight", metavar="WEIGHT", help="embedding weight")
    p.add_argument("--entry", metavar="NAME", help="take grading and weight from the catalog")
    p.add_argument("--h-dims", action="store_true", help="include l_0-module dimensions")
    p.add_argument("--no-oracle-spencer", action="store_true",
                   help="skip the explicit Spencer complex for catalog models")

    p = add("spencer", cmd_spencer, "Kostant entries for one lowest weight gamma")
    p.add_argument("grading")
    p.add_argument("--gamma", required=True, metavar="WEIGHT", help="antidominant lowest weight")
    p.add_argument("--h-dims", action="store_true")

    p = add("profile", cmd_profile, "fundamental-form dimensions from weights")
    p.add_argument("grading")
    p.add_argument("weight")

    p = add("gperp", cmd_gperp, "irreducible constituents of g-perp in gl(S)")
    p.add_argument("grading")
    p.add_argument("weight")

    for name, func, text in [
        ("jets", cmd_jets, "fundamental forms of a catalog model from Taylor jets"),
        ("prolong", cmd_prolong, "prolongation dimensions of a catalog model"),
        ("oracle-spencer", cmd_oracle_spencer,
         "explicit Spencer complex of a catalog model against Kostant"),
    ]:
        add(name, func, text).add_argument("entry", help="catalog entry name")

    p = add("verify", cmd_verify, "run a verification battery")
    p.add_argument("suite", choices=list(SUITES) + ["all"])

    add("catalog", cmd_catalog, "list catalog entries")
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        with warnings.catch_warnings():
            warnings.simplefilter("ignore", UnmarkedComponentWarning)
            return args.func(args)
    except INPUT_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
