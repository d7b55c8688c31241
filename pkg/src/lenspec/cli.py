"""Command-line interface.

Subcommands: ``spectrum``, ``genfun``, ``isospectral``, ``search`` and
``verify``.  Spaces are given either as the lens shorthand ``L(q;s1,...,sn)``
or as a generator file (one ``q: s1,s2,...,sn`` line per generator) for
non-cyclic torus subgroups.  Structured output renders multiplicities as
decimal strings since they outgrow 64-bit integers quickly.

Identical invocations produce byte-identical output regardless of
``--threads``; every error path exits nonzero with a single-line reason.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import re
import sys

from .errors import LenspecError
from .genfun import f_rational, theta_ell_rational, theta_rational
from .isospec import (
    _moment_fingerprint,
    fingerprint_digest,
    isospectral_range,
    p_isospectral,
    search,
    weighted_theta,
)
from .lattice import CongruenceLattice, lens_group, torus_subgroup
from .polyseries import RationalSeries
from .spectrum import spectrum_table
from .verify import run_checks

_LENS_RE = re.compile(r"^\s*L\(\s*(\d+)\s*;\s*([-\d\s,]+)\)\s*$")


def parse_space(text: str | None, gen_file: str | None):
    """Resolve --space / --gen-file into (label, lattice)."""
    if (text is None) == (gen_file is None):
        raise LenspecError("exactly one of --space or --gen-file is required")
    if text is not None:
        m = _LENS_RE.match(text)
        if not m:
            raise LenspecError(f"cannot parse space {text!r}; expected L(q;s1,...,sn)")
        try:
            q = int(m.group(1))
            s = tuple(int(x) for x in m.group(2).split(","))
        except ValueError:
            raise LenspecError(f"cannot parse space {text!r}; expected L(q;s1,...,sn)")
        return f"L({q};{','.join(str(x % max(q, 1)) for x in s)})", lens_group(q, s).lattice()
    generators = []
    n = None
    with open(gen_file, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, 1):
            line = line.split("#", 1)[0].strip()
            if not line:
                continue
            head, _, rest = line.partition(":")
            try:
                q = int(head.strip())
                s = tuple(int(x) for x in rest.split(","))
            except ValueError:
                raise LenspecError(f"{gen_file}:{lineno}: expected 'q: s1,s2,...,sn'")
            if n is None:
                n = len(s)
            generators.append((q, s))
    if n is None:
        raise LenspecError(f"generator file {gen_file!r} defines no generators")
    lattice = torus_subgroup(n, generators).lattice()
    return lattice.label(), lattice


def _emit_records(fmt: str, records: list[dict], columns: list[str]) -> str:
    if fmt == "json":
        return json.dumps(records, indent=2) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=columns, lineterminator="\n")
        writer.writeheader()
        for rec in records:
            writer.writerow({c: rec.get(c, "") for c in columns})
        return buf.getvalue()
    widths = {c: max(len(c), *(len(str(r.get(c, ""))) for r in records)) if records else len(c) for c in columns}
    lines = ["  ".join(c.ljust(widths[c]) for c in columns)]
    for rec in records:
        lines.append("  ".join(str(rec.get(c, "")).ljust(widths[c]) for c in columns))
    return "\n".join(lines) + "\n"


def cmd_spectrum(args) -> int:
    label, lattice = parse_space(args.space, args.gen_file)
    n = lattice.n
    p = args.p
    if not 0 <= p <= 2 * n - 1:
        raise LenspecError(f"p must lie in 0..{2 * n - 1} for this space")
    internal = min(p, 2 * n - 1 - p)  # spectra on p- and (2n-1-p)-forms agree
    table = spectrum_table(lattice, internal, args.kmax, threads=args.threads)
    records = []
    for entry in table.entries:
        contribs = ";".join(
            f"{c.k}:{c.family}:{c.multiplicity}" for c in entry.contributors
        )
        records.append(
            {
                "space": label,
                "n": n,
                "p": p,
                "eigenvalue": entry.eigenvalue,
                "multiplicity": str(entry.multiplicity),
                "contributors": contribs,
            }
        )
    sys.stdout.write(
        _emit_records(args.format, records, ["space", "n", "p", "eigenvalue", "multiplicity", "contributors"])
    )
    return 0


def _series_records(label: str, lattice: CongruenceLattice, order: int):
    n = lattice.n
    named: list[tuple[str, RationalSeries]] = []
    for p in range(n):
        named.append((f"F^{p}", f_rational(lattice, p)))
    named.append(("theta", theta_rational(lattice)))
    for ell in range(n + 1):
        named.append((f"theta^({ell})", theta_ell_rational(lattice, ell)))
    records = []
    for name, series in named:
        records.append(
            {
                "space": label,
                "name": name,
                "rational": series.to_text(),
                "series": " ".join(str(c) for c in series.expand(order)),
            }
        )
    return records


def cmd_genfun(args) -> int:
    if args.order < 0:
        raise LenspecError("--order must be >= 0")
    label, lattice = parse_space(args.space, args.gen_file)
    records = _series_records(label, lattice, args.order)
    if args.format == "table":
        lines = []
        for rec in records:
            lines.append(f"{rec['name']} = {rec['rational']}")
            lines.append(f"  series[0..{args.order}] = {rec['series']}")
        sys.stdout.write("\n".join(lines) + "\n")
    else:
        sys.stdout.write(_emit_records(args.format, records, ["space", "name", "rational", "series"]))
    return 0


def _first_series_difference(r1: RationalSeries, r2: RationalSeries):
    m1, m2, _ = r1._merge(r2)
    diff = r1.numerator * m1 - r2.numerator * m2
    if diff.is_zero():
        return None
    at = max(diff.min_exp(), 0)
    a = r1.expand(at)[at]
    b = r2.expand(at)[at]
    return at, a, b


def cmd_isospectral(args) -> int:
    label1, lat1 = parse_space(args.space, args.gen_file)
    if args.space2 is None:
        raise LenspecError("--space2 is required for isospectral")
    label2, lat2 = parse_space(args.space2, None)
    p0 = args.p0 if args.p0 is not None else min(lat1.n, lat2.n) - 1
    records = []
    cumulative = True
    for p in range(p0 + 1):
        if args.method == "direct":
            cumulative = cumulative and p_isospectral(lat1, lat2, p)
            certificate = (f_rational(lat1, p), f_rational(lat2, p))
        else:
            cumulative = isospectral_range(lat1, lat2, p)
            certificate = (weighted_theta(lat1, p), weighted_theta(lat2, p))
        detail = fingerprint_digest(_moment_fingerprint(lat1, p))
        if not cumulative:
            diff = _first_series_difference(*certificate)
            if diff is not None:
                detail = f"first difference at z^{diff[0]}: {diff[1]} vs {diff[2]}"
            else:
                detail = "differs below p"
        records.append(
            {
                "space": label1,
                "space2": label2,
                "p": p,
                "isospectral_upto_p": cumulative,
                "detail": detail,
            }
        )
    sys.stdout.write(
        _emit_records(
            args.format, records, ["space", "space2", "p", "isospectral_upto_p", "detail"]
        )
    )
    return 0


def cmd_search(args) -> int:
    families = search(args.q, args.n, args.p0, mode=args.mode)
    records = []
    for i, fam in enumerate(families):
        records.append(
            {
                "family": i,
                "q": fam.q,
                "n": fam.n,
                "p0": fam.p0,
                "members": " ".join(key.label() for key in fam.members),
                "fingerprint": fam.fingerprint,
            }
        )
    sys.stdout.write(
        _emit_records(args.format, records, ["family", "q", "n", "p0", "members", "fingerprint"])
    )
    return 0


def cmd_verify(args) -> int:
    results = run_checks(max_n=args.n, kmax=args.kmax)
    if args.format == "json":
        records = [{"check": r.name, "ok": r.ok, "detail": r.detail} for r in results]
        sys.stdout.write(json.dumps(records, indent=2) + "\n")
    else:
        for r in results:
            status = "ok" if r.ok else "FAIL"
            sys.stdout.write(f"{status:4s} {r.name}: {r.detail}\n")
    return 0 if all(r.ok for r in results) else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lenspec",
        description="Exact Hodge-Laplace spectra of lens spaces and lens orbifolds.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_space(p, second=False):
        p.add_argument("--space", help="lens shorthand L(q;s1,...,sn)")
        p.add_argument("--gen-file", help="generator file, one 'q: s1,...,sn' line each")
        if second:
            p.add_argument("--space2", help="second space, lens shorthand")

    def add_common(p):
        p.add_argument("--format", choices=("table", "json", "csv"), default="table")
        p.add_argument("--threads", type=int, default=1)

    p_spec = sub.add_parser("spectrum", help="eigenvalue/multiplicity table on p-forms")
    add_space(p_spec)
    p_spec.add_argument("--p", type=int, default=0)
    p_spec.add_argument("--kmax", type=int, default=25)
    add_common(p_spec)
    p_spec.set_defaults(fn=cmd_spectrum)

    p_gen = sub.add_parser("genfun", help="exact rational generating functions")
    add_space(p_gen)
    p_gen.add_argument("--order", type=int, default=30, help="series preview order (default 30)")
    add_common(p_gen)
    p_gen.set_defaults(fn=cmd_genfun)

    p_iso = sub.add_parser("isospectral", help="decide p-isospectrality of two spaces")
    add_space(p_iso, second=True)
    p_iso.add_argument("--p0", type=int, default=None, help="check p = 0..p0 (default n-1)")
    p_iso.add_argument("--method", choices=("range", "direct"), default="range")
    add_common(p_iso)
    p_iso.set_defaults(fn=cmd_isospectral)

    p_sea = sub.add_parser("search", help="families of isospectral lens parameters")
    p_sea.add_argument("--q", type=int, required=True)
    p_sea.add_argument("--n", type=int, required=True)
    p_sea.add_argument("--p0", type=int, default=0)
    p_sea.add_argument("--mode", choices=("manifolds", "orbifolds"), default="manifolds")
    add_common(p_sea)
    p_sea.set_defaults(fn=cmd_search)

    p_ver = sub.add_parser("verify", help="run the cross-route identity checks")
    p_ver.add_argument("--n", type=int, default=3, help="largest rank to certify")
    p_ver.add_argument("--kmax", type=int, default=6)
    add_common(p_ver)
    p_ver.set_defaults(fn=cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except LenspecError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
