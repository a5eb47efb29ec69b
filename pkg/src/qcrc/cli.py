"""Command-line interface: ``qcrc <command> [flags]``.

Exit status is 0 on success, 1 on domain errors (invalid g, uncorrectable
syndrome, failed validation) and 2 on usage errors.
"""

from __future__ import annotations

import argparse
import sys
from typing import Sequence, TextIO

from . import __version__
from .bench import doubling_ratios, measure_scaling
from .channel import ChannelParams, sweep, to_csv
from .errors import QcrcError
from .fast_decoder import build_lookup_table, build_structured, fast_decode
from .gf2poly import format_poly, parse_poly
from .pauli import GenMatrix, PauliString, SympVec, check_genmatrix, is_self_orthogonal, tau, tau_inv
from .qcode import Syndrome, build_qcrc, generic_decode, quantum_syndrome, stabilizer_generators


def _arg(parse):
    def convert(text):
        try:
            return parse(text)
        except ValueError as exc:
            raise argparse.ArgumentTypeError(str(exc)) from None

    convert.__name__ = parse.__name__
    return convert


def _grid(text: str) -> list[tuple[float, float]]:
    points = []
    for item in text.replace(";", ",").split(","):
        item = item.strip()
        if not item:
            continue
        p, _, mu = item.partition(":")
        points.append((float(p), float(mu)))
    if not points:
        raise ValueError("empty grid")
    for p, mu in points:
        ChannelParams(p, mu)
    return points


def _seed(text: str) -> int:
    v = int(text, 0)
    if not 0 <= v < 1 << 64:
        raise ValueError("seed must be an unsigned 64-bit integer")
    return v


def _add_code_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--g", type=_arg(parse_poly), help="generator polynomial, e.g. 10011 or 4,1,0")
    p.add_argument("--n", type=int, help="block length (with --g)")
    p.add_argument("--l", type=int, help="shift l (default floor((n-k)/4))")
    p.add_argument("--m", type=int, help="base length of the structured family")
    p.add_argument("--c", type=int, help="per-subcode burst length")
    p.add_argument("--k", type=int, help="interleaving depth (number of logical qubits)")


def _add_seed(p: argparse.ArgumentParser) -> None:
    p.add_argument("--seed", type=_arg(_seed), default=0, help="u64 RNG seed (default 0)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="qcrc", description="Quantum CRC burst-error codes.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", help="print G and the stabilizer generators")
    _add_code_flags(p)
    _add_seed(p)

    p = sub.add_parser("validate", help="check a matrix printed by construct")
    p.add_argument("--input", default="-", help="file to read ('-' for stdin)")
    _add_seed(p)

    p = sub.add_parser("syndrome", help="syndrome of a Pauli error")
    _add_code_flags(p)
    p.add_argument("--error", type=_arg(PauliString.parse), required=True)
    _add_seed(p)

    p = sub.add_parser("table", help="sub-syndrome lookup table of the [[m,1]] base code")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--c", type=int, required=True)
    p.add_argument("--cyclic", action="store_true", help="include wrap-around bursts")
    p.add_argument("--unique", action="store_true", help="drop repeated rows")
    _add_seed(p)

    p = sub.add_parser("decode", help="decode a +/- syndrome")
    _add_code_flags(p)
    p.add_argument("--syndrome", type=_arg(Syndrome.parse), required=True)
    _add_seed(p)

    p = sub.add_parser("simulate", help="Monte Carlo EF-proxy over the Markov channel (CSV)")
    _add_code_flags(p)
    p.add_argument("--decoder", choices=("fast", "generic"))
    p.add_argument("--p", type=float, help="error probability")
    p.add_argument("--mu", type=float, help="correlation degree")
    p.add_argument("--grid", type=_arg(_grid), help="comma-separated p:mu points")
    p.add_argument("--trials", type=int, default=10_000)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--out", help="write CSV here instead of stdout")
    _add_seed(p)

    p = sub.add_parser("bench", help="time fast_decode over [[mk,k]] with doubling k")
    p.add_argument("--m", type=int, default=5)
    p.add_argument("--c", type=int, default=1)
    p.add_argument("--kmin", type=int, default=64)
    p.add_argument("--kmax", type=int, default=4096)
    _add_seed(p)
    return parser


def _code(args, parser: argparse.ArgumentParser):
    """Return a StructuredCode (from --m/--c/--k) or a QcrcCode (from --g/--n)."""
    structured = [getattr(args, f, None) for f in ("m", "c", "k")]
    if all(v is not None for v in structured):
        return build_structured(*structured)
    if getattr(args, "g", None) is not None and args.n is not None:
        return build_qcrc(args.g, args.n, args.l)
    parser.error("give either --g and --n, or --m, --c and --k")


def _stab(code):
    return getattr(code, "inner", code)


def cmd_construct(args, out: TextIO, parser) -> int:
    code = _stab(_code(args, parser))
    out.write(f"# [[{code.n},{code.k}]] l={code.l} g={format_poly(code.g)}\n")
    for row in code.G.to_text():
        out.write(row + "\n")
    out.write("\n")
    for P in stabilizer_generators(code):
        out.write(str(P) + "\n")
    return 0


def cmd_validate(args, out: TextIO, parser) -> int:
    text = sys.stdin.read() if args.input == "-" else open(args.input).read()
    rows, paulis = [], []
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        if "|" in line:
            rows.append(SympVec.parse(line))
        else:
            paulis.append(PauliString.parse(line))
    if not rows:
        out.write("invalid: no matrix rows found\n")
        return 1
    n = rows[0].n
    if any(r.n != n for r in rows):
        out.write("invalid: rows of different length\n")
        return 1
    G = GenMatrix(n, n - len(rows), tuple(rows))
    if not is_self_orthogonal(G):
        out.write("invalid: some pair of rows anticommutes\n")
        return 1
    if not check_genmatrix(G):
        out.write("invalid: rows are linearly dependent\n")
        return 1
    if paulis and paulis != [tau_inv(r) for r in rows]:
        out.write("invalid: stabilizer list does not match the matrix rows\n")
        return 1
    out.write(f"valid: [[{n},{G.k}]], {len(rows)} commuting independent generators\n")
    return 0


def cmd_syndrome(args, out: TextIO, parser) -> int:
    code = _stab(_code(args, parser))
    if len(args.error) != code.n:
        parser.error(f"--error must have {code.n} letters")
    s = quantum_syndrome(code, tau(args.error))
    out.write(s.to_signs() + "\n")
    out.write(format_poly(s.to_poly()) + "\n")
    return 0


def cmd_table(args, out: TextIO, parser) -> int:
    table = build_lookup_table(args.m, args.c, cyclic=args.cyclic)
    seen = set()
    for E, s in table.rows:
        if args.unique:
            if (E, s) in seen:
                continue
            seen.add((E, s))
        out.write(f"{', '.join(E.letters)} | {s.to_signs(', ')}\n")
    return 0


def cmd_decode(args, out: TextIO, parser) -> int:
    code = _code(args, parser)
    if hasattr(code, "table"):
        E = fast_decode(code, args.syndrome)
    else:
        E = tau_inv(generic_decode(code, args.syndrome))
    out.write(str(E) + "\n")
    return 0


def cmd_simulate(args, out: TextIO, parser) -> int:
    code = _code(args, parser)
    decoder = args.decoder or ("fast" if hasattr(code, "table") else "generic")
    if args.grid is not None:
        grid = args.grid
    elif args.p is not None and args.mu is not None:
        grid = [(args.p, args.mu)]
    else:
        parser.error("give --p and --mu, or --grid")
    try:
        for p, mu in grid:
            ChannelParams(p, mu)
    except ValueError as exc:
        parser.error(str(exc))
    if args.trials < 1:
        parser.error("--trials must be positive")
    rows = sweep(code, decoder, grid, args.trials, args.seed, workers=args.workers)
    text = to_csv(rows, args.seed)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        out.write(text)
    return 0


def cmd_bench(args, out: TextIO, parser) -> int:
    ks = []
    k = args.kmin
    while k <= args.kmax:
        ks.append(k)
        k *= 2
    if not ks:
        parser.error("--kmin must not exceed --kmax")
    points = measure_scaling(args.m, args.c, ks, seed=args.seed)
    ratios = [None] + doubling_ratios(points)
    out.write("k,n,seconds,ratio\n")
    for pt, ratio in zip(points, ratios):
        out.write(f"{pt.k},{pt.n},{pt.seconds:.6g},{'' if ratio is None else format(ratio, '.3f')}\n")
    return 0


COMMANDS = {
    "construct": cmd_construct,
    "validate": cmd_validate,
    "syndrome": cmd_syndrome,
    "table": cmd_table,
    "decode": cmd_decode,
    "simulate": cmd_simulate,
    "bench": cmd_bench,
}


_SIGNS = set("+-−,() ")


def _glue_signs(argv: list[str]) -> list[str]:
    """Rewrite ``--syndrome -+--`` as ``--syndrome=-+--`` so argparse
    does not read a leading minus as an option."""
    fixed = []
    i = 0
    while i < len(argv):
        arg = argv[i]
        if arg == "--syndrome" and i + 1 < len(argv) and argv[i + 1] and set(argv[i + 1]) <= _SIGNS:
            fixed.append(f"--syndrome={argv[i + 1]}")
            i += 2
            continue
        fixed.append(arg)
        i += 1
    return fixed


def main(argv: Sequence[str] | None = None, out: TextIO | None = None) -> int:
    out = sys.stdout if out is None else out
    parser = build_parser()
    argv = list(sys.argv[1:] if argv is None else argv)
    args = parser.parse_args(_glue_signs(argv))
    try:
        return COMMANDS[args.command](args, out, parser)
    except QcrcError as exc:
        print(f"qcrc: error: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        # semantic problems with otherwise well-formed input, e.g. a
        # syndrome of the wrong length
        print(f"qcrc: error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
