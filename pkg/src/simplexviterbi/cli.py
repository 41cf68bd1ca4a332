"""Command-line entry point.

Exit codes: 0 success, 2 usage, 3 parse error, 4 verification mismatch,
5 resource limit.
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path

import numpy as np

from . import channel_bench as cb
from .block_codes import CodeParameterError
from .convolutional import (
    MAX_ENUMERATION_BITS,
    BlockFormatError,
    MessageSequence,
    PolyCodeword,
    column_distance,
    encode,
    format_blocks,
    optimal_column_distance,
    parse_blocks,
    partial_simplex_conv_generator,
)
from .f2core import ResourceError
from .trellis import improved_viterbi_decode, to_bipolar_blocks, viterbi_decode

EXIT_OK, EXIT_USAGE, EXIT_PARSE, EXIT_MISMATCH, EXIT_RESOURCE = 0, 2, 3, 4, 5


class UsageError(Exception):
    pass


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _generator(k, delta):
    if k is None or delta is None:
        raise UsageError("--k and --delta are required")
    if k < 1 or delta < 1:
        raise UsageError(f"need k >= 1 and delta >= 1, got k={k}, delta={delta}")
    return partial_simplex_conv_generator(k, delta)


def _read_blocks(path):
    if path is None:
        raise UsageError("--in is required")
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise BlockFormatError(str(exc)) from None
    return parse_blocks(text)


def _generator_from_header(header, blocks, width_key):
    G = _generator(header["k"], header["delta"])
    if (G.n, G.mu) != (header["n"], header["mu"]):
        raise BlockFormatError(f"header n/mu do not match the (k, delta) = ({G.k}, {G.delta}) code")
    width = G.k if width_key == "k" else G.n
    if any(b.length != width for b in blocks):
        raise BlockFormatError(f"every block must have {width} bits")
    return G


def cmd_construct(args) -> int:
    G = _generator(args.k, args.delta)
    lines = [f"k={G.k} delta={G.delta} n={G.n} mu={G.mu}"]
    for i, C in enumerate(G.coeffs):
        lines.append(f"G_{i}:")
        lines.extend("  " + str(C.row(r)) for r in range(C.nrows))
    lines.append("column distances (closed form):")
    for j in range(G.delta // G.k + 3):
        lines.append(f"  d_{j} = {optimal_column_distance(G.k, G.delta, j)}")
    _emit("\n".join(lines) + "\n", args.out)
    return EXIT_OK


def cmd_encode(args) -> int:
    if args.infile:
        header, blocks = _read_blocks(args.infile)
        G = _generator_from_header(header, blocks, "k")
        u = MessageSequence(blocks)
    else:
        G = _generator(args.k, args.delta)
        if args.length is None or args.length < 1:
            raise UsageError("--length >= 1 is required without --in")
        u = cb.random_message(G.k, args.length, np.random.Generator(np.random.PCG64(args.seed)))
    c = encode(u, G)
    _emit(format_blocks(c.blocks, G.k, G.n, G.delta, G.mu, u.L), args.out)
    return EXIT_OK


def cmd_transmit(args) -> int:
    header, blocks = _read_blocks(args.infile)
    G = _generator_from_header(header, blocks, "n")
    if not 0.0 <= args.p <= 1.0:
        raise UsageError("--p must lie in [0, 1]")
    r = cb.bsc_transmit(PolyCodeword(blocks), cb.ChannelConfig(args.p, args.seed))
    _emit(format_blocks(r.blocks, G.k, G.n, G.delta, G.mu, header["L"]), args.out)
    return EXIT_OK


def cmd_decode(args) -> int:
    header, blocks = _read_blocks(args.infile)
    G = _generator_from_header(header, blocks, "n")
    if len(blocks) != header["L"] + G.mu:
        raise BlockFormatError(f"expected L + mu = {header['L'] + G.mu} blocks, found {len(blocks)}")
    r = PolyCodeword(blocks)
    results = {}
    if args.decoder in ("classic", "both"):
        results["classic"] = viterbi_decode(r, G)
    if args.decoder in ("improved", "both"):
        results["improved"] = improved_viterbi_decode(to_bipolar_blocks(r), G)
    first = next(iter(results.values()))
    for name, res in results.items():
        print(f"{name}: metric {res.metric}, additions {res.op_count.additions}, "
              f"comparisons {res.op_count.comparisons}")
    print("message: " + " ".join(str(b) for b in first.message.blocks))
    print(f"metric: {first.metric}")
    if args.out:
        Path(args.out).write_text(
            format_blocks(first.message.blocks, G.k, G.n, G.delta, G.mu, header["L"]))
    if any((res.message, res.codeword, res.metric) != (first.message, first.codeword, first.metric)
           for res in results.values()):
        print("decoders disagree", file=sys.stderr)
        return EXIT_MISMATCH
    return EXIT_OK


def cmd_verify_distances(args) -> int:
    G = _generator(args.k, args.delta)
    jmax = args.jmax if args.jmax is not None else G.delta // G.k + 2
    if G.k * (jmax + 1) > MAX_ENUMERATION_BITS:
        raise ResourceError(f"jmax={jmax} needs 2^{G.k * (jmax + 1)} input prefixes")
    ok = True
    print("j  brute  formula  status")
    for j in range(jmax + 1):
        brute = column_distance(G, j)
        formula = optimal_column_distance(G.k, G.delta, j)
        status = "PASS" if brute == formula else "FAIL"
        ok &= brute == formula
        print(f"{j:<2} {brute:>5}  {formula:>7}  {status}")
    return EXIT_OK if ok else EXIT_MISMATCH


def cmd_bench(args) -> int:
    if args.complexity:
        ks = (args.k,) if args.k else (1, 2)
        rows = cb.complexity_table(ks=ks, deltas=range(2, 9), L=args.length or 12, seed=args.seed)
        _emit(cb.complexity_csv(rows), args.out)
        return EXIT_OK
    _generator(args.k, args.delta)
    if not 0.0 <= args.p <= 1.0 or args.trials < 1:
        raise UsageError("need --p in [0, 1] and --trials >= 1")
    report = cb.run_bench(args.k, args.delta, args.length or 100, args.trials, args.p, args.seed)
    _emit(report.to_json() + "\n" if args.format == "json" else report.to_csv(), args.out)
    return EXIT_OK if report.agreements == args.trials else EXIT_MISMATCH


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="simplexviterbi",
                                     description="k-partial simplex convolutional codes: build, encode, decode, bench")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, *flags):
        if "code" in flags:
            p.add_argument("--k", type=int)
            p.add_argument("--delta", type=int)
        if "in" in flags:
            p.add_argument("--in", dest="infile")
        p.add_argument("--out")
        return p

    p = common(sub.add_parser("construct", help="print G_0..G_mu and the column distance table"), "code")
    p.set_defaults(func=cmd_construct)

    p = common(sub.add_parser("encode", help="zero-tail encode a message file or a random message"), "code", "in")
    p.add_argument("--length", type=int)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_encode)

    p = common(sub.add_parser("transmit", help="send a codeword file through a BSC"), "in")
    p.add_argument("--p", type=float, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_transmit)

    p = common(sub.add_parser("decode", help="decode a received-word file"), "in")
    p.add_argument("--decoder", choices=("classic", "improved", "both"), default="improved")
    p.set_defaults(func=cmd_decode)

    p = common(sub.add_parser("verify-distances", help="brute-force column distances against the closed form"), "code")
    p.add_argument("--jmax", type=int)
    p.set_defaults(func=cmd_verify_distances)

    p = common(sub.add_parser("bench", help="compare decoders on random BSC traffic"), "code")
    p.add_argument("--length", type=int)
    p.add_argument("--trials", type=int, default=10)
    p.add_argument("--p", type=float, default=0.02)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.add_argument("--complexity", action="store_true",
                   help="emit the per-step operation count table for delta = 2..8 as CSV")
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, CodeParameterError) as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except BlockFormatError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except ResourceError as exc:
        print(f"resource error: {exc}", file=sys.stderr)
        return EXIT_RESOURCE


if __name__ == "__main__":
    sys.exit(main())
