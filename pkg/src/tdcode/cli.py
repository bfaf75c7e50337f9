"""Command line interface for the tandem duplication code toolkit."""

from __future__ import annotations

import argparse
import hashlib
import json
import random
import sys as _sys
from typing import Optional, Sequence

from .codec import CodeSpec, decode_codeword, encode_codeword
from .enumeration import (
    FseParams,
    asymptotic_rate,
    choose_params,
    code_size,
    count_irr,
    delta_min_degree,
)
from .errors import CorruptInputError, DomainError, TandemCodeError
from .fse import FseCodec
from .oracle import (
    OracleBudget,
    all_roots_bfs,
    enumerate_irr_bruteforce,
    min_outdegree_bruteforce,
)
from .ranking import rank_irr, unrank_irr
from .words import DupSystem, Word, random_descendant, root

HEADER_PREFIX = "# tdcode"


def format_header(fields: dict[str, object]) -> str:
    """Stream header line carrying the parameters needed to decode."""
    return " ".join([HEADER_PREFIX] + [f"{k}={v}" for k, v in fields.items()])


def parse_header(line: str) -> Optional[dict[str, object]]:
    """Parse a stream header line, or return None for ordinary comments."""
    if line.split()[:2] != ["#", "tdcode"]:
        return None
    fields: dict[str, object] = {}
    for tok in line.split()[2:]:
        key, sep, val = tok.partition("=")
        if not sep:
            raise CorruptInputError(f"malformed header token {tok!r}")
        if key == "mode":
            fields[key] = val
        else:
            try:
                fields[key] = int(val)
            except ValueError as exc:
                raise CorruptInputError(f"malformed header token {tok!r}") from exc
    return fields


def _render_word(w: Word, dna: bool) -> str:
    return w.to_dna() if dna else str(w)


def _parse_word(text: str, q: int, dna: bool) -> Word:
    try:
        return Word.from_dna(text) if dna else Word.from_string(text, q)
    except (DomainError, ValueError) as exc:
        raise CorruptInputError(f"cannot parse strand {text!r}: {exc}") from exc


def _read_bytes(path: str) -> bytes:
    if path == "-":
        return _sys.stdin.buffer.read()
    with open(path, "rb") as fh:
        return fh.read()


def _write_bytes(path: str, data: bytes) -> None:
    if path == "-":
        _sys.stdout.buffer.write(data)
        _sys.stdout.buffer.flush()
    else:
        with open(path, "wb") as fh:
            fh.write(data)


def _read_text(path: str) -> str:
    if path == "-":
        return _sys.stdin.read()
    with open(path, "r", encoding="ascii") as fh:
        return fh.read()


def _write_text(path: str, text: str) -> None:
    if path == "-":
        _sys.stdout.write(text)
    else:
        with open(path, "w", encoding="ascii") as fh:
            fh.write(text)


def _frame_bits(data: bytes) -> tuple[int, int]:
    """Prefix the payload with its 64 bit big-endian bit length."""
    bit_len = 8 * len(data)
    return (bit_len << bit_len) | int.from_bytes(data, "big"), 64 + bit_len


def _split_chunks(value: int, nbits: int, chunk: int) -> list[int]:
    """MSB-first chunk values, the last one zero padded."""
    n_chunks = -(-nbits // chunk)
    value <<= n_chunks * chunk - nbits
    mask = (1 << chunk) - 1
    return [(value >> ((n_chunks - 1 - i) * chunk)) & mask for i in range(n_chunks)]


def _join_chunks(values: list[int], chunk: int) -> bytes:
    acc = 0
    for v in values:
        acc = (acc << chunk) | v
    nbits = chunk * len(values)
    if nbits < 64:
        raise CorruptInputError("stream too short to hold a payload length field")
    bit_len = acc >> (nbits - 64)
    if bit_len % 8 != 0 or bit_len > nbits - 64:
        raise CorruptInputError(f"invalid payload bit length {bit_len}")
    payload = (acc >> (nbits - 64 - bit_len)) & ((1 << bit_len) - 1)
    return payload.to_bytes(bit_len // 8, "big")


def _block_word(value: int, ell: int, q: int) -> Word:
    digits = []
    for _ in range(ell):
        value, r = divmod(value, q)
        digits.append(r)
    return Word(tuple(reversed(digits)), q)


def _block_value(block: Word) -> int:
    value = 0
    for s in block:
        value = value * block.q + s
    return value


def _merged(header: dict, key: str, flag, default=None):
    # header wins, flags fill gaps
    if key in header:
        return header[key]
    if flag is not None:
        return flag
    return default


def _check_render(q: int, dna: bool) -> None:
    if dna and q != 4:
        raise DomainError("--dna requires q=4")
    if not dna and q > 10:
        raise DomainError("digit rendering requires q <= 10; use --dna for q=4")


def _resolve_fse_params(args, sys_: DupSystem, header: Optional[dict] = None) -> FseParams:
    if getattr(args, "epsilon", None) is not None:
        return choose_params(args.epsilon, sys_)
    hdr = header or {}
    ell = args.ell if args.ell is not None else hdr.get("ell")
    m = args.m if args.m is not None else hdr.get("m")
    if ell is None or m is None:
        raise DomainError("fse mode needs -e, or both --ell and --m")
    return FseParams(sys_, int(ell), int(m))


def _cmd_count(args) -> int:
    sys_ = DupSystem(args.q, args.k)
    value = count_irr(args.n, sys_)
    if args.json:
        print(json.dumps({"n": args.n, "q": args.q, "k": args.k, "count": value}))
    else:
        print(value)
    return 0


def _cmd_rate(args) -> int:
    sys_ = DupSystem(args.q, args.k)
    info = asymptotic_rate(sys_)
    out: dict[str, object] = {
        "q": args.q,
        "k": args.k,
        "lambda": info.lam,
        "rate": info.rate,
        "kappa": info.kappa,
    }
    if args.epsilon is not None:
        params = choose_params(args.epsilon, sys_)
        out.update({"epsilon": args.epsilon, "ell": params.ell, "m": params.m})
    print(json.dumps(out))
    return 0


def _cmd_rank(args) -> int:
    sys_ = DupSystem(args.q, args.k)
    _check_render(args.q, args.dna)
    word = Word.from_dna(args.word) if args.dna else Word.from_string(args.word, args.q)
    print(rank_irr(word, sys_))
    return 0


def _cmd_unrank(args) -> int:
    sys_ = DupSystem(args.q, args.k)
    _check_render(args.q, args.dna)
    print(_render_word(unrank_irr(args.n, args.j, sys_), args.dna))
    return 0


def _cmd_encode(args) -> int:
    sys_ = DupSystem(args.q, args.k)
    dna = bool(args.dna)
    _check_render(args.q, dna)
    if args.mode == "code":
        if args.digits:
            raise DomainError("--digits applies only to --mode fse")
        if args.n is None:
            raise DomainError("code mode needs -n")
        spec = CodeSpec(sys_, args.n)
        chunk = code_size(args.n, sys_).bit_length() - 1
        header = format_header({
            "mode": "code", "q": args.q, "k": args.k, "n": args.n,
            "chunk": chunk, "digits": 0, "dna": int(dna),
        })
        data = _read_bytes(args.input)
        lines = [header]
        if data:
            value, nbits = _frame_bits(data)
            for v in _split_chunks(value, nbits, chunk):
                lines.append(_render_word(encode_codeword(v + 1, spec), dna))
        _write_text(args.output, "\n".join(lines) + "\n")
        return 0
    params = _resolve_fse_params(args, sys_)
    chunk = (sys_.q**params.ell).bit_length() - 1
    codec = FseCodec(params)
    header = format_header({
        "mode": "fse", "q": args.q, "k": args.k, "ell": params.ell,
        "m": params.m, "chunk": chunk, "digits": int(args.digits), "dna": int(dna),
    })
    if args.digits:
        text = "".join(_read_text(args.input).split())
        if len(text) % params.ell != 0:
            raise DomainError(
                f"digit message length must be a multiple of ell={params.ell}"
            )
        blocks = [
            Word.from_string(text[i:i + params.ell], sys_.q)
            for i in range(0, len(text), params.ell)
        ]
    else:
        data = _read_bytes(args.input)
        if data:
            value, nbits = _frame_bits(data)
            blocks = [
                _block_word(v, params.ell, sys_.q)
                for v in _split_chunks(value, nbits, chunk)
            ]
        else:
            blocks = []
    lines = [header]
    if blocks:
        lines.append(_render_word(codec.encode(blocks), dna))
    _write_text(args.output, "\n".join(lines) + "\n")
    return 0


def _read_stream(path: str) -> tuple[dict, list[str]]:
    """Split a strand stream into its header fields and strand lines."""
    header: Optional[dict] = None
    strands: list[str] = []
    for raw in _read_text(path).splitlines():
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            got = parse_header(line)
            if got is not None and header is None:
                header = got
            continue
        strands.append(line)
    return header or {}, strands


def _cmd_decode(args) -> int:
    header, strands = _read_stream(args.input)
    mode = _merged(header, "mode", args.mode)
    if mode not in ("fse", "code"):
        raise DomainError("decoding needs --mode fse|code or a stream header")
    q = _merged(header, "q", args.q)
    k = _merged(header, "k", args.k)
    if q is None or k is None:
        raise DomainError("decoding needs -q and -k or a stream header")
    sys_ = DupSystem(int(q), int(k))
    dna = bool(_merged(header, "dna", int(args.dna) if args.dna else None, 0))
    digits = bool(_merged(header, "digits", int(args.digits) if args.digits else None, 0))
    _check_render(sys_.q, dna)
    if mode == "code":
        n = _merged(header, "n", args.n)
        if n is None:
            raise DomainError("code mode needs -n or a stream header")
        spec = CodeSpec(sys_, int(n))
        chunk = int(_merged(
            header, "chunk", None, code_size(int(n), sys_).bit_length() - 1
        ))
        if not strands:
            _write_bytes(args.output, b"")
            return 0
        values = []
        for s in strands:
            j = decode_codeword(_parse_word(s, sys_.q, dna), spec)
            if j - 1 >= 1 << chunk:
                raise CorruptInputError(
                    f"decoded index {j} does not fit in a {chunk} bit chunk"
                )
            values.append(j - 1)
        _write_bytes(args.output, _join_chunks(values, chunk))
        return 0
    params = _resolve_fse_params(args, sys_, header)
    chunk = int(_merged(
        header, "chunk", None, (sys_.q**params.ell).bit_length() - 1
    ))
    codec = FseCodec(params)
    if not strands:
        if digits:
            _write_text(args.output, "")
        else:
            _write_bytes(args.output, b"")
        return 0
    if len(strands) != 1:
        raise CorruptInputError(f"fse mode expects one strand, found {len(strands)}")
    clean = root(_parse_word(strands[0], sys_.q, dna), sys_)
    blocks = codec.decode(clean)
    if digits:
        _write_text(args.output, "".join(str(b) for b in blocks) + "\n")
        return 0
    values = []
    for block in blocks:
        v = _block_value(block)
        if v >= 1 << chunk:
            raise CorruptInputError(
                f"decoded block value {v} does not fit in a {chunk} bit chunk"
            )
        values.append(v)
    _write_bytes(args.output, _join_chunks(values, chunk))
    return 0


def _cmd_channel(args) -> int:
    if args.t < 0:
        raise DomainError(f"duplication count must be >= 0, got {args.t}")
    out_lines: list[str] = []
    header: Optional[dict] = None
    sys_: Optional[DupSystem] = None
    dna = False
    idx = 0
    for raw in _read_text(args.input).splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            if line.startswith("#") and header is None:
                header = parse_header(line)
            out_lines.append(raw)
            continue
        if sys_ is None:
            hdr = header or {}
            q = _merged(hdr, "q", args.q)
            k = _merged(hdr, "k", args.k)
            if q is None or k is None:
                raise DomainError("channel needs -q and -k or a stream header")
            sys_ = DupSystem(int(q), int(k))
            dna = bool(_merged(hdr, "dna", int(args.dna) if args.dna else None, 0))
            _check_render(sys_.q, dna)
        word = _parse_word(line, sys_.q, dna)
        seed = int.from_bytes(
            hashlib.sha256(f"{args.seed}:{idx}".encode()).digest()[:8], "big"
        )
        noisy, _events = random_descendant(word, args.t, sys_, seed)
        out_lines.append(_render_word(noisy, dna))
        idx += 1
    _write_text(args.output, "\n".join(out_lines) + ("\n" if out_lines else ""))
    return 0


def _default_delta_lengths(sys_: DupSystem) -> tuple[int, ...]:
    return (3, 4, 5) if sys_.k == 2 else (5, 6)


def _cmd_verify(args) -> int:
    sys_ = DupSystem(args.q, args.k)
    budget = OracleBudget(max_words=args.budget, max_depth=max(args.depth, 12))
    checks: list[dict] = []

    def record(name: str, ok: bool, detail: str) -> None:
        checks.append({"check": name, "ok": ok, "detail": detail})

    if args.scope in ("counts", "all"):
        for n in range(1, args.n + 1):
            if sys_.q**n > args.budget:
                record(f"counts n={n}", True, "skipped: budget")
                continue
            brute = enumerate_irr_bruteforce(n, sys_, budget)
            fast_n = count_irr(n, sys_)
            if fast_n != len(brute):
                record(f"counts n={n}", False, f"count {fast_n} vs brute {len(brute)}")
                continue
            ranks = [rank_irr(w, sys_) for w in brute]
            ok = sorted(ranks) == list(range(1, fast_n + 1)) and all(
                unrank_irr(n, r, sys_) == w for r, w in zip(ranks, brute)
            )
            record(f"counts n={n}", ok,
                   f"{fast_n} words, bijection {'ok' if ok else 'mismatch'}")
    if args.scope in ("delta", "all"):
        for m in _default_delta_lengths(sys_):
            if count_irr(m, sys_) ** 2 > args.budget or sys_.q**m > args.budget:
                record(f"delta m={m}", True, "skipped: budget")
                continue
            brute = min_outdegree_bruteforce(m, sys_, budget)
            fast = delta_min_degree(m, sys_)
            record(f"delta m={m}", fast == brute, f"degree {fast} vs brute {brute}")
    if args.scope in ("roots", "all"):
        rng = random.Random(args.seed)
        failures = 0
        for _ in range(args.samples):
            n = rng.randint(1, args.n)
            x = unrank_irr(n, rng.randint(1, count_irr(n, sys_)), sys_)
            y, _events = random_descendant(x, args.depth, sys_, rng.getrandbits(48))
            if root(y, sys_) != x or all_roots_bfs(y, sys_, budget) != {x}:
                failures += 1
                record("roots", False, f"root mismatch for a descendant of {x}")
                break
        if not failures:
            record("roots", True, f"{args.samples} samples at depth {args.depth}")
    passed = all(c["ok"] for c in checks)
    if args.json:
        print(json.dumps({"passed": passed, "checks": checks}))
    else:
        for c in checks:
            print(f"{'ok' if c['ok'] else 'FAIL'} {c['check']}: {c['detail']}")
        print("all checks passed" if passed else "verification failed")
    return 0 if passed else 1


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tdcode",
        description="Codes correcting short tandem duplications, built on irreducible words.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_system(p: argparse.ArgumentParser, required: bool = True) -> None:
        p.add_argument("-q", type=int, required=required, help="alphabet size (>= 3)")
        p.add_argument("-k", type=int, required=required, choices=(2, 3),
                       help="maximum duplication length")

    p = sub.add_parser("count", help="count irreducible words of a given length")
    p.add_argument("-n", type=int, required=True, help="word length")
    add_system(p)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_count)

    p = sub.add_parser("rate", help="asymptotic code rate and encoder parameters")
    add_system(p)
    p.add_argument("-e", "--epsilon", type=float, default=None,
                   help="also pick (ell, m) within this rate gap")
    p.set_defaults(func=_cmd_rate)

    p = sub.add_parser("rank", help="position of an irreducible word in its length class")
    p.add_argument("-w", "--word", required=True)
    add_system(p)
    p.add_argument("--dna", action="store_true", help="read the word as ACGT (q=4)")
    p.set_defaults(func=_cmd_rank)

    p = sub.add_parser("unrank", help="irreducible word at a given position")
    p.add_argument("-n", type=int, required=True, help="word length")
    p.add_argument("-j", type=int, required=True, help="1-indexed position")
    add_system(p)
    p.add_argument("--dna", action="store_true", help="write the word as ACGT (q=4)")
    p.set_defaults(func=_cmd_unrank)

    for name, fn in (("encode", _cmd_encode), ("decode", _cmd_decode)):
        p = sub.add_parser(name, help=f"{name} a message stream")
        p.add_argument("--mode", choices=("fse", "code"), default=None,
                       required=(name == "encode"))
        add_system(p, required=(name == "encode"))
        p.add_argument("-e", "--epsilon", type=float, default=None,
                       help="pick fse parameters for this rate gap")
        p.add_argument("--ell", type=int, default=None, help="message digits per block (fse)")
        p.add_argument("--m", type=int, default=None, help="encoder state length (fse)")
        p.add_argument("-n", type=int, default=None, help="codeword length (code)")
        p.add_argument("-i", "--input", default="-", help="input file, - for stdin")
        p.add_argument("-o", "--output", default="-", help="output file, - for stdout")
        p.add_argument("--dna", action="store_true", help="render strands as ACGT (q=4)")
        p.add_argument("--digits", action="store_true",
                       help="treat the message as base-q digit text (fse)")
        p.set_defaults(func=fn)

    p = sub.add_parser("channel", help="apply random tandem duplications to each strand")
    p.add_argument("-t", type=int, required=True, help="duplications per strand")
    p.add_argument("--seed", type=int, default=0)
    add_system(p, required=False)
    p.add_argument("--dna", action="store_true")
    p.add_argument("-i", "--input", default="-", help="input file, - for stdin")
    p.add_argument("-o", "--output", default="-", help="output file, - for stdout")
    p.set_defaults(func=_cmd_channel)

    p = sub.add_parser("verify", help="cross-check fast implementations against brute force")
    p.add_argument("--scope", choices=("counts", "delta", "roots", "all"), default="all")
    add_system(p)
    p.add_argument("-n", type=int, default=8, help="maximum word length")
    p.add_argument("--depth", type=int, default=3, help="duplications per root sample")
    p.add_argument("--samples", type=int, default=50)
    p.add_argument("--budget", type=int, default=2_000_000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_verify)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except DomainError as exc:
        print(f"error: {exc}", file=_sys.stderr)
        return 2
    except TandemCodeError as exc:
        print(f"error: {exc}", file=_sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=_sys.stderr)
        return 1


if __name__ == "__main__":
    raise SystemExit(main())
