"""Command-line interface.

Every subcommand writes JSON to stdout (or a text rendering with
--format text) and is deterministic for fixed flags.  Exit codes: 0 on
success, 1 when a verification-style command finds a failure, 2 on usage
errors.  The ANYONBRAID_THREADS environment variable is accepted for
interface compatibility; this implementation is sequential (and therefore
trivially deterministic).
"""

from __future__ import annotations

import argparse
import json
import sys

from .braid import BraidWord, RepContext, eval_word, named_gate
from .fusion import FusionLabel, count_paths, enumerate_paths
from .gates import parse_gate_target
from .groups import braid_image, monodromy_equals_pauli
from .matrix import DenseMatrix
from .symplectic import (CliffordAction, basis_change_t, braid_symplectic,
                         clifford_check, faithfulness_check, group_orders,
                         sp_order, tilde_basis)
from .synth import coverage_ratio, missing_gate_report, reachability, synthesize
from .verify import run_battery


def _parity(s: str) -> int:
    if s in ("+", "+1", "1"):
        return 1
    if s in ("-", "-1"):
        return -1
    raise argparse.ArgumentTypeError("parity must be + or -")


def _emit(args, payload: dict, text: str | None = None) -> None:
    if args.format == "json":
        json.dump(payload, sys.stdout, indent=2, sort_keys=True)
        sys.stdout.write("\n")
    else:
        sys.stdout.write((text if text is not None else json.dumps(payload, indent=2)) + "\n")


def _pretty_complex(z: complex) -> str:
    re = 0.0 if abs(z.real) < 1e-12 else round(z.real, 12)
    im = 0.0 if abs(z.imag) < 1e-12 else round(z.imag, 12)
    return format(complex(re, im), "g")


def _matrix_payload(mat: DenseMatrix, pretty: bool) -> dict:
    payload = mat.to_json_dict()
    if pretty:
        payload["pretty"] = [
            [_pretty_complex(z) for z in row] for row in mat.to_complex().tolist()
        ]
    return payload


def _target_matrix(args, n: int) -> DenseMatrix:
    if args.target.startswith("file:"):
        with open(args.target[5:], encoding="utf-8") as fh:
            return DenseMatrix.from_json_dict(json.load(fh))
    return parse_gate_target(n, args.target)


def cmd_gen_matrix(args) -> int:
    ctx = RepContext(args.n, args.parity, args.form)
    if args.generator is not None:
        from .braid import braid_generator

        mat = braid_generator(ctx, args.generator)
        _emit(args, _matrix_payload(mat, args.pretty))
        return 0
    word, mat = named_gate(ctx, args.gate, args.qubit)
    payload = _matrix_payload(mat, args.pretty)
    payload["word"] = word.to_text()
    _emit(args, payload)
    return 0


def cmd_eval_word(args) -> int:
    ctx = RepContext(args.n, args.parity, args.form)
    mat = eval_word(ctx, BraidWord.from_text(args.word))
    _emit(args, _matrix_payload(mat, args.pretty))
    return 0


def cmd_verify_relations(args) -> int:
    results = run_battery(args.n)
    checks = [{"name": name, "ok": ok, "detail": detail} for name, ok, detail in results]
    failed = [c for c in checks if not c["ok"]]
    payload = {"n_max": args.n, "checks": checks, "failed": len(failed), "ok": not failed}
    text = "\n".join(("PASS " if c["ok"] else "FAIL ") + c["name"] for c in checks)
    _emit(args, payload, text)
    return 1 if failed else 0


def cmd_orders(args) -> int:
    orders = group_orders(args.n)
    payload = orders.to_json_dict()
    payload["sp_2n_2"] = sp_order(args.n, 2)
    payload["coverage_ratio"] = str(coverage_ratio(args.n))
    _emit(args, payload)
    return 0


def cmd_enumerate(args) -> int:
    if args.n >= 3 and not args.heavy:
        sys.stderr.write(
            "enumerating the braid image for n >= 3 stores >10^7 exact matrices; "
            "pass --heavy to confirm\n"
        )
        return 2
    enum = braid_image(args.n, args.parity, args.mode)
    payload = enum.summary()
    if args.dump_elements:
        payload["elements"] = [el.to_json_dict() for el in enum.elements]
    _emit(args, payload)
    return 0


def cmd_monodromy_check(args) -> int:
    verdict = monodromy_equals_pauli(args.n, args.parity)
    _emit(args, verdict.to_json_dict())
    return 0 if verdict.equal else 1


def cmd_clifford_check(args) -> int:
    ctx = RepContext(args.n, args.parity, args.form)
    if args.word is not None:
        mat = eval_word(ctx, BraidWord.from_text(args.word))
    else:
        mat = _target_matrix(args, args.n)
    act = clifford_check(mat)
    if isinstance(act, CliffordAction):
        payload = {"clifford": True}
        payload.update(act.to_json_dict())
        _emit(args, payload)
        return 0
    payload = {"clifford": False}
    payload.update(act.to_json_dict())
    _emit(args, payload)
    return 1


def cmd_symplectic(args) -> int:
    n = args.n
    t, tildes = tilde_basis(n)
    payload = {
        "generators": {str(j): braid_symplectic(n, j).to_bitstrings()
                       for j in range(1, 2 * n + 2)},
        "basis_change": basis_change_t(n).to_bitstrings(),
        "tilde": {str(j): tildes[j - 1].to_bitstrings() for j in range(1, 2 * n + 2)},
    }
    _emit(args, payload)
    return 0


def cmd_faithfulness(args) -> int:
    verdict = faithfulness_check(args.n)
    _emit(args, verdict.to_json_dict())
    return 0 if verdict.ok else 1


def cmd_synth(args) -> int:
    ctx = RepContext(args.n, args.parity)
    target = _target_matrix(args, args.n)
    res = synthesize(ctx, target, max_depth=args.max_depth, cap=args.cap,
                     allow_heavy=args.heavy)
    _emit(args, res.to_json_dict())
    return 0 if res.verdict == "realizable" else 1


def cmd_reach(args) -> int:
    ctx = RepContext(args.n, args.parity)
    target = _target_matrix(args, args.n)
    res = reachability(ctx, target)
    _emit(args, res.to_json_dict())
    return 0 if res.verdict == "reachable" else 1


def cmd_missing_gates(args) -> int:
    report = missing_gate_report(args.n, check_generation=args.check_generation)
    _emit(args, report.to_json_dict())
    return 0


def cmd_fusion(args) -> int:
    paths = enumerate_paths(args.num_sigma, args.parity)
    payload = {
        "num_sigma": args.num_sigma,
        "parity": "+" if args.parity == 1 else "-",
        "count": count_paths(args.num_sigma, args.parity),
        "paths": [p.render() for p in paths],
    }
    if args.labels:
        n = args.num_sigma // 2 - 1
        payload["labels"] = [
            FusionLabel.from_index(n, i, args.parity).to_json_dict()
            for i in range(2 ** n)
        ]
    _emit(args, payload)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="anyonbraid",
        description="Exact Ising-anyon braiding representations and their Clifford reach",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, parity=True, form=False, pretty=False):
        p.add_argument("--n", type=int, required=True, help="number of qubits")
        if parity:
            p.add_argument("--parity", type=_parity, default=1)
        if form:
            p.add_argument("--form", choices=("compressed", "projected", "unprojected"),
                           default="compressed")
        if pretty:
            p.add_argument("--pretty", action="store_true",
                           help="add a complex-float rendering (display only)")
        p.add_argument("--format", choices=("json", "text"), default="json")

    p = sub.add_parser("gen-matrix", help="matrix of a generator or a named gate word")
    common(p, form=True, pretty=True)
    p.add_argument("--generator", type=int, help="braid generator index")
    p.add_argument("--gate", choices=("phase", "hadamard_last", "cz_pair", "cz_swap_pair"))
    p.add_argument("--qubit", type=int, default=1)
    p.set_defaults(func=cmd_gen_matrix)

    p = sub.add_parser("eval-word", help="evaluate a braid word")
    common(p, form=True, pretty=True)
    p.add_argument("--word", required=True, help='e.g. "1 3 -5"')
    p.set_defaults(func=cmd_eval_word)

    p = sub.add_parser("verify-relations", help="run the exact identity battery")
    common(p, parity=False)
    p.set_defaults(func=cmd_verify_relations)

    p = sub.add_parser("orders", help="closed-form group orders")
    common(p, parity=False)
    p.set_defaults(func=cmd_orders)

    p = sub.add_parser("enumerate", help="enumerate the braid image")
    common(p)
    p.add_argument("--mode", choices=("strict", "projective"), default="strict")
    p.add_argument("--heavy", action="store_true", help="allow n >= 3 enumeration")
    p.add_argument("--dump-elements", action="store_true")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("monodromy-check", help="monodromy image vs Pauli group")
    common(p)
    p.set_defaults(func=cmd_monodromy_check)

    p = sub.add_parser("clifford-check", help="Clifford membership of a word or target")
    common(p, form=True)
    p.add_argument("--word")
    p.add_argument("--target")
    p.set_defaults(func=cmd_clifford_check)

    p = sub.add_parser("symplectic", help="printed symplectic and tilde matrices")
    common(p, parity=False)
    p.set_defaults(func=cmd_symplectic)

    p = sub.add_parser("faithfulness", help="order of the symplectic subgroup")
    common(p, parity=False)
    p.set_defaults(func=cmd_faithfulness)

    p = sub.add_parser("synth", help="BFS for a braid word realizing a gate")
    common(p)
    p.add_argument("--target", required=True, help="cz:1,2 | swap:1,2 | h:1 | p:1 | file:m.json")
    p.add_argument("--max-depth", type=int)
    p.add_argument("--cap", type=int, default=10 ** 7)
    p.add_argument("--heavy", action="store_true")
    p.set_defaults(func=cmd_synth)

    p = sub.add_parser("reach", help="reachability certificate for a gate")
    common(p)
    p.add_argument("--target", required=True)
    p.set_defaults(func=cmd_reach)

    p = sub.add_parser("missing-gates", help="survey of unreachable SWAP embeddings")
    common(p, parity=False)
    p.add_argument("--check-generation", action="store_true",
                   help="verify braid + one SWAP generates the full symplectic group")
    p.set_defaults(func=cmd_missing_gates)

    p = sub.add_parser("fusion", help="fusion paths and qubit labels")
    p.add_argument("--num-sigma", type=int, required=True)
    p.add_argument("--parity", type=_parity, default=1)
    p.add_argument("--labels", action="store_true")
    p.add_argument("--format", choices=("json", "text"), default="json")
    p.set_defaults(func=cmd_fusion)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, IndexError, KeyError, OSError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
