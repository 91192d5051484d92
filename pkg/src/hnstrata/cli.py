"""Command-line front end: strata queries, S_M(mu) bounds, lattice HN and the property suites.

Exit codes: 0 success, 1 bad input, 2 unknown verdict under --require-exact,
3 property-suite failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Optional, Sequence

from . import isocengine as ie
from . import rootdata as rd
from . import strata as st
from . import suites
from . import weights as wt
from .errors import HNStrataError, ParseError, ShapeError
from .kottwitz import IsocrystalClass, g_class
from .rational import fmt_vec, parse_vec

EXIT_OK, EXIT_INPUT, EXIT_UNKNOWN, EXIT_SUITE = 0, 1, 2, 3


@dataclass(frozen=True)
class JobConfig:
    command: str
    action: Optional[str] = None
    group: Optional[rd.GL] = None
    mu: Optional[rd.Coweight] = None
    b: Optional[IsocrystalClass] = None
    b_prime: Optional[IsocrystalClass] = None
    levi: Optional[rd.Levi] = None
    lattice: Optional[str] = None
    seed: int = 0
    cases: Optional[int] = None
    require_exact: bool = False
    out: Optional[str] = None


def _int_list(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(p) for p in text.replace(" ", "").split(","))
    except ValueError as exc:
        raise ParseError(f"expected comma separated integers: {text!r}") from exc


def _parse_mu(text: str, n: int) -> rd.Coweight:
    mu = parse_vec(text)
    if len(mu) != n:
        raise ShapeError(f"mu has {len(mu)} entries, GL{n} needs {n}")
    if any(x.denominator != 1 for x in mu):
        raise ParseError("mu must be integral")
    if not rd.is_dominant(mu):
        raise ShapeError("mu must be dominant (non-increasing)")
    return mu


def _parse_class(text: str, n: int) -> IsocrystalClass:
    nu = parse_vec(text)
    if len(nu) != n:
        raise ShapeError(f"slope vector has {len(nu)} entries, GL{n} needs {n}")
    return g_class(nu)


def config_from_args(ns: argparse.Namespace) -> JobConfig:
    group = rd.GL.parse(ns.group) if getattr(ns, "group", None) else None
    n = group.n if group else None
    mu = _parse_mu(ns.mu, n) if getattr(ns, "mu", None) and n else None
    b = _parse_class(ns.b, n) if getattr(ns, "b", None) and n else None
    b_prime = _parse_class(ns.b_prime, n) if getattr(ns, "b_prime", None) and n else None
    levi = rd.levi(_int_list(ns.levi), n) if getattr(ns, "levi", None) and n else None
    lattice = getattr(ns, "lattice_file", None) or getattr(ns, "lattice", None)
    action = getattr(ns, "action", None) or getattr(ns, "suite", None)
    return JobConfig(command=ns.command, action=action,
                     group=group, mu=mu, b=b, b_prime=b_prime, levi=levi, lattice=lattice,
                     seed=getattr(ns, "seed", 0), cases=getattr(ns, "cases", None),
                     require_exact=getattr(ns, "require_exact", False),
                     out=getattr(ns, "out", None))


def _need(value, name: str):
    if value is None:
        raise ParseError(f"missing --{name}")
    return value


def _strata(cfg: JobConfig) -> tuple[dict, int]:
    mu, b = _need(cfg.mu, "mu"), _need(cfg.b, "b")
    if cfg.action == "enumerate":
        report = st.enumerate_strata(mu, b)
        unknown = any(r.nonempty == "unknown" for r in report.strata)
        return report.to_json(), EXIT_UNKNOWN if unknown and cfg.require_exact else EXIT_OK
    b_prime = _need(cfg.b_prime, "b-prime")
    if cfg.action == "nonempty":
        verdict = st.stratum_nonempty(mu, b, b_prime, strict=True)
        witnesses = st.stratum_witnesses(mu, b, b_prime)
        out = {"mu": fmt_vec(mu), "b": fmt_vec(b.nu), "b_prime": fmt_vec(b_prime.nu),
               "levi": list(st.hn_levi(b_prime)), "nonempty": verdict,
               "classical": st.has_classical_points(mu, b, b_prime, strict=True),
               "witnesses": [w.to_json() for w in witnesses]}
        code = EXIT_UNKNOWN if verdict == "unknown" and cfg.require_exact else EXIT_OK
        return out, code
    forms = st.dimension_forms(mu, b, b_prime)
    out = {"mu": fmt_vec(mu), "b": fmt_vec(b.nu), "b_prime": fmt_vec(b_prime.nu),
           "dimension": forms.value, "forms": forms.to_json()}
    return out, EXIT_OK


def _smmu(cfg: JobConfig) -> tuple[dict, int]:
    mu = _need(cfg.mu, "mu")
    levis = [cfg.levi] if cfg.levi else rd.compositions(len(mu))
    entries = []
    for M in levis:
        res = wt.s_m_mu(mu, M)
        entries.append({"levi": list(M),
                        "sigma_m_max": [fmt_vec(x) for x in wt.sigma_m_max(mu, M)],
                        "sigma_m_dom": [fmt_vec(x) for x in wt.sigma_m_dom(mu, M)],
                        "s_m_mu_cl": [fmt_vec(x) for x in wt.s_m_mu_cl(mu, M)],
                        "lower": [fmt_vec(x) for x in res.lower],
                        "upper": [fmt_vec(x) for x in res.upper],
                        "exact": res.exact})
    return {"mu": fmt_vec(mu), "levis": entries}, EXIT_OK


def load_lattice(path: str) -> ie.NormedIsocrystal:
    try:
        obj = json.loads(Path(path).read_text())
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path} is not valid JSON: {exc}") from exc
    if not isinstance(obj, dict):
        raise ParseError("lattice file must hold a JSON object")
    return ie.NormedIsocrystal.from_json(obj)


def _hn(cfg: JobConfig) -> tuple[dict, int]:
    D = load_lattice(_need(cfg.lattice, "lattice"))
    hn = ie.hn_filtration(D)
    out = {"lattice": D.to_json(),
           "relative_position": fmt_vec(ie.relative_position(D.lattice)),
           "chain": hn.chain_sets(), "slopes": fmt_vec(hn.slopes), "v": fmt_vec(hn.v),
           "hn_class": ie.hn_class(D).to_json()}
    return out, EXIT_OK


def _verify(cfg: JobConfig) -> tuple[dict, int]:
    names = suites.SUITES if cfg.action == "all" else (cfg.action,)
    results = [suites.run_suite(name, cfg.seed, cfg.cases) for name in names]
    out = {"seed": cfg.seed, "ok": all(r.ok for r in results),
           "suites": [r.to_json() for r in results]}
    return out, EXIT_OK if out["ok"] else EXIT_SUITE


def run(cfg: JobConfig) -> tuple[dict, int]:
    handlers = {"strata": _strata, "smmu": _smmu, "hn": _hn, "verify": _verify}
    return handlers[cfg.command](cfg)


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="hnstrata",
                                description="HN strata of B_dR^+ affine Grassmannians for GL_n.")
    sub = p.add_subparsers(dest="command", required=True)

    def group_args(sp: argparse.ArgumentParser, b: bool = True) -> None:
        sp.add_argument("--group", required=True, help="GLn, e.g. GL3")
        sp.add_argument("--mu", required=True, help="dominant integral coweight, e.g. 3,1,1")
        if b:
            sp.add_argument("--b", required=True, help="Newton slopes of b, e.g. 5/2,5/2,0")
        sp.add_argument("--out", help="write the JSON report here instead of stdout")

    s = sub.add_parser("strata", help="HN strata of the Schubert cell")
    s.add_argument("action", choices=("enumerate", "nonempty", "dim"))
    group_args(s)
    s.add_argument("--b-prime", dest="b_prime", help="Newton slopes of the HN class b'")
    s.add_argument("--require-exact", action="store_true",
                   help="exit 2 if any verdict is unknown")

    m = sub.add_parser("smmu", help="bounds on S_M(mu)")
    group_args(m, b=False)
    m.add_argument("--levi", help="block sizes, e.g. 1,2 (default: every standard Levi)")

    h = sub.add_parser("hn", help="HN filtration of a lattice file")
    h.add_argument("lattice_file", nargs="?", help="lattice JSON")
    h.add_argument("--lattice", help="lattice JSON (alternative to the positional file)")
    h.add_argument("--out")

    v = sub.add_parser("verify", help="run seeded property suites")
    v.add_argument("suite", choices=suites.SUITES + ("all",))
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--cases", type=int, help="cases for the randomized suites")
    v.add_argument("--out")
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_INPUT
    try:
        cfg = config_from_args(ns)
        report, code = run(cfg)
    except HNStrataError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INPUT
    text = json.dumps(report, indent=2, sort_keys=True) + "\n"
    if cfg.out:
        Path(cfg.out).write_text(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    raise SystemExit(main())
