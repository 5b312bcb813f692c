"""
The named battery of checks that reproduces every algebraic computation behind
the braid certificate, and assembles them into a `Report`.

Expected values are stored as data. Each check recomputes the actual value
from scratch with the library, so the battery doubles as a regression oracle.
"""
import logging
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from datetime import datetime, timezone
from functools import lru_cache, partial
from typing import Any, Callable, Dict, List, NamedTuple

from src import algebra
from src.algebra import (
    BETA,
    AlgebraError,
    BraidWord,
    EnumResult,
    Perm,
    Presentation,
    UnknownCheckError,
    WordMode,
)
from src.config import DEFAULT_MAX_COSETS, VERSION
from src.models import Check, CheckStatus, Report, Summary

logger = logging.getLogger(__name__)

GAMMA = algebra.gamma_alphabet(4)

EXPECTED_R_BETA = {
    "g1": "g4 g3 g4 g2 g1 g2 g4 g2 g1 g2 g4 g3 g4",
    "g2": "g4 g3 g4 g2 g1 g2 g4 g2 g1 g2 g4 g2 g1 g2 g4 g3 g4",
    "g3": "g2",
    "g4": "g2 g4 g3 g4 g2",
}
EXPECTED_BETA_RHO = {
    "rho1": "g1 g2 g1 g3 g4 g3 rho1",
    "rho2": "g1 g2 g1 g3 g4 g3 g1 g3 g4 rho4",
    "rho3": "rho3",
    "rho4": "g3 g1 rho2",
}
EXPECTED_DELTA = {
    "delta1": "g4 g3 g4 g2 g1 g2",
    "delta2": "g4 g3 g4 g2 g1 g2 g4 g2 g1",
    "delta3": "e",
    "delta4": "g2 g4",
}
EXPECTED_F = {"orbit": [1, 4, 3, 2], "f": "g4 g3 g4 g2 g1 g3 g4 g2 g1 g2 g4 g2 g1"}
PSI_BAR = {"g1": "(1 2)", "g2": "(2 3)", "g3": "(2 3)", "g4": "(3 4)"}


class Outcome(NamedTuple):
    expected: Any
    actual: Any
    inconclusive: bool = False


@dataclass(frozen=True)
class SuiteContext:
    max_cosets: int
    braid: BraidWord
    workers: int = 1


@dataclass(frozen=True)
class CheckDefinition:
    id: str
    description: str
    paper_ref: str
    run: Callable[[SuiteContext], Outcome]


_REGISTRY: Dict[str, CheckDefinition] = {}


def check(check_id: str, description: str, paper_ref: str):
    """Register a check; registration order is report order."""

    def decorator(func: Callable[[SuiteContext], Outcome]):
        _REGISTRY[check_id] = CheckDefinition(check_id, description, paper_ref, func)
        return func

    return decorator


def check_ids() -> List[str]:
    return list(_REGISTRY)


# --- Shared computations ---

@lru_cache(maxsize=16)
def _enumerate(presentation: Presentation, max_cosets: int) -> EnumResult:
    return algebra.todd_coxeter(presentation, (), max_cosets)


def _psi_bar() -> Dict[str, Perm]:
    return {name: algebra.parse_perm(cycles, 4) for name, cycles in PSI_BAR.items()}


def _t34(ctx: SuiteContext):
    knot = algebra.t34_quotient()
    return knot, _enumerate(knot.presentation, ctx.max_cosets)


def _psi_values(braid: BraidWord) -> Dict[str, Any]:
    images = _psi_bar()
    f = algebra.f_word(braid)
    u = algebra.boundary_word(GAMMA)
    a = algebra.generator(GAMMA, "g1", WordMode.INVOLUTORY)
    return {
        "f": str(algebra.word_image(f, images, 4)) if f is not None else None,
        "a": str(algebra.word_image(a, images, 4)),
        "u": str(algebra.word_image(u, images, 4)),
    }


# --- Checks ---

@check(
    "T34-ORDER",
    "The (3,4) torus knot group with meridian and longitude squared has order 48",
    '"Order(G)=48"',
)
def _t34_order(ctx: SuiteContext) -> Outcome:
    _, result = _t34(ctx)
    if not result.is_finite:
        return Outcome(48, result.status.value, inconclusive=True)
    return Outcome(48, result.coset_count)


@check(
    "T34-ELEMENT-ORDERS",
    "Meridian, longitude and their product each have order 2 in the order-48 quotient",
    '"Order(mu)=2", "Order(lambda)=2", "Order(lambda*mu)=2"',
)
def _t34_element_orders(ctx: SuiteContext) -> Outcome:
    expected = {"mu": 2, "lambda": 2, "mu*lambda": 2}
    knot, result = _t34(ctx)
    if not result.is_finite:
        return Outcome(expected, result.status.value, inconclusive=True)
    mu, lam = knot.meridian, knot.longitude
    actual = {
        "mu": algebra.element_order_in(result, mu),
        "lambda": algebra.element_order_in(result, lam),
        "mu*lambda": algebra.element_order_in(result, mu * lam),
    }
    return Outcome(expected, actual)


@check(
    "RBETA-WORDS",
    "The reflected images r.beta(g_i) in the involutory quotient",
    '"Let us compute rβ(γi)"',
)
def _r_beta_words(ctx: SuiteContext) -> Outcome:
    actual = {
        f"g{i}": str(algebra.r_beta_gamma(ctx.braid, i, GAMMA)) for i in range(1, 5)
    }
    return Outcome(EXPECTED_R_BETA, actual)


@check(
    "BETA-RHO-WORDS",
    "Images of the based paths rho_j under beta, reduced in the involutory quotient",
    '"after taking the quotient"',
)
def _beta_rho_words(ctx: SuiteContext) -> Outcome:
    actual = {}
    for j in range(1, 5):
        path = algebra.act_on_path(ctx.braid, algebra.rho(j, GAMMA, WordMode.INVOLUTORY))
        actual[f"rho{j}"] = str(path)
    return Outcome(EXPECTED_BETA_RHO, actual)


@check(
    "DELTA-WORDS",
    "The loop words delta_i obtained by reflecting the path images",
    '"Φ(δ1)=γ4γ3γ4γ2γ1γ2"',
)
def _delta_words(ctx: SuiteContext) -> Outcome:
    words = algebra.delta_words(ctx.braid)
    actual = {f"delta{i}": str(w) for i, w in enumerate(words, 1)}
    return Outcome(EXPECTED_DELTA, actual)


@check(
    "F-WORD",
    "The loop f assembled along the orbit of puncture 1",
    '"Φ(f)=Φ(δ1)Φ(δ4)Φ(δ3)Φ(δ2)"',
)
def _f_word(ctx: SuiteContext) -> Outcome:
    word = algebra.f_word(ctx.braid)
    actual = {
        "orbit": algebra.puncture_orbit(ctx.braid),
        "f": str(word) if word is not None else None,
    }
    return Outcome(EXPECTED_F, actual)


@check(
    "PSI-WELLDEF",
    "The map g1->(1 2), g2->(2 3), g3->(2 3), g4->(3 4) kills every relator g_i r.beta(g_i)",
    '"Hence ψ̄ descends"',
)
def _psi_welldef(ctx: SuiteContext) -> Outcome:
    images = _psi_bar()
    actual = {}
    for i in range(1, 5):
        g = algebra.generator(GAMMA, f"g{i}", WordMode.INVOLUTORY)
        relator = g * algebra.r_beta_gamma(ctx.braid, i, GAMMA)
        actual[f"g{i}"] = str(algebra.word_image(relator, images, 4))
    return Outcome({f"g{i}": "()" for i in range(1, 5)}, actual)


@check(
    "PSI-VALUES",
    "Images of f, a = g1 and u = g1 g2 g3 g4 under the descended map",
    '"ψ(f)=(3 4), ψ(a)=(1 2)"',
)
def _psi_values_check(ctx: SuiteContext) -> Outcome:
    expected = {"f": "(3 4)", "a": "(1 2)", "u": "(1 2)(3 4)"}
    return Outcome(expected, _psi_values(ctx.braid))


@check(
    "PERMS",
    "Strand permutations of beta and r.beta, and transitivity of r.beta",
    '"β is the transposition (2 4)"',
)
def _perms(ctx: SuiteContext) -> Outcome:
    plain = algebra.induced_permutation(ctx.braid)
    reflected = algebra.induced_permutation(ctx.braid, with_reflection=True)
    actual = {
        "beta": str(plain),
        "r_beta": str(reflected),
        "transitive": algebra.is_transitive([reflected]),
    }
    return Outcome({"beta": "(2 4)", "r_beta": "(1 4 3 2)", "transitive": True}, actual)


@check(
    "BOUNDARY-QUOTIENT",
    "The boundary torus group modulo w is C2 x C2",
    '"u↦u, v↦v, w↦e"',
)
def _boundary_quotient(ctx: SuiteContext) -> Outcome:
    expected = {"order": 4, "exponent": 2}
    group = algebra.boundary_presentation()
    w = algebra.parse_word("w", group.alphabet)
    result = _enumerate(algebra.quotient(group, [w]), ctx.max_cosets)
    if not result.is_finite:
        return Outcome(expected, result.status.value, inconclusive=True)
    return Outcome(expected, {"order": result.coset_count, "exponent": algebra.exponent(result)})


@check(
    "Q8-CENTER",
    "Q8 has order 8 and its quotient by the center x^2 is C2 x C2",
    '"the center {±1} ⊂ Q8"',
)
def _q8_center(ctx: SuiteContext) -> Outcome:
    expected = {"q8_order": 8, "quotient_order": 4, "quotient_exponent": 2}
    q8 = algebra.q8_presentation()
    full = _enumerate(q8, ctx.max_cosets)
    center = _enumerate(algebra.quotient(q8, [algebra.parse_word("x^2", q8.alphabet)]), ctx.max_cosets)
    if not (full.is_finite and center.is_finite):
        return Outcome(expected, "limit_exceeded", inconclusive=True)
    actual = {
        "q8_order": full.coset_count,
        "quotient_order": center.coset_count,
        "quotient_exponent": algebra.exponent(center),
    }
    return Outcome(expected, actual)


@check(
    "C8-INJECT",
    "The eight products of {e, psi(f)} x {e, psi(a)} x {e, t} are distinct in S4 x C2",
    '"so it is injective"',
)
def _c8_inject(ctx: SuiteContext) -> Outcome:
    values = _psi_values(ctx.braid)
    if values["f"] is None:
        return Outcome(8, None)
    f = algebra.parse_perm(values["f"], 4).lift(6)
    a = algebra.parse_perm(values["a"], 4).lift(6)
    t = algebra.parse_perm("(5 6)", 6)
    e = Perm.identity(6)
    products = {x * y * z for x in (e, f) for y in (e, a) for z in (e, t)}
    return Outcome(8, len(products))


@check(
    "KLEIN-QUOTIENTS",
    "G_k modulo w2 and modulo v2 w2 has order 4, exponent 2 for even k and 4 for odd k",
    '"depending on the parity of k1+k2"',
)
def _klein_quotients(ctx: SuiteContext) -> Outcome:
    expected: Dict[str, Any] = {}
    actual: Dict[str, Any] = {}
    inconclusive = False
    for k in range(4):
        expected[f"k={k}"] = {
            kernel: {"order": 4, "exponent": 2 if k % 2 == 0 else 4} for kernel in ("w2", "v2w2")
        }
        row = {}
        for quotient in algebra.klein_quotients(k, ctx.max_cosets):
            if quotient.status is not algebra.EnumStatus.FINITE:
                inconclusive = True
            row[quotient.kernel] = {"order": quotient.order, "exponent": quotient.exponent}
        actual[f"k={k}"] = row
    return Outcome(expected, actual, inconclusive)


@check(
    "INFINITE-PERIPHERAL",
    "u1 u2 acts on the line as a translation of length 2, so it has infinite order",
    '"H1∗C2{v′}H2 is infinite"',
)
def _infinite_peripheral(ctx: SuiteContext) -> Outcome:
    group = algebra.peripheral_presentation()
    certificate = algebra.infinite_order_certificate(algebra.parse_word("u1 u2", group.alphabet))
    actual = {
        "translation": certificate.translation,
        "infinite_order": certificate.infinite_order,
        "relators_trivial": algebra.verify_hom(group, algebra.AFFINE_IMAGES).ok,
    }
    return Outcome({"translation": 2, "infinite_order": True, "relators_trivial": True}, actual)


@check(
    "CERT-SELF",
    "Certificate search finds a valid certificate whose candidates include the map psi-bar",
    '"ψ̄(γ1)=(1 2)"',
)
def _cert_self(ctx: SuiteContext) -> Outcome:
    certificate = algebra.certify_braid(ctx.braid, degree_max=4, workers=ctx.workers)
    candidates = algebra.search(algebra.candidate_spec(ctx.braid, 4), ctx.workers)
    psi_bar = _psi_bar()
    actual = {
        "status": "valid" if certificate is not None else "unknown",
        "psi_bar_found": any(c.as_dict() == psi_bar for c in candidates),
    }
    return Outcome({"status": "valid", "psi_bar_found": True}, actual)


@check(
    "SVK-INJECT",
    "The boundary group C2^3 maps injectively into C2 x (order-48 quotient)",
    '"so it is injective"',
)
def _svk_inject(ctx: SuiteContext) -> Outcome:
    knot, result = _t34(ctx)
    if not result.is_finite:
        return Outcome(8, result.status.value, inconclusive=True)
    return Outcome(8, algebra.svk_injectivity(result, knot.meridian, knot.longitude))


# --- Runner ---

def run_check(
    check_id: str,
    max_cosets: int = DEFAULT_MAX_COSETS,
    braid: BraidWord = BETA,
    workers: int = 1,
) -> Check:
    definition = _REGISTRY.get(check_id)
    if definition is None:
        raise UnknownCheckError(check_id)
    ctx = SuiteContext(max_cosets=max_cosets, braid=braid, workers=workers)
    started = time.perf_counter()
    try:
        outcome = definition.run(ctx)
    except AlgebraError as exc:
        logger.warning("check %s raised %s", check_id, exc)
        outcome = Outcome(None, f"error: {exc}")
    if outcome.inconclusive:
        status = CheckStatus.INCONCLUSIVE
    elif outcome.expected == outcome.actual:
        status = CheckStatus.PASS
    else:
        status = CheckStatus.FAIL
    logger.info("%s %s (%.3fs)", check_id, status.value, time.perf_counter() - started)
    return Check(
        id=definition.id,
        description=definition.description,
        paper_ref=definition.paper_ref,
        status=status,
        expected=outcome.expected,
        actual=outcome.actual,
    )


def run_all(
    max_cosets: int = DEFAULT_MAX_COSETS,
    braid: BraidWord = BETA,
    workers: int = 1,
) -> Report:
    """Run every check in registration order; check failures never raise."""
    ids = check_ids()
    run = partial(run_check, max_cosets=max_cosets, braid=braid)
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as executor:
            checks = list(executor.map(run, ids))
    else:
        checks = [run(cid) for cid in ids]
    return Report(
        version=VERSION,
        generated_at=datetime.now(timezone.utc),
        checks=checks,
        summary=Summary.from_checks(checks),
    )
