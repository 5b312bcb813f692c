import re
from typing import Dict, List, Optional

from fastapi.concurrency import run_in_threadpool

from src import algebra, models, verification
from src.algebra import BraidCertificate, EnumResult, HomCandidate, KleinQuotient, WordMode
from src.algebra.errors import ParseError

_GAMMA_TARGET = re.compile(r"(?:gamma|g)(\d+)\Z")
_RHO_TARGET = re.compile(r"rho(\d+)\Z")


def apply_braid(braid_text: str, target: str, reflect: bool, involutory: bool, strand_count: int = 4) -> str:
    """
    Applies a braid to a target loop or path and formats the result.

    Args:
        braid_text (str): Braid word such as "s1^2 s3 s2 s3^-1 s1^-2".
        target (str): "gamma<i>", "rho<j>" or a word over g1..gn.
        reflect (bool): Apply the disk reflection afterwards (implies involutory mode).
        involutory (bool): Reduce modulo g_i^2.

    Returns:
        str: The image, in word or path notation.
    """
    braid = algebra.parse_braid(braid_text, strand_count)
    alphabet = algebra.gamma_alphabet(strand_count)
    mode = WordMode.INVOLUTORY if (involutory or reflect) else WordMode.FREE
    target = target.strip()

    rho_match = _RHO_TARGET.match(target)
    if rho_match:
        terminal = int(rho_match.group(1))
        if not 1 <= terminal <= strand_count:
            raise ParseError(f"rho{terminal} is not a path of the {strand_count}-punctured disk")
        path = algebra.act_on_path(braid, algebra.rho(terminal, alphabet, mode))
        return str(algebra.reflect_path(path) if reflect else path)

    gamma_match = _GAMMA_TARGET.match(target)
    if gamma_match:
        index = int(gamma_match.group(1))
        if not 1 <= index <= strand_count:
            raise ParseError(f"gamma{index} is not a loop of the {strand_count}-punctured disk")
        word = algebra.generator(alphabet, alphabet.names[index - 1])
    else:
        word = algebra.parse_word(target, alphabet)
    image = algebra.act_on_loop(braid, word, mode)
    return str(algebra.reflect_loop(image) if reflect else image)


def format_certificate(certificate: BraidCertificate) -> models.CertificateRead:
    return models.CertificateRead(
        braid=str(certificate.braid),
        degree=certificate.hom.degree,
        images={name: str(perm) for name, perm in certificate.hom.images},
        transitive=certificate.transitive,
        relators_killed=certificate.relators_killed,
        klein_four_fa=certificate.klein_four_fa,
        u_nontrivial_involution=certificate.u_nontrivial_involution,
        valid=certificate.valid,
        f_word=str(certificate.f_word) if certificate.f_word is not None else None,
        u_word=str(certificate.u_word),
        a_word=str(certificate.a_word),
        f_image=str(certificate.f_image) if certificate.f_image is not None else None,
        a_image=str(certificate.a_image),
        u_image=str(certificate.u_image),
    )


def format_certify_response(braid_text: str, certificate: Optional[BraidCertificate]) -> models.CertifyResponse:
    if certificate is None:
        return models.CertifyResponse(braid=braid_text, status=models.CertifyStatus.UNKNOWN)
    return models.CertifyResponse(
        braid=str(certificate.braid),
        status=models.CertifyStatus.VALID,
        certificate=format_certificate(certificate),
    )


def format_enum_result(result: EnumResult) -> models.EnumResultRead:
    return models.EnumResultRead(
        status=result.status.value,
        coset_count=result.coset_count,
        defined=result.defined,
        actions={name: str(perm) for name, perm in result.actions},
    )


def format_candidate(candidate: HomCandidate) -> Dict[str, str]:
    return {name: str(perm) for name, perm in candidate.images}


def format_klein(k: int, quotients: List[KleinQuotient]) -> models.KleinResponse:
    return models.KleinResponse(
        k=k,
        quotients=[
            models.KleinQuotientRead(
                kernel=q.kernel,
                status=q.status.value,
                order=q.order,
                exponent=q.exponent if q.status is algebra.EnumStatus.FINITE else None,
            )
            for q in quotients
        ],
    )


async def run_report(max_cosets: int, workers: int = 1) -> models.Report:
    """Runs the full check battery off the event loop."""
    return await run_in_threadpool(verification.run_all, max_cosets=max_cosets, workers=workers)
