"""Python bindings for the phigold verification engine."""

from ._core import (
    BertrandWitness,
    BinaryWitness,
    Certificate,
    CongruenceCheck,
    NResult,
    RangeReport,
    Tables,
    TernaryWitness,
    bertrand_solutions,
    binary_solutions,
    certify,
    count_identity_check,
    decomposition_to_xy,
    emit_report,
    fermat_congruence_holds,
    fermat_system_solutions,
    isqrt,
    nu,
    nu_p,
    oracle,
    parse_report_json,
    peculiar_solutions,
    phi,
    is_prime,
    prime_pi,
    proposition_check,
    raw_form_solutions,
    run_sweep,
    substitution_bijection_check,
    ternary_solutions,
    two_prime_sum_exists,
)

__all__ = [name for name in dir() if not name.startswith("_")]
