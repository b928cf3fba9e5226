from ._ouro import (
    DomainSyntaxError,
    EvalDomainError,
    ExprArityError,
    ExprSyntaxError,
    NotEnumerableError,
    PreconditionError,
    catalog,
    check,
    check_containment,
    convergence_csv,
    domain_contains,
    domain_enumerate,
    domain_sample,
    eval_expr,
    image_report,
    mean_sweep,
    membership_sweep,
    print_parsed,
    simulate_path,
)

__all__ = [
    "DomainSyntaxError",
    "EvalDomainError",
    "ExprArityError",
    "ExprSyntaxError",
    "NotEnumerableError",
    "PreconditionError",
    "catalog",
    "check",
    "check_containment",
    "convergence_csv",
    "domain_contains",
    "domain_enumerate",
    "domain_sample",
    "eval_expr",
    "image_report",
    "mean_sweep",
    "membership_sweep",
    "print_parsed",
    "simulate_path",
]
