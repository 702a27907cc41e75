"""Symbolic summation in difference rings with roots of unity.

Thin dict-returning wrappers over the C++ engine: telescoping, creative
telescoping, product rewriting, order computations and exact identity checks
for expressions built from nested sums, products and objects like (-1)^k.
"""

import json as _json

try:
    from . import _core
except ImportError:  # running against a plain CMake build tree
    import _core

CapExceeded = _core.CapExceeded
ParseError = _core.ParseError

__all__ = [
    "telescope",
    "rewrite_product",
    "zeilberger",
    "order",
    "verify",
    "describe_tower",
    "CapExceeded",
    "ParseError",
]


def _wrap(raw):
    return _json.loads(raw)


def telescope(expr, zeta=4, params=(), extra=(), lambda_cap=4096, verify_lo=1, verify_hi=40):
    """Solve sigma(g) - g = f for the summand f(k); returns a result dict."""
    return _wrap(_core.telescope(expr, zeta, list(params), list(extra), lambda_cap,
                                 verify_lo, verify_hi))


def rewrite_product(expr, zeta=4, params=(), extra=(), lambda_cap=4096, verify_lo=1,
                    verify_hi=40):
    """Closed form of Prod(j, a, b, u(j)) as g(b+1)/g(a)."""
    return _wrap(_core.rewrite_product(expr, zeta, list(params), list(extra), lambda_cap,
                                       verify_lo, verify_hi))


def zeilberger(expr, params, zeta=1, max_order=4, lambda_cap=4096):
    """Creative telescoping: a recurrence for S(n) = sum_k F(n, k)."""
    return _wrap(_core.zeilberger(expr, list(params), zeta, max_order, lambda_cap))


def order(expr, zeta=4, extra=()):
    """Order, period and factorial order of a product-group element."""
    return _wrap(_core.order(expr, zeta, list(extra)))


def verify(lhs, rhs, var="", zeta=4, lo=1, hi=40):
    """Exact comparison of two expressions over an integer range."""
    return _wrap(_core.verify(lhs, rhs, var, zeta, lo, hi))


def describe_tower(expr, zeta=4, params=(), extra=()):
    """The difference ring an expression compiles into, with self-checks."""
    return _wrap(_core.describe_tower(expr, zeta, list(params), list(extra)))
