# Copyright 2026 twistab contributors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""

Exact rational linear programs.

Only problems of the form ``max c.x  s.t.  A x <= b, x >= 0`` with ``b >= 0``
are handled, so the origin is always feasible.  The work is done by sympy's
exact simplex; this module converts to and from :class:`fractions.Fraction`.

"""

from fractions import Fraction

from sympy import Rational, symbols
from sympy.solvers.simplex import UnboundedLPError, lpmax

from twistab.errors import Unbounded

__all__ = ['maximize']


def _rational(q):
    q = Fraction(q)
    return Rational(q.numerator, q.denominator)


def _fraction(value):
    value = Rational(value)
    return Fraction(int(value.p), int(value.q))


def maximize(c, A, b):
    """
    Maximize ``c . x`` over ``x >= 0`` with ``A x <= b``.

    :param c: objective coefficients.
    :param A: constraint rows.
    :param b: nonnegative right hand sides.

    :returns: ``(value, x)`` with exact :class:`fractions.Fraction` entries.
    :raises Unbounded: if the objective is unbounded above.
    """
    c = [Fraction(x) for x in c]
    A = [[Fraction(x) for x in row] for row in A]
    b = [Fraction(x) for x in b]
    n = len(c)
    if len(A) != len(b) or any(len(row) != n for row in A):
        raise ValueError("constraint matrix must be {0} x {1}".format(
            len(b), n))
    if any(x < 0 for x in b):
        raise ValueError("right hand side must be nonnegative")
    if not any(c):
        return Fraction(0), [Fraction(0)] * n

    xs = symbols('x0:{0}'.format(n))
    constraints = [x >= 0 for x in xs]
    for row, rhs in zip(A, b):
        lhs = sum((_rational(a) * x for a, x in zip(row, xs) if a),
                  Rational(0))
        if lhs.free_symbols:
            constraints.append(lhs <= _rational(rhs))
    objective = sum((_rational(a) * x for a, x in zip(c, xs) if a),
                    Rational(0))
    try:
        value, point = lpmax(objective, constraints)
    except UnboundedLPError:
        raise Unbounded()
    return _fraction(value), [_fraction(point.get(x, 0)) for x in xs]
