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

Errors raised by twistab.

Every error carries a short machine readable ``code`` which the command line
reports alongside the message, and an optional ``location`` naming the piece
of input (a JSON path or a vertex id) that caused it.

"""


class TwistabError(Exception):
    code = 'error'

    def __init__(self, message, location=None):
        super(TwistabError, self).__init__(message)
        self.message = message
        self.location = location


# groups

class NonAssociative(TwistabError):
    code = 'non-associative'

    def __init__(self, a, b, c):
        super(NonAssociative, self).__init__(
            "Multiplication table is not associative at ({a}*{b})*{c}".format(
                a=a, b=b, c=c))


class NoIdentity(TwistabError):
    code = 'no-identity'

    def __init__(self):
        super(NoIdentity, self).__init__(
            "Multiplication table has no two-sided identity")


class NoInverse(TwistabError):
    code = 'no-inverse'

    def __init__(self, element):
        super(NoInverse, self).__init__(
            "Element {0} has no two-sided inverse".format(element))


class ForeignElement(TwistabError):
    code = 'foreign-element'

    def __init__(self, element):
        super(ForeignElement, self).__init__(
            "Element {0!r} belongs to a different group".format(element))


class GroupTooLarge(TwistabError):
    code = 'group-too-large'

    def __init__(self, order, cap):
        super(GroupTooLarge, self).__init__(
            "Group of order {0} exceeds the cap of {1}".format(order, cap))


class UnknownGroup(TwistabError):
    code = 'unknown-group'

    def __init__(self, spec):
        super(UnknownGroup, self).__init__(
            "Unknown group specification {0!r}".format(spec))


# curve graphs

class NotATail(TwistabError):
    code = 'not-a-tail'

    def __init__(self, vertex, reason):
        super(NotATail, self).__init__(
            "Vertex {0} is not a contractible rational tail: {1}".format(
                vertex, reason), vertex)


class NotABridge(TwistabError):
    code = 'not-a-bridge'

    def __init__(self, vertex, reason):
        super(NotABridge, self).__init__(
            "Vertex {0} is not a contractible rational bridge: {1}".format(
                vertex, reason), vertex)


class NonAbelianDescent(TwistabError):
    code = 'non-abelian-descent'

    def __init__(self, vertex):
        super(NonAbelianDescent, self).__init__(
            "Monodromy on vertex {0} generates a non-abelian subgroup; "
            "the map does not descend to the contracted curve".format(vertex),
            vertex)


# monoids

class NotAdmissible(TwistabError):
    code = 'not-admissible'


class NotInMonoid(TwistabError):
    code = 'not-in-monoid'

    def __init__(self, vector):
        super(NotInMonoid, self).__init__(
            "Vector {0} is not in the monoid".format(_fmt(vector)))


class NotInXm(TwistabError):
    code = 'not-in-xm'

    def __init__(self, vector, m):
        super(NotInXm, self).__init__(
            "Class of {0} does not lie in X_{1}".format(_fmt(vector), m))


# stability and stabilization

class LengthMismatch(TwistabError):
    code = 'length-mismatch'

    def __init__(self, expected, got):
        super(LengthMismatch, self).__init__(
            "Expected {0} weights, got {1}".format(expected, got))


class InvalidInput(TwistabError):
    code = 'invalid-input'

    def __init__(self, violations):
        self.violations = list(violations)
        first = self.violations[0] if self.violations else None
        message = first.message if first else 'invalid input'
        location = first.location if first else None
        super(InvalidInput, self).__init__(message, location)


class NothingLeft(TwistabError):
    code = 'nothing-left'

    def __init__(self, reason):
        super(NothingLeft, self).__init__(
            "Stabilization would contract the whole curve: {0}".format(reason))


class NotDominated(TwistabError):
    code = 'not-dominated'

    def __init__(self, index, a, b):
        super(NotDominated, self).__init__(
            "Weight a_{0} = {1} exceeds b_{0} = {2}".format(index, a, b))


class TooLarge(TwistabError):
    code = 'too-large'

    def __init__(self, n, cap):
        super(TooLarge, self).__init__(
            "n = {0} exceeds the chamber enumeration cap of {1}".format(
                n, cap))


class Unbounded(TwistabError):
    code = 'unbounded'

    def __init__(self):
        super(Unbounded, self).__init__("Linear program is unbounded")


# input documents

class MarshalError(TwistabError):
    code = 'bad-input'


def _fmt(vector):
    return '(' + ', '.join(str(x) for x in vector) + ')'
