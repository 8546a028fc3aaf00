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
JSON schemas of the documents read and written by the command line tool.
"""

__all__ = ['SCHEMAS']

_DRAFT = 'http://json-schema.org/draft-07/schema#'

FRACTION = {
    'type': 'string',
    'pattern': r'^-?[0-9]+(/[0-9]+)?$',
    'description': 'an exact rational such as "3/4" or "1"',
}

WEIGHTS = {
    'oneOf': [
        {'type': 'array', 'items': FRACTION},
        {'type': 'string', 'description': 'comma separated fractions'},
    ],
}

GROUP = {
    'oneOf': [
        {'type': 'string',
         'description': 'shorthand such as S3, C4, D4, A4, Q8 or C2xC2'},
        {'type': 'object', 'required': ['kind'],
         'properties': {
             'kind': {'enum': ['symmetric', 'cyclic', 'dihedral',
                               'alternating', 'quaternion', 'product',
                               'table']},
             'degree': {'type': 'integer', 'minimum': 1},
             'n': {'type': 'integer', 'minimum': 1},
             'factors': {'type': 'array'},
             'order': {'type': 'integer', 'minimum': 1},
             'mul': {'type': 'array',
                     'items': {'type': 'array',
                               'items': {'type': 'integer', 'minimum': 0}}},
             'labels': {'type': 'array', 'items': {'type': 'string'}},
             'name': {'type': 'string'},
         }},
    ],
}

ELEMENT = {
    'oneOf': [
        {'type': 'string',
         'description': 'cycle notation such as "(1 2)(3 4)", or a label'},
        {'type': 'integer', 'minimum': 0, 'description': 'table index'},
    ],
}

CURVE = {
    '$schema': _DRAFT,
    'title': 'curve',
    'type': 'object',
    'required': ['vertices'],
    'properties': {
        'n': {'type': 'integer', 'minimum': 0},
        'genus': {'type': 'integer', 'minimum': 0},
        'vertices': {
            'type': 'array',
            'items': {
                'type': 'object',
                'required': ['id'],
                'properties': {
                    'id': {'type': 'string'},
                    'genus': {'type': 'integer', 'minimum': 0},
                    'degree': {'type': 'integer', 'minimum': 0},
                    'clusters': {
                        'type': 'array',
                        'items': {
                            'type': 'object',
                            'required': ['markings'],
                            'properties': {
                                'markings': {
                                    'type': 'array', 'minItems': 1,
                                    'items': {'type': 'integer',
                                              'minimum': 1}},
                                'root_order': {'type': 'integer',
                                               'minimum': 1},
                                'local_group': {
                                    'type': 'array',
                                    'items': {'type': 'integer',
                                              'minimum': 1}},
                            },
                        },
                    },
                },
            },
        },
        'edges': {
            'type': 'array',
            'items': {
                'type': 'object',
                'required': ['id', 'ends'],
                'properties': {
                    'id': {'type': 'string'},
                    'ends': {
                        'type': 'array', 'minItems': 2, 'maxItems': 2,
                        'items': {'type': 'array',
                                  'items': [{'type': 'string'},
                                            {'type': 'integer',
                                             'minimum': 0}]}},
                    'order': {'type': 'integer', 'minimum': 1},
                },
            },
        },
    },
}

MONODROMY = {
    '$schema': _DRAFT,
    'title': 'monodromy',
    'description': 'loops at the special points of every vertex, in product '
                   'order',
    'type': 'object',
    'additionalProperties': {
        'type': 'array',
        'items': {
            'type': 'object',
            'required': ['point', 'loop'],
            'properties': {
                'point': {'type': 'string',
                          'pattern': r'^(edge:.+:[0-9]+|cluster:[0-9]+)$'},
                'loop': ELEMENT,
                'image': {'type': 'array', 'items': ELEMENT},
            },
        },
    },
}

MONOID = {
    '$schema': _DRAFT,
    'title': 'monoid',
    'oneOf': [
        {'type': 'array', 'items': {'type': 'array', 'items': FRACTION}},
        {'type': 'object', 'required': ['n'],
         'properties': {
             'n': {'type': 'integer', 'minimum': 0},
             'generators': {'type': 'array',
                            'items': {'type': 'array', 'items': FRACTION}}}},
    ],
}

ERROR = {
    '$schema': _DRAFT,
    'title': 'error',
    'type': 'object',
    'required': ['code', 'message', 'location'],
    'properties': {
        'code': {'type': 'string'},
        'message': {'type': 'string'},
        'location': {'type': ['string', 'integer', 'null']},
        'violations': {
            'type': 'array',
            'items': {'type': 'object',
                      'properties': {'invariant': {'type': 'string'},
                                     'location': {},
                                     'message': {'type': 'string'}}}},
    },
}

RECORD = {
    '$schema': _DRAFT,
    'title': 'stable map',
    'type': 'object',
    'required': ['curve', 'weights', 'group', 'monodromy', 'trace'],
    'properties': {
        'curve': CURVE,
        'weights': {'type': 'array', 'items': FRACTION},
        'group': GROUP,
        'monodromy': MONODROMY,
        'trace': {
            'type': 'array',
            'items': {'type': 'object',
                      'properties': {
                          'kind': {'enum': ['tail', 'bridge']},
                          'vertex': {'type': 'string'},
                          'into': {'type': 'string'},
                          'markings': {'type': 'array',
                                       'items': {'type': 'integer'}}}}},
    },
}

SCHEMAS = {
    'curve': CURVE,
    'monodromy': MONODROMY,
    'group': dict(GROUP, **{'$schema': _DRAFT, 'title': 'group'}),
    'weights': dict(WEIGHTS, **{'$schema': _DRAFT, 'title': 'weights'}),
    'monoid': MONOID,
    'record': RECORD,
    'error': ERROR,
}
