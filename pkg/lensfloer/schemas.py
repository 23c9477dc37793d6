# -*- coding: utf-8 -*-

# Copyright © 2021 The lens-floer developers
#
# Permission to use, copy, modify, and/or distribute this software for
# any purpose with or without fee is hereby granted, provided that the
# above copyright notice and this permission notice appear in all copies.
#
# THE SOFTWARE IS PROVIDED "AS IS" AND THE AUTHOR DISCLAIMS ALL WARRANTIES
# WITH REGARD TO THIS SOFTWARE INCLUDING ALL IMPLIED WARRANTIES OF
# MERCHANTABILITY AND FITNESS. IN NO EVENT SHALL THE AUTHOR BE LIABLE FOR ANY
# SPECIAL, DIRECT, INDIRECT, OR CONSEQUENTIAL DAMAGES OR ANY DAMAGES WHATSOEVER
# RESULTING FROM LOSS OF USE, DATA OR PROFITS, WHETHER IN AN ACTION OF
# CONTRACT, NEGLIGENCE OR OTHER TORTIOUS ACTION, ARISING OUT OF OR IN
# CONNECTION WITH THE USE OR PERFORMANCE OF THIS SOFTWARE.

from jsonschema import Draft4Validator, FormatChecker, validators


def extend_with_default(validator_class):
    validate_properties = validator_class.VALIDATORS["properties"]

    def set_defaults(validator, properties, instance, schema):
        for property, subschema in properties.items():
            if "default" in subschema:
                instance.setdefault(property, subschema["default"])

        for error in validate_properties(
            validator, properties, instance, schema
        ):
            yield error

    return validators.extend(validator_class, {"properties": set_defaults})


Validator = extend_with_default(Draft4Validator)


def validate_json(instance, schema):
    Validator(schema, format_checker=FormatChecker()).validate(instance)


_rank_row = {
    "type": "object",
    "properties": {
        "spinc": {"type": "integer", "minimum": 0},
        "alex": {"type": "integer"},
        "maslov": {"type": "integer"},
        "rank": {"type": "integer", "minimum": 1},
    },
    "required": ["spinc", "alex", "maslov", "rank"],
    "additionalProperties": False,
}

_spinc_rank = {
    "type": "object",
    "properties": {
        "spinc": {"type": "integer", "minimum": 0},
        "rank": {"type": "integer", "minimum": 0},
    },
    "required": ["spinc", "rank"],
}


class Schemas:
    rank_table = {
        "type": "object",
        "properties": {
            "label": {"type": "string", "default": ""},
            "p": {"type": "integer", "minimum": 1},
            "total": {"type": "integer", "minimum": 0},
            "ranks": {"type": "array", "items": _rank_row},
            "d_z": {"type": "array", "items": _spinc_rank},
            "d_w": {"type": "array", "items": _spinc_rank},
            "euler": {
                "type": "array",
                "items": {
                    "type": "object",
                    "properties": {
                        "spinc": {"type": "integer", "minimum": 0},
                        "alex": {"type": "integer"},
                        "chi": {"type": "integer"},
                    },
                    "required": ["spinc", "alex", "chi"],
                },
            },
        },
        "required": ["p", "total", "ranks", "d_z", "d_w"],
    }

    berge_report = {
        "type": "object",
        "properties": {
            "p": {"type": "integer", "minimum": 1},
            "q": {"type": "integer", "minimum": 0},
            "rows": {
                "type": "array",
                "items": {
                    "type": "object",
                    "properties": {
                        "k": {"type": "integer", "minimum": 0},
                        "candidate": {"type": "boolean"},
                        "hfk_total": {"type": "integer", "minimum": 1},
                        "simple_fh": {"type": "boolean"},
                        "detect_simple": {"type": "boolean"},
                    },
                    "required": ["k", "candidate", "hfk_total", "simple_fh",
                                 "detect_simple"],
                },
            },
        },
        "required": ["p", "q", "rows"],
    }

    scan_report = {
        "type": "object",
        "properties": {
            "p": {"type": "integer", "minimum": 1},
            "q": {"type": "integer", "minimum": 0},
            "n_max": {"type": "integer", "minimum": 1},
            "seed": {"type": "integer", "minimum": 0},
            "trials": {"type": "integer", "minimum": 1},
            "rows": {
                "type": "array",
                "items": {
                    "type": "object",
                    "properties": {
                        "k": {"type": "integer", "minimum": 0},
                        "candidate": {"type": "boolean"},
                        "hfk_total": {"type": "integer", "minimum": 1},
                        "simple_fh": {"type": "boolean"},
                        "detect_simple": {"type": "boolean"},
                        "seed": {"type": "integer", "minimum": 0},
                        "n": {"type": "integer", "minimum": 1},
                    },
                    "required": ["k", "hfk_total", "seed", "n"],
                },
            },
            "findings": {
                "type": "array",
                "items": {
                    "type": "object",
                    "properties": {
                        "seed": {"type": "integer", "minimum": 0},
                        "n": {"type": "integer", "minimum": 1},
                        "hfk_total": {"type": "integer", "minimum": 1},
                        "reduced_n": {"type": "integer", "minimum": 1},
                        "reason": {"type": "string"},
                    },
                    "required": ["seed", "n", "hfk_total", "reduced_n",
                                 "reason"],
                },
            },
            "rank_counts": {
                "type": "object",
                "additionalProperties": {"type": "integer", "minimum": 0},
            },
        },
        "required": ["p", "q", "seed", "trials", "rows", "findings"],
    }
