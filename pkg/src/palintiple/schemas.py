"""JSON Schemas for ``--json`` output, keyed by subcommand."""

_digits = {"type": "string", "pattern": r"^\d+(\.\d+)*$"}
_ints = {"type": "array", "items": {"type": "integer", "minimum": 0}}
_opt_int = {"type": ["integer", "null"]}

RECORD = {
    "type": "object",
    "required": ["n", "base", "digits", "carries", "class"],
    "properties": {
        "n": {"type": "integer"},
        "base": {"type": "integer"},
        "digits": _digits,
        "carries": _ints,
        "class": {"enum": ["symmetric", "shifted-symmetric", "asymmetric"]},
    },
    "additionalProperties": False,
}

VERIFY = {
    "oneOf": [
        {
            "type": "object",
            "required": ["valid", "record"],
            "properties": {"valid": {"const": True}, "record": RECORD},
            "additionalProperties": False,
        },
        {
            "type": "object",
            "required": ["valid", "error", "message"],
            "properties": {
                "valid": {"const": False},
                "error": {"type": "string"},
                "message": {"type": "string"},
            },
            "additionalProperties": False,
        },
    ]
}

PAIR_CLASS = {
    "type": "object",
    "required": ["n", "b", "pair_class", "gcd", "congruence_solutions"],
    "properties": {
        "n": {"type": "integer"},
        "b": {"type": "integer"},
        "pair_class": {"enum": ["symmetric", "shifted-symmetric", "asymmetric-candidate"]},
        "gcd": {"type": "integer"},
        "congruence_solutions": _ints,
    },
    "additionalProperties": False,
}

CONSTRUCT = {
    "type": "object",
    "required": ["n", "b", "family", "palintiples"],
    "properties": {
        "n": {"type": "integer"},
        "b": {"type": "integer"},
        "family": {"enum": ["shifted", "symmetric"]},
        "palintiples": {"type": "array", "items": RECORD},
    },
    "additionalProperties": False,
}

MIN_DIGITS = {
    "type": "object",
    "required": ["n", "b", "min_digits"],
    "properties": {"n": {"type": "integer"}, "b": {"type": "integer"}, "min_digits": _opt_int},
    "additionalProperties": False,
}

EXISTS = {
    "type": "object",
    "required": ["n", "b", "exists"],
    "properties": {"n": {"type": "integer"}, "b": {"type": "integer"}, "exists": {"type": "boolean"}},
    "additionalProperties": False,
}

ENUMERATE = {
    "type": "object",
    "required": ["n", "b", "digit_count", "palintiples"],
    "properties": {
        "n": {"type": "integer"},
        "b": {"type": "integer"},
        "digit_count": {"type": "integer"},
        "palintiples": {"type": "array", "items": RECORD},
    },
    "additionalProperties": False,
}

_pair2 = {"type": "array", "items": {"type": "integer"}, "minItems": 2, "maxItems": 2}

GRAPH = {
    "type": "object",
    "required": ["n", "b", "nodes", "edges"],
    "properties": {
        "n": {"type": "integer"},
        "b": {"type": "integer"},
        "nodes": {"type": "array", "items": _pair2},
        "edges": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["from", "to", "d", "e"],
                "properties": {
                    "from": _pair2,
                    "to": _pair2,
                    "d": {"type": "integer"},
                    "e": {"type": "integer"},
                },
                "additionalProperties": False,
            },
        },
    },
    "additionalProperties": False,
}

ISO = {
    "type": "object",
    "required": ["first", "second", "isomorphic"],
    "properties": {"first": _pair2, "second": _pair2, "isomorphic": {"type": "boolean"}},
    "additionalProperties": False,
}

IS_1089 = {
    "type": "object",
    "required": ["n", "b", "is_1089_type"],
    "properties": {"n": {"type": "integer"}, "b": {"type": "integer"}, "is_1089_type": {"type": "boolean"}},
    "additionalProperties": False,
}

FIGURE1 = {
    "type": "object",
    "required": ["from", "to", "rows"],
    "properties": {
        "from": {"type": "integer"},
        "to": {"type": "integer"},
        "rows": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["base", "n", "digit_count", "d0", "dk", "digits"],
                "properties": {
                    "base": {"type": "integer"},
                    "n": {"type": "integer"},
                    "digit_count": {"type": "integer"},
                    "d0": {"type": "integer"},
                    "dk": {"type": "integer"},
                    "digits": _digits,
                },
                "additionalProperties": False,
            },
        },
    },
    "additionalProperties": False,
}

_row = {
    "type": "object",
    "required": ["n", "pair_class", "exists", "min_digits"],
    "properties": {
        "n": {"type": "integer"},
        "pair_class": {"enum": ["symmetric", "shifted-symmetric", "asymmetric-candidate"]},
        "exists": {"type": "boolean"},
        "min_digits": _opt_int,
        "observed": {"type": "array", "items": {"enum": ["symmetric", "shifted-symmetric", "asymmetric"]}},
        "observed_count": {"type": "integer"},
    },
    "additionalProperties": False,
}

BASE_REPORT = {
    "type": "object",
    "required": [
        "base", "mode", "complete", "is_symmetric_base", "is_strongly_symmetric",
        "witness_n", "witness_min_digits", "literature_status", "rows", "disagreements",
    ],
    "properties": {
        "base": {"type": "integer"},
        "mode": {"type": "string", "pattern": r"^(congruence|enumerate-to-depth:\d+)$"},
        "complete": {"type": "boolean"},
        "is_symmetric_base": {"type": "boolean"},
        "is_strongly_symmetric": {"type": "boolean"},
        "witness_n": _opt_int,
        "witness_min_digits": _opt_int,
        "literature_status": {"type": ["string", "null"]},
        "rows": {"type": "array", "items": _row},
        "disagreements": {"type": "array"},
    },
    "additionalProperties": False,
}

SCAN = {
    "type": "object",
    "required": [
        "from", "to", "mode", "symmetric_bases", "strongly_symmetric_bases",
        "theorem6_violations", "notes", "reports",
    ],
    "properties": {
        "from": {"type": "integer"},
        "to": {"type": "integer"},
        "mode": {"type": "string"},
        "symmetric_bases": _ints,
        "strongly_symmetric_bases": _ints,
        "theorem6_violations": _ints,
        "notes": {"type": "array", "items": {"type": "string"}},
        "reports": {"type": "array", "items": BASE_REPORT},
    },
    "additionalProperties": False,
}

COUNTEREXAMPLE = {
    "type": "object",
    "required": ["n", "b", "digits", "carries", "failing_index"],
    "properties": {
        "n": {"type": "integer"},
        "b": {"type": "integer"},
        "digits": _digits,
        "carries": _ints,
        "failing_index": _opt_int,
        "detail": {"type": "string"},
    },
    "additionalProperties": False,
}

CONJECTURE = {
    "type": "object",
    "required": ["conjecture", "bounds", "checked", "verdict"],
    "properties": {
        "conjecture": {"type": "string"},
        "bounds": {"type": "object", "additionalProperties": {"type": "integer"}},
        "checked": {"type": "integer"},
        "counterexamples": {"type": "array", "items": COUNTEREXAMPLE},
        "pairs": {"type": "array", "items": {"type": "object"}},
        "verdict": {"enum": ["no-counterexample", "counterexample-found"]},
    },
    "additionalProperties": False,
}

SCHEMAS = {
    "verify": VERIFY,
    "classify": VERIFY,
    "pair-class": PAIR_CLASS,
    "construct": CONSTRUCT,
    "min-digits": MIN_DIGITS,
    "exists": EXISTS,
    "enumerate": ENUMERATE,
    "graph": GRAPH,
    "iso": ISO,
    "is-1089": IS_1089,
    "figure1": FIGURE1,
    "scan": SCAN,
    "conjecture": CONJECTURE,
}
