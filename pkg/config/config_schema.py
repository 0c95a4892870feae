"""JSON Schemas for run configuration files and presentation output."""

RUN_CONFIG_SCHEMA = {
    "$schema": "http://json-schema.org/draft-07/schema#",
    "type": "object",
    "properties": {
        "type": {
            "type": "string",
            "pattern": "^(A[1-9][0-9]*|D([4-9]|[1-9][0-9]+)|E[678])$",
            "description": "Simply-laced Dynkin type, e.g. A3"
        },
        "field": {
            "type": "string",
            "pattern": "^(q|p:[0-9]+)$",
            "description": "Base field: 'q' for the rationals or 'p:<prime>'"
        },
        "seed": {"type": "integer", "minimum": 0},
        "workers": {"type": "integer", "minimum": 1},
        "cutoff": {
            "type": "integer",
            "minimum": 1,
            "description": "Bound for resolutions and homological dimensions"
        },
        "degree_cap": {
            "type": "integer",
            "minimum": 1,
            "description": "Longest path length explored when building path quotients"
        },
        "presentation_cap": {"type": "integer", "minimum": 1},
        "enumeration_bound": {"type": "integer", "minimum": 1},
        "iso_attempts": {"type": "integer", "minimum": 1},
        "samples": {"type": "integer", "minimum": 0},
        "convention": {
            "type": "string",
            "enum": ["w0-inverse", "w0-left", "inverse", "identity"],
            "description": "Index map from Weyl elements to torsion ideals"
        },
        "exhaustive": {
            "type": ["boolean", "null"],
            "description": "Run the commutativity and virdim-bounds suites over every pair; defaults to on up to A3"
        }
    },
    "additionalProperties": False
}

PRESENTATION_SCHEMA = {
    "$schema": "http://json-schema.org/draft-07/schema#",
    "type": "object",
    "required": ["type", "v", "w", "field", "presentation", "fingerprint"],
    "properties": {
        "type": {"type": "string"},
        "v": {"type": "string"},
        "w": {"type": "string"},
        "field": {"type": "string"},
        "convention": {"type": "string"},
        "presentation": {
            "type": "object",
            "required": ["field", "vertices", "arrows", "relations", "degree_cap"],
            "properties": {
                "field": {"type": "string"},
                "vertices": {"type": "array", "items": {"type": "string"}},
                "arrows": {
                    "type": "array",
                    "items": {
                        "type": "array",
                        "minItems": 3,
                        "maxItems": 3,
                        "items": [
                            {"type": "integer", "minimum": 1},
                            {"type": "integer", "minimum": 1},
                            {"type": "string"}
                        ]
                    }
                },
                "relations": {
                    "type": "array",
                    "items": {
                        "type": "array",
                        "items": {
                            "type": "array",
                            "minItems": 2,
                            "maxItems": 2,
                            "items": [
                                {"type": ["integer", "string"]},
                                {"type": "array", "items": {"type": "string"}}
                            ]
                        }
                    }
                },
                "degree_cap": {"type": "integer", "minimum": 1}
            }
        },
        "fingerprint": {
            "type": "object",
            "required": ["simples", "dim", "cartan", "radical_dims"],
            "properties": {
                "simples": {"type": "integer", "minimum": 0},
                "dim": {"type": "integer", "minimum": 0},
                "cartan": {
                    "type": "array",
                    "items": {"type": "array", "items": {"type": "integer"}}
                },
                "radical_dims": {"type": "array", "items": {"type": "integer"}}
            }
        }
    }
}

VERIFY_REPORT_SCHEMA = {
    "$schema": "http://json-schema.org/draft-07/schema#",
    "type": "object",
    "required": ["suite", "type", "seed", "passed", "assertions"],
    "properties": {
        "suite": {"type": "string"},
        "type": {"type": "string"},
        "seed": {"type": "integer"},
        "passed": {"type": "boolean"},
        "assertions": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["name", "passed"],
                "properties": {
                    "name": {"type": "string"},
                    "passed": {"type": "boolean"},
                    "detail": {"type": "string"},
                    "seed": {"type": "integer"}
                }
            }
        }
    }
}
