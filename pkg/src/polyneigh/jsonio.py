"""Deterministic JSON layout: objects and nested lists are indented, lists of
scalars stay on one line."""

import json


def dumps(obj, indent: int = 2) -> str:
    return _render(obj, 0, indent) + "\n"


def _scalar(x) -> bool:
    return not isinstance(x, (dict, list, tuple))


def _render(obj, level, indent):
    pad = " " * (indent * (level + 1))
    end = " " * (indent * level)
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        items = [f"{pad}{json.dumps(str(k))}: {_render(v, level + 1, indent)}" for k, v in obj.items()]
        return "{\n" + ",\n".join(items) + "\n" + end + "}"
    if isinstance(obj, (list, tuple)):
        if all(_scalar(x) for x in obj):
            return "[" + ", ".join(json.dumps(x) for x in obj) + "]"
        items = [pad + _render(x, level + 1, indent) for x in obj]
        return "[\n" + ",\n".join(items) + "\n" + end + "]"
    return json.dumps(obj)
