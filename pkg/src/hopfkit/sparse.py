"""Sparse vectors and tensors as dicts from index (or index tuple) to FieldElement."""
from __future__ import annotations

from .scalar import ONE, ZERO, fe


def add_into(acc: dict, vec: dict, c=ONE):
    """acc += c * vec, dropping zeros."""
    if c == ONE:
        for k, v in vec.items():
            s = acc.get(k)
            if s is None:
                acc[k] = v
            else:
                s = s + v
                if s:
                    acc[k] = s
                else:
                    del acc[k]
    else:
        for k, v in vec.items():
            t = c * v
            s = acc.get(k)
            if s is None:
                if t:
                    acc[k] = t
            else:
                s = s + t
                if s:
                    acc[k] = s
                else:
                    del acc[k]
    return acc


def add_term(acc: dict, key, c):
    s = acc.get(key)
    if s is None:
        if c:
            acc[key] = c
    else:
        s = s + c
        if s:
            acc[key] = s
        else:
            del acc[key]


def scale(vec: dict, c) -> dict:
    c = fe(c)
    if not c:
        return {}
    return {k: c * v for k, v in vec.items()}


def sub(u: dict, v: dict) -> dict:
    out = dict(u)
    for k, x in v.items():
        add_term(out, k, -x)
    return out


def lin(*pairs) -> dict:
    """Linear combination lin((c1, v1), (c2, v2), ...)."""
    out = {}
    for c, v in pairs:
        add_into(out, v, fe(c))
    return out


def clean(vec: dict) -> dict:
    return {k: v for k, v in vec.items() if v}


def to_dense(vec: dict, n: int) -> list:
    out = [ZERO] * n
    for k, v in vec.items():
        out[k] = v
    return out


def from_dense(vals) -> dict:
    return {i: fe(v) for i, v in enumerate(vals) if v}


def unit_vec(i) -> dict:
    return {i: ONE}
