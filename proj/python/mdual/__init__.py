# Copyright 2026 The mdual Authors. All Rights Reserved.
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
"""Finite modal duality: frames, relational spaces and the functors between them.

Every function takes and returns plain Python data (dicts and lists in the
JSON layouts under ``schemas/``). Invalid input raises :class:`MdualError`.
"""

import json as _json

from . import _mdual

__all__ = [
    "MdualError",
    "validate",
    "omega",
    "points",
    "check",
    "modelcheck",
    "bisim",
    "idl",
    "sweep",
    "render_human",
]


class MdualError(ValueError):
    """An error document from the core library: ``kind``, ``message``, ``witnesses``."""

    def __init__(self, doc):
        super().__init__(doc.get("message", ""))
        self.kind = doc.get("kind")
        self.message = doc.get("message", "")
        self.witnesses = doc.get("witnesses", [])
        self.doc = doc


def _call(fn, *args, **kwargs):
    try:
        return _json.loads(fn(*args, **kwargs))
    except _mdual.Error as e:
        raise MdualError(_json.loads(str(e))) from None


def _text(doc):
    return _json.dumps(doc)


def validate(doc):
    return _call(_mdual.validate, _text(doc))


def omega(space):
    return _call(_mdual.omega, _text(space))


def points(frame, mode, trace=False):
    return _call(_mdual.points, _text(frame), mode, trace)


def check(kind, inputs, mode="all"):
    """``inputs`` maps a display name to a frame or space document."""
    return _call(_mdual.check, kind, mode, [(name, _text(d)) for name, d in inputs.items()])


def modelcheck(space, valuation, formula, point=None, allow_implication=True):
    return _call(_mdual.modelcheck, _text(space), _text(valuation), formula, point,
                 allow_implication)


def bisim(source, target, map, valuations, depth=4, allow_implication=True):
    return _call(_mdual.bisim, _text(source), _text(target), _text(map), _text(valuations),
                 depth, allow_implication)


def idl(frame):
    return _call(_mdual.idl, _text(frame))


def sweep(lattices=5, spaces=3, modes=()):
    return _call(_mdual.sweep, lattices, spaces, list(modes))


def render_human(doc):
    return _mdual.render_human(_text(doc))
