# Copyright 2026 The schelling-jump Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Python front end for the schelling-jump engine.

Profiles are strings over "R", "B" and "." indexed by node. Reports come
back as dicts; exact rationals are {"num", "den"} dicts, see `fraction`.
"""

import fractions
import json

from schelling_jump import _core
from schelling_jump._core import BudgetExceeded, ContractViolation, Game, factory_names, ring

__all__ = [
    "BudgetExceeded",
    "ContractViolation",
    "Game",
    "analyze",
    "check_ne",
    "construct",
    "doi",
    "double4sat_oracle",
    "factory_names",
    "find_all_ne",
    "fraction",
    "improving_jumps",
    "instance_json",
    "load_instance",
    "maxsat_oracle",
    "reduce",
    "ring",
    "run",
]


def fraction(value):
  """{"num", "den"} -> Fraction; "unbounded" and None pass through."""
  if isinstance(value, dict):
    return fractions.Fraction(value["num"], value["den"])
  return value


def check_ne(game, profile):
  return json.loads(_core.check_ne(game, profile))


def improving_jumps(game, profile):
  return json.loads(_core.improving_jumps(game, profile))


def run(game, profile, policy="first", seed=0, max_steps=0, moves=()):
  return json.loads(_core.run(game, profile, policy, seed, max_steps, list(moves)))


def doi(game, profile):
  return _core.doi(game, profile)


def find_all_ne(game, budget=0, jobs=1):
  return _core.find_all_ne(game, budget, jobs)


def analyze(game, budget=0, jobs=1, utilitarian=False):
  return json.loads(_core.analyze(game, budget, jobs, utilitarian))


def construct(name, verify=False, peak=None):
  return json.loads(_core.construct(name, verify, peak))


def instance_json(game, profile=None):
  return json.loads(_core.instance_json(game, profile))


def load_instance(data):
  """Accepts a dict or JSON text; returns (game, profile or None)."""
  if not isinstance(data, str):
    data = json.dumps(data)
  return _core.load_instance(data)


def double4sat_oracle(dimacs):
  return _core.double4sat_oracle(dimacs)


def maxsat_oracle(dimacs):
  return _core.maxsat_oracle(dimacs)


def reduce(flavor, dimacs, peak=None, q=None, assignment=None):
  """Returns (game, report dict)."""
  game, report = _core.reduce(flavor, dimacs, peak, q, assignment)
  return game, json.loads(report)
