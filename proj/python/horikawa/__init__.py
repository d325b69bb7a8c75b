"""Stable replacement data for Horikawa surfaces with exceptional unimodal singularities."""

import json

from . import _core
from ._core import HorikawaError, classify_local_json, k_squared, milnor_number, sigma_names, table_ids, weight

__all__ = [
    "HorikawaError",
    "classify_local",
    "git",
    "git_forms",
    "k_squared",
    "milnor_number",
    "replace",
    "sextic",
    "sigma_info",
    "sigma_names",
    "table",
    "table_ids",
    "verify",
    "weight",
]


def sigma_info(sigma):
    return json.loads(_core.sigma_info_json(sigma))


def classify_local(f):
    return json.loads(classify_local_json(f))


def replace(sigma, u):
    return json.loads(_core.replace_json(sigma, u))


def git(f10):
    return json.loads(_core.git_json(f10))


def git_forms(q4, q6, q8, q10):
    return json.loads(_core.git_forms_json(q4, q6, q8, q10))


def sextic(sigma, u=""):
    return json.loads(_core.sextic_json(sigma, u))


def table(table_id):
    return json.loads(_core.table_json(table_id))


def verify(seed=20240611):
    return json.loads(_core.verify_json(seed))
