"""
Serialization
JSON forms of Hecke algebra elements and KL records, and content digests for reports
"""

import hashlib
import json
from typing import Any, Dict

from affine_weyl.element_grammar import format_element, parse_element
from affine_weyl.root_datum import RootDatum, parse_datum

from .hecke_element import HeckeElt
from .kl_basis import KLRecord
from .laurent import LaurentInt


def hecke_to_dict(h: HeckeElt) -> Dict[str, Any]:
    return {
        "terms": [
            {"elt": format_element(x), "coeff": c.to_dict()}
            for x, c in h.sorted_terms()
        ]
    }


def hecke_from_dict(data: Dict[str, Any], datum: RootDatum) -> HeckeElt:
    return HeckeElt(
        datum,
        ((parse_element(term["elt"], datum), LaurentInt.from_dict(term["coeff"])) for term in data["terms"]),
    )


def kl_record_to_dict(record: KLRecord) -> Dict[str, Any]:
    data = {"datum": record.w.datum.selector, "w": format_element(record.w)}
    data.update(hecke_to_dict(record.element()))
    return data


def kl_record_from_dict(data: Dict[str, Any]) -> KLRecord:
    datum = parse_datum(data["datum"])
    w = parse_element(data["w"], datum)
    h = hecke_from_dict(data, datum)
    return KLRecord(w, dict(h.items()))


def canonical_json(data: Any) -> str:
    return json.dumps(data, sort_keys=True, separators=(",", ":"))


def digest(h: HeckeElt) -> str:
    """SHA-256 of the sorted T-basis serialization"""
    return hashlib.sha256(canonical_json(hecke_to_dict(h)).encode("utf-8")).hexdigest()
