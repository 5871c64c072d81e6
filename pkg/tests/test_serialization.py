import json

from affine_weyl.group_element import from_letters, pi_power
from hecke_algebra.hecke_element import T
from hecke_algebra.kl_basis import kl_basis
from hecke_algebra.laurent import U
from hecke_algebra.serialization import (
    canonical_json,
    digest,
    hecke_from_dict,
    hecke_to_dict,
    kl_record_from_dict,
    kl_record_to_dict,
)


def test_hecke_dict_form(sl3):
    w = from_letters(sl3, [1, 0])
    h = T(w).scale(U * 2) + T(pi_power(sl3, 1))
    data = hecke_to_dict(h)
    assert data == {"terms": [{"elt": "pi", "coeff": {"0": 1}}, {"elt": "s1 s0", "coeff": {"1": 2}}]}
    assert hecke_from_dict(data, sl3) == h


def test_kl_record_through_json(sl3):
    record = kl_basis(pi_power(sl3, 2) * from_letters(sl3, [1, 2, 1]))
    text = json.dumps(kl_record_to_dict(record))
    assert kl_record_from_dict(json.loads(text)) == record
    assert json.loads(text)["datum"] == "SL:3"


def test_digest_depends_only_on_content(sl3):
    a = T(from_letters(sl3, [1])) + T(from_letters(sl3, [2]))
    b = T(from_letters(sl3, [2])) + T(from_letters(sl3, [1]))
    assert digest(a) == digest(b)
    assert digest(a) != digest(a.scale(U))
    assert len(digest(a)) == 64


def test_canonical_json_is_compact_and_sorted():
    assert canonical_json({"b": 1, "a": [1, 2]}) == '{"a":[1,2],"b":1}'
