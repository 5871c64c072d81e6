from affine_weyl.finite_weyl import longest_element
from affine_weyl.group_element import from_letters, pi_power
from hecke_algebra.kl_basis import KLCache, KLRecord, kl_basis
from hecke_algebra.laurent import LaurentInt
from verifier.kl_store import KLStore


def test_save_and_load(sl3, tmp_path):
    store = KLStore(str(tmp_path / "kl"))
    w = pi_power(sl3, 1) * from_letters(sl3, [0, 1, 2])
    assert store.load(w) is None
    record = kl_basis(w)
    store.save(record)
    assert store.load(w) == record
    assert store.path(w).endswith(".json")


def test_keys_are_stable(sl3, tmp_path):
    store = KLStore(str(tmp_path))
    w = longest_element(sl3)
    assert store.key(w) == KLStore(str(tmp_path)).key(from_letters(sl3, [2, 1, 2]))
    assert store.key(w) != store.key(from_letters(sl3, [1, 2]))


def test_corrupt_entries_are_ignored(sl3, tmp_path):
    store = KLStore(str(tmp_path))
    w = from_letters(sl3, [1, 0])
    with open(store.path(w), "w", encoding="utf-8") as f:
        f.write("not json")
    assert store.load(w) is None


def test_entry_for_another_element_is_ignored(sl3, tmp_path):
    store = KLStore(str(tmp_path))
    w = from_letters(sl3, [1, 0])
    other = from_letters(sl3, [0, 1])
    store.save(kl_basis(other))
    with open(store.path(other), encoding="utf-8") as source, open(store.path(w), "w", encoding="utf-8") as target:
        target.write(source.read())
    assert store.load(w) is None


def test_cache_reads_through_store(sl3, tmp_path):
    store = KLStore(str(tmp_path))
    w = from_letters(sl3, [1, 2, 0, 1])
    first = kl_basis(w, KLCache(store=store))
    fresh = KLCache(store=store)
    assert fresh.lookup(w) == first
    assert len(fresh) == 1


def test_entry_failing_validation_is_ignored(sl3, tmp_path, caplog):
    store = KLStore(str(tmp_path))
    w = from_letters(sl3, [1, 0])
    record = kl_basis(w)
    store.save(KLRecord(w, {**record.coeffs, w: LaurentInt.constant(2)}))
    assert store.load(w) is None
    assert "invalid KL store entry" in caplog.text
