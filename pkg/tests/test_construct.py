import pytest

from gel import graph as G
from gel.canon import are_isomorphic
from gel.chib import binary_chromatic_number, chromatic_number, exists_partition
from gel.construct import affine_construction, coverage_audit, is_prime, line_classes
from gel.partition import CLIQUE, Partition


def test_k2_is_p4():
    g, _ = affine_construction(2)
    assert are_isomorphic(g, G.path(4))


def test_k3_has_binary_chromatic_number_3():
    g, _ = affine_construction(3)
    assert binary_chromatic_number(g) == 3


@pytest.mark.parametrize("k", [2, 3, 5, 7])
def test_audit_passes(k):
    g, parts = affine_construction(k)
    assert coverage_audit(k, g, parts) == []
    assert len(parts) == k + 1
    assert len({p.set_partition() for p in parts}) == k + 1


@pytest.mark.parametrize("k", [2, 3, 5])
def test_partitions_realise_every_split(k):
    g, parts = affine_construction(k)
    assert sorted(p.cliques for p in parts) == list(range(k + 1))
    for p in parts:
        assert p.cliques + p.cocliques == k
        assert p.is_valid_for(g)


def test_k5_lower_bound():
    g, _ = affine_construction(5)
    assert max(chromatic_number(g), chromatic_number(g.complement())) == 5
    assert exists_partition(g, 2, 2) is None


def test_audit_catches_tampering():
    g, parts = affine_construction(3)
    bad = g.toggled([(0, 1)])
    assert coverage_audit(3, bad, parts)
    broken = parts[:-1] + [Partition.of([(range(9), CLIQUE)])]
    assert coverage_audit(3, g, broken)


def test_no_pair_gets_two_designations():
    for k in (3, 5):
        seen = {}
        for classes in line_classes(k):
            for pts, kind in classes:
                idx = sorted(p.index(k) for p in pts)
                for a in range(len(idx)):
                    for b in range(a):
                        key = (idx[b], idx[a])
                        assert key not in seen
                        seen[key] = kind
        assert len(seen) == k * k * (k * k - 1) // 2


def test_rejects_bad_k():
    assert not is_prime(4) and is_prime(7)
    with pytest.raises(ValueError):
        affine_construction(4)
    with pytest.raises(ValueError):
        affine_construction(11)


def test_k5_full_binary_chromatic_number():
    g, _ = affine_construction(5)
    assert binary_chromatic_number(g) == 5
