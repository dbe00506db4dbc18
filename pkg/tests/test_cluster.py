import numpy as np
import pytest

from quasipack.cluster import (
    TAU,
    ClusterSpec,
    build_embedding,
    build_rotation_c5,
    build_shell,
    cluster_points,
    preset,
)


def test_c5_entries():
    c5 = build_rotation_c5()
    assert c5[0, 0] == pytest.approx(0.3090169944, abs=1e-10)
    assert np.trace(c5) == pytest.approx(1.6180339887, abs=1e-10)
    assert np.trace(c5) == pytest.approx(TAU, abs=1e-12)


def test_c5_is_rotation_of_order_five():
    c5 = build_rotation_c5()
    np.testing.assert_allclose(c5.T @ c5, np.eye(3), atol=1e-12)
    assert np.linalg.det(c5) == pytest.approx(1.0, abs=1e-12)
    np.testing.assert_allclose(np.linalg.matrix_power(c5, 5), np.eye(3), atol=1e-12)


def test_icosahedron_columns():
    cols = build_shell("icosahedron", 1.0)
    assert len(cols) == 6
    np.testing.assert_allclose(cols[0], [0.5257311121, 0.8506508084, 0.0], atol=1e-10)
    np.testing.assert_allclose(cols[1], [-0.5257311121, 0.8506508084, 0.0], atol=1e-10)
    np.testing.assert_allclose(cols[5], [0.0, 0.5257311121, 0.8506508084], atol=1e-10)


def test_dodecahedron_and_icosidodecahedron_seeds():
    dod = build_shell("dodecahedron", 1.2)
    assert len(dod) == 10
    np.testing.assert_allclose(dod[0], [0.6928203230] * 3, atol=1e-10)
    ico = build_shell("icosidodecahedron", 1.5)
    assert len(ico) == 15
    np.testing.assert_allclose(ico[0], [1.5, 0, 0], atol=0)
    np.testing.assert_allclose(ico[5], [0, 1.5, 0], atol=0)
    np.testing.assert_allclose(ico[10], [0, 0, 1.5], atol=0)


@pytest.mark.parametrize("kind", ["icosahedron", "dodecahedron", "icosidodecahedron"])
@pytest.mark.parametrize("radius", [0.5, 1.0, 1.2, 1.5, 2.7])
def test_norm_preservation(kind, radius):
    for col in build_shell(kind, radius):
        assert np.linalg.norm(col) == pytest.approx(radius, abs=1e-12)


@pytest.mark.parametrize("kind", ["icosahedron", "dodecahedron", "icosidodecahedron"])
def test_orbit_closure(kind):
    c5 = build_rotation_c5()
    for col in build_shell(kind, 1.0):
        np.testing.assert_allclose(np.linalg.matrix_power(c5, 5) @ col, col, atol=1e-12)


@pytest.mark.parametrize("radius", [0.0, -1.0])
def test_shell_rejects_nonpositive_radius(radius):
    with pytest.raises(ValueError):
        build_shell("icosahedron", radius)
    with pytest.raises(ValueError):
        ClusterSpec((("icosahedron", radius),))


def test_canonical_embedding():
    B = build_embedding(ClusterSpec.icosa3())
    assert (B.phys_dim, B.super_dim) == (3, 31)
    norms = np.linalg.norm(B.columns, axis=1)
    np.testing.assert_allclose(norms[:6], 1.0, atol=1e-12)
    np.testing.assert_allclose(norms[6:16], 1.2, atol=1e-12)
    np.testing.assert_allclose(norms[16:], 1.5, atol=1e-12)
    np.testing.assert_allclose(B.columns[16], [1.5, 0, 0], atol=0)
    assert B.gram_det() > 1e-10


def test_single_shell_and_empty_spec():
    assert build_embedding(ClusterSpec((("icosahedron", 1.0),))).super_dim == 6
    with pytest.raises(ValueError):
        build_embedding(ClusterSpec(()))


def test_cluster_points():
    B = build_embedding(ClusterSpec.icosa3())
    pts = cluster_points(B)
    assert pts.shape == (62, 3)
    radii = np.linalg.norm(pts, axis=1)
    assert np.sum(np.isclose(radii, 1.0, atol=1e-12)) == 12
    assert np.sum(np.isclose(radii, 1.2, atol=1e-12)) == 20
    assert np.sum(np.isclose(radii, 1.5, atol=1e-12)) == 30
    # symmetric under negation
    neg = {tuple(np.round(-p, 9)) for p in pts}
    assert neg == {tuple(np.round(p, 9)) for p in pts}
    dist = np.linalg.norm(pts[:, None, :] - pts[None, :, :], axis=2)
    assert dist[~np.eye(62, dtype=bool)].min() > 1e-6


def test_presets():
    B, config = preset("icosa3")
    assert B.super_dim == 31
    np.testing.assert_array_equal(config.tr, np.full(31, 0.1))
    assert config.max_enqueued == 10000
    B, config = preset("fibonacci")
    np.testing.assert_allclose(B.matrix, [[1.0, 1.6180339887]], atol=1e-10)
    np.testing.assert_array_equal(config.tr, [0.1, 0.1])
    assert config.max_enqueued == 200
    with pytest.raises(ValueError, match="unknown preset"):
        preset("penrose")
