import json, os, sys
import numpy as np

sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", "src"))
from plie.scenarios import realify

DATA = os.path.join(os.path.dirname(__file__), "..", "src", "plie", "data")
os.makedirs(DATA, exist_ok=True)


def lists(a):
    return np.asarray(a, dtype=float).round(15).tolist()


# ---------------- su2-torus ----------------
s1 = np.array([[0, 1], [1, 0]], dtype=complex)
s2 = np.array([[0, -1j], [1j, 0]])
s3 = np.array([[1, 0], [0, -1]], dtype=complex)
X = [realify(-0.5j * s) for s in (s1, s2, s3)]
E12 = np.array([[0, 1], [0, 0]], dtype=complex)
Y = [realify(E12), realify(-1j * E12), realify(0.5 * s3)]

c = np.zeros((3, 3, 3))
for i in range(3):
    for j in range(3):
        for k in range(3):
            c[i, j, k] = float(np.sign((i - j) * (j - k) * (k - i)))  # eps_ijk
f = np.zeros((3, 3, 3))
f[2, 0, 0] = 1.0
f[0, 2, 0] = -1.0
f[2, 1, 1] = 1.0
f[1, 2, 1] = -1.0

# check tables against the matrix commutators
def check(bas_a, bas_b, table, mix=None):
    n = len(bas_a)
    for i in range(n):
        for j in range(n):
            comm = bas_a[i] @ bas_b[j] - bas_b[j] @ bas_a[i]
            want = sum(table[i, j, k] * (mix or bas_a)[k] for k in range(n))
            assert np.max(np.abs(comm - want)) < 1e-13, (i, j)

check(X, X, c)
check(Y, Y, f)

su2 = {
    "name": "su2-torus",
    "kind": "iwasawa-sl2",
    "factorization_mode": "closed_form",
    "bialgebra": {"dim": 3, "c": lists(c), "f": lists(f)},
    "embeddings": {"G": lists(X), "Gstar": lists(Y), "D": lists(X + Y)},
    "subgroup": {
        "i_mat": [[0.0], [0.0], [1.0]],
        "hstar_in_gstar": [[0.0, 0.0, 1.0]],
        "hcirc_basis": [[1.0, 0.0, 0.0], [0.0, 1.0, 0.0]],
    },
    "space_P": {"dim": 2, "pi": [[0.0, 1.0], [-1.0, 0.0]]},
    "base_points": {"w": [0.0, 0.0, 0.4], "v": [0.4], "u0": [0.3]},
    "sample_plan": {"seed": 0, "box": 0.35, "counts": {}},
    "hypotheses": {
        "h_structure_zero": True,
        "example2_condition_expected": False,
        "classical": False,
    },
}

# ---------------- semidirect-zero ----------------
Jm = np.zeros((3, 3)); Jm[0, 1] = -1.0; Jm[1, 0] = 1.0
P1 = np.zeros((3, 3)); P1[0, 2] = 1.0
P2 = np.zeros((3, 3)); P2[1, 2] = 1.0
Gb = [Jm, P1, P2]
c2 = np.zeros((3, 3, 3))
c2[0, 1, 2] = 1.0; c2[1, 0, 2] = -1.0
c2[0, 2, 1] = -1.0; c2[2, 0, 1] = 1.0
check(Gb, Gb, c2)

ad = [np.array([[c2[i, j, k] for j in range(3)] for k in range(3)]) for i in range(3)]
Db = []
for i in range(3):
    m = np.zeros((4, 4)); m[:3, :3] = ad[i]; Db.append(m)
Gsb = []
for i in range(3):
    m = np.zeros((4, 4)); m[3, i] = 1.0; Gsb.append(m)
f2 = np.zeros((3, 3, 3))
check(Db, Db, c2)
check(Gsb, Gsb, f2)
# mixed bracket check on the double table
for i in range(3):
    for j in range(3):
        comm = Db[i] @ Gsb[j] - Gsb[j] @ Db[i]
        want = sum(-c2[i, k, j] * Gsb[k] for k in range(3))
        assert np.max(np.abs(comm - want)) < 1e-13, (i, j)

semi = {
    "name": "semidirect-zero",
    "kind": "cotangent-semidirect",
    "factorization_mode": "closed_form",
    "bialgebra": {"dim": 3, "c": lists(c2), "f": lists(f2)},
    "embeddings": {"G": lists(Gb), "Gstar": lists(Gsb), "D": lists(Db + Gsb)},
    "subgroup": {
        "i_mat": [[0.0, 0.0], [1.0, 0.0], [0.0, 1.0]],
        "hcirc_basis": [[1.0, 0.0, 0.0]],
    },
    "space_P": {"dim": 4, "pi": [[0.0, 0.0, 1.0, 0.0], [0.0, 0.0, 0.0, 1.0],
                                 [-1.0, 0.0, 0.0, 0.0], [0.0, -1.0, 0.0, 0.0]]},
    "base_points": {"w": [0.0, 1.0, 0.0], "v": [1.0, 0.0], "u0": [0.2, -0.3]},
    "sample_plan": {"seed": 0, "box": 0.35, "counts": {}},
    "hypotheses": {
        "h_structure_zero": True,
        "example2_condition_expected": True,
        "classical": True,
    },
}

for payload, fname in ((su2, "su2_torus.json"), (semi, "semidirect_zero.json")):
    with open(os.path.join(DATA, fname), "w") as fh:
        json.dump(payload, fh, indent=2)
        fh.write("\n")
print("written")
