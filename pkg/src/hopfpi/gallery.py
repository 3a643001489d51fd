"""Bundled fixtures, regenerated deterministically by ``python3 -m hopfpi.gallery``.

Groups: Z2, Z4, V4, S3, D4, Q8 with their named gradings. For every
(group, grading) pair: the group algebra, its trivial and opposite
braces and the antipode Rota-Baxter operator. Plus a few derived
fixtures used by the acceptance suite.
"""
from __future__ import annotations

import sys
from importlib import resources
from pathlib import Path

from .brace import fiber_positions, group_action, opposite_brace, trivial_brace
from .groups import catalog_gradings, catalog_groups
from .hopf import group_algebra
from .io import dump, parse_document
from .linalg import QQ

GROUPS = ("Z2", "Z4", "V4", "S3", "D4", "Q8")
GALLERY_DIR = Path(__file__).with_name("gallery")


def gallery_pairs():
    """``(group name, grading name, Grading)`` in a fixed order."""
    for g in GROUPS:
        for name, gr in catalog_gradings(g).items():
            yield g, name, gr


def tag(group, grading):
    return f"{group.lower()}_{grading}"


def v4_swap_action(K_grading_name="trivial"):
    """``k[Z2]`` acting on ``k[V4]`` (graded by the 2nd projection) through ``(a, b) -> (a + b, b)``."""
    V = catalog_gradings("V4")["proj2"]
    Kg = catalog_gradings("Z2")[K_grading_name]
    G = V.source
    swap = [G.index(f"({(a + b) % 2},{b})") for a in range(2) for b in range(2)]
    perms = [list(range(4)), swap]
    K, H = group_algebra(Kg), group_algebra(V)
    return K, H, group_action(Kg, V, perms, QQ)


def v4_factorization():
    from .rota_baxter import Factorization, span_of
    H = group_algebra(catalog_gradings("V4")["proj2"])
    G = {a: span_of(H, 0, ["(0,0)", "(1,0)"]) for a in range(2)}
    K = {0: span_of(H, 0, ["(0,0)"]), 1: span_of(H, 1, ["(0,1)"])}
    return H, Factorization(G, K)


def build():
    """``{file name: canonical text}``."""
    from .matched_pair import brace_to_matched_pair
    from .post_hopf import conjugation_triangle, post_hopf
    from .rota_baxter import antipode_rb
    out = {}
    cat = catalog_groups()
    for g in GROUPS:
        out[f"group_{g.lower()}.json"] = dump("group", (cat[g], catalog_gradings(g)))
    for g, name, gr in gallery_pairs():
        H = group_algebra(gr)
        t = tag(g, name)
        out[f"hopf_{t}.json"] = dump("hopf_pi_algebra", H)
        out[f"brace_trivial_{t}.json"] = dump("brace", trivial_brace(H))
        out[f"brace_opposite_{t}.json"] = dump("brace", opposite_brace(H))
        out[f"rb_antipode_{t}.json"] = dump("rota_baxter", antipode_rb(H))
    S3 = catalog_gradings("S3")["sign"]
    H = group_algebra(S3)
    out["post_hopf_conjugation_s3_sign.json"] = dump("post_hopf", post_hopf(H, conjugation_triangle(S3, QQ)))
    out["mp_opposite_s3_sign.json"] = dump("matched_pair", brace_to_matched_pair(opposite_brace(H)))
    out["action_v4_swap_pimod.json"] = dump("action", v4_swap_action("trivial"))
    out["action_v4_swap_modlike.json"] = dump("action", v4_swap_action("id"))
    out["factorization_v4_proj2.json"] = dump("factorization", v4_factorization())
    return out


def names():
    return sorted(p.name for p in GALLERY_DIR.glob("*.json"))


def path(name) -> Path:
    return GALLERY_DIR / name


def text(name) -> str:
    return resources.files("hopfpi").joinpath("gallery", name).read_text()


def load(name):
    """Parsed payload of a bundled fixture."""
    return parse_document(text(name)).payload


def write(directory=GALLERY_DIR):
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    files = build()
    for name, body in files.items():
        (directory / name).write_text(body)
    return sorted(files)


__all__ = ["build", "write", "load", "text", "names", "path", "gallery_pairs", "fiber_positions"]

if __name__ == "__main__":
    written = write(sys.argv[1] if len(sys.argv) > 1 else GALLERY_DIR)
    print(f"wrote {len(written)} fixtures")
