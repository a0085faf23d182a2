"""Versioned, portable model files.

A model file is a single JSON document (sorted keys, 2-space indent, one
trailing newline) so that identical models serialize to identical bytes and
diffs stay readable. Trees are flattened to per-node rows
``[feature_index, threshold, left_index, right_index]`` with leaves encoded
as ``[-1, label, count0, count1]``; node 0 is the root and child indices
point into the same array (preorder layout).

The ``integrity_digest`` is the 64-bit digest (see digest.py) of the
canonical compact JSON of the payload, verified on every load. Field-level
documentation lives in docs/model_format.md.

Files are written atomically: temp file in the target directory, then
rename. Training timestamps deliberately never enter the file — identical
(corpus, seed, hyperparameters) must reproduce identical bytes.
"""

from __future__ import annotations

import json
import os
import tempfile

import numpy as np

from .digest import digest64
from .errors import IntegrityFailure, IoFailure, MissingFile, UnsupportedVersion
from .learners import (
    ForestModel,
    ForestParams,
    GaussianNBModel,
    KnnModel,
    LinearSvmModel,
    TreeModel,
    TreeParams,
)
from .learners.tree import TreeNode

FORMAT_NAME = "urlsentry-model"
FORMAT_VERSION = 1


def flatten_tree(root: TreeNode) -> list[list]:
    """Preorder array encoding of one tree."""
    nodes: list[list] = []

    def visit(node: TreeNode) -> int:
        index = len(nodes)
        if node.is_leaf:
            nodes.append([-1, node.label, node.count0, node.count1])
            return index
        nodes.append([node.feature_index, node.threshold, None, None])
        nodes[index][2] = visit(node.left)
        nodes[index][3] = visit(node.right)
        return index

    visit(root)
    return nodes


def unflatten_tree(rows: list[list]) -> TreeNode:
    def build(index: int) -> TreeNode:
        row = rows[index]
        if row[0] == -1:
            return TreeNode(label=int(row[1]), count0=int(row[2]), count1=int(row[3]))
        return TreeNode(
            feature_index=int(row[0]),
            threshold=float(row[1]),
            left=build(int(row[2])),
            right=build(int(row[3])),
        )

    return build(0)


def _payload_for(model) -> dict:
    if isinstance(model, ForestModel):
        return {
            "seed": model.seed,
            "mtry": model.mtry,
            "trees": [flatten_tree(t) for t in model.trees],
        }
    if isinstance(model, TreeModel):
        return {"seed": model.seed, "nodes": flatten_tree(model.root)}
    if isinstance(model, GaussianNBModel):
        return {
            "seed": model.seed,
            "log_prior": model.log_prior.tolist(),
            "means": model.means.tolist(),
            "variances": model.variances.tolist(),
        }
    if isinstance(model, KnnModel):
        return {
            "seed": model.seed,
            "points": model.points.tolist(),
            "labels": model.labels.tolist(),
            "means": model.means.tolist(),
            "scale": model.scale.tolist(),
        }
    if isinstance(model, LinearSvmModel):
        return {
            "seed": model.seed,
            "weights": model.weights.tolist(),
            "means": model.means.tolist(),
            "scale": model.scale.tolist(),
        }
    raise TypeError(f"cannot serialize model of type {type(model).__name__}")


def _canonical(payload: dict) -> str:
    return json.dumps(payload, sort_keys=True, separators=(",", ":"))


def save_model(model, path) -> None:
    """Write the model file atomically; byte-identical for identical models."""
    doc = {
        "format": FORMAT_NAME,
        "format_version": FORMAT_VERSION,
        "algorithm": model.algorithm,
        "schema_hash": model.schema_hash,
        "hyperparameters": model.hyperparameters(),
        "trained_on": model.trained_on,
        "payload": _payload_for(model),
    }
    doc["integrity_digest"] = digest64(_canonical(doc["payload"]))
    text = json.dumps(doc, sort_keys=True, indent=2) + "\n"
    directory = os.path.dirname(os.path.abspath(path))
    try:
        fd, tmp = tempfile.mkstemp(prefix=".model-", dir=directory)
        with os.fdopen(fd, "w", encoding="utf-8") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except OSError as exc:
        raise IoFailure(f"could not write model file {path}: {exc}") from None


def load_model(path):
    """Read, verify, and reconstruct a model saved by save_model."""
    if not os.path.exists(path):
        raise MissingFile(f"model file not found: {path}")
    with open(path, encoding="utf-8") as fh:
        raw = fh.read()
    try:
        doc = json.loads(raw)
    except json.JSONDecodeError as exc:
        raise IntegrityFailure(f"{path}: not a valid model file ({exc})") from None
    if not isinstance(doc, dict) or doc.get("format") != FORMAT_NAME:
        raise IntegrityFailure(f"{path}: not a {FORMAT_NAME} file")
    version = doc.get("format_version")
    if version != FORMAT_VERSION:
        raise UnsupportedVersion(f"{path}: format_version {version} not supported")
    payload = doc.get("payload")
    if digest64(_canonical(payload)) != doc.get("integrity_digest"):
        raise IntegrityFailure(f"{path}: integrity digest mismatch")

    algorithm = doc["algorithm"]
    schema_hash = doc["schema_hash"]
    hp = doc["hyperparameters"]
    trained_on = doc.get("trained_on", "")
    seed = int(payload.get("seed", 0))

    if algorithm == "forest":
        params = ForestParams(
            n_estimators=hp["n_estimators"],
            mtry=hp["mtry"],
            max_depth=hp["max_depth"],
            min_samples_split=hp["min_samples_split"],
            bootstrap=hp["bootstrap"],
        )
        return ForestModel(
            trees=[unflatten_tree(rows) for rows in payload["trees"]],
            n_estimators=params.n_estimators,
            mtry=int(payload["mtry"]),
            seed=seed,
            schema_hash=schema_hash,
            trained_on=trained_on,
            params=params,
        )
    if algorithm == "tree":
        params = TreeParams(
            max_depth=hp["max_depth"],
            min_samples_split=hp["min_samples_split"],
            mtry=hp["mtry"],
        )
        return TreeModel(
            root=unflatten_tree(payload["nodes"]),
            params=params,
            schema_hash=schema_hash,
            trained_on=trained_on,
            seed=seed,
        )
    if algorithm == "gaussian_nb":
        return GaussianNBModel(
            log_prior=np.array(payload["log_prior"]),
            means=np.array(payload["means"]),
            variances=np.array(payload["variances"]),
            var_smoothing=hp["var_smoothing"],
            schema_hash=schema_hash,
            trained_on=trained_on,
            seed=seed,
        )
    if algorithm == "knn":
        return KnnModel(
            k=hp["k"],
            points=np.array(payload["points"]),
            labels=np.array(payload["labels"], dtype=np.int64),
            means=np.array(payload["means"]),
            scale=np.array(payload["scale"]),
            standardize=hp["standardize"],
            schema_hash=schema_hash,
            trained_on=trained_on,
            seed=seed,
        )
    if algorithm == "linear_svm":
        return LinearSvmModel(
            weights=np.array(payload["weights"]),
            means=np.array(payload["means"]),
            scale=np.array(payload["scale"]),
            lam=hp["lambda"],
            epochs=hp["epochs"],
            seed=seed,
            schema_hash=schema_hash,
            trained_on=trained_on,
        )
    raise IntegrityFailure(f"{path}: unknown algorithm {algorithm!r}")
