from __future__ import annotations

from flask import Flask, jsonify, request

from graphinsight import *


app = Flask(__name__)


def _json_error(message: str, *, status: str = "error", code: int = 400):
    """Return a standardized JSON error response."""
    return jsonify({"ok": False, "status": status, "message": message}), code


api_errors = (
    GraphError, OracleError, DescriptionError, LayoutError, ParsingError,
    ScoringError, MethodError, KeyError, TypeError, ValueError,
)


def _payload():
    data = request.get_json(silent=True)
    if not isinstance(data, dict):
        raise ValueError("Request body must be a JSON object.")
    return data


def _graph(data):
    if "graph" not in data:
        raise ValueError('Missing "graph".')
    return Graph.from_json(data["graph"])


def _method(data):
    return get_method(data.get("method", "raw")).with_params(
        **{k: float(data[k]) for k in ("alpha", "beta", "gamma") if k in data}
    )


@app.post("/api/describe")
def describe():
    """Render a graph under one of the description methods."""
    try:
        data = _payload()
        ctx = prepare(_graph(data), _method(data))
    except api_errors as e:
        return _json_error(str(e))
    if ctx.error:
        return _json_error(ctx.error)
    return jsonify({"ok": True, "text": str(ctx.description)})


@app.post("/api/reorganize")
def reorganize_graph():
    """Importance-based reorganization with its layout and retrieval base."""
    try:
        data = _payload()
        g = _graph(data)
        spec = _method({**data, "method": "graphinsight"})
        ctx = prepare(g, spec)
    except api_errors as e:
        return _json_error(str(e))
    if ctx.error:
        return _json_error(ctx.error)
    return jsonify({
        "ok": True,
        "text": ctx.description.text,
        "layout": ctx.layout.to_json(),
        "rag_base": ctx.base.to_json(),
    })


@app.post("/api/oracle")
def oracle():
    """Ground truth and question text for one task kind on a graph."""
    try:
        data = _payload()
        g = _graph(data)
        kind = Tasks.get(data.get("kind", ""))
        params = data.get("params") or {}
        answer = kind(g, **params)
        question = kind.render(**params)
    except api_errors as e:
        return _json_error(str(e))
    return jsonify({
        "ok": True,
        "question": question,
        "answer_type": kind.answer_type,
        "answer": answer.to_json(),
        "text": str(answer),
    })


@app.post("/api/score")
def score_answer():
    """Parse a free-text answer and score it against a typed truth."""
    try:
        data = _payload()
        answer_type = data["answer_type"]
        truth = Answer.from_json(answer_type, data["truth"])
        parsed = parse_answer(data.get("text", ""), answer_type)
        value = score(parsed, truth)
    except api_errors as e:
        return _json_error(str(e))
    return jsonify({"ok": True, "parsed": parsed.to_json(), "score": value})


if __name__ == "__main__":
    app.run(host="0.0.0.0", port=5000, debug=True)
