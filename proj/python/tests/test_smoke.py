# Copyright 2026 The Clarith Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

import os
import pathlib

import pytest

import clarith

CORPUS = pathlib.Path(
    os.environ.get("CLARITH_CORPUS_DIR",
                   pathlib.Path(__file__).resolve().parents[2] / "tests" / "data" / "corpus"))


def test_parse_and_print():
    f = clarith.parse("AAx. EEy. y = x'")
    assert str(f) == "AAx. EEy. y = x'"
    assert f.is_sentence
    assert not f.is_elementary
    assert f == clarith.Formula("AAx.EEy.y=x'")
    assert clarith.parse("x = u + u").closure() == clarith.parse("AAx. AAu. x = u + u")


def test_parse_error():
    with pytest.raises(clarith.ParseError):
        clarith.parse("0 = ")
    with pytest.raises(clarith.Error):
        clarith.parse("0 = ")


def test_legal_moves():
    moves = clarith.parse("AAx. EEy. y = x'").legal_moves("environment")
    assert moves == [{"player": "environment", "path": [], "payload": "const"}]
    assert clarith.parse("AAx. EEy. y = x'").legal_moves("machine") == []


def test_eval_and_machines():
    assert clarith.eval_elementary("0'' + 0'' = 0''''") == "true"
    assert clarith.eval_elementary("Ex. x = 0'''''", 3, False) == "unknown"
    step, output = clarith.rm_run(1, 7, 1000)
    assert output == 7
    assert clarith.rm_run(4, 0, 1000) is None


def test_check_and_extract_corpus():
    path = str(CORPUS / "valid" / "cla8_fs_two.json")
    report = clarith.check(path)
    assert report["accepted"]
    assert not clarith.check(path, "CLA9")["accepted"]
    s = clarith.extract(path)
    assert str(s.sentence) == "EEx. x = 0''"
    lines = clarith.play(s)
    machine = [l for l in lines if l["type"] == "move" and l["player"] == "machine"]
    assert [m["payload"] for m in machine] == [{"const": 2}]
    assert lines[-1]["verdict"] == "won"


def test_verify_and_round_trip():
    s = clarith.builtin("ax8")
    summary = clarith.verify(s, depth=2, range=4)
    assert summary["lost"] == 0
    assert summary["won"] == summary["leaves"]
    back = clarith.Strategy.from_json(s.to_json())
    assert back.to_json() == s.to_json()


def test_random_play_is_reproducible():
    s = clarith.builtin("ax8")
    assert clarith.play(s, seed=5) == clarith.play(s, seed=5)


def test_play_server():
    server = clarith.PlayServer()
    status, body = server.handle("POST", "/sessions", {"builtin": "ax8"})
    assert status == 201
    sid = body["id"]
    move = {"player": "environment", "path": [], "payload": {"const": 3}}
    status, body = server.handle("POST", f"/sessions/{sid}/move", move)
    assert status == 200
    assert body["replies"][0]["payload"] == {"const": 4}
    status, body = server.handle("POST", f"/sessions/{sid}/move",
                                 {"player": "environment", "path": [], "payload": "left"})
    assert status == 400
    assert "error" in body
    status, body = server.handle("POST", f"/sessions/{sid}/adjudicate")
    assert body["adjudication"]["winner"] == "machine"
