# Copyright 2026 The emotag Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Smoke tests for the Python bindings."""

import json
from pathlib import Path

import pytest

import emotag

FIXTURES = Path(__file__).resolve().parents[1] / "fixtures"


@pytest.fixture(scope="module")
def lexicon():
    return emotag.default_lexicon()


def test_preprocess():
    assert emotag.tokenize("Don't STOP!") == ["don't", "stop"]
    assert emotag.preprocess("The workshop was amazing!") == ["workshop", "amaz"]
    assert emotag.porter_stem("happiness") == "happi"
    assert emotag.remove_stopwords(["the", "workshop"]) == ["workshop"]
    assert emotag.stem(["running", "cats"]) == ["run", "cat"]


def test_manifest_and_lexicon(lexicon):
    manifest = lexicon.manifest
    assert len(manifest.classes) == emotag.NUM_CLASSES == 12
    assert manifest.get(2).name == "Praise"
    assert "congratul" in lexicon.keywords(2)
    assert emotag.Lexicon.from_json(lexicon.to_json()) == lexicon


def test_save_and_load(lexicon, tmp_path):
    path = tmp_path / "lexicon.json"
    emotag.save_lexicon(lexicon, path)
    assert emotag.load_lexicon(path) == lexicon
    with pytest.raises(emotag.IoError):
        emotag.load_lexicon(tmp_path / "missing.json")


def test_expand_class():
    t = emotag.Thesaurus()
    t.add("a", "b")
    t.add("b", "a")
    words, stats = emotag.expand_class(["a"], t)
    assert words == {"a", "b"}
    assert stats == {"iterations": 2, "words_added": 1, "guard": "none"}
    for i in range(9):
        t.add(f"w{i}", f"w{i + 1}")
    words, stats = emotag.expand_class(["w0"], t, emotag.ExpansionGuards(3, 100))
    assert words == {"w0", "w1", "w2", "w3"}
    assert stats["guard"] == "max_iterations"


def test_classify(lexicon):
    result = emotag.classify("Congratulations on your achievement", lexicon)
    assert result["winner"] == 2
    assert result["difference"]["2"] == 0
    assert result["closeness"]["2"] == "inf"
    hack = emotag.classify("Ethical Hacking Workshop", lexicon)
    assert hack["winner"] == 5 and hack["tie_broken"]
    assert emotag.classify("the of and", lexicon)["winner"] is None

    sentence = emotag.annotate_sentence("Thank you", lexicon)
    assert sentence["class_id"] == 3
    assert sentence["emoji"] == lexicon.manifest.get(3).emoji


def test_mail(lexicon):
    box = emotag.parse_mbox(FIXTURES / "inbox.mbox")
    assert len(box.messages) == 6 and box.skipped == 0
    assert emotag.parse_mbox(FIXTURES / "corrupt.mbox").skipped == 1
    doc = emotag.parse_eml((FIXTURES / "praise.eml").read_bytes())
    assert doc.message_id == "praise-001@example.edu"
    email = emotag.annotate_email(doc, lexicon)
    assert email["subject"]["emoji"] == "\U0001F44F"
    rendered = json.loads(emotag.render(box.messages, lexicon, "json"))
    assert len(rendered) == 6
    text = emotag.render(box.messages, lexicon)
    assert text.startswith("\U0001F44F Congratulations on your achievement\n")
    with pytest.raises(emotag.ParseError):
        emotag.parse_eml(b"not a header\n\nbody")
    assert emotag.segment_sentences("One. Two!") == ["One.", "Two!"]


def test_evaluate(lexicon):
    corpus = (FIXTURES / "sample_corpus.jsonl").read_text()
    report = emotag.evaluate(corpus, lexicon)
    assert report["total"] == 16
    with pytest.raises(emotag.ParseError):
        emotag.evaluate("", lexicon)


def test_validation_errors():
    manifest = json.loads((emotag.DATA_DIR / "manifest.json").read_text())
    manifest["classes"].pop()
    with pytest.raises(emotag.ValidationError, match="expected 12 classes"):
        emotag.parse_manifest(json.dumps(manifest))
    assert issubclass(emotag.ValidationError, emotag.Error)
