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

"""Lexicon-based emotion annotation for email.

Thin Python layer over the C++ core. Functions that return structured
results decode the core's JSON wire format into plain dicts.
"""

import json
from pathlib import Path

from ._emotag import (  # noqa: F401
    NUM_CLASSES,
    ClassManifest,
    EmailDoc,
    EmotionClass,
    Error,
    ExpansionGuards,
    IoError,
    Lexicon,
    Mailbox,
    ParseError,
    SynonymSourceError,
    Thesaurus,
    ValidationError,
    VersionError,
    compile_lexicon,
    expand_class,
    load_lexicon,
    load_manifest,
    load_thesaurus,
    parse_eml,
    parse_manifest,
    parse_mbox,
    porter_stem,
    preprocess,
    remove_stopwords,
    render,
    save_lexicon,
    segment_sentences,
    stem,
    tokenize,
)
from . import _emotag

DATA_DIR = Path(__file__).resolve().parent / "data"


def default_lexicon(guards=None):
    """Compiles the bundled manifest against the bundled thesaurus."""
    manifest = load_manifest(DATA_DIR / "manifest.json")
    thesaurus = load_thesaurus(DATA_DIR / "thesaurus.tsv")
    return compile_lexicon(manifest, thesaurus, guards or ExpansionGuards())


def classify(text, lexicon):
    return json.loads(_emotag.classify_json(text, lexicon))


def annotate_sentence(text, lexicon):
    return json.loads(_emotag.annotate_sentence_json(text, lexicon))


def annotate_email(doc, lexicon):
    return json.loads(_emotag.annotate_email_json(doc, lexicon))


def evaluate(corpus_jsonl, lexicon):
    return json.loads(_emotag.evaluate_json(corpus_jsonl, lexicon))
