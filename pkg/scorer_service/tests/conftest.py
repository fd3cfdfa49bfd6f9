import json
from pathlib import Path

import pytest
import torch
from fastapi.testclient import TestClient
from tokenizers import Tokenizer, models, pre_tokenizers
from transformers import (
    BertConfig,
    BertForMaskedLM,
    GPT2Config,
    GPT2LMHeadModel,
    PreTrainedTokenizerFast,
)

from scorer_service import ScorerBackend, create_app

FIXTURES = Path(__file__).parent / "fixtures"
CORE_SAMPLE = FIXTURES / "core_sample.jsonl"

SPECIALS = ["[PAD]", "[UNK]", "[BOS]", "[EOS]", "[CLS]", "[SEP]", "[MASK]"]


def _fixture_vocabulary() -> list[str]:
    words = {"."}
    for line in CORE_SAMPLE.read_text().splitlines():
        item = json.loads(line)
        sentences = [item["target"]]
        for pair in item["prime_pairs"]:
            sentences.extend(pair["congruent"])
            sentences.extend(pair["incongruent"])
        for sentence in sentences:
            for raw in sentence["text"].split():
                word = raw.rstrip(".")
                words.add(word)
                words.add(word.lower())
                words.add(word.capitalize())
    words.update({"extra", "tokens", "for", "tests"})
    return sorted(words)


def _build_tokenizer(save_dir: Path) -> PreTrainedTokenizerFast:
    vocab = {tok: i for i, tok in enumerate(SPECIALS + _fixture_vocabulary())}
    tokenizer = Tokenizer(models.WordLevel(vocab, unk_token="[UNK]"))
    tokenizer.pre_tokenizer = pre_tokenizers.Whitespace()
    fast = PreTrainedTokenizerFast(
        tokenizer_object=tokenizer,
        unk_token="[UNK]",
        pad_token="[PAD]",
        bos_token="[BOS]",
        eos_token="[EOS]",
        cls_token="[CLS]",
        sep_token="[SEP]",
        mask_token="[MASK]",
    )
    fast.save_pretrained(save_dir)
    return fast


@pytest.fixture(scope="session")
def causal_model_dir(tmp_path_factory):
    directory = tmp_path_factory.mktemp("tiny-causal")
    fast = _build_tokenizer(directory)
    torch.manual_seed(1234)
    config = GPT2Config(
        vocab_size=fast.vocab_size,
        n_positions=128,
        n_embd=32,
        n_layer=2,
        n_head=2,
        bos_token_id=fast.bos_token_id,
        eos_token_id=fast.eos_token_id,
    )
    GPT2LMHeadModel(config).save_pretrained(directory)
    return directory


@pytest.fixture(scope="session")
def masked_model_dir(tmp_path_factory):
    directory = tmp_path_factory.mktemp("tiny-masked")
    fast = _build_tokenizer(directory)
    torch.manual_seed(4321)
    config = BertConfig(
        vocab_size=fast.vocab_size,
        hidden_size=32,
        num_hidden_layers=2,
        num_attention_heads=2,
        intermediate_size=64,
        max_position_embeddings=128,
        pad_token_id=fast.pad_token_id,
    )
    BertForMaskedLM(config).save_pretrained(directory)
    return directory


@pytest.fixture(scope="session")
def causal_backend(causal_model_dir):
    return ScorerBackend(str(causal_model_dir), device="cpu", mode="auto")


@pytest.fixture(scope="session")
def masked_backend(masked_model_dir):
    return ScorerBackend(str(masked_model_dir), device="cpu", mode="auto")


@pytest.fixture(scope="session")
def causal_client(causal_backend):
    return TestClient(create_app(causal_backend))


@pytest.fixture(scope="session")
def masked_client(masked_backend):
    return TestClient(create_app(masked_backend))


@pytest.fixture()
def core_sample_items():
    return [json.loads(line) for line in CORE_SAMPLE.read_text().splitlines()]
