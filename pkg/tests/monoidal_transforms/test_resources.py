import pytest

from monoidal_transforms.resources import open_text


def test_open_text():
    with open_text('config.yaml') as f:
        assert 'ToolConfig' in f.read()


def test_open_text_nonexistent():
    with pytest.raises(FileNotFoundError):
        open_text('nonexistent')
