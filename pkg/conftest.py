import pytest
from dotenv import load_dotenv

# 测试前加载 .env（例如本地的 FQFORGE_CONFIG）
load_dotenv()


@pytest.fixture(autouse=True)
def default_config(monkeypatch):
    """CLI 测试不读取开发者的配置文件，只用内置默认值"""
    monkeypatch.delenv("FQFORGE_CONFIG", raising=False)
